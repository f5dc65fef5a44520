/*
   Copyright 2026 The mpfcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MPF_POLY_HPP
#define MPF_POLY_HPP

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "mpf/rational.hpp"
#include "mpf/sigma_linear.hpp"

namespace mpf {

/// Dense univariate polynomial over an exact coefficient ring.
///
/// Alongside the stored coefficients every value tracks a nominal degree:
/// the degree slot the polynomial is *supposed* to occupy even when
/// cancellation made that coefficient zero. Dehomogenized homogeneous
/// polynomials keep their homogeneity degree this way, which is what the
/// leading-term bookkeeping of the case analysis runs on. Stored
/// coefficients never extend beyond the nominal slot.
template <typename T>
class Poly {
  public:
    Poly() : nominal_(0) {}

    explicit Poly(std::vector<T> coeffs, long nominal = -1)
        : c_(std::move(coeffs)), nominal_(nominal) {
        if (nominal_ < 0) nominal_ = c_.empty() ? 0 : long(c_.size()) - 1;
        trim();
        assert(long(c_.size()) <= nominal_ + 1);
    }

    static Poly zero(long nominal = 0) { return Poly(std::vector<T>{}, nominal); }

    static Poly constant(T v, long nominal = 0) {
        return Poly(std::vector<T>{std::move(v)}, nominal);
    }

    /// c * x^e
    static Poly monomial(T c, long e) {
        std::vector<T> v(size_t(e) + 1);
        v[size_t(e)] = std::move(c);
        return Poly(std::move(v), e);
    }

    long nominal_degree() const { return nominal_; }

    /// Degree of the highest stored nonzero coefficient, -1 for zero.
    long true_degree() const { return long(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }

    const T& coeff(long i) const {
        static const T kZero{};
        if (i < 0 || i >= long(c_.size())) return kZero;
        return c_[size_t(i)];
    }

    const std::vector<T>& coeffs() const { return c_; }

    /// Re-declares the nominal slot. Shrinking below the true degree is a
    /// logic error.
    void set_nominal(long n) {
        assert(n >= true_degree() && n >= 0);
        nominal_ = n;
    }

    Poly operator-() const {
        std::vector<T> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return Poly(std::move(v), nominal_);
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        std::vector<T> v(std::max(x.c_.size(), y.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(long(i)) + y.coeff(long(i));
        return Poly(std::move(v), std::max(x.nominal_, y.nominal_));
    }

    friend Poly operator-(const Poly& x, const Poly& y) {
        std::vector<T> v(std::max(x.c_.size(), y.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(long(i)) - y.coeff(long(i));
        return Poly(std::move(v), std::max(x.nominal_, y.nominal_));
    }

    friend Poly operator*(const Poly& x, const Poly& y) {
        long nom = x.nominal_ + y.nominal_;
        if (x.is_zero() || y.is_zero()) return zero(nom);
        std::vector<T> v(x.c_.size() + y.c_.size() - 1);
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (mpf::is_zero(x.c_[i])) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
        }
        return Poly(std::move(v), nom);
    }

    /// Scalar multiple; the nominal slot is unchanged.
    Poly scaled(const T& s) const {
        if (mpf::is_zero(s)) return zero(nominal_);
        std::vector<T> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
        return Poly(std::move(v), nominal_);
    }

    friend bool operator==(const Poly& x, const Poly& y) {
        return x.c_ == y.c_; // nominal slots deliberately ignored
    }

    /// Formal derivative. Nominal degree drops by one (floor 0).
    Poly derivative() const {
        if (c_.size() <= 1) return zero(std::max(nominal_ - 1, 0L));
        std::vector<T> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(long(i));
        return Poly(std::move(v), std::max(nominal_ - 1, 0L));
    }

    T eval(const T& x) const {
        T acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = T(acc * x) + c_[i];
        return acc;
    }

    Poly pow(unsigned long e) const {
        Poly r = constant(T(1), 0);
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    /// Coefficient reversal about slot n: x^n * p(1/x).
    Poly reversed_about(long n) const {
        assert(n >= true_degree());
        std::vector<T> v(size_t(n) + 1);
        for (size_t i = 0; i < c_.size(); ++i) v[size_t(n) - i] = c_[i];
        return Poly(std::move(v), n);
    }

    /// p(x + c), by repeated Horner steps.
    Poly shifted(const T& c) const {
        Poly r = zero(nominal_);
        Poly lin(std::vector<T>{c, T(1)}, 1);
        for (size_t i = c_.size(); i-- > 0;) {
            r = r * lin + constant(c_[i], 0);
        }
        r.set_nominal(std::max(nominal_, r.true_degree()));
        return r;
    }

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && mpf::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
    long nominal_;
};

using RhoPoly = Poly<Rat>;            // polynomials in rho (and, reused, in sigma)
using SigmaRhoPoly = Poly<SigmaLinear>; // rho-polynomials with sigma-affine coefficients

/// Specializes the sigma slots at a rational sigma.
inline RhoPoly specialize_sigma(const SigmaRhoPoly& p, const Rat& sigma) {
    std::vector<Rat> v(size_t(p.true_degree() + 1));
    for (long i = 0; i <= p.true_degree(); ++i) v[size_t(i)] = p.coeff(i).at(sigma);
    return RhoPoly(std::move(v), p.nominal_degree());
}

inline SigmaRhoPoly lift_to_sigma(const RhoPoly& p) {
    std::vector<SigmaLinear> v(size_t(p.true_degree() + 1));
    for (long i = 0; i <= p.true_degree(); ++i) v[size_t(i)] = SigmaLinear(p.coeff(i));
    return SigmaRhoPoly(std::move(v), p.nominal_degree());
}

/// Coefficient at the nominal slot (possibly zero) plus the true leading
/// term, if any.
struct LeadingTerm {
    Rat at_nominal;
    bool has_true_leading = false;
    Rat true_coeff;
    long true_exponent = -1;
};

inline LeadingTerm leading_term(const RhoPoly& p, long nominal) {
    assert(nominal >= 0);
    LeadingTerm lt;
    lt.at_nominal = p.coeff(nominal);
    if (!p.is_zero()) {
        lt.has_true_leading = true;
        lt.true_exponent = p.true_degree();
        lt.true_coeff = p.coeff(p.true_degree());
    }
    return lt;
}

template <typename T>
std::string Poly<T>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (mpf::is_zero(c_[i])) continue;
        std::string coeff;
        if constexpr (std::is_same_v<T, Rat>) coeff = rat_str(c_[i]);
        else coeff = "(" + c_[i].str() + ")";
        if (!out.empty()) out += " + ";
        if (i == 0) out += coeff;
        else if (i == 1) out += coeff + "*" + var;
        else out += coeff + "*" + var + "^" + std::to_string(i);
    }
    return out;
}

} // namespace mpf

#endif
