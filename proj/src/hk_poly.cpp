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

#include "mpf/hk_poly.hpp"

#include <cassert>

#include "mpf/errors.hpp"

namespace mpf {

HKPoly::HKPoly(long g, std::vector<Rat> c) : degree(g), coeffs(std::move(c)) {
    assert(g >= 0);
    coeffs.resize(size_t(g / 2) + 1);
}

HKPoly HKPoly::zero(long g) { return HKPoly(g, {}); }

HKPoly HKPoly::h_power(long g) {
    HKPoly p = zero(g);
    p.coeffs[0] = 1;
    return p;
}

bool HKPoly::is_zero() const {
    for (const Rat& c : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

std::string HKPoly::str() const {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(coeffs[i]);
        long he = degree - 2 * long(i);
        if (he > 0) out += "*H" + (he > 1 ? "^" + std::to_string(he) : "");
        if (i > 0) out += "*K" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.empty() ? "0" : out;
}

namespace {
// Homogeneous polynomials of unequal degree only combine when one side is
// identically zero; the result adopts the other side's degree.
long combined_degree(const HKPoly& a, const HKPoly& b) {
    if (a.degree == b.degree) return a.degree;
    if (a.is_zero() && b.is_zero()) return std::max(a.degree, b.degree);
    if (a.is_zero()) return b.degree;
    assert(b.is_zero());
    return a.degree;
}
} // namespace

HKPoly hk_add(const HKPoly& a, const HKPoly& b) {
    HKPoly r = HKPoly::zero(combined_degree(a, b));
    for (size_t i = 0; i < r.slots(); ++i) {
        if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
        if (i < b.coeffs.size()) r.coeffs[i] += b.coeffs[i];
    }
    return r;
}

HKPoly hk_sub(const HKPoly& a, const HKPoly& b) { return hk_add(a, hk_neg(b)); }

HKPoly hk_neg(const HKPoly& a) {
    HKPoly r = a;
    for (Rat& c : r.coeffs) c = -c;
    return r;
}

HKPoly hk_mul(const HKPoly& a, const HKPoly& b) {
    HKPoly r = HKPoly::zero(a.degree + b.degree);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (sgn(a.coeffs[i]) == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

HKPoly hk_scale(const HKPoly& a, const Rat& s) {
    HKPoly r = a;
    for (Rat& c : r.coeffs) c *= s;
    return r;
}

HKPoly hk_pow(const HKPoly& a, unsigned long e) {
    HKPoly r = HKPoly::zero(0);
    r.coeffs[0] = 1;
    HKPoly base = a;
    while (e) {
        if (e & 1) r = hk_mul(r, base);
        if (e > 1) base = hk_mul(base, base);
        e >>= 1;
    }
    return r;
}

HKPoly partial_H(const HKPoly& p) {
    if (p.degree == 0) return HKPoly::zero(0);
    HKPoly r = HKPoly::zero(p.degree - 1);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        long f = p.degree - 2 * long(i);
        if (f == 0) continue; // the pure-K term has no H to differentiate
        r.coeffs[i] = p.coeffs[i] * f;
    }
    return r;
}

HKPoly partial_K(const HKPoly& p) {
    if (p.degree < 2) return HKPoly::zero(0);
    HKPoly r = HKPoly::zero(p.degree - 2);
    for (size_t i = 1; i < p.coeffs.size(); ++i)
        r.coeffs[i - 1] = p.coeffs[i] * long(i);
    return r;
}

SecondPartials second_partials(const HKPoly& p) {
    return {partial_H(partial_H(p)), partial_K(partial_H(p)), partial_K(partial_K(p))};
}

RhoPoly dehomogenize(const HKPoly& p) {
    RhoPoly acc = RhoPoly::zero(0);
    RhoPoly rho_plus_one(std::vector<Rat>{Rat(1), Rat(1)}, 1);
    // iterate i downward keeping (rho+1)^(g-2i)
    long imax = long(p.coeffs.size()) - 1;
    RhoPoly hp = rho_plus_one.pow(static_cast<unsigned long>(p.degree - 2 * imax));
    RhoPoly sq = rho_plus_one * rho_plus_one;
    for (long i = imax; i >= 0; --i) {
        if (sgn(p.coeffs[size_t(i)]) != 0)
            acc = acc + (hp * RhoPoly::monomial(p.coeffs[size_t(i)], i));
        if (i > 0) hp = hp * sq;
    }
    if (acc.true_degree() > p.degree) assert(false);
    RhoPoly out = acc;
    out.set_nominal(p.degree);
    return out;
}

LambdaPoly expand_lambda(const HKPoly& p) {
    LambdaPoly out;
    // binomial table up to degree
    std::vector<std::vector<Int>> binom(size_t(p.degree) + 1);
    for (size_t n = 0; n <= size_t(p.degree); ++n) {
        binom[n].resize(n + 1);
        binom[n][0] = 1;
        for (size_t k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k < n ? binom[n - 1][k] : Int(0));
    }
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (sgn(p.coeffs[i]) == 0) continue;
        long m = p.degree - 2 * long(i);
        for (long j = 0; j <= m; ++j) {
            Rat term = p.coeffs[i] * Rat(binom[size_t(m)][size_t(j)]);
            auto key = std::make_pair(j + long(i), m - j + long(i));
            out[key] += term;
            if (sgn(out[key]) == 0) out.erase(key);
        }
    }
    return out;
}

LambdaPoly lambda_add(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly out = a;
    for (const auto& [k, v] : b) {
        out[k] += v;
        if (sgn(out[k]) == 0) out.erase(k);
    }
    return out;
}

LambdaPoly lambda_mul(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
            out[key] += va * vb;
            if (sgn(out[key]) == 0) out.erase(key);
        }
    return out;
}

LambdaPoly lambda_scale(const LambdaPoly& a, const Rat& s) {
    LambdaPoly out;
    if (sgn(s) == 0) return out;
    for (const auto& [k, v] : a) out[k] = v * s;
    return out;
}

LambdaPoly lambda_d1(const LambdaPoly& a) {
    LambdaPoly out;
    for (const auto& [k, v] : a) {
        if (k.first == 0) continue;
        out[std::make_pair(k.first - 1, k.second)] += v * k.first;
    }
    return out;
}

Rat lambda_eval(const LambdaPoly& a, const Rat& l1, const Rat& l2) {
    Rat acc(0);
    for (const auto& [k, v] : a)
        acc += v * rat_pow(l1, static_cast<unsigned long>(k.first)) *
               rat_pow(l2, static_cast<unsigned long>(k.second));
    return acc;
}

RhoPoly lambda_set_l2_one(const LambdaPoly& a, long nominal) {
    std::vector<Rat> c(size_t(nominal) + 1);
    for (const auto& [k, v] : a) {
        assert(k.first <= nominal);
        c[size_t(k.first)] += v;
    }
    return RhoPoly(std::move(c), nominal);
}

Rat diagonal_sum(const HKPoly& p) {
    Rat acc(0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        unsigned long e = static_cast<unsigned long>(p.degree - 2 * long(i));
        acc += p.coeffs[i] * rat_pow(Rat(2), e);
    }
    return acc;
}

FirstIndex first_positive_index(const HKPoly& p) {
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        if (sgn(p.coeffs[i]) != 0) return {long(i) + 1, sgn(p.coeffs[i])};
    throw ZeroPolynomialError("first_positive_index");
}

Rat hk_eval(const HKPoly& p, const Rat& l1, const Rat& l2) {
    Rat H = l1 + l2, K = l1 * l2;
    Rat acc(0);
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (sgn(p.coeffs[i]) == 0) continue;
        acc += p.coeffs[i] * rat_pow(H, static_cast<unsigned long>(p.degree - 2 * long(i))) *
               rat_pow(K, static_cast<unsigned long>(i));
    }
    return acc;
}

HKPoly trace_power(long n) {
    assert(n >= 0);
    // s_0 = 2, s_1 = H, s_n = H s_{n-1} - K s_{n-2}
    HKPoly s_prev = HKPoly(0, {Rat(2)});
    if (n == 0) return s_prev;
    HKPoly s_cur = HKPoly::h_power(1);
    HKPoly K = HKPoly(2, {Rat(0), Rat(1)});
    HKPoly H = HKPoly::h_power(1);
    for (long i = 2; i <= n; ++i) {
        HKPoly next = hk_sub(hk_mul(H, s_cur), hk_mul(K, s_prev));
        s_prev = std::move(s_cur);
        s_cur = std::move(next);
    }
    return s_cur;
}

HKPoly hk_with_degree(const HKPoly& p, long g) {
    if (p.degree == g) return p;
    assert(p.is_zero());
    return HKPoly::zero(g);
}

} // namespace mpf
