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

#ifndef MPF_HK_POLY_HPP
#define MPF_HK_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mpf/poly.hpp"
#include "mpf/rational.hpp"

namespace mpf {

/// Homogeneous symmetric polynomial of (lambda1, lambda2) in the {H, K}
/// basis: sum of coeffs[i] * H^(g-2i) * K^i for i = 0..floor(g/2), with
/// H = lambda1 + lambda2 and K = lambda1 * lambda2. Zero coefficients are
/// stored explicitly so first-nonzero-index classification stays well
/// defined; a zero polynomial still carries its formal degree.
struct HKPoly {
    long degree = 0;
    std::vector<Rat> coeffs; // size == degree/2 + 1 always

    HKPoly() : coeffs(1) {}
    HKPoly(long g, std::vector<Rat> c);

    static HKPoly zero(long g);
    /// Convenience: H^g with coefficient one.
    static HKPoly h_power(long g);

    size_t slots() const { return size_t(degree / 2) + 1; }
    bool is_zero() const;
    const Rat& coeff(size_t i) const { return coeffs[i]; }

    std::string str() const;
};

HKPoly hk_add(const HKPoly& a, const HKPoly& b);
HKPoly hk_sub(const HKPoly& a, const HKPoly& b);
HKPoly hk_mul(const HKPoly& a, const HKPoly& b);
HKPoly hk_scale(const HKPoly& a, const Rat& s);
HKPoly hk_neg(const HKPoly& a);
HKPoly hk_pow(const HKPoly& a, unsigned long e);

/// d/dH; degree drops by one (zero of degree 0 when g == 0).
HKPoly partial_H(const HKPoly& p);
/// d/dK; degree drops by two (zero of degree 0 when g < 2).
HKPoly partial_K(const HKPoly& p);

struct SecondPartials {
    HKPoly hh, hk, kk;
};
SecondPartials second_partials(const HKPoly& p);

/// Substitutes (lambda1, lambda2) = (rho, 1): H -> rho+1, K -> rho.
/// Nominal degree of the result is the homogeneity degree.
RhoPoly dehomogenize(const HKPoly& p);

/// Full bivariate expansion, for oracle checks.
/// Keys are exponent pairs (e1, e2) of lambda1^e1 lambda2^e2.
using LambdaPoly = std::map<std::pair<long, long>, Rat>;

LambdaPoly expand_lambda(const HKPoly& p);

LambdaPoly lambda_add(const LambdaPoly& a, const LambdaPoly& b);
LambdaPoly lambda_mul(const LambdaPoly& a, const LambdaPoly& b);
LambdaPoly lambda_scale(const LambdaPoly& a, const Rat& s);
/// Formal d/dlambda1.
LambdaPoly lambda_d1(const LambdaPoly& a);
Rat lambda_eval(const LambdaPoly& a, const Rat& l1, const Rat& l2);
/// Substitutes lambda2 = 1, returning a univariate polynomial in lambda1.
RhoPoly lambda_set_l2_one(const LambdaPoly& a, long nominal);

/// Value of sum coeffs[i] 2^(g-2i); zero iff p vanishes on the positive
/// diagonal lambda1 == lambda2 > 0.
Rat diagonal_sum(const HKPoly& p);

struct FirstIndex {
    long k;   // 1-based index of the first nonzero coefficient
    int sign; // sign of that coefficient
};
/// Throws ZeroPolynomialError on the zero polynomial.
FirstIndex first_positive_index(const HKPoly& p);

Rat hk_eval(const HKPoly& p, const Rat& l1, const Rat& l2);

/// lambda1^n + lambda2^n in the {H,K} basis (degree n).
HKPoly trace_power(long n);

/// Re-declares the formal degree of a zero polynomial; asserts equality
/// otherwise.
HKPoly hk_with_degree(const HKPoly& p, long g);

} // namespace mpf

#endif
