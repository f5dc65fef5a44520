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

#ifndef MPF_SIGN_CERT_HPP
#define MPF_SIGN_CERT_HPP

#include <optional>
#include <string>

#include "mpf/poly.hpp"
#include "mpf/rational.hpp"

namespace mpf {

/// Endpoint of a root-counting interval: finite rational or +-infinity.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;

    static Bound neg_inf() { return {NegInf, Rat(0)}; }
    static Bound pos_inf() { return {PosInf, Rat(0)}; }
    static Bound at(Rat v) { return {Finite, std::move(v)}; }
};

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by Sturm's theorem. Exact. Throws ZeroPolynomialError on p == 0.
long sturm_count_roots(const RhoPoly& p, const Bound& lo, const Bound& hi);

enum class SignMode { Nonpositive, Nonnegative, StrictlyNegative, StrictlyPositive };

/// Open interval for the strict modes. The left end must be finite.
struct OpenInterval {
    Rat lo;
    Bound hi; // finite or +infinity
    static OpenInterval halfline(Rat lo) { return {std::move(lo), Bound::pos_inf()}; }
    static OpenInterval between(Rat lo, Rat hi) { return {std::move(lo), Bound::at(std::move(hi))}; }
};

/// Evidence that a sign claim fails. Either an exact rational point whose
/// value violates the claimed inequality, or (strict modes only, when the
/// offending zero is irrational and the sign never crosses) an isolating
/// interval that provably contains a zero of p.
struct SignWitness {
    enum Kind { Point, RootInterval } kind = Point;
    Rat rho;   // Point: the violating point
    Rat value; // Point: exact p(rho)
    Rat lo, hi; // RootInterval: exactly one distinct root of p lies in (lo, hi)
    std::string str() const;
};

struct SignCertificate {
    bool pass = false;
    std::optional<SignWitness> witness;
};

/// Certifies p <= 0 (resp. >= 0) at every point of [0, inf). The zero
/// polynomial passes. Exact: root isolation plus sample evaluation between
/// consecutive isolated roots.
SignCertificate certify_sign_on_halfline(const RhoPoly& p, SignMode nonstrict_mode);

/// Certifies p < 0 (resp. > 0) at every point of the open interval. The
/// zero polynomial fails with a zero-value witness.
SignCertificate certify_sign_on_halfline(const RhoPoly& p, SignMode strict_mode,
                                         const OpenInterval& region);

} // namespace mpf

#endif
