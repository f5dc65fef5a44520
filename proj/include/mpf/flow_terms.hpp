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

#ifndef MPF_FLOW_TERMS_HPP
#define MPF_FLOW_TERMS_HPP

#include <functional>
#include <string>

#include "mpf/hk_poly.hpp"
#include "mpf/poly.hpp"
#include "mpf/rational.hpp"

namespace mpf {

/// The bilinear combinations r_X = q dX(p) - p dX(q) entering the quotient
/// evolution identity. Degrees are g+h-1, g+h-2, g+h-2, g+h-3, g+h-4
/// (clamped at zero); any of them may be the zero polynomial.
struct RTerms {
    HKPoly r_h, r_k, r_hh, r_hk, r_kk;
};

RTerms compute_r_terms(const HKPoly& p, const HKPoly& q);

/// The quantity w = p/q under test, at exponent sigma of the normal
/// velocity K^sigma.
struct Candidate {
    HKPoly p, q;
    Rat sigma;

    Candidate(HKPoly p_, HKPoly q_, Rat sigma_);
    long g() const { return p.degree; }
    long h() const { return q.degree; }
};

/// Constant terms C(rho) with sigma kept symbolic:
///   ((1-s)rho^2 + 2s rho + (1-s)) r_H + rho(rho+1) r_K
/// Nominal degree g+h+1.
SigmaRhoPoly constant_poly_sigma(const HKPoly& p, const HKPoly& q);

/// Gradient terms G1(rho) / G2(rho) with sigma symbolic; nominal degree
/// 3(g+h)-1. `which` selects the dehomogenization slot (1 or 2).
SigmaRhoPoly gradient_poly_sigma(const HKPoly& p, const HKPoly& q, int which);

RhoPoly constant_poly_C(const Candidate& cand);
RhoPoly gradient_poly_G1(const Candidate& cand);
RhoPoly gradient_poly_G2(const Candidate& cand);

/// A normal velocity F(lambda1, lambda2) with its first and second
/// lambda-partials, for sign exploration beyond K^sigma. Velocities whose
/// partials are rational at rational points (integer exponents, |A|^2)
/// additionally carry exact evaluators; those avoid the catastrophic
/// cancellation the floating path suffers on high-degree quantities.
struct VelocitySpec {
    std::string name;
    double sigma = 1.0;
    std::function<double(double, double)> F, F1, F2, F11, F12, F22;
    using RatFn = std::function<Rat(const Rat&, const Rat&)>;
    RatFn rF, rF1, rF2, rF11, rF12, rF22; // set only when exact

    bool exact() const { return static_cast<bool>(rF); }

    static VelocitySpec k_power(const Rat& sigma);
    static VelocitySpec h_power(const Rat& sigma);
    static VelocitySpec norm_A_squared();
    static VelocitySpec tr_A_power(const Rat& sigma);
    /// Names per the wire format: "K^sigma", "H^sigma", "A2", "trA^sigma".
    static VelocitySpec by_name(const std::string& name, const Rat& sigma);
};

struct NumericTerms {
    double c_w;          // constant terms C_w(l1, l2)
    double g_w;          // gradient terms G_w(l1, l2)
    double g_w_swapped;  // gradient terms G_w(l2, l1)
};

/// Floating evaluation of the general-F constant and gradient terms at a
/// critical point of w. The w-derivatives are exact rational-function
/// derivatives of p/q; only the F-partials and final combination are
/// floating. Requires l1, l2 > 0 and l1 != l2.
NumericTerms numeric_terms(const VelocitySpec& vel, const Candidate& cand,
                           const Rat& l1, const Rat& l2);

} // namespace mpf

#endif
