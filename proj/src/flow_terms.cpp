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

#include "mpf/flow_terms.hpp"

#include <cassert>
#include <cmath>

#include "mpf/errors.hpp"

namespace mpf {

Candidate::Candidate(HKPoly p_, HKPoly q_, Rat sigma_)
    : p(std::move(p_)), q(std::move(q_)), sigma(std::move(sigma_)) {
    if (p.is_zero()) throw ZeroPolynomialError("Candidate numerator");
    if (q.is_zero()) throw ZeroPolynomialError("Candidate denominator");
}

RTerms compute_r_terms(const HKPoly& p, const HKPoly& q) {
    const long g = p.degree, h = q.degree;
    auto bilinear = [&](const HKPoly& dp, const HKPoly& dq, long want) {
        HKPoly r = hk_sub(hk_mul(q, dp), hk_mul(p, dq));
        return hk_with_degree(r, std::max(want, 0L));
    };
    SecondPartials pp = second_partials(p);
    SecondPartials qq = second_partials(q);
    RTerms r;
    r.r_h = bilinear(partial_H(p), partial_H(q), g + h - 1);
    r.r_k = bilinear(partial_K(p), partial_K(q), g + h - 2);
    r.r_hh = bilinear(pp.hh, qq.hh, g + h - 2);
    r.r_hk = bilinear(pp.hk, qq.hk, g + h - 3);
    r.r_kk = bilinear(pp.kk, qq.kk, g + h - 4);
    return r;
}

namespace {

SigmaRhoPoly sigma_cof(std::vector<SigmaLinear> coeffs) {
    long nom = long(coeffs.size()) - 1;
    return SigmaRhoPoly(std::move(coeffs), nom);
}

} // namespace

SigmaRhoPoly constant_poly_sigma(const HKPoly& p, const HKPoly& q) {
    RTerms r = compute_r_terms(p, q);
    SigmaRhoPoly rh = lift_to_sigma(dehomogenize(r.r_h));
    SigmaRhoPoly rk = lift_to_sigma(dehomogenize(r.r_k));
    // (1-s) + 2s rho + (1-s) rho^2
    SigmaRhoPoly cof_h = sigma_cof({{Rat(-1), Rat(1)}, {Rat(2), Rat(0)}, {Rat(-1), Rat(1)}});
    // rho + rho^2
    SigmaRhoPoly cof_k = sigma_cof({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(1)}});
    SigmaRhoPoly c = cof_h * rh + cof_k * rk;
    c.set_nominal(std::max(p.degree + q.degree + 1, 0L));
    return c;
}

SigmaRhoPoly gradient_poly_sigma(const HKPoly& p, const HKPoly& q, int which) {
    assert(which == 1 || which == 2);
    RTerms r = compute_r_terms(p, q);
    SigmaRhoPoly rh = lift_to_sigma(dehomogenize(r.r_h));
    SigmaRhoPoly rk = lift_to_sigma(dehomogenize(r.r_k));
    SigmaRhoPoly rhh = lift_to_sigma(dehomogenize(r.r_hh));
    SigmaRhoPoly rhk = lift_to_sigma(dehomogenize(r.r_hk));
    SigmaRhoPoly rkk = lift_to_sigma(dehomogenize(r.r_kk));

    const SigmaLinear zero{Rat(0), Rat(0)};
    // shared cubic-term cofactor (s-1) - 2(s+1) rho + (s-1) rho^2
    SigmaRhoPoly t1 = sigma_cof({{Rat(1), Rat(-1)}, {Rat(-2), Rat(-2)}, {Rat(1), Rat(-1)}});
    SigmaRhoPoly t2, t3, t4, t5, t6;
    if (which == 1) {
        // (s-1) - 2(s+2) rho + (s-3) rho^2
        t2 = sigma_cof({{Rat(1), Rat(-1)}, {Rat(-2), Rat(-4)}, {Rat(1), Rat(-3)}});
        // -2 rho (rho+1)
        t3 = sigma_cof({zero, {Rat(0), Rat(-2)}, {Rat(0), Rat(-2)}});
        // -rho (rho-1)^2
        t4 = sigma_cof({zero, {Rat(0), Rat(-1)}, {Rat(0), Rat(2)}, {Rat(0), Rat(-1)}});
        // +2 rho (rho-1)^2
        t5 = sigma_cof({zero, {Rat(0), Rat(2)}, {Rat(0), Rat(-4)}, {Rat(0), Rat(2)}});
        t6 = t4;
    } else {
        // rho ((s-3) - 2(s+2) rho + (s-1) rho^2)
        t2 = sigma_cof({zero, {Rat(1), Rat(-3)}, {Rat(-2), Rat(-4)}, {Rat(1), Rat(-1)}});
        // -2 rho^2 (rho+1)
        t3 = sigma_cof({zero, zero, {Rat(0), Rat(-2)}, {Rat(0), Rat(-2)}});
        // -rho^2 (rho-1)^2
        t4 = sigma_cof({zero, zero, {Rat(0), Rat(-1)}, {Rat(0), Rat(2)}, {Rat(0), Rat(-1)}});
        t5 = sigma_cof({zero, zero, {Rat(0), Rat(2)}, {Rat(0), Rat(-4)}, {Rat(0), Rat(2)}});
        t6 = t4;
    }
    SigmaRhoPoly out = t1 * (rh * rh * rh)
                     + t2 * (rh * rh * rk)
                     + t3 * (rh * rk * rk)
                     + t4 * (rk * rk * rhh)
                     + t5 * (rh * rk * rhk)
                     + t6 * (rh * rh * rkk);
    out.set_nominal(std::max(3 * (p.degree + q.degree) - 1, 0L));
    return out;
}

RhoPoly constant_poly_C(const Candidate& cand) {
    return specialize_sigma(constant_poly_sigma(cand.p, cand.q), cand.sigma);
}

RhoPoly gradient_poly_G1(const Candidate& cand) {
    return specialize_sigma(gradient_poly_sigma(cand.p, cand.q, 1), cand.sigma);
}

RhoPoly gradient_poly_G2(const Candidate& cand) {
    return specialize_sigma(gradient_poly_sigma(cand.p, cand.q, 2), cand.sigma);
}

namespace {

bool is_positive_integer(const Rat& s) { return s.get_den() == 1 && sgn(s) > 0; }

// x^(e) with the convention coeff * x^(e<0) == 0 used below only when the
// integer cofactor vanishes first
Rat pow_or_zero(const Rat& x, long coeff, long e) {
    if (coeff == 0) return Rat(0);
    return Rat(coeff) * rat_pow(x, static_cast<unsigned long>(e));
}

} // namespace

VelocitySpec VelocitySpec::k_power(const Rat& sigma) {
    VelocitySpec v;
    v.name = "K^sigma";
    double s = v.sigma = sigma.get_d();
    v.F = [s](double a, double b) { return std::pow(a * b, s); };
    v.F1 = [s](double a, double b) { return s * std::pow(a * b, s - 1) * b; };
    v.F2 = [s](double a, double b) { return s * std::pow(a * b, s - 1) * a; };
    v.F11 = [s](double a, double b) { return s * (s - 1) * std::pow(a * b, s - 2) * b * b; };
    v.F22 = [s](double a, double b) { return s * (s - 1) * std::pow(a * b, s - 2) * a * a; };
    v.F12 = [s](double a, double b) { return s * s * std::pow(a * b, s - 1); };
    if (is_positive_integer(sigma)) {
        long n = sigma.get_num().get_si();
        // explicit Rat returns: a deduced gmp expression template would
        // dangle past the lambda
        v.rF = [n](const Rat& a, const Rat& b) -> Rat { return pow_or_zero(a * b, 1, n); };
        v.rF1 = [n](const Rat& a, const Rat& b) -> Rat {
            return pow_or_zero(a * b, n, n - 1) * b;
        };
        v.rF2 = [n](const Rat& a, const Rat& b) -> Rat {
            return pow_or_zero(a * b, n, n - 1) * a;
        };
        v.rF11 = [n](const Rat& a, const Rat& b) -> Rat {
            return pow_or_zero(a * b, n * (n - 1), n - 2) * b * b;
        };
        v.rF22 = [n](const Rat& a, const Rat& b) -> Rat {
            return pow_or_zero(a * b, n * (n - 1), n - 2) * a * a;
        };
        v.rF12 = [n](const Rat& a, const Rat& b) -> Rat {
            return pow_or_zero(a * b, n * n, n - 1);
        };
    }
    return v;
}

VelocitySpec VelocitySpec::h_power(const Rat& sigma) {
    VelocitySpec v;
    v.name = "H^sigma";
    double s = v.sigma = sigma.get_d();
    v.F = [s](double a, double b) { return std::pow(a + b, s); };
    v.F1 = [s](double a, double b) { return s * std::pow(a + b, s - 1); };
    v.F2 = v.F1;
    v.F11 = [s](double a, double b) { return s * (s - 1) * std::pow(a + b, s - 2); };
    v.F12 = v.F11;
    v.F22 = v.F11;
    if (is_positive_integer(sigma)) {
        long n = sigma.get_num().get_si();
        v.rF = [n](const Rat& a, const Rat& b) { return pow_or_zero(a + b, 1, n); };
        v.rF1 = [n](const Rat& a, const Rat& b) { return pow_or_zero(a + b, n, n - 1); };
        v.rF2 = v.rF1;
        v.rF11 = [n](const Rat& a, const Rat& b) {
            return pow_or_zero(a + b, n * (n - 1), n - 2);
        };
        v.rF12 = v.rF11;
        v.rF22 = v.rF11;
    }
    return v;
}

VelocitySpec VelocitySpec::norm_A_squared() {
    VelocitySpec v;
    v.name = "A2";
    v.sigma = 1.0;
    v.F = [](double a, double b) { return a * a + b * b; };
    v.F1 = [](double a, double) { return 2 * a; };
    v.F2 = [](double, double b) { return 2 * b; };
    v.F11 = [](double, double) { return 2.0; };
    v.F22 = [](double, double) { return 2.0; };
    v.F12 = [](double, double) { return 0.0; };
    v.rF = [](const Rat& a, const Rat& b) { return Rat(a * a + b * b); };
    v.rF1 = [](const Rat& a, const Rat&) { return Rat(2 * a); };
    v.rF2 = [](const Rat&, const Rat& b) { return Rat(2 * b); };
    v.rF11 = [](const Rat&, const Rat&) { return Rat(2); };
    v.rF22 = v.rF11;
    v.rF12 = [](const Rat&, const Rat&) { return Rat(0); };
    return v;
}

VelocitySpec VelocitySpec::tr_A_power(const Rat& sigma) {
    VelocitySpec v;
    v.name = "trA^sigma";
    double s = v.sigma = sigma.get_d();
    v.F = [s](double a, double b) { return std::pow(a, s) + std::pow(b, s); };
    v.F1 = [s](double a, double) { return s * std::pow(a, s - 1); };
    v.F2 = [s](double, double b) { return s * std::pow(b, s - 1); };
    v.F11 = [s](double a, double) { return s * (s - 1) * std::pow(a, s - 2); };
    v.F22 = [s](double, double b) { return s * (s - 1) * std::pow(b, s - 2); };
    v.F12 = [](double, double) { return 0.0; };
    if (is_positive_integer(sigma)) {
        long n = sigma.get_num().get_si();
        v.rF = [n](const Rat& a, const Rat& b) {
            return Rat(pow_or_zero(a, 1, n) + pow_or_zero(b, 1, n));
        };
        v.rF1 = [n](const Rat& a, const Rat&) { return pow_or_zero(a, n, n - 1); };
        v.rF2 = [n](const Rat&, const Rat& b) { return pow_or_zero(b, n, n - 1); };
        v.rF11 = [n](const Rat& a, const Rat&) { return pow_or_zero(a, n * (n - 1), n - 2); };
        v.rF22 = [n](const Rat&, const Rat& b) { return pow_or_zero(b, n * (n - 1), n - 2); };
        v.rF12 = [](const Rat&, const Rat&) { return Rat(0); };
    }
    return v;
}

VelocitySpec VelocitySpec::by_name(const std::string& name, const Rat& sigma) {
    if (name == "K^sigma") return k_power(sigma);
    if (name == "H^sigma") return h_power(sigma);
    if (name == "A2") return norm_A_squared();
    if (name == "trA^sigma") return tr_A_power(sigma);
    throw Error("unknown velocity: " + name);
}

NumericTerms numeric_terms(const VelocitySpec& vel, const Candidate& cand,
                           const Rat& l1, const Rat& l2) {
    if (sgn(l1) <= 0 || sgn(l2) <= 0) throw NonpositiveCurvature();
    if (l1 == l2) throw DiagonalPointError();

    const HKPoly& p = cand.p;
    const HKPoly& q = cand.q;
    SecondPartials pp = second_partials(p);
    SecondPartials qq = second_partials(q);

    const Rat pv = hk_eval(p, l1, l2), qv = hk_eval(q, l1, l2);
    if (sgn(qv) == 0) throw Error("q vanishes at evaluation point");
    const Rat pH = hk_eval(partial_H(p), l1, l2), pK = hk_eval(partial_K(p), l1, l2);
    const Rat qH = hk_eval(partial_H(q), l1, l2), qK = hk_eval(partial_K(q), l1, l2);
    const Rat pHH = hk_eval(pp.hh, l1, l2), pHK = hk_eval(pp.hk, l1, l2), pKK = hk_eval(pp.kk, l1, l2);
    const Rat qHH = hk_eval(qq.hh, l1, l2), qHK = hk_eval(qq.hk, l1, l2), qKK = hk_eval(qq.kk, l1, l2);

    const Rat q2 = qv * qv, q3 = q2 * qv;
    const Rat rH = pH * qv - pv * qH;
    const Rat rK = pK * qv - pv * qK;
    const Rat wH = rH / q2;
    const Rat wK = rK / q2;
    const Rat wHH = (pHH * qv - pv * qHH) / q2 - Rat(2) * qH * rH / q3;
    const Rat wKK = (pKK * qv - pv * qKK) / q2 - Rat(2) * qK * rK / q3;
    const Rat wHK = (pHK * qv + pH * qK - pK * qH - pv * qHK) / q2 - Rat(2) * qK * rH / q3;

    // w flat to second order at the point (p = q does this identically):
    // every term carries a w-derivative factor, so everything vanishes and
    // the critical-point ratio a1 never forms
    if (sgn(wH) == 0 && sgn(wK) == 0 && sgn(wHH) == 0 && sgn(wHK) == 0 && sgn(wKK) == 0)
        return {0.0, 0.0, 0.0};

    // exact rejection of vanishing critical denominators, both orientations
    if (sgn(wH + l1 * wK) == 0 || sgn(wH + l2 * wK) == 0) throw CriticalDenominatorZero();

    if (vel.exact()) {
        auto constant_terms = [&](const Rat& x, const Rat& y) {
            Rat F = vel.rF(x, y), f1 = vel.rF1(x, y), f2 = vel.rF2(x, y);
            Rat c_h = F * (x * x + y * y) + (f1 - f2) * (x - y) * x * y;
            Rat c_k = (F * (x + y) + (f1 * x - f2 * y) * (x - y)) * x * y;
            return Rat(c_h * wH + c_k * wK);
        };
        auto gradient_terms = [&](const Rat& x, const Rat& y) {
            Rat a1 = -(wH + y * wK) / (wH + x * wK);
            Rat f1 = vel.rF1(x, y), f2 = vel.rF2(x, y);
            Rat f11 = vel.rF11(x, y), f12 = vel.rF12(x, y), f22 = vel.rF22(x, y);
            Rat dd = (f1 - f2) / (x - y);
            Rat second = f11 + 2 * f12 * a1 + f22 * a1 * a1;
            Rat g_h = second + 2 * dd * a1 * a1;
            Rat g_k = 2 * (-f1 * a1 + f2 * a1 * a1) + second * y + 2 * dd * x * a1 * a1;
            Rat one_a = 1 + a1;
            Rat y_xa = y + x * a1;
            Rat mixed = f1 * (one_a * one_a * wHH + 2 * one_a * y_xa * wHK + y_xa * y_xa * wKK);
            return Rat(g_h * wH + g_k * wK - mixed);
        };
        NumericTerms out;
        out.c_w = constant_terms(l1, l2).get_d();
        out.g_w = gradient_terms(l1, l2).get_d();
        out.g_w_swapped = gradient_terms(l2, l1).get_d();
        return out;
    }

    const double a = l1.get_d(), b = l2.get_d();
    const double dwH = wH.get_d(), dwK = wK.get_d();
    const double dwHH = wHH.get_d(), dwHK = wHK.get_d(), dwKK = wKK.get_d();

    auto constant_terms = [&](double x, double y) {
        double F = vel.F(x, y), f1 = vel.F1(x, y), f2 = vel.F2(x, y);
        double c_h = F * (x * x + y * y) + (f1 - f2) * (x - y) * x * y;
        double c_k = (F * (x + y) + (f1 * x - f2 * y) * (x - y)) * x * y;
        return c_h * dwH + c_k * dwK;
    };

    auto gradient_terms = [&](double x, double y, const Rat& rx, const Rat& ry) {
        // a1 = -(w_H + y w_K) / (w_H + x w_K), exact then floated
        Rat a1_exact = -(wH + ry * wK) / (wH + rx * wK);
        double a1 = a1_exact.get_d();
        double f1 = vel.F1(x, y), f2 = vel.F2(x, y);
        double f11 = vel.F11(x, y), f12 = vel.F12(x, y), f22 = vel.F22(x, y);
        double dd = (f1 - f2) / (x - y);
        double second = f11 + 2 * f12 * a1 + f22 * a1 * a1;
        double g_h = second + 2 * dd * a1 * a1;
        double g_k = 2 * (-f1 * a1 + f2 * a1 * a1) + second * y + 2 * dd * x * a1 * a1;
        double mixed = f1 * ((1 + a1) * (1 + a1) * dwHH +
                             2 * (1 + a1) * (y + x * a1) * dwHK +
                             (y + x * a1) * (y + x * a1) * dwKK);
        return g_h * dwH + g_k * dwK - mixed;
    };

    NumericTerms out;
    out.c_w = constant_terms(a, b);
    out.g_w = gradient_terms(a, b, l1, l2);
    out.g_w_swapped = gradient_terms(b, a, l2, l1);
    return out;
}

} // namespace mpf
