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

#include "mpf/case_analysis.hpp"

#include <cassert>

#include "mpf/errors.hpp"
#include "mpf/parallel.hpp"
#include "mpf/sign_cert.hpp"

namespace mpf {

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::I: return "I";
        case CaseId::II: return "II";
        case CaseId::III: return "III";
        case CaseId::IV: return "IV";
        case CaseId::V: return "V";
        case CaseId::VI: return "VI";
        case CaseId::VII: return "VII";
        case CaseId::VIII: return "VIII";
        case CaseId::IX: return "IX";
    }
    return "?";
}

namespace {

CaseId bucket(long k, long l) {
    if (k == 1) return l == 1 ? CaseId::I : (l == 2 ? CaseId::II : CaseId::III);
    if (k == 2) return l == 1 ? CaseId::VII : (l == 2 ? CaseId::IV : CaseId::V);
    return l == 1 ? CaseId::VIII : (l == 2 ? CaseId::IX : CaseId::VI);
}

} // namespace

CaseParams classify(const HKPoly& p, const HKPoly& q) {
    FirstIndex fp = first_positive_index(p);
    if (fp.sign < 0) throw NonPositiveLeadingCoefficient("p");
    FirstIndex fq = first_positive_index(q);
    if (fq.sign < 0) throw NonPositiveLeadingCoefficient("q");
    CaseParams cp;
    cp.g = p.degree;
    cp.h = q.degree;
    cp.k = fp.k;
    cp.l = fq.k;
    cp.c_k = p.coeffs[size_t(fp.k - 1)];
    cp.d_l = q.coeffs[size_t(fq.k - 1)];
    cp.id = bucket(cp.k, cp.l);
    return cp;
}

void validate(const CaseParams& params) {
    if (params.k < 1 || params.l < 1) throw InvalidCaseParams("indices must be >= 1");
    if (params.k > params.g / 2 + 1)
        throw InvalidCaseParams("k exceeds the coefficient count of p");
    if (params.l > params.h / 2 + 1)
        throw InvalidCaseParams("l exceeds the coefficient count of q");
    if (sgn(params.c_k) <= 0 || sgn(params.d_l) <= 0)
        throw InvalidCaseParams("leading coefficients must be positive");
    if (bucket(params.k, params.l) != params.id)
        throw InvalidCaseParams("(k,l) does not match the case bucket");
}

CasePredictions predicted_leading(const CaseParams& params) {
    validate(params);
    const long D = params.g - params.h;
    const long m = params.l - params.k;
    const Rat cd = params.c_k * params.d_l;
    const Rat cd3 = cd * cd * cd;

    // S(s) = (D+m) - (D+2m) s, the leading coefficient of C up to cd
    RhoPoly S(std::vector<Rat>{Rat(D + m), Rat(-(D + 2 * m))}, 1);

    CasePredictions out;
    out.g1.coeff_sigma = S.scaled(-cd3 * Rat(D + m) * Rat(D + 2 * m));
    out.g1.exponent = 3 * (params.g + params.h - params.k - params.l) + 5;

    bool states_c_g2 = params.id == CaseId::VI || params.id == CaseId::VII ||
                       params.id == CaseId::VIII || params.id == CaseId::IX;
    if (states_c_g2) {
        LeadingPrediction c;
        c.coeff_sigma = S.scaled(cd);
        c.exponent = params.g + params.h - params.k - params.l + 3;
        out.c = c;
        LeadingPrediction g2;
        // -(l-k)(D+2m) ((l-k) + (D+2m) s)
        RhoPoly lin(std::vector<Rat>{Rat(m), Rat(D + 2 * m)}, 1);
        g2.coeff_sigma = lin.scaled(-cd3 * Rat(m) * Rat(D + 2 * m));
        g2.exponent = 3 * (params.g + params.h - params.k - params.l) + 6;
        out.g2 = g2;
    }
    return out;
}

std::string ChainStep::range_str() const {
    if (single_point) return "sigma = " + rat_str(sigma_lo);
    std::string hi = sigma_hi ? rat_str(*sigma_hi) : "inf";
    return "sigma in (" + rat_str(sigma_lo) + ", " + hi + ")";
}

namespace {

// Exact verification that `poly` (a polynomial in sigma) is strictly
// positive on the open interval (lo, hi). Shift to (0, hi-lo) and reuse the
// half-line machinery.
bool strictly_positive_on(const RhoPoly& poly, const Rat& lo, const std::optional<Rat>& hi) {
    RhoPoly shifted = poly.shifted(lo);
    OpenInterval region = hi ? OpenInterval::between(Rat(0), *hi - lo)
                             : OpenInterval::halfline(Rat(0));
    return certify_sign_on_halfline(shifted, SignMode::StrictlyPositive, region).pass;
}

ChainStep make_step(const Rat& lo, const std::optional<Rat>& hi, bool point,
                    std::string assumption, std::string violated, RhoPoly claim,
                    std::string note = "") {
    ChainStep st;
    st.sigma_lo = lo;
    st.sigma_hi = hi;
    st.single_point = point;
    st.assumption = std::move(assumption);
    st.violated = std::move(violated);
    st.claim_in_sigma = std::move(claim);
    st.note = std::move(note);
    return st;
}

// Every chain step's strict-positivity claim, verified exactly.
void verify_chain(const CaseVerdict& v) {
    for (const ChainStep& st : v.chain) {
        bool ok;
        if (st.single_point) {
            ok = sgn(st.claim_in_sigma.eval(st.sigma_lo)) > 0;
        } else {
            ok = strictly_positive_on(st.claim_in_sigma, st.sigma_lo, st.sigma_hi);
        }
        if (!ok) throw Error("internal: chain certificate failed for case " +
                             case_name(v.params.id) + " on " + st.range_str());
    }
}

} // namespace

CaseVerdict verdict(const CaseParams& params, const std::optional<Rat>& sigma) {
    validate(params);
    if (params.g <= params.h)
        throw InvalidCaseParams("condition II context requires g > h");
    if (sigma && *sigma <= 1)
        throw InvalidCaseParams("verdict requires sigma > 1");

    CaseVerdict v;
    v.params = params;
    v.predictions = predicted_leading(params);
    v.sigma = sigma;

    const long D = params.g - params.h;
    const long m = params.l - params.k;
    const Rat cd = params.c_k * params.d_l;
    const Rat cd3 = cd * cd * cd;

    // S(s) = (D+m) - (D+2m)s: the sign of the C-leading linear form drives
    // the branch. S(1) = -m; the slope is -(D+2m).
    RhoPoly S(std::vector<Rat>{Rat(D + m), Rat(-(D + 2 * m))}, 1);
    RhoPoly c_lead = S.scaled(cd);
    RhoPoly g1_lead = S.scaled(-cd3 * Rat(D + m) * Rat(D + 2 * m));
    RhoPoly g2_lead = RhoPoly(std::vector<Rat>{Rat(m), Rat(D + 2 * m)}, 1)
                          .scaled(-cd3 * Rat(m) * Rat(D + 2 * m));

    const std::string hypo = "case " + case_name(params.id) + ": g=" + std::to_string(params.g) +
                             " h=" + std::to_string(params.h) + " k=" + std::to_string(params.k) +
                             " l=" + std::to_string(params.l) + ", c_k, d_l > 0";

    auto g1_note = (params.id == CaseId::VI && m >= 0)
                       ? std::string("derived sub-branch (l-k >= 0)")
                       : std::string();

    if (sigma) {
        const Rat s = *sigma;
        const Rat sval = S.eval(s);
        if (sgn(sval) < 0) {
            v.chain.push_back(make_step(s, s, true, hypo + ", S(sigma) < 0", "G1", g1_lead, g1_note));
        } else if (sgn(sval) == 0) {
            v.chain.push_back(make_step(s, s, true, hypo + ", S(sigma) = 0 (equality branch)",
                                        "G2", g2_lead));
        } else {
            v.chain.push_back(make_step(s, s, true, hypo + ", S(sigma) > 0", "C", c_lead));
        }
    } else if (m >= 0) {
        // S(1) = -m <= 0 with negative slope: S < 0 on all of (1, inf).
        v.chain.push_back(make_step(Rat(1), std::nullopt, false, hypo + ", S < 0 on (1,inf)",
                                    "G1", g1_lead, g1_note));
    } else if (D + 2 * m <= 0) {
        // S(1) = -m > 0 and nonnegative slope: S > 0 on all of (1, inf).
        v.chain.push_back(make_step(Rat(1), std::nullopt, false, hypo + ", S > 0 on (1,inf)",
                                    "C", c_lead));
    } else {
        // S crosses zero at the rational point sigma* > 1: three pieces.
        Rat sigma_star = Rat(D + m) / Rat(D + 2 * m);
        v.chain.push_back(make_step(Rat(1), sigma_star, false, hypo + ", S > 0 below sigma*",
                                    "C", c_lead));
        v.chain.push_back(make_step(sigma_star, sigma_star, true,
                                    hypo + ", equality branch g-h = (k-l)(2 sigma-1)/(sigma-1)",
                                    "G2", g2_lead));
        v.chain.push_back(make_step(sigma_star, std::nullopt, false, hypo + ", S < 0 above sigma*",
                                    "G1", g1_lead));
    }
    verify_chain(v);
    v.contradiction = true;
    return v;
}

CrossCheckReport cross_check(const Candidate& cand) {
    CrossCheckReport rep;
    rep.params = classify(cand.p, cand.q);
    CasePredictions preds = predicted_leading(rep.params);

    RhoPoly c = constant_poly_C(cand);
    RhoPoly g1 = gradient_poly_G1(cand);
    RhoPoly g2 = gradient_poly_G2(cand);

    auto compare = [&](const std::string& which, const LeadingPrediction& pred,
                       const RhoPoly& computed) {
        CrossCheckEntry e;
        e.which = which;
        e.exponent = pred.exponent;
        e.predicted = pred.coeff_sigma.eval(cand.sigma);
        e.computed = computed.coeff(pred.exponent);
        e.match = e.predicted == e.computed;
        if (!e.match) rep.match = false;
        rep.entries.push_back(std::move(e));
    };

    compare("G1", preds.g1, g1);
    if (preds.c) compare("C", *preds.c, c);
    if (preds.g2) compare("G2", *preds.g2, g2);
    return rep;
}

SweepSummary theorem_sweep(const Rat& sigma, const SearchConfig& bounds, unsigned workers) {
    if (sigma <= 1) throw Error("theorem_sweep requires sigma > 1");
    SearchConfig cfg = bounds;
    cfg.sigma = sigma;
    std::vector<CanonCand> all = enumerate_candidates(cfg);

    SweepSummary sum;
    sum.sigma = sigma;
    sum.enumerated = long(all.size());

    // 0 = failed early, 1 = passed I-III and IV failed consistently,
    // 2 = passed I-III and IV failed but inconsistently, 3 = passed all
    std::vector<char> status(all.size(), 0);
    parallel_for(all.size(), workers, [&](size_t i) {
        Candidate cand = all[i].to_candidate(sigma);
        Stage st = staged_check(cand);
        if (st == Stage::PASS_ALL) {
            status[i] = 3;
            return;
        }
        if (st != Stage::FAIL_IV) return;
        // consistency: the classified case predicts the observed failure
        CaseParams params = classify(cand.p, cand.q);
        CaseVerdict cv = verdict(params, sigma);
        CrossCheckReport ccr = cross_check(cand);
        IVVerdicts iv = check_condition_IV(cand);
        bool consistent = ccr.match;
        for (const ChainStep& step : cv.chain) {
            const Verdict& flagged = step.violated == "C" ? iv.c
                                   : step.violated == "G1" ? iv.g1
                                                           : iv.g2;
            if (flagged.pass) consistent = false;
        }
        status[i] = consistent ? 1 : 2;
    });

    for (size_t i = 0; i < all.size(); ++i) {
        if (status[i] == 0) continue;
        if (status[i] == 3) {
            ++sum.violations;
            throw TheoremViolationFound(all[i].key() + " sigma=" + rat_str(sigma));
        }
        ++sum.passed_i_iii;
        ++sum.iv_failed;
        if (status[i] == 1) ++sum.consistent;
    }
    return sum;
}

} // namespace mpf
