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

#include "mpf/checker.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "mpf/errors.hpp"
#include "mpf/parallel.hpp"

namespace mpf {

namespace {

Verdict verdict_i_a(const Candidate& cand) {
    // Homogeneity reduces the open quadrant to the ray; continuity closes it.
    SignCertificate p_cert =
        certify_sign_on_halfline(dehomogenize(cand.p), SignMode::Nonnegative);
    if (!p_cert.pass) return Verdict::from(p_cert, "p takes a negative value");
    SignCertificate q_cert =
        certify_sign_on_halfline(dehomogenize(cand.q), SignMode::StrictlyPositive,
                                 OpenInterval::halfline(Rat(0)));
    if (!q_cert.pass) return Verdict::from(q_cert, "q is not strictly positive");
    return Verdict::ok();
}

Verdict verdict_i_b(const Candidate& cand) {
    Rat d = diagonal_sum(cand.p);
    if (sgn(d) == 0) return Verdict::ok();
    Verdict v = Verdict::fail("p does not vanish on the diagonal");
    SignWitness w;
    w.kind = SignWitness::Point;
    w.rho = 1; // p(1,1) equals the diagonal sum
    w.value = d;
    v.witness = w;
    return v;
}

bool q_positive(const Candidate& cand) {
    return certify_sign_on_halfline(dehomogenize(cand.q), SignMode::StrictlyPositive,
                                    OpenInterval::halfline(Rat(0)))
        .pass;
}

RhoPoly monotonicity_numerator(const Candidate& cand) {
    RhoPoly pt = dehomogenize(cand.p);
    RhoPoly qt = dehomogenize(cand.q);
    return pt.derivative() * qt - pt * qt.derivative();
}

} // namespace

std::pair<Verdict, Verdict> check_condition_I(const Candidate& cand) {
    return {verdict_i_a(cand), verdict_i_b(cand)};
}

Verdict check_condition_II(const Candidate& cand) {
    if (cand.g() > cand.h()) return Verdict::ok();
    return Verdict::fail("deg p = " + std::to_string(cand.g()) +
                         " not greater than deg q = " + std::to_string(cand.h()));
}

Verdict check_condition_III(const Candidate& cand) {
    if (!q_positive(cand)) throw ConditionIPrerequisiteFailed();
    RhoPoly n = monotonicity_numerator(cand);
    SignCertificate below =
        certify_sign_on_halfline(n, SignMode::StrictlyNegative, OpenInterval::between(Rat(0), Rat(1)));
    if (!below.pass) return Verdict::from(below, "w(rho,1) not strictly decreasing on (0,1)");
    SignCertificate above =
        certify_sign_on_halfline(n, SignMode::StrictlyPositive, OpenInterval::halfline(Rat(1)));
    if (!above.pass) return Verdict::from(above, "w(rho,1) not strictly increasing on (1,inf)");
    return Verdict::ok();
}

IVVerdicts check_condition_IV(const Candidate& cand) {
    if (sgn(cand.sigma) <= 0) throw Error("condition IV requires sigma > 0");
    IVVerdicts out;
    out.c = Verdict::from(certify_sign_on_halfline(constant_poly_C(cand), SignMode::Nonpositive),
                          "constant terms take a positive value");
    out.g1 = Verdict::from(certify_sign_on_halfline(gradient_poly_G1(cand), SignMode::Nonpositive),
                           "gradient terms G1 take a positive value");
    out.g2 = Verdict::from(certify_sign_on_halfline(gradient_poly_G2(cand), SignMode::Nonpositive),
                           "gradient terms G2 take a positive value");
    // G2(rho) = rho^(3(g+h)-1) G1(1/rho), so the two verdicts must agree.
    if (out.g1.pass != out.g2.pass)
        throw Error("internal: G1/G2 nonpositivity verdicts disagree");
    return out;
}

MPFReport check_all(const Candidate& cand) {
    MPFReport r;
    auto [ia, ib] = check_condition_I(cand);
    r.i_a = ia;
    r.i_b = ib;
    r.ii = check_condition_II(cand);
    try {
        r.iii = check_condition_III(cand);
    } catch (const ConditionIPrerequisiteFailed& e) {
        r.iii = Verdict::fail(e.what());
    }
    IVVerdicts iv = check_condition_IV(cand);
    r.iv_c = iv.c;
    r.iv_g1 = iv.g1;
    r.iv_g2 = iv.g2;
    return r;
}

Stage staged_check(const Candidate& cand) {
    if (sgn(diagonal_sum(cand.p)) != 0) return Stage::FAIL_I_B;
    if (cand.g() <= cand.h()) return Stage::FAIL_II;
    auto [ia, ib] = check_condition_I(cand);
    (void)ib;
    if (!ia.pass) return Stage::FAIL_I_A;
    try {
        if (!check_condition_III(cand).pass) return Stage::FAIL_III;
    } catch (const ConditionIPrerequisiteFailed&) {
        return Stage::FAIL_III;
    }
    IVVerdicts iv = check_condition_IV(cand);
    if (!(iv.c.pass && iv.g1.pass && iv.g2.pass)) return Stage::FAIL_IV;
    return Stage::PASS_ALL;
}

Candidate CanonCand::to_candidate(const Rat& sigma) const {
    std::vector<Rat> pr(pc.begin(), pc.end());
    std::vector<Rat> qr(qc.begin(), qc.end());
    return Candidate(HKPoly(g, std::move(pr)), HKPoly(h, std::move(qr)), sigma);
}

std::string CanonCand::key() const {
    std::string s = std::to_string(g) + "|" + std::to_string(h) + "|";
    for (long c : pc) s += std::to_string(c) + ",";
    s += "|";
    for (long c : qc) s += std::to_string(c) + ",";
    return s;
}

bool CanonCand::operator<(const CanonCand& o) const {
    if (g != o.g) return g < o.g;
    if (h != o.h) return h < o.h;
    if (pc != o.pc) return pc < o.pc;
    return qc < o.qc;
}

namespace {

long vec_gcd(const std::vector<long>& v) {
    long gg = 0;
    for (long x : v) gg = std::gcd(gg, std::abs(x));
    return gg;
}

bool all_zero(const std::vector<long>& v) {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// Primitive tuples; sign pinned by the first nonzero coefficient of q
// (negating p and q together leaves w = p/q unchanged).
void canonicalize_pair(std::vector<long>& p, std::vector<long>& q) {
    long gp = vec_gcd(p), gq = vec_gcd(q);
    if (gp > 1)
        for (long& x : p) x /= gp;
    if (gq > 1)
        for (long& x : q) x /= gq;
    for (long x : q) {
        if (x == 0) continue;
        if (x < 0) {
            for (long& y : p) y = -y;
            for (long& y : q) y = -y;
        }
        break;
    }
}

// Odometer over coefficient tuples in [lo, hi]^n.
bool next_tuple(std::vector<long>& t, long lo, long hi) {
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < hi) {
            ++t[i];
            for (size_t j = 0; j < i; ++j) t[j] = lo;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<CanonCand> enumerate_candidates(const SearchConfig& cfg) {
    std::set<CanonCand> seen;
    if (cfg.coeff_min > cfg.coeff_max) return {};
    for (long g = 1; g <= cfg.g_max; ++g) {
        long h_cap = g - 1;
        if (cfg.h_max >= 0) h_cap = std::min(h_cap, cfg.h_max);
        for (long h = 0; h <= h_cap; ++h) {
            size_t np = size_t(g / 2) + 1, nq = size_t(h / 2) + 1;
            std::vector<long> pt(np, cfg.coeff_min);
            do {
                if (all_zero(pt)) continue;
                std::vector<long> qt(nq, cfg.coeff_min);
                do {
                    if (all_zero(qt)) continue;
                    CanonCand c;
                    c.g = g;
                    c.h = h;
                    c.pc = pt;
                    c.qc = qt;
                    if (cfg.canonicalize) canonicalize_pair(c.pc, c.qc);
                    seen.insert(std::move(c));
                } while (next_tuple(qt, cfg.coeff_min, cfg.coeff_max));
            } while (next_tuple(pt, cfg.coeff_min, cfg.coeff_max));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Candidate> search(const SearchConfig& cfg, unsigned workers) {
    std::vector<CanonCand> all = enumerate_candidates(cfg);
    std::vector<char> pass(all.size(), 0);
    parallel_for(all.size(), workers, [&](size_t i) {
        Candidate cand = all[i].to_candidate(cfg.sigma);
        if (staged_check(cand) == Stage::PASS_ALL) pass[i] = 1;
    });
    std::vector<Candidate> out;
    for (size_t i = 0; i < all.size(); ++i)
        if (pass[i]) out.push_back(all[i].to_candidate(cfg.sigma));
    return out;
}

} // namespace mpf
