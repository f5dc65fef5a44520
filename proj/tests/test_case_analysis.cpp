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

#include <doctest.h>

#include "mpf/case_analysis.hpp"
#include "mpf/errors.hpp"
#include "mpf/sign_cert.hpp"
#include "test_util.hpp"

using namespace mpf;
using mpf::test::Rng;

namespace {

HKPoly hk(long g, std::vector<long> c) {
    return HKPoly(g, std::vector<Rat>(c.begin(), c.end()));
}
const HKPoly kSq = hk(2, {1, -4});
const HKPoly kOne = hk(0, {1});

struct Bucket {
    long k, l;
};
Bucket bucket_for(CaseId id, Rng& rng) {
    auto idx3 = [&] { return rng.uniform(3, 5); };
    switch (id) {
        case CaseId::I: return {1, 1};
        case CaseId::II: return {1, 2};
        case CaseId::III: return {1, idx3()};
        case CaseId::IV: return {2, 2};
        case CaseId::V: return {2, idx3()};
        case CaseId::VI: return {idx3(), idx3()};
        case CaseId::VII: return {2, 1};
        case CaseId::VIII: return {idx3(), 1};
        case CaseId::IX: return {idx3(), 2};
    }
    return {1, 1};
}

// Random candidate landing in the requested bucket, with the condition-II
// context g > h and arbitrary coefficient tails.
Candidate random_case_candidate(Rng& rng, CaseId id, const Rat& sigma, Bucket* out = nullptr) {
    Bucket b = bucket_for(id, rng);
    long h = 2 * (b.l - 1) + rng.uniform(0, 3);
    long g = std::max(h + 1, 2 * (b.k - 1)) + rng.uniform(0, 3);
    if (out) *out = b;
    return Candidate(test::random_hk_with_index(rng, g, b.k),
                     test::random_hk_with_index(rng, h, b.l), sigma);
}

} // namespace

TEST_SUITE("case_analysis") {

TEST_CASE("classification examples") {
    CaseParams p1 = classify(kSq, kOne);
    CHECK(p1.id == CaseId::I);
    CHECK(p1.g == 2);
    CHECK(p1.h == 0);
    CHECK(p1.k == 1);
    CHECK(p1.l == 1);

    // (H^2-4K)^2 over K^2
    CaseParams p2 = classify(hk(4, {1, -8, 16}), hk(4, {0, 0, 1}));
    CHECK(p2.id == CaseId::III);
    CHECK(p2.k == 1);
    CHECK(p2.l == 3);

    // c_1 = 0, c_2 > 0 numerator; d_1 > 0 denominator
    CaseParams p3 = classify(hk(4, {0, 1, 1}), HKPoly::h_power(1));
    CHECK(p3.id == CaseId::VII);

    CHECK_THROWS_AS(classify(hk(2, {-1}), kOne), NonPositiveLeadingCoefficient);
    CHECK_THROWS_AS(classify(kSq, hk(2, {-1, 3})), NonPositiveLeadingCoefficient);
}

TEST_CASE("bucket map covers all nine cases") {
    CHECK(classify(hk(2, {1}), hk(0, {1})).id == CaseId::I);
    CHECK(classify(hk(2, {1}), hk(2, {0, 1})).id == CaseId::II);
    CHECK(classify(hk(2, {1}), hk(4, {0, 0, 1})).id == CaseId::III);
    CHECK(classify(hk(2, {0, 1}), hk(2, {0, 1})).id == CaseId::IV);
    CHECK(classify(hk(2, {0, 1}), hk(4, {0, 0, 1})).id == CaseId::V);
    CHECK(classify(hk(4, {0, 0, 1}), hk(4, {0, 0, 1})).id == CaseId::VI);
    CHECK(classify(hk(2, {0, 1}), hk(0, {1})).id == CaseId::VII);
    CHECK(classify(hk(4, {0, 0, 1}), hk(0, {1})).id == CaseId::VIII);
    CHECK(classify(hk(4, {0, 0, 1}), hk(2, {0, 1})).id == CaseId::IX);
}

TEST_CASE("predicted leading examples") {
    // case I, g=2, h=0, c1=d1=1: L(G1) = (s-1) * 8 rho^5
    CaseParams c1 = classify(kSq, kOne);
    CasePredictions pr1 = predicted_leading(c1);
    CHECK(pr1.g1.exponent == 5);
    CHECK(pr1.g1.coeff_sigma.eval(Rat(2)) == Rat(8));
    CHECK(pr1.g1.coeff_sigma.eval(Rat(1)) == Rat(0));
    CHECK(!pr1.c);
    CHECK(!pr1.g2);

    // case IV, g=3, h=2, c2=d2=1: L(G1) = (s-1) rho^8
    CaseParams c4;
    c4.id = CaseId::IV;
    c4.g = 3;
    c4.h = 2;
    c4.k = 2;
    c4.l = 2;
    c4.c_k = 1;
    c4.d_l = 1;
    CasePredictions pr4 = predicted_leading(c4);
    CHECK(pr4.g1.exponent == 8);
    CHECK(pr4.g1.coeff_sigma == RhoPoly(std::vector<Rat>{Rat(-1), Rat(1)}, 1));

    // case VII with g-h = 3, c2=d1=1, sigma=2 (the equality branch):
    // L(G2) = (1/(sigma-1))^2 rho^(3(g+h)-3)
    CaseParams c7;
    c7.id = CaseId::VII;
    c7.g = 5;
    c7.h = 2;
    c7.k = 2;
    c7.l = 1;
    c7.c_k = 1;
    c7.d_l = 1;
    CasePredictions pr7 = predicted_leading(c7);
    REQUIRE(pr7.g2.has_value());
    CHECK(pr7.g2->exponent == 3 * (c7.g + c7.h) - 3);
    CHECK(pr7.g2->coeff_sigma.eval(Rat(2)) == Rat(1));
    REQUIRE(pr7.c.has_value());
    // C leading form vanishes exactly on the branch sigma
    CHECK(pr7.c->coeff_sigma.eval(Rat(2)) == Rat(0));
}

TEST_CASE("invalid case parameters are rejected") {
    CaseParams bad;
    bad.id = CaseId::VI;
    bad.g = 4; // k=3 needs g >= 2(k-1) = 4: ok
    bad.h = 2; // l=3 needs h >= 4: violated
    bad.k = 3;
    bad.l = 3;
    bad.c_k = 1;
    bad.d_l = 1;
    CHECK_THROWS_AS(predicted_leading(bad), InvalidCaseParams);
    bad.h = 4;
    CHECK_NOTHROW(predicted_leading(bad));
    bad.c_k = -1;
    CHECK_THROWS_AS(predicted_leading(bad), InvalidCaseParams);
    bad.c_k = 1;
    bad.id = CaseId::I; // bucket mismatch
    CHECK_THROWS_AS(predicted_leading(bad), InvalidCaseParams);
}

TEST_CASE("verdict: fixed sigma") {
    // case I: single G1 step, positive leading for every sigma > 1
    CaseVerdict v1 = verdict(classify(kSq, kOne), Rat(2));
    CHECK(v1.contradiction);
    REQUIRE(v1.chain.size() == 1);
    CHECK(v1.chain[0].violated == "G1");
    CHECK(v1.chain[0].claim_in_sigma.eval(Rat(2)) == Rat(8));

    // case VIII equality branch: g-h = (k-1)(2s-1)/(s-1) at s=2, k=3 -> g-h=6
    CaseParams c8;
    c8.id = CaseId::VIII;
    c8.g = 10;
    c8.h = 4;
    c8.k = 3;
    c8.l = 1;
    c8.c_k = 1;
    c8.d_l = 1;
    CaseVerdict v8 = verdict(c8, Rat(2));
    REQUIRE(v8.chain.size() == 1);
    CHECK(v8.chain[0].violated == "G2");
    // c^3 d^3 (k-1)^3 (1/(s-1))^2 = 8
    CHECK(v8.chain[0].claim_in_sigma.eval(Rat(2)) == Rat(8));

    // same parameters just off the branch: C or G1 carries the violation
    CaseVerdict v8b = verdict(c8, Rat(3));
    REQUIRE(v8b.chain.size() == 1);
    CHECK(v8b.chain[0].violated == "G1"); // S(3) = 16 - 10*... < 0
    CaseVerdict v8c = verdict(c8, Rat(3, 2));
    CHECK(v8c.chain[0].violated == "C");

    CHECK_THROWS_AS(verdict(c8, Rat(1)), InvalidCaseParams);
}

TEST_CASE("verdict: symbolic chains cover (1, inf)") {
    // case I: one G1 piece
    CaseVerdict v1 = verdict(classify(kSq, kOne), std::nullopt);
    CHECK(v1.chain.size() == 1);
    CHECK(v1.chain[0].violated == "G1");

    // case VI with k = l: derived sub-branch, single G1 piece
    CaseParams c6;
    c6.id = CaseId::VI;
    c6.g = 7;
    c6.h = 6;
    c6.k = 3;
    c6.l = 3;
    c6.c_k = 2;
    c6.d_l = 3;
    CaseVerdict v6 = verdict(c6, std::nullopt);
    REQUIRE(v6.chain.size() == 1);
    CHECK(v6.chain[0].violated == "G1");
    CHECK(v6.chain[0].note == "derived sub-branch (l-k >= 0)");
    // C-leading = cd (g-h)(1-s) is negative for s > 1, G1-leading positive
    REQUIRE(v6.predictions.c.has_value());
    CHECK(sgn(v6.predictions.c->coeff_sigma.eval(Rat(2))) < 0);
    CHECK(sgn(v6.predictions.g1.coeff_sigma.eval(Rat(2))) > 0);

    // case VIII with k > l: three pieces around sigma* = (D-m)/(D-2m)
    CaseParams c8;
    c8.id = CaseId::VIII;
    c8.g = 10;
    c8.h = 4;
    c8.k = 3;
    c8.l = 1;
    c8.c_k = 1;
    c8.d_l = 1;
    CaseVerdict v8 = verdict(c8, std::nullopt);
    REQUIRE(v8.chain.size() == 3);
    CHECK(v8.chain[0].violated == "C");
    CHECK(v8.chain[1].violated == "G2");
    CHECK(v8.chain[1].single_point);
    CHECK(v8.chain[1].sigma_lo == Rat(2)); // sigma* = (6-(-2))/(6-4) ... = 2
    CHECK(v8.chain[2].violated == "G1");

    // wide bucket where S stays positive: C alone
    CaseParams c9;
    c9.id = CaseId::IX;
    c9.g = 7;
    c9.h = 4;
    c9.k = 4;
    c9.l = 2;
    c9.c_k = 1;
    c9.d_l = 1;
    // D = 3, m = -2, D+2m = -1 <= 0
    CaseVerdict v9 = verdict(c9, std::nullopt);
    REQUIRE(v9.chain.size() == 1);
    CHECK(v9.chain[0].violated == "C");
}

TEST_CASE("symbolic certificates hold at spot-check sigmas") {
    Rng rng(20260401);
    std::vector<Rat> spots = {Rat(1000001, 1000000), Rat(3, 2), Rat(2), Rat(10), Rat(1000)};
    std::vector<CaseId> ids = {CaseId::I,  CaseId::II, CaseId::III, CaseId::IV, CaseId::V,
                               CaseId::VI, CaseId::VII, CaseId::VIII, CaseId::IX};
    for (CaseId id : ids) {
        for (int trial = 0; trial < 10; ++trial) {
            Candidate cand = random_case_candidate(rng, id, Rat(2));
            CaseVerdict v = verdict(classify(cand.p, cand.q), std::nullopt);
            for (const Rat& s : spots) {
                // find the chain piece covering s and check its claim there
                bool covered = false;
                for (const ChainStep& st : v.chain) {
                    bool in = st.single_point
                                  ? s == st.sigma_lo
                                  : (s > st.sigma_lo && (!st.sigma_hi || s < *st.sigma_hi));
                    if (!in) continue;
                    covered = true;
                    CHECK(sgn(st.claim_in_sigma.eval(s)) > 0);
                }
                CHECK(covered);
            }
        }
    }
}

TEST_CASE("auxiliary sigma inequalities, certified") {
    // (2s-1)/(s-1) > 2 for all s > 1  <=>  (2s-1) - 2(s-1) > 0 on (1, inf)
    RhoPoly first(std::vector<Rat>{Rat(1)}, 0); // simplifies to the constant 1
    CHECK(certify_sign_on_halfline(first.shifted(Rat(1)), SignMode::StrictlyPositive,
                                   OpenInterval::halfline(Rat(0)))
              .pass);
    // (l-1)(2s-1)/(s-1) > 4 for all l >= 3, s > 1
    for (long l = 3; l <= 12; ++l) {
        RhoPoly claim(std::vector<Rat>{Rat(-(l - 1) + 4), Rat(2 * (l - 1) - 4)}, 1);
        CHECK(certify_sign_on_halfline(claim.shifted(Rat(1)), SignMode::StrictlyPositive,
                                       OpenInterval::halfline(Rat(0)))
                  .pass);
    }
}

TEST_CASE("cross-check examples") {
    CrossCheckReport r2 = cross_check(Candidate(kSq, kOne, Rat(2)));
    CHECK(r2.match);
    REQUIRE(r2.entries.size() == 1);
    CHECK(r2.entries[0].which == "G1");
    CHECK(r2.entries[0].exponent == 5);
    CHECK(r2.entries[0].predicted == Rat(8));
    CHECK(r2.entries[0].computed == Rat(8));

    // sigma = 1: predicted coefficient 0 at the nominal slot; computed G1 has
    // true leading -32 rho^3 below it, so both slot values are 0
    CrossCheckReport r1 = cross_check(Candidate(kSq, kOne, Rat(1)));
    CHECK(r1.match);
    CHECK(r1.entries[0].predicted == Rat(0));
    CHECK(r1.entries[0].computed == Rat(0));
    LeadingTerm lt = leading_term(gradient_poly_G1(Candidate(kSq, kOne, Rat(1))), 5);
    CHECK(lt.true_exponent == 3);
    CHECK(lt.true_coeff == Rat(-32));
}

TEST_CASE("cross-check on random instances of every case") {
    Rng rng(20260402);
    std::vector<Rat> sigmas = {Rat(3, 2), Rat(2), Rat(5, 2)};
    std::vector<CaseId> ids = {CaseId::I,  CaseId::II, CaseId::III, CaseId::IV, CaseId::V,
                               CaseId::VI, CaseId::VII, CaseId::VIII, CaseId::IX};
    for (CaseId id : ids) {
        for (int trial = 0; trial < 12; ++trial) {
            Rat sigma = sigmas[size_t(trial) % sigmas.size()];
            Candidate cand = random_case_candidate(rng, id, sigma);
            CrossCheckReport rep = cross_check(cand);
            CAPTURE(case_name(id));
            CAPTURE(cand.p.str());
            CAPTURE(cand.q.str());
            CHECK(rep.match);
            CHECK(rep.params.id == id);
        }
    }
}

TEST_CASE("verdict agrees with the certifier on computed polynomials") {
    Rng rng(20260403);
    for (int trial = 0; trial < 40; ++trial) {
        CaseId id = static_cast<CaseId>(rng.uniform(0, 8));
        Rat sigma = Rat(rng.uniform(5, 12), 4); // in (1, 3]
        Candidate cand = random_case_candidate(rng, id, sigma);
        CaseVerdict v = verdict(classify(cand.p, cand.q), sigma);
        REQUIRE(v.chain.size() == 1);
        const ChainStep& st = v.chain[0];
        RhoPoly computed = st.violated == "C" ? constant_poly_C(cand)
                         : st.violated == "G1" ? gradient_poly_G1(cand)
                                               : gradient_poly_G2(cand);
        SignCertificate cert = certify_sign_on_halfline(computed, SignMode::Nonpositive);
        CHECK(!cert.pass);
        if (st.violated == "G1") {
            // a violation exists beyond every isolated root: the predicted
            // positive coefficient at the nominal slot is the true leading one
            Rat x(1);
            while (sturm_count_roots(computed, Bound::at(x), Bound::pos_inf()) > 0) x *= 2;
            CHECK(sgn(computed.eval(x + 1)) > 0);
        }
    }
}

TEST_CASE("theorem sweep examples") {
    SearchConfig small;
    small.g_max = 3;
    small.coeff_min = -4;
    small.coeff_max = 4;
    SweepSummary s2 = theorem_sweep(Rat(2), small, 2);
    CHECK(s2.violations == 0);
    CHECK(s2.iv_failed == s2.passed_i_iii);
    CHECK(s2.consistent == s2.iv_failed);
    CHECK(s2.passed_i_iii > 0); // (H^2-4K, 1) and friends survive I-III

    SweepSummary s32 = theorem_sweep(Rat(3, 2), small, 2);
    CHECK(s32.violations == 0);

    CHECK_THROWS_AS(theorem_sweep(Rat(1), small, 1), Error);
}

} // TEST_SUITE
