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

#ifndef MPF_CHECKER_HPP
#define MPF_CHECKER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mpf/flow_terms.hpp"
#include "mpf/sign_cert.hpp"

namespace mpf {

struct Verdict {
    bool pass = false;
    std::optional<SignWitness> witness;
    std::string reason; // set on failures that are not plain sign witnesses

    static Verdict ok() { return {true, std::nullopt, ""}; }
    static Verdict fail(std::string why) { return {false, std::nullopt, std::move(why)}; }
    static Verdict from(const SignCertificate& cert, std::string why_on_fail) {
        if (cert.pass) return ok();
        return {false, cert.witness, std::move(why_on_fail)};
    }
};

/// Per-condition verdicts. Failures carry exact witnesses wherever a sign
/// claim was refuted; `overall` passes only when every condition does.
struct MPFReport {
    Verdict i_a, i_b, ii, iii, iv_c, iv_g1, iv_g2;
    bool overall() const {
        return i_a.pass && i_b.pass && ii.pass && iii.pass && iv_c.pass && iv_g1.pass &&
               iv_g2.pass;
    }
};

std::pair<Verdict, Verdict> check_condition_I(const Candidate& cand);
Verdict check_condition_II(const Candidate& cand);
Verdict check_condition_III(const Candidate& cand);

struct IVVerdicts {
    Verdict c, g1, g2;
};
/// Requires sigma > 0.
IVVerdicts check_condition_IV(const Candidate& cand);

/// Runs all conditions in order; never short-circuits, the full report is
/// always produced. Sub-check errors become failed verdicts with a reason.
MPFReport check_all(const Candidate& cand);

struct SearchConfig {
    long g_max = 2;
    long h_max = -1; // extra cap on h; h <= g-1 always (condition II pre-filter)
    long coeff_min = -4;
    long coeff_max = 4;
    Rat sigma = Rat(1);
    bool canonicalize = true;
};

/// One canonicalized integer-coefficient candidate from the enumeration:
/// coefficient tuples are primitive (gcd 1) and the first nonzero
/// coefficient of q is positive.
struct CanonCand {
    long g = 0, h = 0;
    std::vector<long> pc, qc;

    Candidate to_candidate(const Rat& sigma) const;
    std::string key() const;
    bool operator<(const CanonCand& o) const;
};

/// Deterministic enumeration of all distinct canonical candidates within
/// the bounds, sorted lexicographically.
std::vector<CanonCand> enumerate_candidates(const SearchConfig& cfg);

/// Exhaustive search for maximum-principle functions at the configured
/// sigma. Returns passing candidates in canonical order.
std::vector<Candidate> search(const SearchConfig& cfg, unsigned workers = 1);

/// Staged condition pipeline used by search and sweeps: cheap filters
/// first, full certification last. Stops at the first failing condition.
enum class Stage { PASS_ALL, FAIL_I_B, FAIL_II, FAIL_I_A, FAIL_III, FAIL_IV };
Stage staged_check(const Candidate& cand);

} // namespace mpf

#endif
