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

#ifndef MPF_CASE_ANALYSIS_HPP
#define MPF_CASE_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mpf/checker.hpp"
#include "mpf/flow_terms.hpp"
#include "mpf/poly.hpp"

namespace mpf {

/// The nine buckets of candidate pairs by the 1-based indices (k, l) of the
/// first positive coefficients of p and q:
///   I=(1,1)  II=(1,2)  III=(1,>=3)
///   IV=(2,2)  V=(2,>=3)  VI=(>=3,>=3)
///   VII=(2,1) VIII=(>=3,1) IX=(>=3,2)
enum class CaseId { I, II, III, IV, V, VI, VII, VIII, IX };

std::string case_name(CaseId id);

struct CaseParams {
    CaseId id = CaseId::I;
    long g = 0, h = 0; // degrees of p and q
    long k = 1, l = 1; // first-nonzero indices
    Rat c_k, d_l;      // those coefficients (> 0)
};

/// Buckets a candidate pair. Throws NonPositiveLeadingCoefficient when a
/// first nonzero coefficient is negative (such a candidate violates
/// condition I and the classification hypotheses do not apply).
CaseParams classify(const HKPoly& p, const HKPoly& q);

/// Throws InvalidCaseParams when the (k,l) bucket bounds are violated.
void validate(const CaseParams& params);

/// Predicted leading monomial: the coefficient at the stated exponent as a
/// polynomial in sigma (degree <= 2), and the exponent itself. Cancellation
/// below the stated slot never changes the coefficient at the slot.
struct LeadingPrediction {
    RhoPoly coeff_sigma;
    long exponent = 0;
};

/// Predictions for G1 in every case; for C and G2 additionally in cases
/// VI-IX, where the contradiction argument needs them.
struct CasePredictions {
    LeadingPrediction g1;
    std::optional<LeadingPrediction> c;
    std::optional<LeadingPrediction> g2;
};

CasePredictions predicted_leading(const CaseParams& params);

/// One step of a contradiction chain: on the given sigma range, the named
/// polynomial's leading coefficient (claim_in_sigma, a polynomial in sigma)
/// is strictly positive, refuting its required nonpositivity. Every claim
/// is verified exactly by root analysis before the verdict is returned.
struct ChainStep {
    Rat sigma_lo;                 // open interval (sigma_lo, sigma_hi), or a
    std::optional<Rat> sigma_hi;  // single point when sigma_lo == sigma_hi
    bool single_point = false;
    std::string assumption;
    std::string violated; // "C" | "G1" | "G2"
    RhoPoly claim_in_sigma;
    std::string note;

    std::string range_str() const;
};

struct CaseVerdict {
    CaseParams params;
    CasePredictions predictions;
    std::vector<ChainStep> chain;
    bool contradiction = false;
    std::optional<Rat> sigma; // empty: the chain covers all sigma > 1
};

/// Contradiction chain for a fixed rational sigma > 1, or (sigma empty)
/// for every sigma > 1 at once. Requires the condition-II context g > h.
CaseVerdict verdict(const CaseParams& params, const std::optional<Rat>& sigma);

struct CrossCheckEntry {
    std::string which; // "C" | "G1" | "G2"
    long exponent = 0;
    Rat predicted;
    Rat computed;
    bool match = false;
};

/// Exact comparison of predicted vs computed coefficients at the stated
/// exponents, sigma specialized from the candidate. A mismatch is reported,
/// never auto-resolved.
struct CrossCheckReport {
    CaseParams params;
    std::vector<CrossCheckEntry> entries;
    bool match = true;
};

CrossCheckReport cross_check(const Candidate& cand);

struct SweepSummary {
    Rat sigma;
    long enumerated = 0;   // distinct canonical candidates
    long passed_i_iii = 0; // survivors of conditions I-III
    long iv_failed = 0;
    long consistent = 0; // IV-failures matching the classified prediction
    long violations = 0; // candidates passing everything (must stay 0)
};

/// Checks every enumerated candidate passing I-III fails IV, and that the
/// failure is consistent with the classified case's predicted
/// contradiction. Throws TheoremViolationFound on a full pass.
SweepSummary theorem_sweep(const Rat& sigma, const SearchConfig& bounds, unsigned workers = 1);

} // namespace mpf

#endif
