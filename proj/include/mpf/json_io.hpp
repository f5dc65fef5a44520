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

#ifndef MPF_JSON_IO_HPP
#define MPF_JSON_IO_HPP

#include <json.hpp>

#include "mpf/case_analysis.hpp"
#include "mpf/checker.hpp"
#include "mpf/flow_terms.hpp"

namespace mpf {

using json = nlohmann::json;

/// Raised on schema violations; the CLI maps it to exit code 2.
struct ParseError : Error {
    explicit ParseError(const std::string& why) : Error("parse error: " + why) {}
};

Rat rat_from_json(const json& j);

json hkpoly_to_json(const HKPoly& p);
HKPoly hkpoly_from_json(const json& j);

json rhopoly_to_json(const RhoPoly& p);

json candidate_to_json(const Candidate& c);
Candidate candidate_from_json(const json& j);

json report_to_json(const MPFReport& r);

SearchConfig search_config_from_json(const json& j);

json case_verdict_to_json(const CaseVerdict& v);
std::string case_verdict_pretty(const CaseVerdict& v);

json cross_check_to_json(const CrossCheckReport& r);
json sweep_summary_to_json(const SweepSummary& s);

} // namespace mpf

#endif
