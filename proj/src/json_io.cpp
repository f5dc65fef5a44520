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

#include "mpf/json_io.hpp"

namespace mpf {

Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("rational must be a string like \"a/b\"");
    auto r = rat_parse(j.get<std::string>());
    if (!r) throw ParseError("bad rational: " + j.get<std::string>());
    return *r;
}

json hkpoly_to_json(const HKPoly& p) {
    json coeffs = json::array();
    for (const Rat& c : p.coeffs) coeffs.push_back(rat_str(c));
    return json{{"degree", p.degree}, {"coeffs", coeffs}};
}

HKPoly hkpoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw ParseError("HK polynomial needs {\"degree\", \"coeffs\"}");
    if (!j["degree"].is_number_integer() || j["degree"].get<long>() < 0)
        throw ParseError("degree must be a nonnegative integer");
    long g = j["degree"].get<long>();
    if (!j["coeffs"].is_array()) throw ParseError("coeffs must be an array");
    std::vector<Rat> c;
    for (const json& e : j["coeffs"]) c.push_back(rat_from_json(e));
    if (long(c.size()) > g / 2 + 1) throw ParseError("too many coefficients for the degree");
    return HKPoly(g, std::move(c));
}

json rhopoly_to_json(const RhoPoly& p) {
    json coeffs = json::array();
    for (long i = 0; i <= p.true_degree(); ++i) coeffs.push_back(rat_str(p.coeff(i)));
    return coeffs;
}

json candidate_to_json(const Candidate& c) {
    return json{{"sigma", rat_str(c.sigma)},
                {"p", hkpoly_to_json(c.p)},
                {"q", hkpoly_to_json(c.q)}};
}

Candidate candidate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sigma") || !j.contains("p") || !j.contains("q"))
        throw ParseError("candidate needs {\"sigma\", \"p\", \"q\"}");
    try {
        return Candidate(hkpoly_from_json(j["p"]), hkpoly_from_json(j["q"]),
                         rat_from_json(j["sigma"]));
    } catch (const ZeroPolynomialError& e) {
        throw ParseError(e.what());
    }
}

namespace {

json witness_to_json(const SignWitness& w) {
    if (w.kind == SignWitness::Point)
        return json{{"rho", rat_str(w.rho)}, {"value", rat_str(w.value)}};
    return json{{"root_interval", json::array({rat_str(w.lo), rat_str(w.hi)})}};
}

json verdict_to_json(const Verdict& v) {
    json j{{"verdict", v.pass ? "pass" : "fail"}};
    if (!v.pass) {
        if (!v.reason.empty()) j["reason"] = v.reason;
        if (v.witness) j["witness"] = witness_to_json(*v.witness);
    }
    return j;
}

} // namespace

json report_to_json(const MPFReport& r) {
    return json{{"I_a", verdict_to_json(r.i_a)},     {"I_b", verdict_to_json(r.i_b)},
                {"II", verdict_to_json(r.ii)},       {"III", verdict_to_json(r.iii)},
                {"IV_C", verdict_to_json(r.iv_c)},   {"IV_G1", verdict_to_json(r.iv_g1)},
                {"IV_G2", verdict_to_json(r.iv_g2)}, {"overall", r.overall() ? "pass" : "fail"}};
}

SearchConfig search_config_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("search config must be an object");
    SearchConfig cfg;
    if (j.contains("sigma")) cfg.sigma = rat_from_json(j["sigma"]);
    auto get_long = [&](const char* key, long dflt) {
        if (!j.contains(key)) return dflt;
        if (!j[key].is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
        return j[key].get<long>();
    };
    cfg.g_max = get_long("g_max", cfg.g_max);
    cfg.h_max = get_long("h_max", cfg.h_max);
    cfg.coeff_min = get_long("coeff_min", cfg.coeff_min);
    cfg.coeff_max = get_long("coeff_max", cfg.coeff_max);
    if (j.contains("canonicalize")) {
        if (!j["canonicalize"].is_boolean()) throw ParseError("canonicalize must be a boolean");
        cfg.canonicalize = j["canonicalize"].get<bool>();
    }
    if (cfg.g_max < 1) throw ParseError("g_max must be >= 1");
    return cfg;
}

namespace {

json prediction_to_json(const LeadingPrediction& p) {
    return json{{"exponent", p.exponent}, {"coeff_sigma_poly", rhopoly_to_json(p.coeff_sigma)}};
}

json chain_step_to_json(const ChainStep& st) {
    json j{{"range", st.range_str()},
           {"assumption", st.assumption},
           {"violated", st.violated},
           {"claim_sigma_poly", rhopoly_to_json(st.claim_in_sigma)}};
    if (!st.note.empty()) j["note"] = st.note;
    return j;
}

} // namespace

json case_verdict_to_json(const CaseVerdict& v) {
    json preds{{"G1", prediction_to_json(v.predictions.g1)}};
    if (v.predictions.c) preds["C"] = prediction_to_json(*v.predictions.c);
    if (v.predictions.g2) preds["G2"] = prediction_to_json(*v.predictions.g2);
    json chain = json::array();
    for (const ChainStep& st : v.chain) chain.push_back(chain_step_to_json(st));
    json j{{"case", case_name(v.params.id)},
           {"g", v.params.g},
           {"h", v.params.h},
           {"k", v.params.k},
           {"l", v.params.l},
           {"c_k", rat_str(v.params.c_k)},
           {"d_l", rat_str(v.params.d_l)},
           {"predicted_leading", preds},
           {"chain", chain},
           {"contradiction", v.contradiction}};
    if (v.sigma) j["sigma"] = rat_str(*v.sigma);
    else j["sigma"] = "all > 1";
    return j;
}

std::string case_verdict_pretty(const CaseVerdict& v) {
    std::string out;
    out += "case " + case_name(v.params.id) + "  (g=" + std::to_string(v.params.g) +
           ", h=" + std::to_string(v.params.h) + ", k=" + std::to_string(v.params.k) +
           ", l=" + std::to_string(v.params.l) + ", c_k=" + rat_str(v.params.c_k) +
           ", d_l=" + rat_str(v.params.d_l) + ")\n";
    out += "predicted leading terms:\n";
    out += "  G1: (" + v.predictions.g1.coeff_sigma.str("s") + ") * rho^" +
           std::to_string(v.predictions.g1.exponent) + "\n";
    if (v.predictions.c)
        out += "  C:  (" + v.predictions.c->coeff_sigma.str("s") + ") * rho^" +
               std::to_string(v.predictions.c->exponent) + "\n";
    if (v.predictions.g2)
        out += "  G2: (" + v.predictions.g2->coeff_sigma.str("s") + ") * rho^" +
               std::to_string(v.predictions.g2->exponent) + "\n";
    out += "contradiction chain:\n";
    for (const ChainStep& st : v.chain) {
        std::string claim = st.single_point
                                ? rat_str(st.claim_in_sigma.eval(st.sigma_lo)) + " (value of " +
                                      st.claim_in_sigma.str("s") + ")"
                                : st.claim_in_sigma.str("s");
        out += "  " + st.range_str() + ": leading coefficient of " + st.violated + " is " + claim +
               " > 0, so " + st.violated + " cannot be nonpositive on the half-line";
        if (!st.note.empty()) out += "  [" + st.note + "]";
        out += "\n    under: " + st.assumption + "\n";
    }
    out += v.contradiction ? "=> no maximum-principle function in this case\n"
                           : "=> no contradiction derived\n";
    return out;
}

json cross_check_to_json(const CrossCheckReport& r) {
    json entries = json::array();
    for (const CrossCheckEntry& e : r.entries)
        entries.push_back(json{{"which", e.which},
                               {"exponent", e.exponent},
                               {"predicted", rat_str(e.predicted)},
                               {"computed", rat_str(e.computed)},
                               {"match", e.match}});
    return json{{"case", case_name(r.params.id)}, {"entries", entries}, {"match", r.match}};
}

json sweep_summary_to_json(const SweepSummary& s) {
    return json{{"sigma", rat_str(s.sigma)},
                {"enumerated", s.enumerated},
                {"passed_I_III", s.passed_i_iii},
                {"IV_failed", s.iv_failed},
                {"consistent", s.consistent},
                {"violations", s.violations}};
}

} // namespace mpf
