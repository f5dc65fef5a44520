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

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "mpf/json_io.hpp"

namespace {

using namespace mpf;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInvariantBreach = 3;

std::string read_all(const std::string& path_or_inline) {
    if (path_or_inline.empty() || path_or_inline == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    // --input accepts inline JSON directly
    if (path_or_inline.front() == '{' || path_or_inline.front() == '[') return path_or_inline;
    std::ifstream in(path_or_inline);
    if (!in) throw ParseError("cannot open " + path_or_inline);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

struct Output {
    std::ofstream file;
    std::ostream* out = &std::cout;
    void open(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw ParseError("cannot open output " + path);
        out = &file;
    }
    std::ostream& stream() { return *out; }
};

Rat parse_sigma(const std::string& s) {
    auto r = rat_parse(s);
    if (!r) throw ParseError("bad sigma: " + s);
    return *r;
}

void parse_coeff_range(const std::string& s, SearchConfig& cfg) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("coeff range must be lo:hi");
    try {
        cfg.coeff_min = std::stol(s.substr(0, colon));
        cfg.coeff_max = std::stol(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("bad coeff range: " + s);
    }
    if (cfg.coeff_min > cfg.coeff_max) throw ParseError("empty coeff range");
}

struct GridSpec {
    Rat lo = Rat(1, 5), hi = Rat(4);
    long count = 20;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    if (s.empty()) return g;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw ParseError("grid must be lo:hi:count");
    auto lo = rat_parse(parts[0]), hi = rat_parse(parts[1]);
    if (!lo || !hi) throw ParseError("bad grid bounds");
    g.lo = *lo;
    g.hi = *hi;
    try {
        g.count = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw ParseError("bad grid count");
    }
    if (g.count < 2 || g.hi <= g.lo) throw ParseError("grid needs count >= 2 and hi > lo");
    return g;
}

int cmd_check(const std::string& input, const std::string& output, const std::string& sigma) {
    Candidate cand = candidate_from_json(parse_json(read_all(input)));
    if (!sigma.empty()) cand.sigma = parse_sigma(sigma);
    MPFReport rep = check_all(cand);
    Output out;
    out.open(output);
    json j = report_to_json(rep);
    j["candidate"] = candidate_to_json(cand);
    out.stream() << j.dump(2) << "\n";
    return kExitOk;
}

SearchConfig config_from_flags(const std::string& input, const std::string& sigma, long gmax,
                               long hmax, const std::string& coeff_range) {
    SearchConfig cfg;
    if (!input.empty()) cfg = search_config_from_json(parse_json(read_all(input)));
    if (!sigma.empty()) cfg.sigma = parse_sigma(sigma);
    if (gmax > 0) cfg.g_max = gmax;
    if (hmax >= 0) cfg.h_max = hmax;
    if (!coeff_range.empty()) parse_coeff_range(coeff_range, cfg);
    return cfg;
}

int cmd_search(const SearchConfig& cfg, unsigned workers, const std::string& output) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Candidate> found = search(cfg, workers);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    Output out;
    out.open(output);
    for (const Candidate& c : found) out.stream() << candidate_to_json(c).dump() << "\n";
    json summary{{"summary",
                  json{{"passing", long(found.size())},
                       {"sigma", rat_str(cfg.sigma)},
                       {"g_max", cfg.g_max},
                       {"coeff_min", cfg.coeff_min},
                       {"coeff_max", cfg.coeff_max}}}};
    out.stream() << summary.dump() << "\n";
    std::cerr << "search finished in " << ms << " ms\n";
    return kExitOk;
}

int cmd_case(const std::string& input, const std::string& output, bool all_sigma, bool pretty) {
    Candidate cand = candidate_from_json(parse_json(read_all(input)));
    CaseParams params = classify(cand.p, cand.q);
    std::optional<Rat> sigma;
    if (!all_sigma) sigma = cand.sigma;
    CaseVerdict v = verdict(params, sigma);
    Output out;
    out.open(output);
    if (pretty)
        out.stream() << case_verdict_pretty(v);
    else
        out.stream() << case_verdict_to_json(v).dump(2) << "\n";
    return kExitOk;
}

int cmd_cross_check(const std::string& input, const std::string& output) {
    Candidate cand = candidate_from_json(parse_json(read_all(input)));
    CrossCheckReport rep = cross_check(cand);
    Output out;
    out.open(output);
    out.stream() << cross_check_to_json(rep).dump(2) << "\n";
    if (!rep.match) {
        std::cerr << "cross-check mismatch: implementation bug or source erratum; "
                     "reported, never auto-resolved\n";
        return kExitInvariantBreach;
    }
    return kExitOk;
}

int cmd_sweep(const SearchConfig& cfg, const std::string& sigma, unsigned workers,
              const std::string& output) {
    Rat s = parse_sigma(sigma.empty() ? "2" : sigma);
    if (s <= 1) throw ParseError("sweep requires sigma > 1");
    auto t0 = std::chrono::steady_clock::now();
    SweepSummary sum = theorem_sweep(s, cfg, workers);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    Output out;
    out.open(output);
    out.stream() << sweep_summary_to_json(sum).dump(2) << "\n";
    std::cerr << "sweep finished in " << ms << " ms\n";
    return kExitOk;
}

int cmd_eval(const std::string& input, const std::string& output, const std::string& velocity,
             const std::string& sigma, const std::string& grid, const std::string& grid1,
             const std::string& grid2, long random_points, unsigned long seed) {
    Candidate cand = candidate_from_json(parse_json(read_all(input)));
    Rat s = sigma.empty() ? cand.sigma : parse_sigma(sigma);
    VelocitySpec vel = VelocitySpec::by_name(velocity, s);
    GridSpec g1 = parse_grid(grid1.empty() ? grid : grid1);
    GridSpec g2 = parse_grid(grid2.empty() ? grid : grid2);
    Output out;
    out.open(output);

    std::vector<std::pair<Rat, Rat>> points;
    if (random_points > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> num(1, 400);
        while (long(points.size()) < random_points) {
            Rat l1(num(rng), 100), l2(num(rng), 100);
            l1.canonicalize();
            l2.canonicalize();
            if (l1 == l2) continue;
            points.emplace_back(l1, l2);
        }
    } else {
        Rat step1 = (g1.hi - g1.lo) / Rat(g1.count - 1);
        Rat step2 = (g2.hi - g2.lo) / Rat(g2.count - 1);
        for (long i = 0; i < g1.count; ++i)
            for (long j = 0; j < g2.count; ++j) {
                Rat l1 = g1.lo + Rat(i) * step1, l2 = g2.lo + Rat(j) * step2;
                if (l1 == l2) continue;
                points.emplace_back(l1, l2);
            }
    }
    for (const auto& [l1, l2] : points) {
        json row{{"l1", rat_str(l1)}, {"l2", rat_str(l2)}};
        try {
            NumericTerms t = numeric_terms(vel, cand, l1, l2);
            row["C_w"] = t.c_w;
            row["G_w"] = t.g_w;
            row["G_w_swapped"] = t.g_w_swapped;
        } catch (const Error& e) {
            row["error"] = e.what();
        }
        out.stream() << row.dump() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of monotone-quantity candidates for "
                 "Gauss-curvature-power contraction flows"};
    app.require_subcommand(1);

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    unsigned long seed = 0;
    std::string input, output, sigma, coeff_range, velocity = "K^sigma", grid, grid1, grid2;
    long gmax = 0, hmax = -1, random_points = 0;
    bool all_sigma = false, pretty = false;

    auto* c_check = app.add_subcommand("check", "verify all four conditions for a candidate");
    c_check->add_option("--input,-i", input, "candidate JSON (default stdin)");
    c_check->add_option("--output,-o", output, "output path (default stdout)");
    c_check->add_option("--sigma", sigma, "override the candidate's sigma");

    auto* c_search = app.add_subcommand("search", "enumerate candidates, print passes");
    c_search->add_option("--input,-i", input, "SearchConfig JSON");
    c_search->add_option("--output,-o", output, "output path");
    c_search->add_option("--sigma", sigma, "exponent sigma (rational)");
    c_search->add_option("--gmax", gmax, "max numerator degree");
    c_search->add_option("--hmax", hmax, "max denominator degree (default g-1)");
    c_search->add_option("--coeff-range", coeff_range, "integer coefficient range lo:hi");
    c_search->add_option("--workers", workers, "worker thread count");

    auto* c_case =
        app.add_subcommand("case", "classify a candidate and derive its contradiction chain");
    c_case->add_option("--input,-i", input, "candidate JSON");
    c_case->add_option("--output,-o", output, "output path");
    c_case->add_flag("--all-sigma", all_sigma, "derive the chain for every sigma > 1");
    c_case->add_flag("--pretty", pretty, "human-readable proof chain");

    auto* c_cross = app.add_subcommand("cross-check", "predicted vs computed leading coefficients");
    c_cross->add_option("--input,-i", input, "candidate JSON");
    c_cross->add_option("--output,-o", output, "output path");

    auto* c_sweep = app.add_subcommand("sweep", "nonexistence sweep over an enumeration");
    c_sweep->add_option("--input,-i", input, "SearchConfig JSON");
    c_sweep->add_option("--output,-o", output, "output path");
    c_sweep->add_option("--sigma", sigma, "exponent sigma (> 1)");
    c_sweep->add_option("--gmax", gmax, "max numerator degree");
    c_sweep->add_option("--hmax", hmax, "max denominator degree (default g-1)");
    c_sweep->add_option("--coeff-range", coeff_range, "integer coefficient range lo:hi");
    c_sweep->add_option("--workers", workers, "worker thread count");

    auto* c_eval = app.add_subcommand("eval", "numeric constant/gradient terms on a grid");
    c_eval->add_option("--input,-i", input, "candidate JSON");
    c_eval->add_option("--output,-o", output, "output path");
    c_eval->add_option("--velocity", velocity, "K^sigma | H^sigma | A2 | trA^sigma");
    c_eval->add_option("--sigma", sigma, "velocity parameter");
    c_eval->add_option("--grid", grid, "lo:hi:count, both axes");
    c_eval->add_option("--grid1", grid1, "lambda1 range lo:hi:count (overrides --grid)");
    c_eval->add_option("--grid2", grid2, "lambda2 range lo:hi:count (overrides --grid)");
    c_eval->add_option("--random", random_points, "sample N random off-diagonal points instead");
    c_eval->add_option("--seed", seed, "seed for sampled point sets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return cmd_check(input, output, sigma);
        if (c_search->parsed())
            return cmd_search(config_from_flags(input, sigma, gmax, hmax, coeff_range), workers,
                              output);
        if (c_case->parsed()) return cmd_case(input, output, all_sigma, pretty);
        if (c_cross->parsed()) return cmd_cross_check(input, output);
        if (c_sweep->parsed())
            return cmd_sweep(config_from_flags(input, "", gmax, hmax, coeff_range), sigma, workers,
                             output);
        if (c_eval->parsed())
            return cmd_eval(input, output, velocity, sigma, grid, grid1, grid2, random_points,
                            seed);
    } catch (const TheoremViolationFound& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kExitInvariantBreach;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariantBreach;
    }
    return kExitOk;
}
