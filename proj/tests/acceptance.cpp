/*
Copyright 2026 The diambound Authors

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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "diambound.hpp"

namespace {

using namespace diambound;
using V = std::uint32_t;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

/// A criterion returns an empty string on success, otherwise the first
/// violation found. `detail` receives a short note printed either way.
struct criterion {
    const char* name;
    std::function<std::string(std::string& detail)> check;
};

graph connected_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    return largest_connected_component(generate(generator_spec::gnm(n, m, seed))).graph;
}

std::string violation(const std::string& what, std::uint64_t a, std::uint64_t b) {
    return what + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")";
}

// 1 -------------------------------------------------------------------------
std::string tree_exactness(std::string& detail) {
    const auto start = clock_type::now();
    xoshiro256ss rng(2024);
    std::size_t vertices = 0;
    bound_workspace<V> ws;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 10 + rng.uniform_below(491);
        const graph tree = generate(generator_spec::random_tree(n, rng()));
        const std::uint64_t exact = exact_diameter(tree);
        for (V u = 0; u < n; ++u) {
            const auto value = double_sweep_lower(tree, u, ws).value;
            if (value != exact) return violation("tree " + std::to_string(i) + " start " + std::to_string(u), value, exact);
        }
        vertices += n;
    }
    const double elapsed = seconds_since(start);
    detail = "100 trees, " + std::to_string(vertices) + " starts, " + format_double(elapsed) + " s";
    if (elapsed >= 30.0) return "took " + format_double(elapsed) + " s, limit 30 s";
    return {};
}

// 2 -------------------------------------------------------------------------
std::string cycle_pathology(std::string& detail) {
    bound_workspace<V> ws;
    for (std::size_t n = 4; n <= 64; ++n) {
        const graph c = generate(generator_spec::cycle(n));
        const auto exact = exact_diameter(c);
        if (exact != n / 2) return violation("C" + std::to_string(n) + " exact", exact, n / 2);
        for (V v = 0; v < n; ++v) {
            const auto value = tree_upper(c, v, ws).value;
            if (value != n - 1) return violation("C" + std::to_string(n) + " tree upper", value, n - 1);
        }
    }
    detail = "n = 4..64, every start";
    return {};
}

// 3 and 4 share their instances.
struct chain_counts {
    std::size_t checks = 0;
    std::string sandwich_violation;
    std::string dominance_violation;
};

void check_chain(const graph& g, std::uint64_t exact, V u, bound_workspace<V>& ws, chain_counts& out) {
    const auto [tl, tu] = trivial_bounds(g, u, ws);
    const auto ds = double_sweep_lower(g, u, ws).value;
    const auto tr = tree_upper(g, u, ws).value;
    ++out.checks;
    if (out.sandwich_violation.empty()) {
        if (!(tl.value <= ds && ds <= exact && exact <= tr && tr <= tu.value)) {
            out.sandwich_violation = "start " + std::to_string(u) + ": " + std::to_string(tl.value) + " " +
                                     std::to_string(ds) + " " + std::to_string(exact) + " " + std::to_string(tr) + " " +
                                     std::to_string(tu.value);
        }
    }
    if (out.dominance_violation.empty()) {
        if (ds < tl.value) out.dominance_violation = violation("dslb below tlb", ds, tl.value);
        if (tr > 2 * tl.value) out.dominance_violation = violation("tub above 2 ecc", tr, 2 * tl.value);
    }
}

chain_counts gnm_chain() {
    chain_counts counts;
    bound_workspace<V> ws;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t n = 60 + (i * 29) % 141;
        const graph g = connected_gnm(n, n + n / 3 + i * 3, 300 + i);
        const auto exact = exact_diameter(g);
        xoshiro256ss rng(i);
        for (int s = 0; s < 10; ++s) check_chain(g, exact, static_cast<V>(rng.uniform_below(g.vertex_count())), ws, counts);
    }
    return counts;
}

std::string sandwich(std::string& detail) {
    const auto counts = gnm_chain();
    detail = std::to_string(counts.checks) + " (graph, start) pairs on 50 connected gnm graphs";
    return counts.sandwich_violation;
}

std::string dominance(std::string& detail) {
    chain_counts counts = gnm_chain();
    bound_workspace<V> ws;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const graph tree = generate(generator_spec::random_tree(50 + seed * 10, seed));
        const auto exact = exact_diameter(tree);
        for (V u = 0; u < tree.vertex_count(); u += 3) check_chain(tree, exact, u, ws, counts);
    }
    for (std::size_t n = 4; n <= 40; ++n) {
        const graph c = generate(generator_spec::cycle(n));
        for (V u = 0; u < n; ++u) check_chain(c, n / 2, u, ws, counts);
    }
    detail = std::to_string(counts.checks) + " starts over gnm graphs, trees and cycles";
    return counts.dominance_violation.empty() ? counts.sandwich_violation : counts.dominance_violation;
}

// 5 -------------------------------------------------------------------------
std::string auto_contract(std::string& detail) {
    std::size_t converged = 0;
    std::size_t guarded = 0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const std::size_t n = 100 + i * 20;
        const graph g = connected_gnm(n, n + n / 4 + i * 10, 500 + i);
        const auto exact = exact_diameter(g);
        const auto report = run_auto(g, stopping_criterion::gap_threshold(5), i);
        const auto lower = *report.state.best_lower;
        const auto upper = *report.state.best_upper;
        if (report.reason == stop_reason::threshold) {
            if (upper - lower > 5) return violation("graph " + std::to_string(i) + " gap", upper - lower, 5);
            ++converged;
        } else if (report.reason == stop_reason::guard) {
            ++guarded;
        } else {
            return "graph " + std::to_string(i) + ": unexpected stop reason";
        }
        if (lower > exact || exact > upper) {
            return "graph " + std::to_string(i) + ": " + std::to_string(lower) + " <= " + std::to_string(exact) +
                   " <= " + std::to_string(upper) + " fails";
        }
    }
    detail = std::to_string(converged) + " converged, " + std::to_string(guarded) + " stopped by guard";
    return {};
}

// Record-file recount shared by 6 and 7; parses the TSV by hand rather than
// through the library reader.
struct recount {
    std::map<std::string, std::vector<std::pair<std::size_t, std::uint64_t>>> samples;  // method -> (iter, value)
    std::map<std::string, std::string> summary;
};

recount parse_record_text(const std::string& text) {
    recount out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) {
            const auto tab = line.find('\t');
            if (tab != std::string::npos) out.summary[line.substr(1, tab - 1)] = line.substr(tab + 1);
            continue;
        }
        std::istringstream fields(line);
        std::size_t iter = 0;
        std::string m;
        std::uint64_t start = 0;
        std::uint64_t value = 0;
        fields >> iter >> m >> start >> value;
        out.samples[m].emplace_back(iter, value);
    }
    return out;
}

bool lower_method(const std::string& m) { return m == "tlb" || m == "dslb"; }

// 6 -------------------------------------------------------------------------
std::string statistics_semantics(std::string& detail) {
    const graph g = connected_gnm(2000, 3000, 77);
    for (method m : all_methods) {
        const auto report = run_single_method(g, m, start_strategy{default_strategy(m), 77}, 100);
        std::ostringstream file;
        write_records_tsv(file, report);
        const recount rc = parse_record_text(file.str());
        const std::string tag(to_string(m));
        const auto& values = rc.samples.at(tag);
        if (values.size() != 100) return tag + ": expected 100 records";

        std::uint64_t best = values.front().second;
        for (const auto& [iter, v] : values) best = lower_method(tag) ? std::max(best, v) : std::min(best, v);
        std::size_t hits = 0;
        std::size_t first = 0;
        for (const auto& [iter, v] : values) {
            if (v == best) {
                ++hits;
                if (first == 0) first = iter;
            }
        }
        const std::string frequency = format_double(static_cast<double>(hits) / 100.0);
        const auto& s = rc.summary;
        if (s.at(tag + ".best") != std::to_string(best)) return tag + ": best differs";
        if (s.at(tag + ".first_hit") != std::to_string(first)) return tag + ": first hit differs";
        if (s.at(tag + ".hits") != std::to_string(hits)) return tag + ": hits differ";
        if (s.at(tag + ".frequency") != frequency) return tag + ": frequency " + s.at(tag + ".frequency") + " vs " + frequency;
        const auto& st = report.state.stats(m);
        if (st.first_hit != first || st.hits != hits || st.frequency() != static_cast<double>(hits) / 100.0) {
            return tag + ": in-memory statistics differ";
        }
    }
    detail = "five methods, 100 iterations each, seed 77";
    return {};
}

// 7 -------------------------------------------------------------------------
std::string distribution_semantics(std::string& detail) {
    const graph g = connected_gnm(3000, 4500, 78);
    std::size_t rows = 0;
    for (method m : all_methods) {
        const auto report = run_single_method(g, m, start_strategy{default_strategy(m), 78}, 150);
        std::ostringstream records;
        write_records_tsv(records, report);
        std::ostringstream table;
        write_distributions_tsv(table, distributions(report));
        const recount rc = parse_record_text(records.str());
        const std::string tag(to_string(m));
        const auto& values = rc.samples.at(tag);

        std::istringstream in(table.str());
        std::string line;
        std::vector<std::pair<std::size_t, double>> points;
        while (std::getline(in, line)) {
            if (line.rfind("#", 0) == 0) continue;
            std::istringstream fields(line);
            std::string name;
            std::uint64_t k = 0;
            std::size_t count = 0;
            double fraction = 0;
            fields >> name >> k >> count >> fraction;
            if (name != tag) return "unexpected method " + name;
            std::size_t expected = 0;
            for (const auto& [iter, v] : values) expected += lower_method(tag) ? (v >= k) : (v <= k);
            if (count != expected) return violation(tag + " k=" + std::to_string(k) + " count", count, expected);
            if (fraction != static_cast<double>(count) / static_cast<double>(values.size())) {
                return tag + " k=" + std::to_string(k) + ": fraction does not match count";
            }
            points.emplace_back(count, fraction);
            ++rows;
        }
        if (points.empty()) return tag + ": empty distribution";
        for (std::size_t i = 1; i < points.size(); ++i) {
            const bool ok = lower_method(tag) ? points[i].first <= points[i - 1].first
                                              : points[i].first >= points[i - 1].first;
            if (!ok) return tag + ": distribution not monotone";
        }
        const double whole = lower_method(tag) ? points.front().second : points.back().second;
        if (whole != 1.0) return tag + ": distribution does not reach 1";
    }
    detail = std::to_string(rows) + " table rows recounted";
    return {};
}

// 8 -------------------------------------------------------------------------
double median_double_sweep_seconds(const graph& g) {
    bound_workspace<V> ws;
    std::vector<double> times;
    xoshiro256ss rng(8);
    double_sweep_lower(g, V{0}, ws);  // warm up allocations
    for (int i = 0; i < 5; ++i) {
        const auto start = clock_type::now();
        double_sweep_lower(g, static_cast<V>(rng.uniform_below(g.vertex_count())), ws);
        times.push_back(seconds_since(start));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

std::string performance(std::string& detail) {
    const graph half = connected_gnm(500000, 2000000, 81);
    const graph full = connected_gnm(1000000, 4000000, 82);
    const auto cold_start = clock_type::now();
    {
        bound_workspace<V> fresh;
        double_sweep_lower(full, V{1}, fresh);
    }
    const double cold = seconds_since(cold_start);
    const double t_half = median_double_sweep_seconds(half);
    const double t_full = median_double_sweep_seconds(full);
    const double ratio = t_full / t_half;
    detail = "gnm(1e6, 4e6) LCC m=" + std::to_string(full.edge_count()) + ": first sweep " + format_double(cold) +
             " s, median " + format_double(t_full) + " s; gnm(5e5, 2e6) median " + format_double(t_half) +
             " s; ratio " + format_double(ratio);
    if (cold >= 20.0) return "double sweep took " + format_double(cold) + " s, limit 20 s";
    if (ratio > 3.0) return "time ratio " + format_double(ratio) + " exceeds 3";
    return {};
}

// 9 -------------------------------------------------------------------------
int run_cli(const std::string& args, std::string& out) {
    const std::string command = std::string(DIAMBOUND_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return -1;
    char buffer[4096];
    std::size_t got = 0;
    out.clear();
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int raw = pclose(pipe);
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string reproducibility(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "diambound_acceptance";
    fs::create_directories(dir);
    const std::string input = (dir / "g.edges").string();
    {
        std::ofstream out(input);
        write_edge_list(out, generate(generator_spec::gnm(3000, 6000, 90)));
    }
    const std::vector<std::string> invocations{
        "bounds --input " + input + " --lcc --seed 5",
        "bounds --input " + input + " --lcc --threshold 0 --seed 5 --max-iterations 40",
        "bounds --input " + input + " --lcc --mode precision --precision 0.1 --seed 9",
        "bounds --input " + input + " --lcc --mode fixed --iterations 25 --method rtub --seed 3",
        "bounds --input " + input + " --lcc --seed 5 --format structured",
    };
    std::size_t i = 0;
    for (const auto& args : invocations) {
        std::string out_a;
        std::string out_b;
        auto outputs = [&](const char* suffix) {
            return " --records " + (dir / ("r" + std::string(suffix))).string() + " --distributions " +
                   (dir / ("d" + std::string(suffix))).string();
        };
        const int a = run_cli(args + outputs("a"), out_a);
        const std::string rec_a = slurp(dir / "ra");
        const std::string dist_a = slurp(dir / "da");
        const int b = run_cli(args + outputs("b"), out_b);
        if (a < 0 || a == 1 || a == 2) return "invocation " + std::to_string(i) + " failed with status " + std::to_string(a);
        if (a != b) return "exit status differs for invocation " + std::to_string(i);
        if (out_a != out_b) return "summary differs for invocation " + std::to_string(i);
        if (rec_a.empty() || rec_a != slurp(dir / "rb")) return "records differ for invocation " + std::to_string(i);
        if (dist_a != slurp(dir / "db")) return "distributions differ for invocation " + std::to_string(i);
        ++i;
    }
    fs::remove_all(dir);
    detail = std::to_string(invocations.size()) + " invocations run twice, outputs byte-identical";
    return {};
}

}  // namespace

int main() {
    const std::vector<criterion> criteria{
        {"1 tree exactness", tree_exactness},
        {"2 cycle pathology", cycle_pathology},
        {"3 sandwich soundness", sandwich},
        {"4 dominance", dominance},
        {"5 auto-mode contract", auto_contract},
        {"6 statistics semantics", statistics_semantics},
        {"7 distribution semantics", distribution_semantics},
        {"8 performance sanity", performance},
        {"9 reproducibility", reproducibility},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        std::string problem;
        try {
            problem = c.check(detail);
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        if (problem.empty()) {
            std::cout << "PASS  " << c.name << "  [" << detail << "]\n";
        } else {
            ++failures;
            std::cout << "FAIL  " << c.name << "  " << problem << '\n';
        }
        std::cout.flush();
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
