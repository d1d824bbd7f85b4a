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

// diambound: diameter bounds for large undirected graphs.
//
//   diambound bounds   --input G [--mode auto|precision|fixed] ...
//   diambound exact    --input G
//   diambound generate --family cycle --n 12
//   diambound stats    --records FILE
//
// Exit status: 0 ok, 1 usage error, 2 input error, 3 stopped by the
// iteration guard before the requested gap was reached.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "diambound.hpp"

namespace {

using namespace diambound;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_input = 2;
constexpr int exit_guard = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct bounds_config {
    std::string input;
    std::string mode = "auto";
    std::uint64_t threshold = stopping_criterion::default_threshold;
    std::optional<double> precision;
    std::optional<std::size_t> iterations;
    std::optional<std::string> method_name;
    std::optional<std::string> strategy_name;
    std::uint64_t seed = 0;
    bool lcc = false;
    std::size_t max_iterations = 0;
    unsigned workers = 1;
    std::string records;
    std::string distributions;
    std::string mapping;
    std::string format = "tsv";
};

struct exact_config {
    std::string input;
    bool lcc = false;
    std::size_t limit = 100000;
    unsigned workers = 1;
};

struct generate_config {
    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::string output = "-";
};

struct stats_config {
    std::string records;
    std::string distributions;
    std::string format = "tsv";
};

/// Owns an ifstream unless the path is "-".
class input_source {
public:
    explicit input_source(const std::string& path) {
        if (path == "-") return;
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_) throw graph_error("cannot open " + path);
    }
    std::istream& stream() { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw graph_error("cannot write " + path);
    return out;
}

struct prepared_graph {
    graph g;
    std::vector<std::uint64_t> original_ids;
    std::size_t input_n = 0;
    std::size_t input_m = 0;
};

prepared_graph prepare(const std::string& path, bool lcc) {
    input_source src(path);
    auto loaded = load_edge_list(src.stream());
    prepared_graph p;
    p.input_n = loaded.graph.vertex_count();
    p.input_m = loaded.graph.edge_count();
    if (lcc) {
        auto sub = largest_connected_component(loaded.graph);
        p.g = std::move(sub.graph);
        p.original_ids.reserve(sub.to_parent.size());
        for (auto v : sub.to_parent) p.original_ids.push_back(loaded.original_ids[v]);
    } else {
        const auto components = connected_components(loaded.graph);
        if (components.count() != 1) {
            throw graph_error("graph is not connected (" + std::to_string(components.count()) +
                              " components); rerun with --lcc to use the largest one");
        }
        p.g = std::move(loaded.graph);
        p.original_ids = std::move(loaded.original_ids);
    }
    return p;
}

int run_bounds(const bounds_config& cfg, const CLI::App& cmd) {
    const bool structured = cfg.format == "structured";
    const bool has_threshold = cmd.count("--threshold") > 0;

    stopping_criterion stop;
    if (cfg.mode == "auto") {
        if (cfg.precision || cfg.iterations) throw usage_error("--mode auto takes --threshold only");
        if (cfg.method_name) throw usage_error("--method needs --mode fixed");
        stop = stopping_criterion::gap_threshold(cfg.threshold);
    } else if (cfg.mode == "precision") {
        if (!cfg.precision) throw usage_error("--mode precision needs --precision");
        if (has_threshold || cfg.iterations) throw usage_error("--mode precision takes --precision only");
        if (!(*cfg.precision > 0.0)) throw usage_error("--precision must be positive");
        if (cfg.method_name) throw usage_error("--method needs --mode fixed");
        stop = stopping_criterion::relative_precision(*cfg.precision);
    } else {
        if (!cfg.iterations) throw usage_error("--mode fixed needs --iterations");
        if (has_threshold || cfg.precision) throw usage_error("--mode fixed takes --iterations only");
        if (*cfg.iterations < 1) throw usage_error("--iterations must be at least 1");
        stop = stopping_criterion::fixed_iterations(*cfg.iterations);
    }

    std::optional<method> single;
    start_strategy strategy{};
    if (cfg.method_name) {
        single = parse_method(*cfg.method_name);
        strategy.kind = default_strategy(*single);
        if (cfg.strategy_name) {
            strategy.kind = *cfg.strategy_name == "degree" ? strategy_kind::degree_descending
                                                           : strategy_kind::uniform_random;
            if ((*single == method::rtub || *single == method::hdtub) && strategy.kind != default_strategy(*single)) {
                throw usage_error("--method " + *cfg.method_name + " implies --strategy " +
                                  std::string(to_string(default_strategy(*single))));
            }
        }
        strategy.seed = cfg.seed;
    } else if (cfg.strategy_name) {
        throw usage_error("--strategy needs --method");
    }

    prepared_graph p;
    try {
        p = prepare(cfg.input, cfg.lcc);
    } catch (const graph_error& e) {
        std::cerr << "diambound: " << e.what() << '\n';
        return exit_input;
    }

    engine_options options;
    options.max_iterations = cfg.max_iterations;
    options.workers = cfg.workers;
    const run_report<graph::vertex_type> report =
        single ? run_single_method(p.g, *single, strategy, *cfg.iterations, options)
               : run_auto(p.g, stop, cfg.seed, options);

    const auto witness = report.lower_witness();
    if (structured) {
        nlohmann::json j;
        j["n"] = p.input_n;
        j["m"] = p.input_m;
        if (cfg.lcc) j["lcc"] = {{"n", p.g.vertex_count()}, {"m", p.g.edge_count()}};
        j["mode"] = cfg.mode;
        if (single) j["method"] = std::string(to_string(*single));
        j["summary"] = summary_json(report.state, report.reason);
        if (witness) j["witness"] = {p.original_ids[witness->first], p.original_ids[witness->second]};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n\t" << p.input_n << '\n' << "m\t" << p.input_m << '\n';
        if (cfg.lcc) std::cout << "lcc_n\t" << p.g.vertex_count() << '\n' << "lcc_m\t" << p.g.edge_count() << '\n';
        std::cout << "mode\t" << cfg.mode << '\n';
        if (single) std::cout << "method\t" << to_string(*single) << '\n';
        write_summary_tsv(std::cout, report.state, report.reason);
        if (witness) {
            std::cout << "witness\t" << p.original_ids[witness->first] << '\t' << p.original_ids[witness->second]
                      << '\n';
        }
    }

    if (!cfg.records.empty()) {
        auto out = open_output(cfg.records);
        if (structured) {
            out << report_json(report).dump(2) << '\n';
        } else {
            write_records_tsv(out, report);
        }
    }
    if (!cfg.distributions.empty()) {
        const auto dists = distributions(report);
        auto out = open_output(cfg.distributions);
        if (structured) {
            out << distributions_json(dists).dump(2) << '\n';
        } else {
            write_distributions_tsv(out, dists);
        }
    }
    if (!cfg.mapping.empty()) {
        auto out = open_output(cfg.mapping);
        for (std::size_t v = 0; v < p.original_ids.size(); ++v) out << v << '\t' << p.original_ids[v] << '\n';
    }

    const double total = report.total_seconds();
    std::cerr << "time\t" << format_double(total) << "\tper_iteration\t"
              << format_double(report.state.iterations ? total / static_cast<double>(report.state.iterations) : 0.0)
              << '\n';
    return report.reason == stop_reason::guard ? exit_guard : exit_ok;
}

int run_exact(const exact_config& cfg) {
    try {
        prepared_graph p = prepare(cfg.input, cfg.lcc);
        exact_options options;
        options.size_limit = cfg.limit;
        options.workers = cfg.workers;
        std::cout << "diameter " << exact_diameter(p.g, options) << '\n';
    } catch (const graph_error& e) {
        std::cerr << "diambound: " << e.what() << '\n';
        return exit_input;
    }
    return exit_ok;
}

int run_generate(const generate_config& cfg) {
    generator_spec spec;
    if (cfg.family == "path") {
        spec = generator_spec::path(cfg.n);
    } else if (cfg.family == "cycle") {
        spec = generator_spec::cycle(cfg.n);
    } else if (cfg.family == "star") {
        spec = generator_spec::star(cfg.n);
    } else if (cfg.family == "tree") {
        spec = generator_spec::random_tree(cfg.n, cfg.seed);
    } else {
        spec = generator_spec::gnm(cfg.n, cfg.m, cfg.seed);
    }
    graph g;
    try {
        g = generate(spec);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    if (cfg.output == "-") {
        write_edge_list(std::cout, g);
    } else {
        auto out = open_output(cfg.output);
        write_edge_list(out, g);
    }
    return exit_ok;
}

int run_stats(const stats_config& cfg) {
    record_file file;
    try {
        input_source src(cfg.records);
        file = read_records(src.stream());
        if (file.records.empty()) throw graph_error("record file has no records");
    } catch (const graph_error& e) {
        std::cerr << "diambound: " << e.what() << '\n';
        return exit_input;
    }
    const std::span<const bound_record<std::uint64_t>> records(file.records);
    const auto dists = distributions(records);
    const bool structured = cfg.format == "structured";
    auto emit = [&](std::ostream& out) {
        if (structured) {
            out << distributions_json(dists).dump(2) << '\n';
        } else {
            write_distributions_tsv(out, dists);
        }
    };
    if (cfg.distributions.empty()) {
        emit(std::cout);
        return exit_ok;
    }
    auto out = open_output(cfg.distributions);
    emit(out);
    const bounds_state state = state_from_records(records);
    const stop_reason reason = file.reason.value_or(stop_reason::iterations);
    if (structured) {
        std::cout << summary_json(state, reason).dump(2) << '\n';
    } else {
        write_summary_tsv(std::cout, state, reason);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower and upper bounds on the diameter of large undirected graphs"};
    app.require_subcommand(1);

    bounds_config bcfg;
    auto* bounds_cmd = app.add_subcommand("bounds", "Iterate bound heuristics until a stopping rule holds");
    bounds_cmd->add_option("--input", bcfg.input, "Edge list path, or - for standard input")->required();
    bounds_cmd->add_option("--mode", bcfg.mode, "auto (gap threshold), precision, or fixed iteration count")
        ->check(CLI::IsMember({"auto", "precision", "fixed"}));
    bounds_cmd->add_option("--threshold", bcfg.threshold, "Stop when upper - lower <= threshold (auto)");
    bounds_cmd->add_option("--precision", bcfg.precision, "Stop when (upper - lower) / lower < precision");
    bounds_cmd->add_option("--iterations", bcfg.iterations, "Iteration count (fixed)");
    bounds_cmd->add_option("--method", bcfg.method_name, "Single method to iterate (fixed)")
        ->check(CLI::IsMember({"tlb", "tub", "dslb", "rtub", "hdtub"}));
    bounds_cmd->add_option("--strategy", bcfg.strategy_name, "Start vertex choice for --method")
        ->check(CLI::IsMember({"random", "degree"}));
    bounds_cmd->add_option("--seed", bcfg.seed, "Random seed");
    bounds_cmd->add_flag("--lcc", bcfg.lcc, "Restrict to the largest connected component");
    bounds_cmd->add_option("--max-iterations", bcfg.max_iterations, "Iteration guard (default 2n)");
    bounds_cmd->add_option("--workers", bcfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--records", bcfg.records, "Write per-iteration records here");
    bounds_cmd->add_option("--distributions", bcfg.distributions, "Write value distributions here");
    bounds_cmd->add_option("--mapping", bcfg.mapping, "Write dense-id to input-id mapping here");
    bounds_cmd->add_option("--format", bcfg.format, "Output format")->check(CLI::IsMember({"tsv", "structured"}));

    exact_config ecfg;
    auto* exact_cmd = app.add_subcommand("exact", "Exact diameter by a search from every vertex");
    exact_cmd->add_option("--input", ecfg.input, "Edge list path, or - for standard input")->required();
    exact_cmd->add_flag("--lcc", ecfg.lcc, "Restrict to the largest connected component");
    exact_cmd->add_option("--limit", ecfg.limit, "Refuse graphs with more vertices (0 = no limit)");
    exact_cmd->add_option("--workers", ecfg.workers, "Worker threads")->check(CLI::PositiveNumber);

    generate_config gcfg;
    auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic graph as a canonical edge list");
    generate_cmd->add_option("--family", gcfg.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "star", "tree", "gnm"}));
    generate_cmd->add_option("--n", gcfg.n, "Vertex count")->required();
    generate_cmd->add_option("--m", gcfg.m, "Edge count (gnm)");
    generate_cmd->add_option("--seed", gcfg.seed, "Random seed (tree, gnm)");
    generate_cmd->add_option("--output", gcfg.output, "Output path, or - for standard output");

    stats_config scfg;
    auto* stats_cmd = app.add_subcommand("stats", "Recompute distributions and statistics from a record file");
    stats_cmd->add_option("--records", scfg.records, "Record file, or - for standard input")->required();
    stats_cmd->add_option("--distributions", scfg.distributions,
                          "Write distributions here and print the summary instead");
    stats_cmd->add_option("--format", scfg.format, "Output format")->check(CLI::IsMember({"tsv", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*bounds_cmd) return run_bounds(bcfg, *bounds_cmd);
        if (*exact_cmd) return run_exact(ecfg);
        if (*generate_cmd) return run_generate(gcfg);
        return run_stats(scfg);
    } catch (const usage_error& e) {
        std::cerr << "diambound: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "diambound: " << e.what() << '\n';
        return exit_input;
    }
}
