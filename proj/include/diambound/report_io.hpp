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
#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "diambound/engine.hpp"
#include "diambound/errors.hpp"

namespace diambound {

/// Shortest decimal text that reads back as the same double.
inline std::string format_double(double x) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, ptr);
}

namespace detail {

inline std::string optional_text(std::optional<std::uint64_t> v) { return v ? std::to_string(*v) : "-"; }

inline nlohmann::json optional_json(std::optional<std::uint64_t> v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Summary: one "key<TAB>value" per line. Missing bounds print as "-".

inline void write_summary_tsv(std::ostream& out, const bounds_state& state, stop_reason reason,
                              std::string_view prefix = {}) {
    out << prefix << "lower\t" << detail::optional_text(state.best_lower) << '\n';
    out << prefix << "upper\t" << detail::optional_text(state.best_upper) << '\n';
    out << prefix << "gap\t" << detail::optional_text(state.gap()) << '\n';
    out << prefix << "iterations\t" << state.iterations << '\n';
    out << prefix << "stop\t" << to_string(reason) << '\n';
    for (method m : all_methods) {
        const method_stats& s = state.stats(m);
        if (s.samples == 0) continue;
        const std::string key = std::string(prefix) + std::string(to_string(m));
        out << key << ".best\t" << detail::optional_text(s.best) << '\n';
        out << key << ".first_hit\t" << s.first_hit << '\n';
        out << key << ".hits\t" << s.hits << '\n';
        out << key << ".samples\t" << s.samples << '\n';
        out << key << ".frequency\t" << format_double(s.frequency()) << '\n';
    }
}

inline nlohmann::json summary_json(const bounds_state& state, stop_reason reason) {
    nlohmann::json j;
    j["lower"] = detail::optional_json(state.best_lower);
    j["upper"] = detail::optional_json(state.best_upper);
    j["gap"] = detail::optional_json(state.gap());
    j["iterations"] = state.iterations;
    j["stop"] = std::string(to_string(reason));
    nlohmann::json methods = nlohmann::json::object();
    for (method m : all_methods) {
        const method_stats& s = state.stats(m);
        if (s.samples == 0) continue;
        methods[std::string(to_string(m))] = {{"best", detail::optional_json(s.best)},
                                              {"first_hit", s.first_hit},
                                              {"hits", s.hits},
                                              {"samples", s.samples},
                                              {"frequency", s.frequency()}};
    }
    j["methods"] = std::move(methods);
    return j;
}

// ---------------------------------------------------------------------------
// Records: "iter<TAB>method<TAB>start<TAB>value" lines followed by the
// summary block with every line prefixed by '#'. Timing is not written.

template <class Vertex>
void write_records_tsv(std::ostream& out, const run_report<Vertex>& report) {
    out << "#iter\tmethod\tstart\tvalue\n";
    for (const auto& r : report.records) {
        out << r.iteration << '\t' << to_string(r.tag) << '\t' << static_cast<std::uint64_t>(r.start) << '\t'
            << r.value << '\n';
    }
    out << "#summary\n";
    write_summary_tsv(out, report.state, report.reason, "#");
}

template <class Vertex>
nlohmann::json report_json(const run_report<Vertex>& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json witness = nlohmann::json::array();
        for (Vertex w : r.witness) witness.push_back(static_cast<std::uint64_t>(w));
        records.push_back({{"iter", r.iteration},
                           {"method", std::string(to_string(r.tag))},
                           {"start", static_cast<std::uint64_t>(r.start)},
                           {"value", r.value},
                           {"witness", std::move(witness)}});
    }
    return {{"records", std::move(records)}, {"summary", summary_json(report.state, report.reason)}};
}

struct record_file {
    std::vector<bound_record<std::uint64_t>> records;
    /// Present when the file carried a summary block.
    std::optional<stop_reason> reason;
};

namespace detail {

inline std::uint64_t parse_field(std::string_view text, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw parse_error(line, std::string("bad ") + what + " field");
    }
    return value;
}

inline record_file read_records_json(std::istream& in) {
    record_file file;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
        for (const auto& r : doc.at("records")) {
            auto tag = parse_method(r.at("method").get<std::string>());
            if (!tag) throw parse_error(0, "unknown method in record");
            bound_record<std::uint64_t> rec;
            rec.iteration = r.at("iter").get<std::size_t>();
            rec.tag = *tag;
            rec.start = r.at("start").get<std::uint64_t>();
            rec.value = r.at("value").get<std::uint64_t>();
            if (r.contains("witness")) rec.witness = r.at("witness").get<std::vector<std::uint64_t>>();
            file.records.push_back(std::move(rec));
        }
        if (doc.contains("summary")) file.reason = parse_stop_reason(doc["summary"].at("stop").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("bad structured record file: ") + e.what());
    }
    return file;
}

}  // namespace detail

/// Reads either record format; a document starting with '{' is structured.
inline record_file read_records(std::istream& in) {
    in >> std::ws;
    if (in.peek() == '{') return detail::read_records_json(in);

    record_file file;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        if (text.front() == '#') {
            constexpr std::string_view stop_key = "#stop\t";
            if (text.starts_with(stop_key)) file.reason = parse_stop_reason(std::string_view(text).substr(stop_key.size()));
            continue;
        }
        std::vector<std::string_view> fields;
        std::string_view rest = text;
        while (true) {
            const auto tab = rest.find('\t');
            fields.push_back(rest.substr(0, tab));
            if (tab == std::string_view::npos) break;
            rest.remove_prefix(tab + 1);
        }
        if (fields.size() != 4) throw parse_error(line, "expected iter, method, start and value");
        auto tag = parse_method(fields[1]);
        if (!tag) throw parse_error(line, "unknown method '" + std::string(fields[1]) + "'");
        bound_record<std::uint64_t> rec;
        rec.iteration = detail::parse_field(fields[0], line, "iter");
        rec.tag = *tag;
        rec.start = detail::parse_field(fields[2], line, "start");
        rec.value = detail::parse_field(fields[3], line, "value");
        file.records.push_back(std::move(rec));
    }
    return file;
}

// ---------------------------------------------------------------------------
// Distributions: "method<TAB>k<TAB>count<TAB>cumulative_fraction".

inline void write_distributions_tsv(std::ostream& out, std::span<const distribution_summary> dists) {
    out << "#method\tk\tcount\tcumulative_fraction\n";
    for (const auto& d : dists) {
        for (const auto& p : d.points) {
            out << to_string(d.tag) << '\t' << p.k << '\t' << p.count << '\t' << format_double(p.fraction) << '\n';
        }
    }
}

inline nlohmann::json distributions_json(std::span<const distribution_summary> dists) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : dists) {
        nlohmann::json points = nlohmann::json::array();
        for (const auto& p : d.points) points.push_back({{"k", p.k}, {"count", p.count}, {"fraction", p.fraction}});
        out.push_back({{"method", std::string(to_string(d.tag))},
                       {"kind", d.complementary ? "ccdf" : "cdf"},
                       {"total", d.total},
                       {"points", std::move(points)}});
    }
    return out;
}

}  // namespace diambound
