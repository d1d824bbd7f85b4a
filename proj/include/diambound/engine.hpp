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

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "diambound/bounds.hpp"
#include "diambound/graph.hpp"
#include "diambound/random.hpp"

namespace diambound {

/// The five iterated methods: the four bound kinds, with the tree upper
/// bound split by how its start vertices are chosen.
enum class method : std::uint8_t {
    tlb,    // trivial lower bound
    tub,    // trivial upper bound
    dslb,   // double sweep lower bound
    rtub,   // random tree upper bound
    hdtub,  // highest degree tree upper bound
};

inline constexpr std::array<method, 5> all_methods{method::tlb, method::tub, method::dslb, method::rtub,
                                                   method::hdtub};

constexpr std::string_view to_string(method m) noexcept {
    constexpr std::array<std::string_view, 5> names{"tlb", "tub", "dslb", "rtub", "hdtub"};
    return names[static_cast<std::size_t>(m)];
}

constexpr std::optional<method> parse_method(std::string_view name) noexcept {
    for (method m : all_methods) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

constexpr bound_kind kind_of(method m) noexcept {
    switch (m) {
        case method::tlb: return bound_kind::trivial_lower;
        case method::tub: return bound_kind::trivial_upper;
        case method::dslb: return bound_kind::double_sweep_lower;
        case method::rtub:
        case method::hdtub: return bound_kind::tree_upper;
    }
    return bound_kind::tree_upper;
}

constexpr bool is_lower_bound(method m) noexcept { return is_lower_bound(kind_of(m)); }

// ---------------------------------------------------------------------------
// Start vertices

enum class strategy_kind : std::uint8_t { uniform_random, degree_descending };

/// How start vertices are picked. uniform_random draws from [0, n) with
/// replacement using xoshiro256ss::uniform_below. degree_descending walks
/// degree_descending_order() and continues with uniform_random draws from
/// the same seed once all n vertices have been used.
struct start_strategy {
    strategy_kind kind = strategy_kind::uniform_random;
    std::uint64_t seed = 0;

    static constexpr start_strategy uniform_random(std::uint64_t seed) {
        return {strategy_kind::uniform_random, seed};
    }
    static constexpr start_strategy degree_descending(std::uint64_t seed = 0) {
        return {strategy_kind::degree_descending, seed};
    }
};

constexpr std::string_view to_string(strategy_kind k) noexcept {
    return k == strategy_kind::uniform_random ? "random" : "degree";
}

/// Strategy the method names imply; rtub and hdtub only make sense with theirs.
constexpr strategy_kind default_strategy(method m) noexcept {
    return m == method::hdtub ? strategy_kind::degree_descending : strategy_kind::uniform_random;
}

/// Cursor over the start vertices a strategy produces on one graph.
template <class Vertex>
class start_sequence {
public:
    start_sequence(const basic_graph<Vertex>& g, start_strategy strategy)
        : n_(g.vertex_count()), rng_(strategy.seed) {
        if (n_ == 0) throw std::invalid_argument("start_sequence: empty graph");
        if (strategy.kind == strategy_kind::degree_descending) order_ = degree_descending_order(g);
    }

    Vertex next() {
        if (position_ < order_.size()) return order_[position_++];
        return static_cast<Vertex>(rng_.uniform_below(n_));
    }

    std::vector<Vertex> take(std::size_t count) {
        std::vector<Vertex> out(count);
        for (auto& v : out) v = next();
        return out;
    }

private:
    std::size_t n_;
    xoshiro256ss rng_;
    std::vector<Vertex> order_;
    std::size_t position_ = 0;
};

// ---------------------------------------------------------------------------
// Stopping

enum class stop_kind : std::uint8_t { gap_threshold, relative_precision, fixed_iterations };

struct stopping_criterion {
    stop_kind kind = stop_kind::gap_threshold;
    std::uint64_t threshold = 5;
    double precision = 0.0;
    std::size_t iterations = 0;

    static constexpr std::uint64_t default_threshold = 5;

    static constexpr stopping_criterion gap_threshold(std::uint64_t t = default_threshold) {
        return {stop_kind::gap_threshold, t, 0.0, 0};
    }
    static stopping_criterion relative_precision(double p) {
        if (!(p > 0.0)) throw std::invalid_argument("precision must be positive");
        return {stop_kind::relative_precision, 0, p, 0};
    }
    static stopping_criterion fixed_iterations(std::size_t k) {
        if (k < 1) throw std::invalid_argument("iteration count must be at least 1");
        return {stop_kind::fixed_iterations, 0, 0.0, k};
    }

    /// Gap rule: upper - lower <= t. Precision rule: (upper - lower) / lower < p,
    /// where a zero gap always counts as converged (a single vertex has
    /// lower = upper = 0).
    bool satisfied(std::optional<std::uint64_t> lower, std::optional<std::uint64_t> upper,
                   std::size_t done) const {
        switch (kind) {
            case stop_kind::fixed_iterations: return done >= iterations;
            case stop_kind::gap_threshold:
                return lower && upper && *upper >= *lower && *upper - *lower <= threshold;
            case stop_kind::relative_precision: {
                if (!lower || !upper || *upper < *lower) return false;
                const std::uint64_t gap = *upper - *lower;
                if (gap == 0) return true;
                if (*lower == 0) return false;
                return static_cast<double>(gap) / static_cast<double>(*lower) < precision;
            }
        }
        return false;
    }
};

enum class stop_reason : std::uint8_t { threshold, precision, iterations, guard };

constexpr std::string_view to_string(stop_reason r) noexcept {
    constexpr std::array<std::string_view, 4> names{"threshold", "precision", "iterations", "guard"};
    return names[static_cast<std::size_t>(r)];
}

constexpr std::optional<stop_reason> parse_stop_reason(std::string_view s) noexcept {
    for (auto r : {stop_reason::threshold, stop_reason::precision, stop_reason::iterations, stop_reason::guard}) {
        if (to_string(r) == s) return r;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Statistics

/// Best value of one method and how it was reached: the iteration of its
/// first occurrence and how many samples produced it.
struct method_stats {
    std::optional<std::uint64_t> best;
    std::size_t first_hit = 0;
    std::size_t hits = 0;
    std::size_t samples = 0;

    double frequency() const noexcept {
        return samples == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples);
    }

    friend bool operator==(const method_stats&, const method_stats&) = default;
};

/// Running best bounds plus per-method statistics.
///
/// Iteration indices are 1-based and global; `iterations` is the largest one
/// observed, so states built over disjoint index ranges can be merged.
struct bounds_state {
    std::optional<std::uint64_t> best_lower;
    std::optional<std::uint64_t> best_upper;
    std::array<method_stats, all_methods.size()> per_method{};
    std::size_t iterations = 0;

    const method_stats& stats(method m) const { return per_method[static_cast<std::size_t>(m)]; }

    std::optional<std::uint64_t> gap() const {
        if (!best_lower || !best_upper) return std::nullopt;
        return *best_upper - *best_lower;
    }

    void observe(method m, std::size_t iteration, std::uint64_t value) {
        const bool lower = is_lower_bound(m);
        method_stats& s = per_method[static_cast<std::size_t>(m)];
        ++s.samples;
        if (!s.best || (lower ? value > *s.best : value < *s.best)) {
            s.best = value;
            s.first_hit = iteration;
            s.hits = 1;
        } else if (value == *s.best) {
            ++s.hits;
            s.first_hit = std::min(s.first_hit, iteration);
        }
        auto& overall = lower ? best_lower : best_upper;
        if (!overall || (lower ? value > *overall : value < *overall)) overall = value;
        iterations = std::max(iterations, iteration);
    }

    friend bool operator==(const bounds_state&, const bounds_state&) = default;
};

/// Combines states from disjoint iteration ranges of the same graph. A
/// method's hits survive only from the sides whose best equals the merged best.
inline bounds_state merge_states(const bounds_state& a, const bounds_state& b) {
    auto pick = [](std::optional<std::uint64_t> x, std::optional<std::uint64_t> y, bool larger) {
        if (!x) return y;
        if (!y) return x;
        return std::optional<std::uint64_t>(larger ? std::max(*x, *y) : std::min(*x, *y));
    };
    bounds_state out;
    out.best_lower = pick(a.best_lower, b.best_lower, true);
    out.best_upper = pick(a.best_upper, b.best_upper, false);
    out.iterations = std::max(a.iterations, b.iterations);
    for (method m : all_methods) {
        const auto i = static_cast<std::size_t>(m);
        const method_stats& x = a.per_method[i];
        const method_stats& y = b.per_method[i];
        method_stats& s = out.per_method[i];
        s.best = pick(x.best, y.best, is_lower_bound(m));
        s.samples = x.samples + y.samples;
        for (const method_stats* side : {&x, &y}) {
            if (side->best && side->best == s.best) {
                s.first_hit = s.hits == 0 ? side->first_hit : std::min(s.first_hit, side->first_hit);
                s.hits += side->hits;
            }
        }
    }
    return out;
}

template <class Vertex>
struct bound_record {
    std::size_t iteration = 0;
    method tag{};
    Vertex start{};
    std::uint64_t value = 0;
    std::vector<Vertex> witness;
    double seconds = 0.0;  // wall clock, excluded from comparisons

    friend bool operator==(const bound_record& a, const bound_record& b) {
        return a.iteration == b.iteration && a.tag == b.tag && a.start == b.start && a.value == b.value &&
               a.witness == b.witness;
    }
};

template <class Vertex>
struct run_report {
    bounds_state state;
    std::vector<bound_record<Vertex>> records;
    stop_reason reason = stop_reason::iterations;

    /// The pair certifying best_lower, if any lower bound was computed.
    std::optional<std::pair<Vertex, Vertex>> lower_witness() const {
        for (const auto& r : records) {
            if (is_lower_bound(r.tag) && state.best_lower && r.value == *state.best_lower && r.witness.size() >= 2) {
                return std::pair{r.witness[r.witness.size() - 2], r.witness.back()};
            }
        }
        return std::nullopt;
    }

    double total_seconds() const {
        double total = 0.0;
        for (const auto& r : records) total += r.seconds;
        return total;
    }

    friend bool operator==(const run_report&, const run_report&) = default;
};

template <class Vertex>
bounds_state state_from_records(std::span<const bound_record<Vertex>> records) {
    bounds_state state;
    for (const auto& r : records) state.observe(r.tag, r.iteration, r.value);
    return state;
}

// ---------------------------------------------------------------------------
// Distributions

/// Per-method distribution of the values a run produced. Lower bounds get
/// the complementary cumulative count (samples with value >= k), upper bounds
/// the cumulative count (samples with value <= k). k runs over
/// [min - 1, max + 1] (clamped at 0) so both tails are visible.
struct distribution_summary {
    struct point {
        std::uint64_t k = 0;
        std::size_t count = 0;
        double fraction = 0.0;

        friend bool operator==(const point&, const point&) = default;
    };

    method tag{};
    bool complementary = false;
    std::size_t total = 0;
    std::vector<point> points;

    /// Fraction at k, extended as a step function outside the stored range.
    double fraction_at(std::uint64_t k) const {
        if (points.empty()) return 0.0;
        if (k < points.front().k) return complementary ? 1.0 : 0.0;
        if (k > points.back().k) return complementary ? 0.0 : 1.0;
        return points[k - points.front().k].fraction;
    }

    friend bool operator==(const distribution_summary&, const distribution_summary&) = default;
};

template <class Vertex>
std::vector<distribution_summary> distributions(std::span<const bound_record<Vertex>> records) {
    if (records.empty()) throw std::invalid_argument("distributions: no records");
    std::vector<distribution_summary> out;
    for (method m : all_methods) {
        std::vector<std::uint64_t> values;
        for (const auto& r : records) {
            if (r.tag == m) values.push_back(r.value);
        }
        if (values.empty()) continue;
        std::sort(values.begin(), values.end());
        distribution_summary d;
        d.tag = m;
        d.complementary = is_lower_bound(m);
        d.total = values.size();
        const std::uint64_t lo = values.front() == 0 ? 0 : values.front() - 1;
        const std::uint64_t hi = values.back() + 1;
        for (std::uint64_t k = lo; k <= hi; ++k) {
            const auto below = static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), k) - values.begin());
            const auto upto = static_cast<std::size_t>(std::upper_bound(values.begin(), values.end(), k) - values.begin());
            const std::size_t count = d.complementary ? values.size() - below : upto;
            d.points.push_back({k, count, static_cast<double>(count) / static_cast<double>(values.size())});
        }
        out.push_back(std::move(d));
    }
    return out;
}

template <class Vertex>
std::vector<distribution_summary> distributions(const run_report<Vertex>& report) {
    return distributions(std::span<const bound_record<Vertex>>(report.records));
}

// ---------------------------------------------------------------------------
// Drivers

struct engine_options {
    /// Iteration cap for the threshold and precision rules; 0 selects the
    /// default of 10 n BFS-equivalents (2 n auto iterations, 5 searches each).
    std::size_t max_iterations = 0;
    /// 1 runs strictly sequentially. Larger values evaluate independent
    /// heuristic calls on a pool; reports are identical either way.
    unsigned workers = 1;
};

inline constexpr std::size_t searches_per_auto_iteration = 5;

inline std::size_t default_max_iterations(std::size_t n) {
    return std::max<std::size_t>(1, 10 * n / searches_per_auto_iteration);
}

namespace detail {

/// Runs fn(index, worker) for index in [0, count), strided over workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
        return;
    }
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::vector<std::exception_ptr> errors(used);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < used; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += used) fn(i, w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

template <class Vertex>
bound_record<Vertex> timed_bound(method m, const basic_graph<Vertex>& g, Vertex start, std::size_t iteration,
                                 bound_workspace<Vertex>& ws) {
    const auto begin = std::chrono::steady_clock::now();
    bound_value<Vertex> b = compute_bound(kind_of(m), g, start, ws);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - begin;
    return {iteration, m, start, b.value, std::move(b.witness), elapsed.count()};
}

inline void require_start_strategy(method m, start_strategy strategy) {
    if ((m == method::rtub || m == method::hdtub) && strategy.kind != default_strategy(m)) {
        throw std::invalid_argument(std::string(to_string(m)) + " requires the " +
                                    std::string(to_string(default_strategy(m))) + " strategy");
    }
}

}  // namespace detail

/// Evaluates method m once per start vertex; starts[i] is iteration
/// first_iteration + i.
template <class Vertex>
run_report<Vertex> run_starts(const basic_graph<Vertex>& g, method m, std::span<const Vertex> starts,
                              std::size_t first_iteration = 1) {
    run_report<Vertex> report;
    bound_workspace<Vertex> ws;
    report.records.reserve(starts.size());
    for (std::size_t i = 0; i < starts.size(); ++i) {
        auto record = detail::timed_bound(m, g, starts[i], first_iteration + i, ws);
        report.state.observe(m, record.iteration, record.value);
        report.records.push_back(std::move(record));
    }
    report.reason = stop_reason::iterations;
    return report;
}

/// Exactly k evaluations of one method with starts from strategy. With
/// several workers the starts are split into contiguous chunks whose states
/// are combined with merge_states.
template <class Vertex>
run_report<Vertex> run_single_method(const basic_graph<Vertex>& g, method m, start_strategy strategy, std::size_t k,
                                     const engine_options& options = {}) {
    if (k < 1) throw std::invalid_argument("run_single_method: k must be at least 1");
    detail::require_start_strategy(m, strategy);
    const std::vector<Vertex> starts = start_sequence<Vertex>(g, strategy).take(k);

    const unsigned chunks = static_cast<unsigned>(std::clamp<std::size_t>(options.workers, 1, k));
    std::vector<run_report<Vertex>> parts(chunks);
    const std::size_t per_chunk = (k + chunks - 1) / chunks;
    detail::parallel_for(chunks, chunks, [&](std::size_t c, unsigned) {
        const std::size_t begin = std::min(k, c * per_chunk);
        const std::size_t end = std::min(k, begin + per_chunk);
        parts[c] = run_starts<Vertex>(g, m, std::span<const Vertex>(starts).subspan(begin, end - begin), begin + 1);
    });

    run_report<Vertex> report = std::move(parts.front());
    for (std::size_t c = 1; c < parts.size(); ++c) {
        report.state = merge_states(report.state, parts[c].state);
        std::move(parts[c].records.begin(), parts[c].records.end(), std::back_inserter(report.records));
    }
    report.reason = stop_reason::iterations;
    return report;
}

/// The default driver: each iteration runs one double sweep lower bound from
/// a uniformly random start and one tree upper bound from the next vertex in
/// decreasing degree order, then checks the stopping rule. The threshold and
/// precision rules stop with reason `guard` once max_iterations is reached;
/// the best bounds are still valid then. With several workers a batch of
/// iterations is evaluated at once and anything past the stopping iteration
/// is discarded, so the report matches the sequential one.
template <class Vertex>
run_report<Vertex> run_auto(const basic_graph<Vertex>& g, const stopping_criterion& stop, std::uint64_t seed,
                            const engine_options& options = {}) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("run_auto: empty graph");
    const bool fixed = stop.kind == stop_kind::fixed_iterations;
    const std::size_t limit =
        fixed ? stop.iterations : (options.max_iterations != 0 ? options.max_iterations : default_max_iterations(n));

    start_sequence<Vertex> lower_starts(g, start_strategy::uniform_random(seed));
    start_sequence<Vertex> upper_starts(g, start_strategy::degree_descending(seed));
    const unsigned workers = std::max(1u, options.workers);
    std::vector<bound_workspace<Vertex>> spaces(workers);

    run_report<Vertex> report;
    std::size_t done = 0;
    while (true) {
        const std::size_t batch = std::min<std::size_t>(workers, limit - done);
        std::vector<Vertex> starts(2 * batch);
        for (std::size_t i = 0; i < batch; ++i) {
            starts[2 * i] = lower_starts.next();
            starts[2 * i + 1] = upper_starts.next();
        }
        std::vector<bound_record<Vertex>> results(2 * batch);
        detail::parallel_for(2 * batch, workers, [&](std::size_t t, unsigned w) {
            const method m = t % 2 == 0 ? method::dslb : method::hdtub;
            results[t] = detail::timed_bound(m, g, starts[t], done + t / 2 + 1, spaces[w]);
        });

        for (std::size_t i = 0; i < batch; ++i) {
            ++done;
            for (auto* r : {&results[2 * i], &results[2 * i + 1]}) {
                report.state.observe(r->tag, r->iteration, r->value);
                report.records.push_back(std::move(*r));
            }
            if (stop.satisfied(report.state.best_lower, report.state.best_upper, done)) {
                report.reason = fixed ? stop_reason::iterations
                                      : (stop.kind == stop_kind::gap_threshold ? stop_reason::threshold
                                                                               : stop_reason::precision);
                return report;
            }
            if (done == limit) {
                report.reason = stop_reason::guard;
                return report;
            }
        }
    }
}

}  // namespace diambound
