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
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "diambound/errors.hpp"
#include "diambound/graph.hpp"
#include "diambound/random.hpp"
#include "diambound/traversal.hpp"

namespace diambound {

struct exact_options {
    /// Refuse graphs with more vertices than this; 0 disables the guard.
    std::size_t size_limit = 100000;
    unsigned workers = 1;
};

/// Exact diameter: the largest eccentricity over all n sources, Theta(n m).
template <class Vertex>
std::uint64_t exact_diameter(const basic_graph<Vertex>& g, const exact_options& options = {}) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("exact_diameter: empty graph");
    if (options.size_limit != 0 && n > options.size_limit) throw size_limit_exceeded(n, options.size_limit);

    bfs_traversal<Vertex> first;
    bfs_into(g, Vertex{0}, first);
    if (!first.spans_graph()) throw not_connected();

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(n)));
    std::vector<std::uint64_t> best(workers, first.eccentricity());
    auto sweep = [&](unsigned worker) {
        bfs_traversal<Vertex> t;
        for (std::size_t s = 1 + worker; s < n; s += workers) {
            bfs_into(g, static_cast<Vertex>(s), t);
            best[worker] = std::max<std::uint64_t>(best[worker], t.eccentricity());
        }
    };
    if (workers == 1) {
        sweep(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
    }
    return *std::max_element(best.begin(), best.end());
}

// ---------------------------------------------------------------------------
// Synthetic graphs

enum class graph_family : std::uint8_t { path, cycle, star, random_tree, gnm };

/// path(n), cycle(n), star(n) with center 0 and n - 1 leaves, a uniform
/// random labeled tree on n vertices, or G(n, m) with m distinct edges.
struct generator_spec {
    graph_family family = graph_family::path;
    std::size_t n = 1;
    std::size_t m = 0;  // gnm only
    std::uint64_t seed = 0;

    static generator_spec path(std::size_t n) { return {graph_family::path, n, 0, 0}; }
    static generator_spec cycle(std::size_t n) { return {graph_family::cycle, n, 0, 0}; }
    static generator_spec star(std::size_t n) { return {graph_family::star, n, 0, 0}; }
    static generator_spec random_tree(std::size_t n, std::uint64_t seed) {
        return {graph_family::random_tree, n, 0, seed};
    }
    static generator_spec gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
        return {graph_family::gnm, n, m, seed};
    }
};

namespace detail {

/// Inverse of index = j (j - 1) / 2 + i over pairs i < j.
inline std::pair<std::uint64_t, std::uint64_t> unrank_pair(std::uint64_t index) {
    auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
    while (j * (j - 1) / 2 > index) --j;
    while ((j + 1) * j / 2 <= index) ++j;
    return {index - j * (j - 1) / 2, j};
}

/// Decodes a Pruefer sequence; the smallest current leaf is attached first.
template <class Vertex>
std::vector<std::pair<Vertex, Vertex>> pruefer_edges(std::size_t n, const std::vector<Vertex>& code) {
    std::vector<std::size_t> degree(n, 1);
    for (Vertex v : code) ++degree[v];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(static_cast<Vertex>(v));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n - 1);
    for (Vertex v : code) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, v);
        if (--degree[v] == 1) leaves.push(v);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return edges;
}

}  // namespace detail

/// Deterministic for a fixed spec. gnm output may be disconnected and may
/// contain isolated vertices.
template <class Vertex = std::uint32_t>
basic_graph<Vertex> generate(const generator_spec& spec) {
    using edge = std::pair<Vertex, Vertex>;
    const std::size_t n = spec.n;
    if (n < 1) throw std::invalid_argument("generate: n must be at least 1");
    if (n > basic_graph<Vertex>::max_vertices) throw std::invalid_argument("generate: n too large");
    std::vector<edge> edges;
    auto id = [](std::uint64_t v) { return static_cast<Vertex>(v); };

    switch (spec.family) {
        case graph_family::path:
            for (std::size_t v = 1; v < n; ++v) edges.emplace_back(id(v - 1), id(v));
            break;
        case graph_family::cycle:
            if (n < 3) throw std::invalid_argument("generate: a cycle needs at least 3 vertices");
            for (std::size_t v = 0; v < n; ++v) edges.emplace_back(id(v), id((v + 1) % n));
            break;
        case graph_family::star:
            for (std::size_t v = 1; v < n; ++v) edges.emplace_back(id(0), id(v));
            break;
        case graph_family::random_tree: {
            if (n == 1) break;
            xoshiro256ss rng(spec.seed);
            std::vector<Vertex> code(n - 2);
            for (auto& v : code) v = id(rng.uniform_below(n));
            edges = detail::pruefer_edges<Vertex>(n, code);
            break;
        }
        case graph_family::gnm: {
            const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
            if (spec.m > pairs) {
                throw std::invalid_argument("generate: m exceeds n(n-1)/2 = " + std::to_string(pairs));
            }
            // Floyd's sampling of m distinct pair ranks.
            xoshiro256ss rng(spec.seed);
            std::unordered_set<std::uint64_t> chosen;
            chosen.reserve(spec.m);
            edges.reserve(spec.m);
            for (std::uint64_t j = pairs - spec.m; j < pairs; ++j) {
                std::uint64_t rank = rng.uniform_below(j + 1);
                if (!chosen.insert(rank).second) {
                    rank = j;
                    chosen.insert(rank);
                }
                const auto [a, b] = detail::unrank_pair(rank);
                edges.emplace_back(id(a), id(b));
            }
            break;
        }
    }
    return basic_graph<Vertex>::from_edges(n, edges);
}

}  // namespace diambound
