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

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "diambound/errors.hpp"
#include "diambound/graph.hpp"
#include "diambound/traversal.hpp"

namespace diambound {

/// The heuristics. Random and highest-degree tree upper bounds are the same
/// computation started from differently chosen vertices, so they share
/// bound_kind::tree_upper here.
enum class bound_kind : std::uint8_t {
    trivial_lower,
    trivial_upper,
    double_sweep_lower,
    tree_upper,
};

constexpr bool is_lower_bound(bound_kind kind) noexcept {
    return kind == bound_kind::trivial_lower || kind == bound_kind::double_sweep_lower;
}

constexpr std::string_view to_string(bound_kind kind) noexcept {
    switch (kind) {
        case bound_kind::trivial_lower: return "trivial_lower";
        case bound_kind::trivial_upper: return "trivial_upper";
        case bound_kind::double_sweep_lower: return "double_sweep_lower";
        case bound_kind::tree_upper: return "tree_upper";
    }
    return "?";
}

/// One heuristic evaluation.
///
/// For lower bounds the last two witness vertices are a pair at distance
/// exactly `value`, which certifies the bound. Double sweep records
/// (start, farthest from start, farthest from that); the trivial lower bound
/// records (start, farthest from start). Upper bounds carry no witness.
template <class Vertex>
struct bound_value {
    bound_kind method{};
    Vertex start{};
    std::uint64_t value = 0;
    std::vector<Vertex> witness;

    friend bool operator==(const bound_value&, const bound_value&) = default;
};

/// Scratch buffers for the heuristics; one per concurrent caller.
template <class Vertex>
struct bound_workspace {
    bfs_traversal<Vertex> search;
    bfs_traversal<Vertex> tree_search;
};

namespace detail {

template <class Vertex>
const bfs_traversal<Vertex>& spanning_bfs(const basic_graph<Vertex>& g, Vertex v,
                                          bfs_traversal<Vertex>& t) {
    bfs_into(g, v, t);
    if (!t.spans_graph()) throw not_connected();
    return t;
}

}  // namespace detail

/// ecc(v) <= D <= 2 ecc(v), from a single search.
template <class Vertex>
std::pair<bound_value<Vertex>, bound_value<Vertex>> trivial_bounds(const basic_graph<Vertex>& g, Vertex v,
                                                                   bound_workspace<Vertex>& ws) {
    const auto& t = detail::spanning_bfs(g, v, ws.search);
    const std::uint64_t ecc = t.eccentricity();
    return {bound_value<Vertex>{bound_kind::trivial_lower, v, ecc, {v, t.farthest().front()}},
            bound_value<Vertex>{bound_kind::trivial_upper, v, 2 * ecc, {}}};
}

/// ecc(w) for w the smallest-id vertex farthest from u. Never below ecc(u),
/// and exact on trees.
template <class Vertex>
bound_value<Vertex> double_sweep_lower(const basic_graph<Vertex>& g, Vertex u, bound_workspace<Vertex>& ws) {
    const Vertex far = detail::spanning_bfs(g, u, ws.search).farthest().front();
    bfs_into(g, far, ws.search);
    return bound_value<Vertex>{bound_kind::double_sweep_lower, u, ws.search.eccentricity(),
                               {u, far, ws.search.farthest().front()}};
}

/// Diameter of the BFS tree rooted at v. The tree has depth ecc(v), so the
/// value lies in [D, 2 ecc(v)].
template <class Vertex>
bound_value<Vertex> tree_upper(const basic_graph<Vertex>& g, Vertex v, bound_workspace<Vertex>& ws) {
    const basic_graph<Vertex> tree = bfs_tree(detail::spanning_bfs(g, v, ws.search));
    return bound_value<Vertex>{bound_kind::tree_upper, v, tree_diameter(tree, ws.tree_search), {}};
}

/// Dispatch by kind. For the trivial kinds only the requested half is kept.
template <class Vertex>
bound_value<Vertex> compute_bound(bound_kind kind, const basic_graph<Vertex>& g, Vertex v,
                                  bound_workspace<Vertex>& ws) {
    switch (kind) {
        case bound_kind::trivial_lower: return trivial_bounds(g, v, ws).first;
        case bound_kind::trivial_upper: return trivial_bounds(g, v, ws).second;
        case bound_kind::double_sweep_lower: return double_sweep_lower(g, v, ws);
        case bound_kind::tree_upper: return tree_upper(g, v, ws);
    }
    throw std::invalid_argument("unknown bound kind");
}

template <class Vertex>
std::pair<bound_value<Vertex>, bound_value<Vertex>> trivial_bounds(const basic_graph<Vertex>& g, Vertex v) {
    bound_workspace<Vertex> ws;
    return trivial_bounds(g, v, ws);
}

template <class Vertex>
bound_value<Vertex> double_sweep_lower(const basic_graph<Vertex>& g, Vertex u) {
    bound_workspace<Vertex> ws;
    return double_sweep_lower(g, u, ws);
}

template <class Vertex>
bound_value<Vertex> tree_upper(const basic_graph<Vertex>& g, Vertex v) {
    bound_workspace<Vertex> ws;
    return tree_upper(g, v, ws);
}

}  // namespace diambound
