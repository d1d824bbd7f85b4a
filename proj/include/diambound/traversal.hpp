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
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "diambound/errors.hpp"
#include "diambound/graph.hpp"

namespace diambound {

/// Result of one breadth-first search.
///
/// Also serves as reusable scratch space: bfs_into() overwrites an existing
/// traversal and keeps its allocations. One object must not be shared by
/// concurrent searches.
template <class Vertex>
class bfs_traversal {
public:
    bfs_traversal() = default;

    Vertex source() const noexcept { return source_; }

    bool reached(Vertex v) const { return distance_[v] != unreached; }

    /// Hop count from the source, nullopt when v was not reached.
    std::optional<Vertex> distance(Vertex v) const {
        if (!reached(v)) return std::nullopt;
        return distance_[v];
    }

    /// BFS parent of v, nullopt for the source and for unreached vertices.
    std::optional<Vertex> parent(Vertex v) const {
        if (parent_[v] == unreached) return std::nullopt;
        return parent_[v];
    }

    /// ecc(source) within the reached part of the graph.
    Vertex eccentricity() const noexcept { return eccentricity_; }

    /// Vertices at distance eccentricity(), ascending. Never empty.
    std::span<const Vertex> farthest() const noexcept { return farthest_; }

    std::size_t reached_count() const noexcept { return order_.size(); }
    std::size_t vertex_count() const noexcept { return distance_.size(); }
    bool spans_graph() const noexcept { return reached_count() == vertex_count(); }

    /// Vertices in the order they were dequeued.
    std::span<const Vertex> visit_order() const noexcept { return order_; }

    friend bool operator==(const bfs_traversal&, const bfs_traversal&) = default;

private:
    static constexpr Vertex unreached = std::numeric_limits<Vertex>::max();

    template <class V>
    friend void bfs_into(const basic_graph<V>& g, V source, bfs_traversal<V>& out);

    Vertex source_{};
    Vertex eccentricity_{};
    std::vector<Vertex> distance_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> order_;
    std::vector<Vertex> farthest_;
};

/// BFS from source into a reusable traversal. Neighbors are scanned in
/// ascending order, so parents are always the smallest-id vertex of the
/// previous level that is adjacent (first discovered).
template <class Vertex>
void bfs_into(const basic_graph<Vertex>& g, Vertex source, bfs_traversal<Vertex>& out) {
    constexpr Vertex unreached = bfs_traversal<Vertex>::unreached;
    const std::size_t n = g.vertex_count();
    if (source >= n) throw std::out_of_range("bfs: source vertex out of range");

    if (out.distance_.size() == n) {
        for (Vertex v : out.order_) {
            out.distance_[v] = unreached;
            out.parent_[v] = unreached;
        }
    } else {
        out.distance_.assign(n, unreached);
        out.parent_.assign(n, unreached);
    }
    out.order_.clear();
    out.order_.reserve(n);

    out.source_ = source;
    out.distance_[source] = 0;
    out.order_.push_back(source);
    for (std::size_t head = 0; head < out.order_.size(); ++head) {
        const Vertex u = out.order_[head];
        const Vertex next = static_cast<Vertex>(out.distance_[u] + 1);
        for (Vertex w : g.neighbors(u)) {
            if (out.distance_[w] == unreached) {
                out.distance_[w] = next;
                out.parent_[w] = u;
                out.order_.push_back(w);
            }
        }
    }

    // The last level sits at the tail of the visit order.
    out.eccentricity_ = out.distance_[out.order_.back()];
    auto level_begin = out.order_.end();
    while (level_begin != out.order_.begin() &&
           out.distance_[*(level_begin - 1)] == out.eccentricity_) {
        --level_begin;
    }
    out.farthest_.assign(level_begin, out.order_.end());
    std::sort(out.farthest_.begin(), out.farthest_.end());
}

template <class Vertex>
bfs_traversal<Vertex> bfs(const basic_graph<Vertex>& g, Vertex source) {
    bfs_traversal<Vertex> t;
    bfs_into(g, source, t);
    return t;
}

/// The spanning tree formed by the parent edges of a complete traversal.
template <class Vertex>
basic_graph<Vertex> bfs_tree(const bfs_traversal<Vertex>& t) {
    if (!t.spans_graph()) throw not_connected();
    std::vector<typename basic_graph<Vertex>::edge_type> edges;
    edges.reserve(t.vertex_count() > 0 ? t.vertex_count() - 1 : 0);
    for (Vertex v : t.visit_order()) {
        if (auto p = t.parent(v)) edges.emplace_back(*p, v);
    }
    return basic_graph<Vertex>::from_edges(t.vertex_count(), edges);
}

/// Exact diameter of a tree by two searches: from vertex 0, then from the
/// smallest-id vertex farthest from it.
template <class Vertex>
Vertex tree_diameter(const basic_graph<Vertex>& tree, bfs_traversal<Vertex>& scratch) {
    const std::size_t n = tree.vertex_count();
    if (n == 0) throw not_a_tree("no vertices");
    if (tree.edge_count() != n - 1) throw not_a_tree("edge count is not n - 1");
    bfs_into(tree, Vertex{0}, scratch);
    if (!scratch.spans_graph()) throw not_a_tree("disconnected");
    bfs_into(tree, scratch.farthest().front(), scratch);
    return scratch.eccentricity();
}

template <class Vertex>
Vertex tree_diameter(const basic_graph<Vertex>& tree) {
    bfs_traversal<Vertex> scratch;
    return tree_diameter(tree, scratch);
}

}  // namespace diambound
