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
#include <charconv>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diambound/errors.hpp"

namespace diambound {

/// Counts of what normalization removed while building a graph.
struct normalization_stats {
    std::size_t input_edges = 0;      // edge records seen, including loops and duplicates
    std::size_t self_loops = 0;
    std::size_t duplicate_edges = 0;  // repeats of an already seen undirected edge
};

/// Immutable undirected simple graph stored as adjacency arrays.
///
/// Vertices are dense ids in [0, n). The neighbors of v occupy
/// adjacency()[offsets()[v] .. offsets()[v+1]) sorted ascending, so every
/// traversal over the graph visits vertices in a reproducible order. Each
/// undirected edge is stored twice, once in each endpoint's slice. The largest
/// representable value of Vertex is reserved, which caps n at max(Vertex).
template <std::unsigned_integral Vertex = std::uint32_t>
class basic_graph {
public:
    using vertex_type = Vertex;
    using edge_type = std::pair<Vertex, Vertex>;

    static constexpr std::size_t max_vertices = std::numeric_limits<Vertex>::max();

    basic_graph() : offsets_(1, 0) {}

    /// Builds a normalized graph on n vertices: self-loops are dropped,
    /// duplicate and reversed edges collapse to one undirected edge.
    /// Endpoints must be < n.
    static basic_graph from_edges(std::size_t n, std::span<const edge_type> edges,
                                  normalization_stats* stats = nullptr) {
        if (n > max_vertices) throw std::length_error("too many vertices for the vertex id type");
        basic_graph g;
        g.offsets_.assign(n + 1, 0);
        std::size_t loops = 0;
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
            if (u == v) {
                ++loops;
                continue;
            }
            ++g.offsets_[u + 1];
            ++g.offsets_[v + 1];
        }
        std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

        g.adjacency_.resize(g.offsets_[n]);
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const auto& [u, v] : edges) {
            if (u == v) continue;
            g.adjacency_[cursor[u]++] = v;
            g.adjacency_[cursor[v]++] = u;
        }

        // Sort each slice, drop repeats and compact in place.
        std::size_t write = 0;
        std::size_t begin = 0;
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t end = g.offsets_[v + 1];
            auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(begin);
            auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(end);
            std::sort(first, last);
            last = std::unique(first, last);
            const auto kept = static_cast<std::size_t>(last - first);
            std::copy(first, last, g.adjacency_.begin() + static_cast<std::ptrdiff_t>(write));
            g.offsets_[v] = write;
            write += kept;
            begin = end;
        }
        g.offsets_[n] = write;
        g.adjacency_.resize(write);
        g.adjacency_.shrink_to_fit();
        g.edge_count_ = write / 2;

        if (stats != nullptr) {
            stats->input_edges = edges.size();
            stats->self_loops = loops;
            stats->duplicate_edges = edges.size() - loops - g.edge_count_;
        }
        return g;
    }

    std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return std::span<const Vertex>(adjacency_).subspan(offsets_[v], degree(v));
    }

    std::span<const std::size_t> offsets() const noexcept { return offsets_; }
    std::span<const Vertex> adjacency() const noexcept { return adjacency_; }

    bool has_edge(Vertex u, Vertex v) const {
        auto slice = neighbors(u);
        return std::binary_search(slice.begin(), slice.end(), v);
    }

    /// Edges with u < v in lexicographic order.
    std::vector<edge_type> edges() const {
        std::vector<edge_type> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < vertex_count(); ++u) {
            for (Vertex v : neighbors(static_cast<Vertex>(u))) {
                if (u < v) out.emplace_back(static_cast<Vertex>(u), v);
            }
        }
        return out;
    }

    friend bool operator==(const basic_graph&, const basic_graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::size_t edge_count_ = 0;
};

using graph = basic_graph<>;

/// Checks every structural invariant in O(n + m): sorted duplicate-free
/// slices, no self-loops, ids in range, symmetry and the degree sum.
template <class Vertex>
bool is_well_formed(const basic_graph<Vertex>& g) {
    const std::size_t n = g.vertex_count();
    const auto offsets = g.offsets();
    if (offsets.front() != 0 || offsets.back() != g.adjacency().size()) return false;
    if (g.adjacency().size() != 2 * g.edge_count()) return false;
    for (std::size_t v = 0; v < n; ++v) {
        if (offsets[v] > offsets[v + 1]) return false;
        auto slice = g.neighbors(static_cast<Vertex>(v));
        for (std::size_t i = 0; i < slice.size(); ++i) {
            if (slice[i] >= n || slice[i] == v) return false;
            if (i > 0 && slice[i - 1] >= slice[i]) return false;
            if (!g.has_edge(slice[i], static_cast<Vertex>(v))) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Edge-list text format

struct load_options {
    /// Keep the dense-id to original-id table in the result.
    bool keep_original_ids = true;
};

template <class Vertex = std::uint32_t>
struct load_result {
    basic_graph<Vertex> graph;
    /// original_ids[v] is the id that vertex v carried in the input, when
    /// load_options::keep_original_ids was set.
    std::vector<std::uint64_t> original_ids;
    normalization_stats stats;
    std::size_t lines = 0;
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

inline std::string_view trim_left(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && is_blank(s[i])) ++i;
    return s.substr(i);
}

inline std::uint64_t parse_id(std::string_view& rest, std::size_t line) {
    rest = trim_left(rest);
    if (rest.empty()) throw parse_error(line, "expected two vertex ids");
    std::uint64_t value = 0;
    const char* first = rest.data();
    const char* last = rest.data() + rest.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw parse_error(line, "vertex id out of range");
    if (ec != std::errc{} || (ptr != last && !is_blank(*ptr))) {
        throw parse_error(line, "expected a nonnegative integer vertex id");
    }
    rest.remove_prefix(static_cast<std::size_t>(ptr - first));
    return value;
}

}  // namespace detail

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// and blank lines are skipped. Ids are remapped densely in order of first
/// appearance and the result is normalized (see basic_graph::from_edges).
template <class Vertex = std::uint32_t>
load_result<Vertex> load_edge_list(std::istream& in, const load_options& options = {}) {
    load_result<Vertex> result;
    std::unordered_map<std::uint64_t, Vertex> dense;
    std::vector<std::uint64_t> original;
    std::vector<typename basic_graph<Vertex>::edge_type> edges;

    auto intern = [&](std::uint64_t id, std::size_t line) -> Vertex {
        auto it = dense.find(id);
        if (it != dense.end()) return it->second;
        if (original.size() >= basic_graph<Vertex>::max_vertices) {
            throw parse_error(line, "too many distinct vertex ids for the vertex index type");
        }
        const auto v = static_cast<Vertex>(original.size());
        dense.emplace(id, v);
        original.push_back(id);
        return v;
    };

    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        std::string_view rest = detail::trim_left(text);
        if (rest.empty() || rest.front() == '#' || rest.front() == '%') continue;
        const std::uint64_t a = detail::parse_id(rest, line);
        const std::uint64_t b = detail::parse_id(rest, line);
        if (!detail::trim_left(rest).empty()) throw parse_error(line, "expected exactly two vertex ids");
        const Vertex u = intern(a, line);
        const Vertex v = intern(b, line);
        edges.emplace_back(u, v);
    }
    if (in.bad()) throw graph_error("read error");
    if (edges.empty()) throw parse_error(0, "empty input: no edges");

    result.lines = line;
    result.graph = basic_graph<Vertex>::from_edges(original.size(), edges, &result.stats);
    if (options.keep_original_ids) result.original_ids = std::move(original);
    return result;
}

/// Canonical export: one "u v" line per edge with u < v, sorted by (u, v).
/// Isolated vertices are not represented.
template <class Vertex>
void write_edge_list(std::ostream& out, const basic_graph<Vertex>& g) {
    std::string buffer;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
            if (u < v) {
                buffer += std::to_string(u);
                buffer += ' ';
                buffer += std::to_string(v);
                buffer += '\n';
            }
        }
        if (buffer.size() > (1u << 16)) {
            out << buffer;
            buffer.clear();
        }
    }
    out << buffer;
}

// ---------------------------------------------------------------------------
// Connectivity

struct component_map {
    /// component_id[v]; labels follow first discovery when scanning from vertex 0.
    std::vector<std::size_t> component_id;
    std::vector<std::size_t> component_sizes;
    /// First label of maximal size, i.e. the largest component containing the
    /// smallest vertex id among the tied ones.
    std::size_t largest_id = 0;

    std::size_t count() const noexcept { return component_sizes.size(); }
};

template <class Vertex>
component_map connected_components(const basic_graph<Vertex>& g) {
    constexpr auto unlabeled = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.vertex_count();
    component_map map;
    map.component_id.assign(n, unlabeled);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::size_t root = 0; root < n; ++root) {
        if (map.component_id[root] != unlabeled) continue;
        const std::size_t label = map.component_sizes.size();
        queue.clear();
        queue.push_back(static_cast<Vertex>(root));
        map.component_id[root] = label;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (map.component_id[w] == unlabeled) {
                    map.component_id[w] = label;
                    queue.push_back(w);
                }
            }
        }
        map.component_sizes.push_back(queue.size());
        if (queue.size() > map.component_sizes[map.largest_id]) map.largest_id = label;
    }
    return map;
}

template <class Vertex>
bool is_connected(const basic_graph<Vertex>& g) {
    return g.vertex_count() > 0 && connected_components(g).count() == 1;
}

template <class Vertex>
struct induced_subgraph {
    basic_graph<Vertex> graph;
    /// new id -> id in the parent graph
    std::vector<Vertex> to_parent;
    /// parent id -> new id, nullopt for vertices left out
    std::vector<std::optional<Vertex>> from_parent;
};

/// Induced subgraph on the largest connected component. Vertices keep their
/// relative order, so a connected input comes back unchanged with the
/// identity mapping.
template <class Vertex>
induced_subgraph<Vertex> largest_connected_component(const basic_graph<Vertex>& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("largest_connected_component: empty graph");
    const component_map map = connected_components(g);
    induced_subgraph<Vertex> sub;
    sub.from_parent.assign(g.vertex_count(), std::nullopt);
    sub.to_parent.reserve(map.component_sizes[map.largest_id]);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (map.component_id[v] == map.largest_id) {
            sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
            sub.to_parent.push_back(static_cast<Vertex>(v));
        }
    }
    std::vector<typename basic_graph<Vertex>::edge_type> edges;
    for (Vertex u : sub.to_parent) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) edges.emplace_back(*sub.from_parent[u], *sub.from_parent[v]);
        }
    }
    sub.graph = basic_graph<Vertex>::from_edges(sub.to_parent.size(), edges);
    return sub;
}

/// All vertices by decreasing degree, ties by increasing id.
template <class Vertex>
std::vector<Vertex> degree_descending_order(const basic_graph<Vertex>& g) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

}  // namespace diambound
