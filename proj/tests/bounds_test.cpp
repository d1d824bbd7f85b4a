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
#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "diambound.hpp"
#include "test_support.hpp"

namespace diambound {
namespace {

using V = std::uint32_t;

TEST(TrivialBounds, Cycle) {
    const graph c6 = generate(generator_spec::cycle(6));
    for (V v = 0; v < 6; ++v) {
        const auto [lower, upper] = trivial_bounds(c6, v);
        EXPECT_EQ(lower.value, 3u);
        EXPECT_EQ(upper.value, 6u);
        EXPECT_EQ(lower.method, bound_kind::trivial_lower);
        EXPECT_EQ(upper.method, bound_kind::trivial_upper);
    }
    EXPECT_EQ(exact_diameter(c6), 3u);
}

TEST(TrivialBounds, StarCenter) {
    const auto [lower, upper] = trivial_bounds(generate(generator_spec::star(5)), V{0});
    EXPECT_EQ(lower.value, 1u);
    EXPECT_EQ(upper.value, 2u);
}

TEST(TrivialBounds, SandwichOnRandomGraph) {
    const graph g = oracle::connected_gnm(100, 250, 9);
    const auto exact = oracle::naive_diameter(g);
    const auto [lower, upper] = trivial_bounds(g, V{0});
    EXPECT_LE(lower.value, exact);
    EXPECT_LE(exact, upper.value);
}

TEST(DoubleSweep, ExactOnTrees) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const graph tree = generate(generator_spec::random_tree(40 + seed, seed));
        const auto exact = oracle::naive_diameter(tree);
        for (V u = 0; u < tree.vertex_count(); ++u) ASSERT_EQ(double_sweep_lower(tree, u).value, exact);
    }
}

TEST(DoubleSweep, ExactOnCycles) {
    for (std::size_t n = 4; n <= 20; ++n) {
        const graph c = generate(generator_spec::cycle(n));
        ASSERT_EQ(oracle::naive_diameter(c), n / 2);
        for (V u = 0; u < n; ++u) ASSERT_EQ(double_sweep_lower(c, u).value, n / 2);
    }
}

TEST(DoubleSweep, NeverBelowTrivialLowerBound) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const graph g = oracle::connected_gnm(80, 120, seed);
        for (V u = 0; u < g.vertex_count(); ++u) {
            ASSERT_GE(double_sweep_lower(g, u).value, trivial_bounds(g, u).first.value);
        }
    }
}

TEST(DoubleSweep, WitnessPairIsAtTheReportedDistance) {
    const graph g = oracle::connected_gnm(120, 200, 3);
    const auto adj = oracle::to_sets(g);
    for (V u : {V{0}, V{7}, V{42}}) {
        const auto b = double_sweep_lower(g, u);
        ASSERT_EQ(b.witness.size(), 3u);
        EXPECT_EQ(b.witness[0], u);
        EXPECT_EQ(oracle::dijkstra(adj, u)[b.witness[1]], oracle::naive_eccentricity(adj, u));
        EXPECT_EQ(oracle::dijkstra(adj, b.witness[1])[b.witness[2]], b.value);
    }
}

TEST(TreeUpper, CyclePathology) {
    for (std::size_t n = 4; n <= 20; ++n) {
        const graph c = generate(generator_spec::cycle(n));
        for (V v = 0; v < n; ++v) ASSERT_EQ(tree_upper(c, v).value, n - 1);
    }
}

TEST(TreeUpper, ExactOnTrees) {
    const graph tree = generate(generator_spec::random_tree(90, 2));
    const auto exact = oracle::naive_diameter(tree);
    for (V v = 0; v < tree.vertex_count(); v += 7) EXPECT_EQ(tree_upper(tree, v).value, exact);
}

TEST(TreeUpper, BetweenDiameterAndTwiceEccentricity) {
    const graph g = oracle::connected_gnm(150, 400, 2);
    const auto adj = oracle::to_sets(g);
    const auto exact = oracle::naive_diameter(adj);
    xoshiro256ss rng(10);
    for (int i = 0; i < 10; ++i) {
        const auto v = static_cast<V>(rng.uniform_below(g.vertex_count()));
        const auto value = tree_upper(g, v).value;
        EXPECT_LE(exact, value);
        EXPECT_LE(value, 2 * oracle::naive_eccentricity(adj, v));
    }
}

TEST(TreeUpper, SpanningTreeDiameterDominatesGraphDiameter) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const graph g = oracle::connected_gnm(60, 100, seed);
        const auto exact = oracle::naive_diameter(g);
        for (V v = 0; v < g.vertex_count(); v += 5) {
            const graph tree = bfs_tree(bfs(g, v));
            EXPECT_GE(oracle::naive_diameter(tree), exact);
            EXPECT_EQ(oracle::naive_diameter(tree), tree_upper(g, v).value);
        }
    }
}

TEST(Bounds, FullChainPerStartVertex) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const graph g = oracle::connected_gnm(50, 70 + seed * 3, seed);
        const auto exact = oracle::naive_diameter(g);
        for (V u = 0; u < g.vertex_count(); ++u) {
            const auto [tl, tu] = trivial_bounds(g, u);
            const auto ds = double_sweep_lower(g, u);
            const auto tr = tree_upper(g, u);
            ASSERT_LE(tl.value, ds.value);
            ASSERT_LE(ds.value, exact);
            ASSERT_LE(exact, tr.value);
            ASSERT_LE(tr.value, tu.value);
        }
    }
}

TEST(Bounds, RejectDisconnectedGraphs) {
    const graph g = graph::from_edges(5, std::vector<graph::edge_type>{{0, 1}, {1, 2}, {3, 4}});
    EXPECT_THROW(trivial_bounds(g, V{0}), not_connected);
    EXPECT_THROW(double_sweep_lower(g, V{3}), not_connected);
    EXPECT_THROW(tree_upper(g, V{1}), not_connected);
}

TEST(Bounds, DeterministicIncludingWitnesses) {
    const graph g = oracle::connected_gnm(200, 500, 12);
    bound_workspace<V> ws;
    for (V u : {V{3}, V{99}}) {
        EXPECT_EQ(double_sweep_lower(g, u), double_sweep_lower(g, u, ws));
        EXPECT_EQ(tree_upper(g, u), tree_upper(g, u, ws));
        EXPECT_EQ(trivial_bounds(g, u), trivial_bounds(g, u, ws));
    }
}

TEST(Bounds, SingleVertexGraph) {
    const graph one = generate(generator_spec::path(1));
    EXPECT_EQ(double_sweep_lower(one, V{0}).value, 0u);
    EXPECT_EQ(tree_upper(one, V{0}).value, 0u);
    EXPECT_EQ(trivial_bounds(one, V{0}).second.value, 0u);
}

}  // namespace
}  // namespace diambound
