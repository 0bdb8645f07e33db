/*
 * Copyright 2026 The SDW Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */
#include <gtest/gtest.h>

#include <random>

#include "sdw/generators.hpp"
#include "sdw/oracle_tree.hpp"
#include "sdw/tree.hpp"

using namespace sdw;

namespace {

WeightedTree star(std::vector<double> lengths)
{
    std::vector<TreeEdge> e;
    for (std::size_t i = 0; i < lengths.size(); ++i) e.push_back({0, i + 1, lengths[i]});
    return WeightedTree(lengths.size() + 1, e);
}

WeightedTree path(std::size_t n)
{
    std::vector<TreeEdge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1.0});
    return WeightedTree(n, e);
}

oracle::TreeEdges to_oracle(const WeightedTree& t)
{
    oracle::TreeEdges e;
    for (const auto& x : t.edges()) e.emplace_back(x.u, x.v, x.length);
    return e;
}

WeightedTree from_oracle(std::size_t n, const oracle::TreeEdges& e)
{
    std::vector<TreeEdge> out;
    for (const auto& [u, v, w] : e) out.push_back({u, v, w});
    return WeightedTree(n, out);
}

} // namespace

TEST(WeightedTree, RejectsInvalid)
{
    EXPECT_THROW(WeightedTree(0, {}), InputError);
    EXPECT_THROW(WeightedTree(3, {{0, 1, 1.0}}), InputError);
    EXPECT_THROW(WeightedTree(3, {{0, 1, 1.0}, {0, 1, 1.0}}), InputError);
    EXPECT_THROW(WeightedTree(2, {{0, 1, 0.0}}), InputError);
    EXPECT_THROW(WeightedTree(2, {{0, 0, 1.0}}), InputError);
    EXPECT_THROW(WeightedTree(2, {{0, 2, 1.0}}), InputError);
}

TEST(TreeDiameter, Examples)
{
    const auto d1 = tree_diameter(WeightedTree(1, {}));
    EXPECT_EQ(d1.a, 0u);
    EXPECT_EQ(d1.b, 0u);
    EXPECT_EQ(d1.path, std::vector<std::size_t>{0});
    EXPECT_EQ(d1.length, 0.0);
    const auto d3 = tree_diameter(path(3));
    EXPECT_EQ(std::min(d3.a, d3.b), 0u);
    EXPECT_EQ(std::max(d3.a, d3.b), 2u);
    EXPECT_EQ(d3.length, 2.0);
}

TEST(TreeDiameter, MatchesAllPairs)
{
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        const auto t = random_tree(rng, 1 + it % 50);
        const auto d = tree_diameter(t);
        EXPECT_NEAR(d.length, oracle::tree_diameter_allpairs(t.size(), to_oracle(t)), 1e-9);
        EXPECT_EQ(d.path.front(), d.a);
        EXPECT_EQ(d.path.back(), d.b);
    }
}

TEST(TwoOutlier, Examples)
{
    const auto s = two_outlier_radius(star({5, 4, 3, 2}), 0);
    EXPECT_EQ(s.radius, 3.0);
    EXPECT_EQ(s.a, 1u);
    EXPECT_EQ(s.b, 2u);
    EXPECT_EQ(s.c, 3u);
    for (std::size_t r = 1; r + 1 < 6; ++r) EXPECT_EQ(two_outlier_radius(path(6), r).radius, 0.0);
}

TEST(TwoOutlier, MatchesComponentEnumeration)
{
    Rng rng(4);
    for (int it = 0; it < 300; ++it) {
        const auto t = random_tree(rng, 1 + it % 12);
        const auto all = two_outlier_all(t);
        for (std::size_t r = 0; r < t.size(); ++r) {
            const auto res = two_outlier_radius(t, r);
            const double ref = oracle::outlier_radius_bruteforce(t.size(), to_oracle(t), r);
            EXPECT_NEAR(res.radius, ref, 1e-9);
            EXPECT_NEAR(all[r].radius, ref, 1e-9);
            EXPECT_GE(res.da, res.db);
            EXPECT_GE(res.db, res.radius);
        }
    }
}

TEST(TreeSdw, Examples)
{
    EXPECT_EQ(tree_sdw(star({5, 4, 3, 2})).value, 3.0);
    EXPECT_EQ(tree_sdw(path(7)).value, 0.0);
    EXPECT_EQ(tree_sdw(WeightedTree(1, {})).value, 0.0);
}

TEST(TreeSdw, DiameterRestrictionLosesNothing)
{
    Rng rng(5);
    std::uniform_real_distribution<double> w(0.5, 5.0);
    for (std::size_t n = 1; n <= 9; ++n) {
        for (auto e : oracle::all_unlabeled_trees(n)) {
            for (int rep = 0; rep < 3; ++rep) {
                const auto t = from_oracle(n, e);
                double best = 0.0;
                for (std::size_t r = 0; r < n; ++r)
                    best = std::max(best, oracle::outlier_radius_bruteforce(n, e, r));
                EXPECT_NEAR(tree_sdw(t).value, best, 1e-9);
                for (auto& x : e) std::get<2>(x) = w(rng);
            }
        }
    }
}

TEST(TreeSdw, ScaleEquivariant)
{
    Rng rng(6);
    for (int it = 0; it < 50; ++it) {
        const auto t = random_tree(rng, 1 + it % 12);
        EXPECT_NEAR(tree_sdw(t.scaled(2.5)).value, 2.5 * tree_sdw(t).value, 1e-9);
    }
}

TEST(BlueStrategy, StarAttainsRadius)
{
    const auto t = star({5, 4, 3, 2});
    const auto tour = default_tour(t);
    EXPECT_EQ(tour, (std::vector<std::size_t>{0, 1, 0, 2, 0, 3, 0, 4, 0}));
    const auto res = tree_sdw(t);
    EXPECT_DOUBLE_EQ(simulate_tree(t, tour, blue_strategy(t, res.outlier, tour)), 3.0);
}

TEST(BlueStrategy, PathDegenerates)
{
    const auto t = path(4);
    const auto tour = default_tour(t, 1);
    const auto s = blue_strategy(t, tree_sdw(t).outlier, tour);
    EXPECT_GE(simulate_tree(t, tour, s), 0.0);
}

TEST(BlueStrategy, RandomTreesAndTours)
{
    Rng rng(7);
    for (int it = 0; it < 300; ++it) {
        const auto t = random_tree(rng, 1 + it % 12, it % 2 == 0);
        const auto res = tree_sdw(t);
        for (int k = 0; k < 3; ++k) {
            const auto tour = random_tour(rng, t);
            const auto s = blue_strategy(t, res.outlier, tour);
            EXPECT_GE(simulate_tree(t, tour, s, 10), res.value - 1e-9);
        }
    }
}

TEST(BlueStrategy, RejectsBadTours)
{
    const auto t = star({1, 1, 1});
    const auto res = tree_sdw(t).outlier;
    EXPECT_THROW(blue_strategy(t, res, {0, 1, 0, 2, 0}), InputError);
    EXPECT_THROW(blue_strategy(t, res, {0, 1, 0, 1, 0, 3, 0}), InputError);
    EXPECT_THROW(blue_strategy(t, res, {0, 1, 2, 0, 3, 0, 0}), InputError);
}

TEST(TreeGameOracle, Examples)
{
    const auto s = to_oracle(star({5, 4, 3, 2}));
    EXPECT_TRUE(oracle::oracle_tree_game(5, s, 3.0));
    EXPECT_FALSE(oracle::oracle_tree_game(5, s, 3.0 + 1e-6));
    const auto p = to_oracle(path(4));
    EXPECT_TRUE(oracle::oracle_tree_game(4, p, 0.0));
    EXPECT_FALSE(oracle::oracle_tree_game(4, p, 1e-6));
}

TEST(TreeGameOracle, ThresholdMatchesOnSmallTrees)
{
    Rng rng(8);
    for (int it = 0; it < 60; ++it) {
        const auto t = random_tree(rng, 2 + it % 8);
        const auto e = to_oracle(t);
        const double v = tree_sdw(t).value;
        EXPECT_TRUE(oracle::oracle_tree_game(t.size(), e, v));
        EXPECT_FALSE(oracle::oracle_tree_game(t.size(), e, v + oracle::tree_game_step(e)));
    }
}

TEST(Generators, TreeSeedsAreReproducible)
{
    Rng a(9), b(9);
    EXPECT_EQ(random_tree(a, 20).edges(), random_tree(b, 20).edges());
    Rng c(1);
    EXPECT_EQ(random_tree(c, 1).size(), 1u);
}
