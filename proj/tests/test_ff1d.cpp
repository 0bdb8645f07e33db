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

#include "sdw/ff1d.hpp"
#include "sdw/oracle_curves.hpp"

using namespace sdw;

namespace {

oracle::Poly as_poly(const Curve1D& c)
{
    oracle::Poly p;
    for (double x : c) p.push_back({x});
    return p;
}

Curve1D random_curve(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> u(-10, 10);
    Curve1D c;
    for (int i = 0; i < n; ++i) c.push_back(u(rng));
    return c;
}

double max_edge(const Curve1D& a, const Curve1D& b)
{
    double m = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) m = std::max(m, std::abs(a[i + 1] - a[i]));
    for (std::size_t i = 0; i + 1 < b.size(); ++i) m = std::max(m, std::abs(b[i + 1] - b[i]));
    return m;
}

double witness_min(const Curve1D& r, const Curve1D& b, const Schedule& s)
{
    return simulate_curves(s, PolylineCurve::from_1d(r), {PolylineCurve::from_1d(b)}, 8);
}

} // namespace

TEST(Reduce, Examples)
{
    auto r = reduce_to_canonical({0}, {5}, 1);
    EXPECT_FALSE(r.no);
    EXPECT_EQ(r.forward.red.size(), 1u);
    EXPECT_EQ(r.backward.blue.size(), 1u);
    EXPECT_TRUE(reduce_to_canonical({0, 6}, {5, 5}, 0).no);
    r = reduce_to_canonical({0, 1, 0}, {3, 2, 3}, 0);
    EXPECT_FALSE(r.no);
    EXPECT_EQ(r.b_max, 3.0);
    EXPECT_EQ(r.b_max_index, 1u);
    EXPECT_EQ(r.r_min, 0.0);
    EXPECT_EQ(r.r_min_index, 1u);
    EXPECT_TRUE(reduce_to_canonical({0}, {1}, 1).no);
}

TEST(Decide1D, Examples)
{
    EXPECT_TRUE(decide_1d({0, 0}, {5, 5}, 4).yes);
    EXPECT_FALSE(decide_1d({0, 10}, {10, 0}, 0).yes);
    const Curve1D r{0, 4, 1, 5}, b{7, 3, 8, 2};
    EXPECT_EQ(decide_1d(r, b, 0.5).yes, oracle::grid_curves(as_poly(r), as_poly(b), 0.5, {64}));
}

TEST(Value1D, Examples)
{
    EXPECT_DOUBLE_EQ(ff_value_1d({0, 10}, {10, 0}), 0.0);
    EXPECT_DOUBLE_EQ(ff_value_1d({0, 0}, {5, 5}), 5.0);
}

TEST(Value1D, MatchesCandidateSweep)
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const auto r = random_curve(rng, 2 + it % 7), b = random_curve(rng, 2 + (it / 7) % 7);
        const double v = ff_value_1d(r, b);
        double sweep = 0;
        for (double c : ff1d_candidates(r, b))
            if (c > 0 && decide_1d(r, b, c - 1e-9).yes) sweep = std::max(sweep, c);
        EXPECT_DOUBLE_EQ(v, sweep);
        if (v > 0) {
            EXPECT_TRUE(decide_1d(r, b, v - 1e-6).yes);
            EXPECT_FALSE(decide_1d(r, b, v + 1e-6).yes);
        }
    }
}

TEST(Decide1D, GridOracleAgreement)
{
    std::mt19937_64 rng(5);
    int compared = 0;
    for (int it = 0; it < 150; ++it) {
        const auto r = random_curve(rng, 2 + it % 5), b = random_curve(rng, 2 + (it / 5) % 5);
        const double v = ff_value_1d(r, b);
        const double margin = 2.0 * max_edge(r, b) / 32.0;
        for (double delta : {0.25 * v, 0.5 * v, 0.9 * v, v + 0.5, v + 2.0}) {
            if (std::abs(delta - v) <= margin) continue;
            const bool oracle_yes = oracle::grid_curves(as_poly(r), as_poly(b), delta, {32});
            EXPECT_EQ(decide_1d(r, b, delta).yes, oracle_yes) << "it=" << it << " delta=" << delta;
            ++compared;
        }
    }
    EXPECT_GT(compared, 100);
}

TEST(Decide1D, MonotoneAndReflectionSymmetric)
{
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        const auto r = random_curve(rng, 5), b = random_curve(rng, 5);
        bool prev = true;
        for (double d = 0; d <= 12; d += 0.5) {
            const bool cur = decide_1d(r, b, d).yes;
            EXPECT_TRUE(prev || !cur);
            prev = cur;
            Curve1D nr, nb;
            for (double x : r) nr.push_back(-x);
            for (double x : b) nb.push_back(-x);
            EXPECT_EQ(cur, decide_1d(nr, nb, d).yes);
        }
    }
}

TEST(Decide1D, WitnessIsSound)
{
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        const auto r = random_curve(rng, 1 + it % 8), b = random_curve(rng, 1 + (it / 8) % 8);
        const double v = ff_value_1d(r, b);
        if (v <= 0) continue;
        const auto d = decide_1d(r, b, v - 1e-9, true);
        ASSERT_TRUE(d.yes);
        ASSERT_TRUE(d.witness);
        EXPECT_GE(witness_min(r, b, *d.witness), v - 1e-6);
    }
}

TEST(KAgents, Examples)
{
    std::mt19937_64 rng(13);
    for (int it = 0; it < 50; ++it) {
        const auto r = random_curve(rng, 4), b = random_curve(rng, 4);
        if (r.front() >= b.front()) continue;
        for (double d : {0.0, 1.0, 3.0}) EXPECT_EQ(decide_1d_k_agents({r, b}, d).yes, decide_1d(r, b, d).yes);
    }
    EXPECT_TRUE(decide_1d_k_agents({{0}, {5}, {10}}, 4).yes);
    EXPECT_FALSE(decide_1d_k_agents({{0}, {5}, {10}}, 5).yes);
}

TEST(KAgents, ThreeAgentGridOracle)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> u(0, 6);
    int compared = 0;
    for (int it = 0; it < 60; ++it) {
        Curve1D a{0}, b{8}, c{16};
        for (int k = 0; k < 2; ++k) {
            a.push_back(u(rng));
            b.push_back(6 + u(rng));
            c.push_back(12 + u(rng));
        }
        const double margin = 2.0 * 8.0 / 16.0;
        for (double d : {0.5, 1.5, 2.5, 4.0}) {
            // skip thresholds near a pairwise value
            const double v = std::min(ff_value_1d(a, b), ff_value_1d(b, c));
            if (std::abs(v - d) <= margin) continue;
            const bool want = oracle::grid_three_agents(as_poly(a), as_poly(b), as_poly(c), d, {16});
            const auto got = decide_1d_k_agents({a, b, c}, d, true);
            EXPECT_EQ(got.yes, want);
            if (got.yes) {
                const double sim = simulate_curves(*got.witness, PolylineCurve::from_1d(a),
                                                   {PolylineCurve::from_1d(b), PolylineCurve::from_1d(c)}, 8);
                EXPECT_GE(sim, d - 1e-6);
            }
            ++compared;
        }
    }
    EXPECT_GT(compared, 50);
}
