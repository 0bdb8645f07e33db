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

#include "sdw/ff.hpp"
#include "sdw/ff1d.hpp"
#include "sdw/oracle_curves.hpp"

using namespace sdw;

namespace {

PolylineCurve random_curve(std::mt19937_64& rng, int n)
{
    std::uniform_real_distribution<double> u(-3, 3);
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
    return PolylineCurve::from_2d(pts);
}

double max_edge(const PolylineCurve& a, const PolylineCurve& b)
{
    double m = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) m = std::max(m, dist(a[i], a[i + 1]));
    for (std::size_t i = 0; i + 1 < b.size(); ++i) m = std::max(m, dist(b[i], b[i + 1]));
    return m;
}

std::vector<std::pair<double, double>> pairs(const IntervalSet& s)
{
    std::vector<std::pair<double, double>> out;
    for (const auto& iv : s) out.emplace_back(iv.lo, iv.hi);
    return out;
}

// distance from x to the boundary of the set (0 if x sits on it)
double boundary_gap(const IntervalSet& s, double x)
{
    double g = INFINITY;
    for (const auto& iv : s) g = std::min({g, std::abs(x - iv.lo), std::abs(x - iv.hi)});
    return g;
}

} // namespace

TEST(Cell, FreeIntervals)
{
    const Point a0{0, 0}, a1{1, 0}, c0{0, 2}, c1{1, 2};
    const auto par = CellQuadratic::from_segments(a0, a1, c0, c1);
    EXPECT_EQ(cell_free_intervals(par, Side::Bottom, 1.0), (IntervalSet{{0, 1}}));

    const Point u1{2, 0};
    const auto same = CellQuadratic::from_segments(a0, u1, a0, u1);
    const auto fr = cell_free_intervals(same, Side::Bottom, 0.5);
    ASSERT_EQ(fr.size(), 1u);
    EXPECT_NEAR(fr.front().lo, 0.25, 1e-9); // |2s| >= 0.5
    EXPECT_NEAR(fr.front().hi, 1.0, 1e-12);

    const Point b0{1, -1}, b1{1, 1};
    const auto cross = CellQuadratic::from_segments(a0, u1, b0, b1);
    const auto line = cell_line_free(cross, false, 0.5, forbidden_threshold(0.8));
    ASSERT_EQ(line.size(), 2u);
    EXPECT_NEAR(line.front().hi, 0.5 - 0.4, 1e-9);
    EXPECT_NEAR(line.back().lo, 0.5 + 0.4, 1e-9);
    for (int k = 0; k <= 1000; ++k) {
        const double s = k / 1000.0;
        const bool free = dist(Point{2 * s, 0}, Point{1, 0}) >= 0.8;
        if (std::abs(s - 0.1) > 1e-3 && std::abs(s - 0.9) > 1e-3) EXPECT_EQ(free, line.contains(s));
    }
}

TEST(Cell, ForbiddenSetIsConvex)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2, 2), w(0, 1), dd(0, 2);
    int checked = 0;
    for (int it = 0; it < 10000; ++it) {
        const Point a0{u(rng), u(rng)}, a1{u(rng), u(rng)}, c0{u(rng), u(rng)}, c1{u(rng), u(rng)};
        const auto q = CellQuadratic::from_segments(a0, a1, c0, c1);
        const double delta = dd(rng);
        const double s1 = w(rng), t1 = w(rng), s2 = w(rng), t2 = w(rng);
        const double d2 = delta * delta;
        if (q(s1, t1) < d2 && q(s2, t2) < d2) {
            EXPECT_LT(q(0.5 * (s1 + s2), 0.5 * (t1 + t2)), d2 + 1e-9);
            ++checked;
        }
    }
    EXPECT_GT(checked, 500);
}

TEST(Cell, PropagateTrivial)
{
    const Point a0{0, 0}, a1{1, 0}, c0{0, 5}, c1{1, 5};
    const auto far = CellQuadratic::from_segments(a0, a1, c0, c1);
    const auto o = propagate_cell(far, 1.0, IntervalSet{{0, 1}}, {});
    EXPECT_EQ(o.right, (IntervalSet{{0, 1}}));
    EXPECT_EQ(o.top, (IntervalSet{{0, 1}}));
    const auto near = CellQuadratic::from_segments(a0, a1, a0, a1);
    const auto o2 = propagate_cell(near, 10.0, IntervalSet{{0, 1}}, IntervalSet{{0, 1}});
    EXPECT_TRUE(o2.right.empty());
    EXPECT_TRUE(o2.top.empty());
}

TEST(Cell, PropagateMatchesGrid)
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.5, 1.5), w(0, 1), dd(0.05, 1.2);
    const int res = 200;
    int compared = 0;
    for (int it = 0; it < 500; ++it) {
        const Point a0{u(rng), u(rng)}, a1{u(rng), u(rng)}, c0{u(rng), u(rng)}, c1{u(rng), u(rng)};
        const auto q = CellQuadratic::from_segments(a0, a1, c0, c1);
        const double delta = dd(rng);
        IntervalSet left, bottom;
        if (it % 3 != 2) {
            const double x = w(rng), y = w(rng);
            left = cell_free_intervals(q, Side::Left, delta).intersect(Interval{std::min(x, y), std::max(x, y)});
        }
        if (it % 3 != 1) {
            const double x = w(rng), y = w(rng);
            bottom = cell_free_intervals(q, Side::Bottom, delta).intersect(Interval{std::min(x, y), std::max(x, y)});
        }
        // slivers narrower than the grid have no start node
        auto drop_slivers = [&](const IntervalSet& in) {
            IntervalSet out;
            for (const auto& iv : in)
                if (iv.hi - iv.lo > 3.0 / res) out.add(iv);
            return out;
        };
        left = drop_slivers(left);
        bottom = drop_slivers(bottom);
        const auto o = propagate_cell(q, delta, left, bottom);
        const auto g = oracle::grid_cell(a0, a1, c0, c1, delta, pairs(left), pairs(bottom), res);
        // robust comparison: skip grid nodes near set boundaries or starting sets
        const double margin = 3.0 / res;
        for (int k = 0; k <= res; ++k) {
            const double x = double(k) / res;
            const double gt = std::min({boundary_gap(o.top, x), boundary_gap(left, 1.0) + 1, boundary_gap(bottom, x)});
            if (gt > margin && std::abs(q(x, 1.0) - delta * delta) > 1e-2) {
                EXPECT_EQ(o.top.contains(x), g.top[k]) << "top it=" << it << " x=" << x;
                ++compared;
            }
            const double gr = std::min(boundary_gap(o.right, x), boundary_gap(left, x));
            if (gr > margin && std::abs(q(1.0, x) - delta * delta) > 1e-2) {
                EXPECT_EQ(o.right.contains(x), g.right[k]) << "right it=" << it << " x=" << x;
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 50000);
}

TEST(DecideFF, Examples)
{
    const auto r = PolylineCurve::from_2d({{0, 0}, {1, 0}});
    const auto b = PolylineCurve::from_2d({{0, 2}, {1, 2}});
    EXPECT_TRUE(decide_ff(r, b, 1.5).yes);
    EXPECT_FALSE(decide_ff(r, b, 2.5).yes);
    EXPECT_NEAR(ff_value(r, b), 2.0, 1e-9);
    const auto x = PolylineCurve::from_2d({{-1, 0}, {1, 0}});
    const auto y = PolylineCurve::from_2d({{0, -1}, {0, 1}});
    EXPECT_TRUE(decide_ff(x, y, 0.9).yes);
    EXPECT_TRUE(oracle::grid_curves(x.points(), y.points(), 0.9, {128}));
    EXPECT_NEAR(ff_value(x, y), 1.0, 1e-9);
    EXPECT_FALSE(decide_ff(r, r, 0.1).yes);
}

TEST(DecideFF, AgreesWithOneDimensionalSolver)
{
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> u(-10, 10);
    for (int it = 0; it < 200; ++it) {
        Curve1D r, b;
        for (int k = 0; k < 1 + it % 8; ++k) r.push_back(u(rng));
        for (int k = 0; k < 1 + (it / 8) % 8; ++k) b.push_back(u(rng));
        const double v = ff_value_1d(r, b);
        for (double d : {0.5 * v, v - 0.25, v + 0.25, v + 1.0}) {
            if (d < 0 || std::abs(d - v) < 1e-9) continue;
            EXPECT_EQ(decide_ff(PolylineCurve::from_1d(r), PolylineCurve::from_1d(b), d).yes,
                      decide_1d(r, b, d).yes)
                << "it=" << it << " d=" << d;
        }
        EXPECT_NEAR(ff_value(PolylineCurve::from_1d(r), PolylineCurve::from_1d(b)), v, 1e-9);
    }
}

TEST(DecideFF, GridOracleAndWitness)
{
    std::mt19937_64 rng(47);
    int compared = 0;
    for (int it = 0; it < 120; ++it) {
        const auto r = random_curve(rng, 2 + it % 4), b = random_curve(rng, 2 + (it / 4) % 4);
        const double v = ff_value(r, b);
        EXPECT_TRUE(decide_ff(r, b, v).yes);
        EXPECT_FALSE(decide_ff(r, b, v + 1e-6).yes);
        if (v > 1e-6) EXPECT_TRUE(decide_ff(r, b, v - 1e-6).yes);
        const auto wd = decide_ff(r, b, v, true);
        ASSERT_TRUE(wd.witness);
        EXPECT_GE(simulate_curves(*wd.witness, r, {b}, 16), v - 1e-6) << "it=" << it;
        const double margin = 2.0 * max_edge(r, b) / 64.0;
        for (double d : {0.3 * v, 0.8 * v, v + 0.3, v + 1.0}) {
            if (std::abs(d - v) <= margin) continue;
            EXPECT_EQ(decide_ff(r, b, d).yes, oracle::grid_curves(r.points(), b.points(), d, {64}))
                << "it=" << it << " d=" << d << " v=" << v;
            ++compared;
        }
    }
    EXPECT_GT(compared, 150);
}

TEST(CriticalValues, Examples)
{
    const auto r = PolylineCurve::from_2d({{0, 0}, {1, 0}});
    const auto b = PolylineCurve::from_2d({{0, 2}, {3, 2}});
    for (const auto& c : critical_values(r, b)) EXPECT_NE(c.tag, "iii");
    // two vertical red edges at x = -1 and x = 1, blue along y = 0: equidistant point (0,0)
    const auto r2 = PolylineCurve::from_2d({{-1, 2}, {-1, 3}, {1, 3}, {1, 2}});
    const auto b2 = PolylineCurve::from_2d({{-5, 0}, {5, 0}});
    bool seen = false;
    for (const auto& c : critical_values(r2, b2))
        seen = seen || (c.tag == "iii" && std::abs(c.value - std::sqrt(5.0)) < 1e-6);
    EXPECT_TRUE(seen);
}

TEST(CriticalValues, ValueIsNearACandidate)
{
    std::mt19937_64 rng(53);
    for (int it = 0; it < 40; ++it) {
        const auto r = random_curve(rng, 4), b = random_curve(rng, 4);
        const double v = ff_value(r, b);
        double best = INFINITY;
        for (const auto& c : critical_values(r, b)) best = std::min(best, std::abs(c.value - v));
        EXPECT_LT(best, 1e-6) << "it=" << it << " v=" << v;
    }
}
