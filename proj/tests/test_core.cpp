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

#include "sdw/geom.hpp"
#include "sdw/numeric.hpp"
#include "sdw/schedule.hpp"

using namespace sdw;

TEST(Curve, PointAt)
{
    const auto c = PolylineCurve::from_2d({{0, 0}, {2, 0}});
    EXPECT_EQ(c.at(1.0), (Point{0, 0}));
    EXPECT_EQ(c.at(1.5), (Point{1, 0}));
    const auto c2 = PolylineCurve::from_2d({{0, 0}, {2, 0}, {2, 2}});
    const auto p = c2.at(2.25);
    EXPECT_DOUBLE_EQ(p[0], 2.0);
    EXPECT_DOUBLE_EQ(p[1], 0.5);
    EXPECT_THROW(c2.at(0.5), InputError);
    EXPECT_THROW(c2.at(3.5), InputError);
}

TEST(Curve, RejectsBadInput)
{
    EXPECT_THROW(PolylineCurve(2, {}), InputError);
    EXPECT_THROW(PolylineCurve(2, {{0.0}}), InputError);
    EXPECT_THROW(PolylineCurve(1, {{NAN}}), InputError);
    EXPECT_NO_THROW(PolylineCurve(1, {{1.0}, {1.0}})); // zero-length edge is fine
}

TEST(Curve, Lipschitz)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    std::vector<Point> pts;
    for (int i = 0; i < 6; ++i) pts.push_back({u(rng), u(rng)});
    const PolylineCurve c(2, pts);
    double lmax = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) lmax = std::max(lmax, dist(c[i], c[i + 1]));
    for (int k = 0; k < 1000; ++k) {
        const double t = 1.0 + 5.0 * k / 1000.0, t2 = t + 0.004;
        EXPECT_LE(dist(c.at(t), c.at(t2)), lmax * 0.004 + 1e-12);
    }
}

TEST(Geom, PointSegmentDistance)
{
    EXPECT_DOUBLE_EQ(point_segment_distance(Point{0, 1}, Point{-1, 0}, Point{1, 0}), 1.0);
    EXPECT_DOUBLE_EQ(point_segment_distance(Point{3, 0}, Point{0, 0}, Point{1, 0}), 2.0);
    EXPECT_DOUBLE_EQ(point_segment_distance(Point{0, 0}, Point{0, 0}, Point{5, 5}), 0.0);
    EXPECT_THROW(point_segment_distance(Point{0}, Point{0, 0}, Point{5, 5}), InputError);
}

TEST(Schedule, StaticDistance)
{
    const auto r = PolylineCurve::from_2d({{0, 0}});
    const auto b = PolylineCurve::from_2d({{3, 4}});
    const auto s = Schedule::from_waypoints({{1.0, {1.0}}}, "test");
    EXPECT_DOUBLE_EQ(simulate_curves(s, r, {b}, 4), 5.0);
}

TEST(Schedule, ThreeSamplePoints)
{
    const auto r = PolylineCurve::from_2d({{0, 0}, {1, 0}});
    const auto b = PolylineCurve::from_2d({{0, 1}});
    const auto s = Schedule::from_waypoints({{1.0, {1.0}}, {2.0, {1.0}}}, "test");
    EXPECT_DOUBLE_EQ(simulate_curves(s, r, {b}, 1), 1.0);
}

TEST(Schedule, CrossingInOneDimension)
{
    const auto r = PolylineCurve::from_1d({0, 10});
    const auto b = PolylineCurve::from_1d({10, 0});
    const auto s = Schedule::from_waypoints({{1.0, {1.0}}, {2.0, {2.0}}}, "test");
    EXPECT_NEAR(simulate_curves(s, r, {b}, 1), 0.0, 1e-12);
}

TEST(Schedule, Validation)
{
    Schedule s;
    s.breakpoints = {{0.0, 1.0, {1.0}}, {1.0, 0.5, {1.0}}};
    EXPECT_THROW(s.validate(), InputError);
    s.breakpoints = {{0.0, 1.0, {1.0}}, {0.0, 1.0, {1.0}}};
    EXPECT_THROW(s.validate(), InputError);
    const auto r = PolylineCurve::from_1d({0, 1});
    const auto bad = Schedule::from_waypoints({{1.0, {1.0}}, {3.0, {1.0}}}, "test");
    EXPECT_THROW(simulate_curves(bad, r, {r}, 1), InputError);
}

TEST(Numeric, IntervalSet)
{
    IntervalSet s{{0, 1}, {2, 3}};
    s.add({0.5, 2.5});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.front(), (Interval{0, 3}));
    const IntervalSet t{{1, 1.5}, {2.8, 4}};
    const auto x = s.intersect(t);
    ASSERT_EQ(x.size(), 2u);
    EXPECT_EQ(x.items()[1], (Interval{2.8, 3}));
}

TEST(Numeric, Superlevel)
{
    auto f = [](double x) { return (x - 1) * (x - 1); };
    const auto s = convex_superlevel(f, -1.0, 3.0, 1.0);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s.front().hi, 0.0, 1e-9);
    EXPECT_NEAR(s.back().lo, 2.0, 1e-9);
    auto g = [](double x) { return 4 - x * x; };
    const auto c = concave_superlevel(g, -3.0, 3.0, 0.0);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_NEAR(c.front().lo, -2.0, 1e-9);
    EXPECT_NEAR(c.front().hi, 2.0, 1e-9);
}
