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

#include <cmath>
#include <deque>
#include <random>

#include "sdw/generators.hpp"
#include "sdw/oracle_curves.hpp"
#include "sdw/oracle_polygon.hpp"
#include "sdw/polygon.hpp"

using namespace sdw;

namespace {

SimplePolygon l_shape() { return SimplePolygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

SimplePolygon rect(double w, double h) { return SimplePolygon({{0, 0}, {w, 0}, {w, h}, {0, h}}); }

std::vector<oracle::P2> op(const std::vector<Vec2>& vs)
{
    std::vector<oracle::P2> out;
    for (Vec2 v : vs) out.push_back({v.x, v.y});
    return out;
}

std::vector<oracle::P2> op(const PolylineCurve& c)
{
    std::vector<oracle::P2> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back({c.vec2(i).x, c.vec2(i).y});
    return out;
}

Vec2 boundary_point(Rng& rng, const SimplePolygon& p)
{
    std::uniform_int_distribution<std::size_t> ue(0, p.size() - 1);
    std::uniform_real_distribution<double> uy(0.0, 1.0);
    return p.edge_point(ue(rng), uy(rng));
}

/// Point at arc length s along a polyline.
Vec2 at_length(const PolylineCurve& c, double s)
{
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const double l = dist(c.vec2(i), c.vec2(i + 1));
        if (s <= l || i + 2 == c.size()) return lerp(c.vec2(i), c.vec2(i + 1), l > 0 ? std::min(1.0, s / l) : 0.0);
        s -= l;
    }
    return c.vec2(0);
}

/// Largest delta passing `dec`, by bisection on [0, hi].
template <class F>
double bisect_value(F&& dec, double hi, int iters = 40)
{
    double lo = 0.0;
    for (int k = 0; k < iters; ++k) {
        const double m = 0.5 * (lo + hi);
        (dec(m) ? lo : hi) = m;
    }
    return lo;
}

} // namespace

TEST(SimplePolygon, Validation)
{
    EXPECT_THROW(SimplePolygon({{0, 0}, {1, 0}}), InputError);
    EXPECT_THROW(SimplePolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InputError); // bow tie
    const SimplePolygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    EXPECT_GT(cw.signed_area(), 0.0);
}

TEST(Geodesic, ConvexIsEuclidean)
{
    const GeodesicIndex idx(rect(3, 2));
    EXPECT_NEAR(geodesic_distance(idx, {0.1, 0.1}, {2.9, 1.9}), std::hypot(2.8, 1.8), 1e-12);
    EXPECT_DOUBLE_EQ(geodesic_distance(idx, {1, 1}, {1, 1}), 0.0);
}

TEST(Geodesic, LShapeBendsAtReflexCorner)
{
    const GeodesicIndex idx(l_shape());
    EXPECT_NEAR(geodesic_distance(idx, {1.5, 0.5}, {0.5, 1.5}), 2.0 * std::sqrt(0.5), 1e-12);
    EXPECT_THROW(geodesic_distance(idx, {1.5, 1.5}, {0.5, 0.5}), InputError);
}

TEST(Geodesic, MatchesVisibilityDijkstra)
{
    Rng rng(101);
    for (int it = 0; it < 60; ++it) {
        const auto poly = random_polygon(rng, 3 + it % 18);
        const GeodesicIndex idx(poly);
        const auto ref = op(poly.vertices());
        for (int q = 0; q < 5; ++q) {
            const Vec2 a = random_point_in(rng, poly), b = random_point_in(rng, poly);
            EXPECT_NEAR(geodesic_distance(idx, a, b), oracle::visibility_distance(ref, {a.x, a.y}, {b.x, b.y}), 1e-9);
        }
    }
}

TEST(Geodesic, MetricAxioms)
{
    Rng rng(102);
    for (int it = 0; it < 5; ++it) {
        const auto poly = random_polygon(rng, 12);
        const GeodesicIndex idx(poly);
        for (int k = 0; k < 1000; ++k) {
            const Vec2 a = random_point_in(rng, poly), b = random_point_in(rng, poly), c = random_point_in(rng, poly);
            const double ab = idx.distance(a, b), bc = idx.distance(b, c), ac = idx.distance(a, c);
            ASSERT_NEAR(ab, idx.distance(b, a), 1e-9);
            ASSERT_LE(ac, ab + bc + 1e-9);
            ASSERT_GE(ab, dist(a, b) - 1e-12);
        }
    }
}

TEST(GeodesicDisk, ZeroRadiusAndConvex)
{
    const GeodesicIndex idx(rect(4, 4));
    EXPECT_TRUE(geodesic_disk(idx, {2, 2}, 0.0).arcs.empty());
    const auto d = geodesic_disk(idx, {2, 2}, 1.0);
    ASSERT_EQ(d.arcs.size(), 1u);
    EXPECT_EQ(d.arcs[0].anchor, GeodesicIndex::kNone);
    EXPECT_DOUBLE_EQ(d.arcs[0].radius, 1.0);
}

TEST(GeodesicDisk, ArcAroundReflexVertex)
{
    const GeodesicIndex idx(l_shape());
    const auto d = geodesic_disk(idx, {1.5, 0.5}, 1.0);
    bool found = false;
    for (const auto& a : d.arcs) {
        if (a.anchor != GeodesicIndex::kNone && dist(a.center, {1, 1}) < 1e-12) {
            found = true;
            EXPECT_NEAR(a.radius, 1.0 - std::sqrt(0.5), 1e-12);
        }
        for (int k = 0; k <= 20; ++k) {
            const double th = a.theta0 + (a.theta1 - a.theta0) * k / 20.0;
            const Vec2 q{a.center.x + a.radius * std::cos(th), a.center.y + a.radius * std::sin(th)};
            if (!idx.polygon().contains(q)) continue;
            EXPECT_NEAR(idx.distance(d.center, q), 1.0, 1e-6);
        }
    }
    EXPECT_TRUE(found);
    // sampled level set: points just past the reflex arc are outside the disk
    EXPECT_FALSE(disk_contains(idx, d, {1.0 - 0.3, 1.0 + 0.3}));
    EXPECT_TRUE(disk_contains(idx, d, {1.0 - 0.1, 1.0 + 0.1}));
}

namespace {

/// Connected components of sampled points outside the disk. Grid points join
/// when adjacent and mutually visible; boundary samples chain along each edge.
int sampled_components(const SimplePolygon& poly, const GeodesicIndex& idx, Vec2 c, double r, int res)
{
    const auto ref = op(poly.vertices());
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (Vec2 p : poly.vertices()) x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    const double step = std::max(x1 - x0, y1 - y0) / res;
    std::vector<Vec2> pts;
    std::vector<int> chain; // index of the next boundary sample, or -1
    for (int i = 0; i <= res; ++i)
        for (int j = 0; j <= res; ++j) {
            const Vec2 q{x0 + i * step, y0 + j * step};
            if (poly.contains(q, 0.0) && poly.boundary_distance(q) > 1e-9 && idx.distance(c, q) > r) {
                pts.push_back(q);
                chain.push_back(-1);
            }
        }
    const std::size_t grid = pts.size();
    const int per_edge = 4 * res;
    std::vector<int> slot(poly.size() * per_edge, -1);
    for (std::size_t e = 0; e < poly.size(); ++e)
        for (int k = 0; k < per_edge; ++k) {
            const Vec2 q = poly.edge_point(e, static_cast<double>(k) / per_edge);
            if (idx.distance(c, q) <= r) continue;
            slot[e * per_edge + k] = static_cast<int>(pts.size());
            pts.push_back(q);
            chain.push_back(-1);
        }
    for (std::size_t s = 0; s + 1 < slot.size() + 1; ++s) {
        const int a = slot[s], b = slot[(s + 1) % slot.size()];
        if (a >= 0 && b >= 0) chain[a] = b;
    }
    std::vector<std::vector<std::size_t>> adj(pts.size());
    for (std::size_t u = 0; u < pts.size(); ++u) {
        if (chain[u] >= 0) adj[u].push_back(chain[u]), adj[chain[u]].push_back(u);
        for (std::size_t v = u < grid ? u + 1 : 0; v < grid; ++v)
            if (dist(pts[u], pts[v]) <= 1.5 * step && oracle::visible(ref, {pts[u].x, pts[u].y}, {pts[v].x, pts[v].y}))
                adj[u].push_back(v), adj[v].push_back(u);
    }
    std::vector<int> comp(pts.size(), -1);
    int count = 0;
    for (std::size_t s = 0; s < pts.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : adj[u])
                if (comp[v] < 0) comp[v] = count, queue.push_back(v);
        }
        ++count;
    }
    return count;
}

} // namespace

TEST(Components, Examples)
{
    const GeodesicIndex sq(rect(4, 4));
    EXPECT_EQ(components_minus_disk(sq, geodesic_disk(sq, {2, 2}, 0.0)).components.size(), 1u);
    const auto small = components_minus_disk(sq, geodesic_disk(sq, {2, 2}, 1.0));
    ASSERT_EQ(small.components.size(), 1u);
    EXPECT_TRUE(small.components[0].closed);

    const SimplePolygon ell({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 4}, {0, 4}});
    const GeodesicIndex idx(ell);
    const auto d = geodesic_disk(idx, {0.5, 0.5}, 1.2);
    const auto comps = components_minus_disk(idx, d);
    EXPECT_EQ(comps.components.size(), 2u);
    EXPECT_EQ(sampled_components(ell, idx, {0.5, 0.5}, 1.2, 40), 2);
    const auto ca = component_of(idx, d, comps, {3.5, 0.5});
    const auto cb = component_of(idx, d, comps, {0.5, 3.5});
    ASSERT_TRUE(ca && cb);
    EXPECT_NE(*ca, *cb);
    EXPECT_FALSE(component_of(idx, d, comps, {0.6, 0.6}));
}

TEST(Components, CountMatchesSampledConnectivity)
{
    Rng rng(103);
    for (int it = 0; it < 25; ++it) {
        const auto poly = random_polygon(rng, 6 + it % 6);
        const GeodesicIndex idx(poly);
        const Vec2 c = random_point_in(rng, poly);
        const double r = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
        const auto n = components_minus_disk(idx, geodesic_disk(idx, c, r)).components.size();
        EXPECT_EQ(static_cast<std::size_t>(sampled_components(poly, idx, c, r, 60)), n) << "it " << it;
    }
}

TEST(DistanceToPath, Examples)
{
    const GeodesicIndex sq(rect(4, 4));
    const auto R = PolylineCurve::from_2d({{1, 1}, {3, 1}, {3, 3}});
    EXPECT_NEAR(distance_point_to_path(sq, {2, 1}, R), 0.0, 1e-12);
    EXPECT_NEAR(distance_point_to_path(sq, {1, 3}, R), 2.0, 1e-12);
    EXPECT_NEAR(distance_point_to_path(sq, {0, 0}, R), std::sqrt(2.0), 1e-12);
    EXPECT_THROW(distance_point_to_path(sq, {2, 2}, PolylineCurve::from_2d({{1, 1}, {5, 1}})), InputError);
}

TEST(DistanceToPath, MatchesDenseSampling)
{
    const SimplePolygon ell({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 4}, {0, 4}});
    const GeodesicIndex idx(ell);
    Rng rng(104);
    for (int it = 0; it < 20; ++it) {
        std::vector<Vec2> pts;
        for (int k = 0; k < 3; ++k) pts.push_back(random_point_in(rng, ell));
        const Vec2 p = random_point_in(rng, ell);
        // Red's vertices are joined by shortest paths so R stays inside
        std::vector<Vec2> walk{pts[0]};
        for (int k = 0; k + 1 < 3; ++k) {
            const auto leg = idx.path(pts[k], pts[k + 1]);
            walk.insert(walk.end(), leg.begin() + 1, leg.end());
        }
        const auto R = PolylineCurve::from_2d(walk);
        double best = INFINITY;
        for (std::size_t i = 0; i + 1 < R.size(); ++i)
            for (int k = 0; k <= 10000; ++k) best = std::min(best, idx.distance(p, lerp(R.vec2(i), R.vec2(i + 1), k / 10000.0)));
        const double got = distance_point_to_path(idx, p, R);
        EXPECT_LE(got, best + 1e-9);
        EXPECT_NEAR(got, best, 1e-6);
    }
}

TEST(EscapeGeodesic, Examples)
{
    const GeodesicIndex idx(rect(10, 1));
    const auto R = PolylineCurve::from_2d({{1, 0}, {9, 0}});
    EXPECT_FALSE(decide_escape_geodesic_red(idx, {1.2, 0.2}, R, 0.5).yes);
    const auto res = decide_escape_geodesic_red(idx, {5, 1}, R, 0.5);
    ASSERT_TRUE(res.yes);
    ASSERT_TRUE(res.safe_point);
    EXPECT_GT(distance_point_to_path(idx, *res.safe_point, R), 0.5);
    EXPECT_TRUE(decide_escape_geodesic_red(idx, {5, 1}, R, 1.0).yes);  // corner (0,1) is sqrt 2 away
    EXPECT_FALSE(decide_escape_geodesic_red(idx, {5, 1}, R, 1.5).yes);
    EXPECT_THROW(decide_escape_geodesic_red(idx, {5, 1}, PolylineCurve::from_2d({{1, 0}, {5, 1}, {9, 0}}), 0.5), InputError);
    EXPECT_THROW(decide_escape_geodesic_red(idx, {5, 2}, R, 0.5), InputError);
}

TEST(EscapeGeodesic, AgreesWithGridOracle)
{
    Rng rng(105);
    int checked = 0;
    for (int it = 0; it < 20; ++it) {
        const auto poly = random_polygon(rng, 4 + it % 8);
        const GeodesicIndex idx(poly);
        const auto R = PolylineCurve::from_2d(idx.path(random_point_in(rng, poly), random_point_in(rng, poly)));
        const Vec2 b = random_point_in(rng, poly);
        auto dec = [&](double d) { return decide_escape_geodesic_red(idx, b, R, d).yes; };
        const double crit = bisect_value(dec, 20.0);
        double ext = 0;
        for (Vec2 v : poly.vertices())
            for (Vec2 w : poly.vertices()) ext = std::max(ext, dist(v, w));
        const double margin = 3.0 * 1.5 * ext / 64;
        for (double d : {0.5 * crit, crit - margin, crit + margin, 1.5 * crit}) {
            if (d <= 0 || std::abs(d - crit) < margin) continue;
            const auto res = decide_escape_geodesic_red(idx, b, R, d);
            EXPECT_EQ(res.yes, oracle::escape_grid(op(poly.vertices()), {b.x, b.y}, op(R), d)) << "it " << it << " d " << d;
            if (res.yes) EXPECT_GT(distance_point_to_path(idx, *res.safe_point, R), d);
            ++checked;
        }
    }
    EXPECT_GT(checked, 40);
}

TEST(EscapeGeodesic, MonotoneInDelta)
{
    Rng rng(106);
    for (int it = 0; it < 20; ++it) {
        const auto poly = random_polygon(rng, 8);
        const GeodesicIndex idx(poly);
        const auto R = PolylineCurve::from_2d(idx.path(random_point_in(rng, poly), random_point_in(rng, poly)));
        const Vec2 b = random_point_in(rng, poly);
        bool prev = true;
        for (double d = 0.0; d < 10.0; d += 0.25) {
            const bool cur = decide_escape_geodesic_red(idx, b, R, d).yes;
            EXPECT_FALSE(cur && !prev);
            prev = cur;
        }
    }
}

TEST(EscapeArbitrary, Examples)
{
    const GeodesicIndex idx(rect(10, 1));
    const auto R = PolylineCurve::from_2d({{0, 0.5}, {10, 0.5}});
    EXPECT_TRUE(decide_escape_arbitrary_red(idx, {5, 0}, R, 0.0));
    EXPECT_TRUE(decide_escape_arbitrary_red(idx, {5, 0}, R, 0.4));
    EXPECT_FALSE(decide_escape_arbitrary_red(idx, {5, 0}, R, 0.6));
    const auto ref = op(idx.polygon().vertices());
    EXPECT_TRUE(oracle::escape_grid(ref, {5, 0}, op(R), 0.4));
    EXPECT_FALSE(oracle::escape_grid(ref, {5, 0}, op(R), 0.6));
    EXPECT_THROW(decide_escape_arbitrary_red(idx, {5, 0.5}, R, 0.4), InputError);
    EXPECT_FALSE(decide_escape_arbitrary_red(idx, {0, 0}, R, 0.6));
}

TEST(EscapeArbitrary, AgreesWithGridOracleAndGeodesicSolver)
{
    Rng rng(107);
    int checked = 0;
    for (int it = 0; it < 12; ++it) {
        const auto poly = random_polygon(rng, 4 + it % 6);
        const GeodesicIndex idx(poly);
        const auto R = PolylineCurve::from_2d(idx.path(random_point_in(rng, poly), random_point_in(rng, poly)));
        const Vec2 b = boundary_point(rng, poly);
        auto dec = [&](double d) { return decide_escape_arbitrary_red(idx, b, R, d); };
        const double crit = bisect_value(dec, 20.0, 25);
        double ext = 0;
        for (Vec2 v : poly.vertices())
            for (Vec2 w : poly.vertices()) ext = std::max(ext, dist(v, w));
        const double margin = 3.0 * 1.5 * ext / 64;
        for (double d : {0.5 * crit, crit - margin, crit + margin, 1.5 * crit}) {
            if (d <= 0 || std::abs(d - crit) < margin) continue;
            const bool got = dec(d);
            EXPECT_EQ(got, oracle::escape_grid(op(poly.vertices()), {b.x, b.y}, op(R), d)) << "it " << it;
            EXPECT_EQ(got, decide_escape_geodesic_red(idx, b, R, d).yes) << "it " << it;
            ++checked;
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(GeodesicConvexity, DistanceAlongShortestPath)
{
    Rng rng(108);
    for (int it = 0; it < 30; ++it) {
        const auto poly = random_polygon(rng, 5 + it % 10);
        const GeodesicIndex idx(poly);
        const auto R = PolylineCurve::from_2d(idx.path(random_point_in(rng, poly), random_point_in(rng, poly)));
        const Vec2 p = random_point_in(rng, poly);
        const double L = R.length();
        std::vector<double> f;
        for (int k = 0; k < 100; ++k) f.push_back(idx.distance(at_length(R, L * k / 99.0), p));
        for (int k = 1; k + 1 < 100; ++k) EXPECT_GE(f[k - 1] + f[k + 1] - 2 * f[k], -1e-7) << "it " << it;
    }
}

namespace {

/// Grid reference for closed curves: best delta over vertex start pairs, each
/// agent walking once around.
double closed_grid_value(const std::vector<Vec2>& red, const std::vector<Vec2>& blue, int res)
{
    auto open = [](const std::vector<Vec2>& c, std::size_t s) {
        oracle::Poly out;
        for (std::size_t k = 0; k <= c.size(); ++k) out.push_back({c[(s + k) % c.size()].x, c[(s + k) % c.size()].y});
        return out;
    };
    double best = 0.0;
    for (std::size_t s = 0; s < red.size(); ++s)
        for (std::size_t y = 0; y < blue.size(); ++y) {
            const auto r = open(red, s), b = open(blue, y);
            if (!oracle::grid_curves(r, b, best, {res})) continue;
            best = std::max(best, bisect_value([&](double d) { return oracle::grid_curves(r, b, d, {res}); }, 20.0, 25));
        }
    return best;
}

std::vector<Vec2> regular(std::size_t n, double radius)
{
    std::vector<Vec2> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back({radius * std::cos(2 * M_PI * k / n), radius * std::sin(2 * M_PI * k / n)});
    return out;
}

ClosedCurve closed(const std::vector<Vec2>& vs) { return ClosedCurve(PolylineCurve::from_2d(vs)); }

} // namespace

TEST(ClosedCurves, ConcentricSquares)
{
    const std::vector<Vec2> inner{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, outer{{-3, -3}, {3, -3}, {3, 3}, {-3, 3}};
    const double v = sdw_closed_curves(closed(inner), closed(outer));
    EXPECT_GE(v, 2.0 - 1e-9);
    EXPECT_NEAR(v, closed_grid_value(inner, outer, 64), 0.05);
    EXPECT_TRUE(decide_closed_curves(closed(inner), closed(outer), v - 1e-6));
    EXPECT_FALSE(decide_closed_curves(closed(inner), closed(outer), v + 1e-6));
}

TEST(ClosedCurves, RegularOctagonAntipodal)
{
    const auto oct = regular(8, 1.0);
    const double v = sdw_closed_curves(closed(oct), closed(oct));
    // Red must pass an edge midpoint, from which no octagon point is farther than this
    const double apothem = std::cos(M_PI / 8);
    const double far = std::sqrt(apothem * apothem + 1 + 2 * apothem * std::cos(M_PI / 8));
    EXPECT_GE(v, 2 * apothem - 1e-9); // antipodal phasing
    EXPECT_LE(v, far + 1e-9);
    EXPECT_NEAR(v, closed_grid_value(oct, oct, 64), 0.05);
}

TEST(ClosedCurves, ConstantDistance)
{
    const ClosedCurve p(PolylineCurve::from_2d({{1, 2}}));
    const ClosedCurve q(PolylineCurve::from_2d({{4, 6}}));
    EXPECT_NEAR(sdw_closed_curves(p, q), 5.0, 1e-9);
    const auto circle = regular(12, 2.0);
    EXPECT_NEAR(sdw_closed_curves(ClosedCurve(PolylineCurve::from_2d({{0, 0}})), closed(circle)), 2.0 * std::cos(M_PI / 12), 1e-9);
}

TEST(SdwPolygon, Examples)
{
    const auto hex = regular(6, 1.0);
    const SimplePolygon ph(hex);
    const double vh = sdw_polygon(ph);
    EXPECT_GT(vh, 0.0);
    EXPECT_LE(vh, 2.0 + 1e-9);
    EXPECT_TRUE(decide_closed_curves(boundary_curve(ph), boundary_curve(ph), vh - 1e-6));
    EXPECT_FALSE(decide_closed_curves(boundary_curve(ph), boundary_curve(ph), vh + 1e-6));
    EXPECT_NEAR(vh, closed_grid_value(hex, hex, 64), 0.05);

    const double h = 0.01;
    const std::vector<Vec2> sliver{{0, 0}, {1, 0}, {0.5, h}};
    const double vs = sdw_polygon(SimplePolygon(sliver));
    EXPECT_LE(vs, h + 1.0 + 1e-9);
    EXPECT_NEAR(vs, closed_grid_value(sliver, sliver, 64), 0.05);

    const std::vector<Vec2> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    EXPECT_NEAR(sdw_polygon(SimplePolygon(sq)), closed_grid_value(sq, sq, 128), 0.05);
}

TEST(SdwPolygon, ClockwiseInputIsReversed)
{
    const std::vector<Vec2> ccw{{0, 0}, {3, 0}, {3, 1}, {0, 2}};
    const std::vector<Vec2> cw(ccw.rbegin(), ccw.rend());
    EXPECT_DOUBLE_EQ(sdw_polygon(SimplePolygon(ccw)), sdw_polygon(SimplePolygon(cw)));
}
