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
#ifndef SDW_GENERATORS_HPP
#define SDW_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "geom.hpp"
#include "graph.hpp"
#include "polygon.hpp"
#include "tree.hpp"

namespace sdw {

using Rng = std::mt19937_64;

/// Two sets of binary vectors of a common even dimension.
struct OVInstance {
    std::vector<std::vector<int>> U, V;

    std::size_t dimension() const { return U.empty() ? 0 : U[0].size(); }

    /// Validates entries and pads odd dimensions with a trailing zero.
    OVInstance normalized() const
    {
        if (U.empty() || V.empty()) throw InputError("ov: empty instance");
        const std::size_t d = U[0].size();
        if (d == 0) throw InputError("ov: zero dimension");
        OVInstance out = *this;
        for (auto* set : {&out.U, &out.V}) {
            for (auto& vec : *set) {
                if (vec.size() != d) throw InputError("ov: inconsistent dimension");
                for (int x : vec)
                    if (x != 0 && x != 1) throw InputError("ov: entries must be 0 or 1");
                if (d % 2 == 1) vec.push_back(0);
            }
        }
        return out;
    }

    bool has_orthogonal_pair() const
    {
        for (const auto& u : U)
            for (const auto& v : V) {
                bool orth = true;
                for (std::size_t k = 0; k < u.size() && orth; ++k) orth = !(u[k] && v[k]);
                if (orth) return true;
            }
        return false;
    }
};

/// sqrt(5) / (2 sqrt(2)), the gap of the planar construction.
inline double ov_alpha() { return std::sqrt(5.0) / (2.0 * std::sqrt(2.0)); }

/// Planar gadget curves: FF >= 1 with an orthogonal pair, <= ov_alpha() otherwise.
inline std::pair<PolylineCurve, PolylineCurve> gen_ov_2d(const OVInstance& in)
{
    const OVInstance ov = in.normalized();
    const Vec2 x{-1.5, 0}, r{-0.75, 0}, rp{-0.5, 0}, b{0.25, 0}, bp{0.5, 0}, o{0, 0};
    const Vec2 cu[2] = {{0, 0.75}, {0, 0.25}}, cd[2] = {{0, -0.75}, {0, -0.25}};
    const Vec2 u{0, 0.5}, d{0, -0.5};
    const Vec2 p1{0.25, 0.5}, p2{0.5, 0.25}, p3{0.5, -0.25}, p4{0.25, -0.5};
    const Vec2 p5{-0.25, -0.5}, p6{-0.5, -0.25}, p7{-0.5, 0.25}, p8{-0.25, 0.5};
    // s2 is the mirror of t2 so that |t1 - s2| = |s1 - t2| = alpha; at (-0.25, -0.25)
    // Red could pass s2 while Blue waits at t1 and every instance would reach 1
    const Vec2 s1{1, 0.5}, t1{1, -0.5}, s2{0.25, -0.25}, t2{0.25, 0.25};
    const std::size_t half = ov.dimension() / 2;

    std::vector<Vec2> red{x, o, s2};
    for (const auto& vec : ov.U) {
        red.push_back(r);
        red.push_back(rp);
        for (std::size_t k = 0; k < half; ++k) {
            for (Vec2 p : {p7, p8, u, cu[vec[2 * k]], u, p8, p7, p6, p5, d, cd[vec[2 * k + 1]], d, p5, p6})
                red.push_back(p);
        }
        red.push_back(rp);
    }
    for (Vec2 p : {r, t2, o, x}) red.push_back(p);

    std::vector<Vec2> blue;
    for (const auto& vec : ov.V) {
        for (Vec2 p : {s1, b, bp}) blue.push_back(p);
        for (std::size_t k = 0; k < half; ++k) {
            for (Vec2 p : {p3, p4, d, cd[vec[2 * k]], d, p4, p3, p2, p1, u, cu[vec[2 * k + 1]], u, p1, p2})
                blue.push_back(p);
        }
        for (Vec2 p : {bp, b, t1}) blue.push_back(p);
    }
    return {PolylineCurve::from_2d(red), PolylineCurve::from_2d(blue)};
}

/// Points of the discrete 1D construction.
struct OV1DPoints {
    static constexpr double w1 = 5.0 / 3.0, w2 = -5.0 / 3.0, x1 = -1.0, x2 = 1.0, s = 0.0;
    // index [parity: 0 odd, 1 even][bit]
    static constexpr double a[2][2] = {{-2.0 / 3.0, -1.0 / 3.0}, {2.0 / 3.0, 1.0 / 3.0}};
    static constexpr double b[2][2] = {{2.0 / 3.0, 1.0 / 3.0}, {-2.0 / 3.0, -1.0 / 3.0}};
};

/// Discrete 1D gadget curves: dFF >= 1 with an orthogonal pair, <= 2/3 otherwise.
inline std::pair<PolylineCurve, PolylineCurve> gen_ov_1d_discrete(const OVInstance& in)
{
    using Pt = OV1DPoints;
    const OVInstance ov = in.normalized();
    const std::size_t dim = ov.dimension();
    // k is 1-based in the construction, so k = 1 is odd
    auto parity = [](std::size_t k0) { return k0 % 2 == 0 ? 0 : 1; };
    std::vector<double> w;
    for (std::size_t k = 0; k < dim * (ov.V.size() - 1); ++k) w.push_back(Pt::a[parity(k)][0]);

    std::vector<double> red = w;
    red.push_back(Pt::x1);
    for (const auto& vec : ov.U) {
        red.push_back(Pt::s);
        for (std::size_t k = 0; k < dim; ++k) red.push_back(Pt::a[parity(k)][vec[k]]);
    }
    red.push_back(Pt::s);
    red.push_back(Pt::x2);
    red.insert(red.end(), w.begin(), w.end());

    std::vector<double> blue;
    for (const auto& vec : ov.V) {
        blue.push_back(Pt::w1);
        for (std::size_t k = 0; k < dim; ++k) blue.push_back(Pt::b[parity(k)][vec[k]]);
        blue.push_back(Pt::w2);
    }
    return {PolylineCurve::from_1d(red), PolylineCurve::from_1d(blue)};
}

/// All vectors of a dimension, as lists of bits (most significant first).
inline std::vector<std::vector<int>> all_binary_vectors(std::size_t dim)
{
    std::vector<std::vector<int>> out;
    for (std::uint32_t m = 0; m < (1u << dim); ++m) {
        std::vector<int> v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = (m >> (dim - 1 - k)) & 1u;
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<double> random_curve_1d(Rng& rng, std::size_t n, int lo = -10, int hi = 10)
{
    if (n == 0 || n > 10000) throw InputError("random: curve size out of range");
    std::uniform_int_distribution<int> u(lo, hi);
    std::vector<double> c(n);
    for (auto& x : c) x = u(rng);
    return c;
}

inline PolylineCurve random_curve_2d(Rng& rng, std::size_t n, double extent = 10.0)
{
    if (n == 0 || n > 10000) throw InputError("random: curve size out of range");
    std::uniform_real_distribution<double> u(0.0, extent);
    std::vector<Vec2> pts(n);
    for (auto& p : pts) p = {u(rng), u(rng)};
    return PolylineCurve::from_2d(pts);
}

namespace detail {

/// One chain of the space-partition construction from a to b through pts.
inline void partition_chain(Rng& rng, Vec2 a, Vec2 b, std::vector<Vec2> pts, std::vector<Vec2>& out)
{
    if (pts.empty()) {
        out.push_back(a);
        return;
    }
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    std::uniform_real_distribution<double> frac(0.1, 0.9);
    const std::size_t ci = pick(rng);
    const Vec2 c = pts[ci];
    pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(ci));
    const Vec2 m = lerp(a, b, frac(rng));
    const double side_a = orient(c, m, a);
    std::vector<Vec2> sa, sb;
    for (Vec2 p : pts) ((orient(c, m, p) > 0) == (side_a > 0) ? sa : sb).push_back(p);
    partition_chain(rng, a, c, std::move(sa), out);
    partition_chain(rng, c, b, std::move(sb), out);
}

} // namespace detail

/// Random simple polygon with n vertices in [0, extent]^2 (space partitioning).
inline SimplePolygon random_polygon(Rng& rng, std::size_t n, double extent = 10.0)
{
    if (n < 3 || n > 10000) throw InputError("random: polygon size out of range");
    std::uniform_real_distribution<double> u(0.0, extent);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vec2> pts;
        while (pts.size() < n) {
            const Vec2 p{u(rng), u(rng)};
            bool ok = true;
            for (Vec2 q : pts) ok = ok && dist(p, q) > 1e-3 * extent;
            if (ok) pts.push_back(p);
        }
        const Vec2 a = pts[0], b = pts[1];
        std::vector<Vec2> left, right;
        for (std::size_t i = 2; i < n; ++i) (orient(a, b, pts[i]) > 0 ? left : right).push_back(pts[i]);
        std::vector<Vec2> ring;
        detail::partition_chain(rng, a, b, right, ring);
        detail::partition_chain(rng, b, a, left, ring);
        try {
            SimplePolygon poly(ring);
            // reject slivers that make every tolerance meaningless
            bool fat = true;
            for (std::size_t i = 0; i < n && fat; ++i) {
                const Vec2 p = poly[i], q = poly[(i + 1) % n], r = poly[(i + 2) % n];
                fat = std::abs(orient(p, q, r)) > 1e-6 * extent * extent;
            }
            if (fat) return poly;
        } catch (const InputError&) {
        }
    }
    throw InputError("random: polygon generation failed");
}

/// Random point strictly inside a polygon (rejection sampling in the bounding box).
inline Vec2 random_point_in(Rng& rng, const SimplePolygon& poly)
{
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (Vec2 p : poly.vertices()) x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    for (;;) {
        const Vec2 p{ux(rng), uy(rng)};
        if (poly.contains(p, 0.0) && poly.boundary_distance(p) > 1e-6) return p;
    }
}

/// Random attachment tree: vertex v hangs off a uniform earlier vertex. Lengths
/// are 1 when `weighted` is false, else uniform in [0.5, 5].
inline WeightedTree random_tree(Rng& rng, std::size_t n, bool weighted = true)
{
    if (n == 0 || n > 10000) throw InputError("random: tree size out of range");
    std::uniform_real_distribution<double> len(0.5, 5.0);
    std::vector<TreeEdge> e;
    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        e.push_back({u, v, weighted ? len(rng) : 1.0});
    }
    return WeightedTree(n, std::move(e));
}

/// Depth-first tour from a random root with shuffled child orders.
inline std::vector<std::size_t> random_tour(Rng& rng, const WeightedTree& t)
{
    const std::size_t root = std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng);
    std::vector<std::size_t> tour{root};
    auto visit = [&](auto&& self, std::size_t v, std::size_t parent) -> void {
        std::vector<std::size_t> kids;
        for (const auto& a : t.neighbors(v))
            if (a.to != parent) kids.push_back(a.to);
        std::shuffle(kids.begin(), kids.end(), rng);
        for (std::size_t c : kids) {
            tour.push_back(c);
            self(self, c, v);
            tour.push_back(v);
        }
    };
    visit(visit, root, t.size());
    return tour;
}

/// Random connected simple graph: a random attachment tree plus `extra` random edges.
inline std::vector<GraphEdge> random_graph_edges(Rng& rng, std::size_t n, std::size_t extra)
{
    if (n == 0 || n > 10000) throw InputError("random: graph size out of range");
    std::set<GraphEdge> e;
    for (std::size_t v = 1; v < n; ++v) e.insert({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v});
    const std::size_t cap = n * (n - 1) / 2;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (extra > 0 && e.size() < cap) {
        std::size_t u = pick(rng), v = pick(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (e.insert({u, v}).second) --extra;
    }
    return {e.begin(), e.end()};
}

inline AbstractGraph random_abstract_graph(Rng& rng, std::size_t n, std::size_t extra)
{
    return AbstractGraph(n, random_graph_edges(rng, n, extra));
}

inline GeometricGraph random_geometric_graph(Rng& rng, std::size_t n, std::size_t extra, double extent = 10.0)
{
    std::uniform_real_distribution<double> u(-extent, extent);
    std::vector<Vec2> pts;
    while (pts.size() < n) {
        const Vec2 p{u(rng), u(rng)};
        bool ok = true;
        for (Vec2 q : pts) ok = ok && dist(p, q) > 1e-3 * extent;
        if (ok) pts.push_back(p);
    }
    return GeometricGraph(std::move(pts), random_graph_edges(rng, n, extra));
}

/// Red walk along graph edges: starts inside a random edge, crosses `steps`
/// vertices and ends inside an edge.
inline PolylineCurve random_walk_on_graph(Rng& rng, const GeometricGraph& g, std::size_t steps)
{
    if (g.edges().empty()) return PolylineCurve::from_2d({g.node(0)});
    std::uniform_real_distribution<double> frac(0.05, 0.95);
    auto e = g.edges()[std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng)];
    std::vector<Vec2> pts{lerp(g.node(e.first), g.node(e.second), frac(rng))};
    std::size_t at = e.second;
    for (std::size_t k = 0; k < steps; ++k) {
        pts.push_back(g.node(at));
        const auto& nb = g.neighbors(at);
        at = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
    }
    pts.push_back(lerp(pts.back(), g.node(at), frac(rng)));
    return PolylineCurve::from_2d(pts);
}

} // namespace sdw

#endif
