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
#ifndef SDW_POLYGON_HPP
#define SDW_POLYGON_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <optional>
#include <vector>

#include "ff.hpp"
#include "geom.hpp"
#include "numeric.hpp"
#include "one_sided.hpp"

namespace sdw {

/// Simple polygon with counter-clockwise vertices (clockwise input is reversed).
class SimplePolygon {
public:
    SimplePolygon() = default;
    explicit SimplePolygon(std::vector<Vec2> vs) : v_(std::move(vs))
    {
        if (v_.size() < 3) throw InputError("polygon: need at least 3 vertices");
        if (signed_area() < 0.0) std::reverse(v_.begin(), v_.end());
        validate();
    }

    std::size_t size() const { return v_.size(); }
    const Vec2& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Vec2>& vertices() const { return v_; }
    Vec2 edge_point(std::size_t e, double y) const { return lerp(v_[e], v_[(e + 1) % v_.size()], y); }

    double signed_area() const
    {
        double a = 0.0;
        for (std::size_t i = 0; i < v_.size(); ++i) a += cross(v_[i], v_[(i + 1) % v_.size()]);
        return 0.5 * a;
    }

    /// Closed containment (boundary counts as inside within tol).
    bool contains(Vec2 p, double tol = kEpsGeom) const
    {
        if (boundary_distance(p) <= tol) return true;
        bool in = false;
        for (std::size_t i = 0, j = v_.size() - 1; i < v_.size(); j = i++) {
            const Vec2 a = v_[i], b = v_[j];
            if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
        }
        return in;
    }

    double boundary_distance(Vec2 p) const
    {
        double d = INFINITY;
        for (std::size_t i = 0; i < v_.size(); ++i) d = std::min(d, point_segment_distance(p, v_[i], v_[(i + 1) % v_.size()]));
        return d;
    }

    /// Edge and parameter of a boundary point, if p lies within tol of the boundary.
    std::optional<std::pair<std::size_t, double>> locate_boundary(Vec2 p, double tol = kEpsGeom) const
    {
        std::optional<std::pair<std::size_t, double>> best;
        double bd = tol;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            const Vec2 a = v_[i], b = v_[(i + 1) % v_.size()];
            const double d = point_segment_distance(p, a, b);
            if (d <= bd) {
                const Vec2 ab = b - a;
                const double y = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
                best = {i, y};
                bd = d;
            }
        }
        return best;
    }

private:
    void validate() const
    {
        const std::size_t n = v_.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (dist(v_[i], v_[j]) <= kEpsGeom) throw InputError("polygon: repeated vertex");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (j == i + 1 || (i == 0 && j == n - 1)) continue;
                if (segments_touch(v_[i], v_[(i + 1) % n], v_[j], v_[(j + 1) % n]))
                    throw InputError("polygon: edges intersect");
            }
        }
    }

    static bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d)
    {
        const double d1 = orient(a, b, c), d2 = orient(a, b, d), d3 = orient(c, d, a), d4 = orient(c, d, b);
        if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
        return point_segment_distance(c, a, b) <= kEpsGeom || point_segment_distance(d, a, b) <= kEpsGeom ||
               point_segment_distance(a, c, d) <= kEpsGeom || point_segment_distance(b, c, d) <= kEpsGeom;
    }

    std::vector<Vec2> v_;
};

namespace detail {

/// Ear clipping; triangles are CCW vertex index triples.
inline std::vector<std::array<std::size_t, 3>> triangulate(const SimplePolygon& poly)
{
    std::vector<std::size_t> idx(poly.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::array<std::size_t, 3>> tris;
    auto inside_tri = [](Vec2 p, Vec2 a, Vec2 b, Vec2 c) {
        return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
    };
    while (idx.size() > 3) {
        const std::size_t m = idx.size();
        bool clipped = false;
        for (int pass = 0; pass < 2 && !clipped; ++pass) {
            for (std::size_t k = 0; k < m; ++k) {
                const std::size_t ia = idx[(k + m - 1) % m], ib = idx[k], ic = idx[(k + 1) % m];
                const Vec2 a = poly[ia], b = poly[ib], c = poly[ic];
                const double o = orient(a, b, c);
                if (pass == 0 ? o <= 0 : o < 0) continue; // second pass admits collinear ears
                bool ear = true;
                for (std::size_t j : idx) {
                    if (j == ia || j == ib || j == ic) continue;
                    if (inside_tri(poly[j], a, b, c)) {
                        ear = false;
                        break;
                    }
                }
                if (!ear) continue;
                tris.push_back({ia, ib, ic});
                idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
                clipped = true;
                break;
            }
        }
        if (!clipped) throw InputError("polygon: triangulation failed");
    }
    tris.push_back({idx[0], idx[1], idx[2]});
    return tris;
}

} // namespace detail

/// Triangulation plus dual tree; shortest paths by the funnel algorithm.
class GeodesicIndex {
public:
    /// A query source: its triangle and the dual-tree search from it.
    struct Source {
        Vec2 p;
        std::size_t tri = 0;
        std::vector<std::size_t> parent; // dual-tree parent toward tri
    };

    GeodesicIndex() = default;
    explicit GeodesicIndex(SimplePolygon poly) : poly_(std::move(poly))
    {
        tris_ = detail::triangulate(poly_);
        adj_.assign(tris_.size(), {kNone, kNone, kNone});
        edge_tri_.assign(poly_.size(), kNone);
        const std::size_t n = poly_.size();
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            for (int k = 0; k < 3; ++k) {
                const std::size_t a = tris_[t][k], b = tris_[t][(k + 1) % 3];
                if ((a + 1) % n == b) edge_tri_[a] = t;
                for (std::size_t u = 0; u < tris_.size(); ++u) {
                    if (u == t) continue;
                    for (int l = 0; l < 3; ++l)
                        if (tris_[u][l] == b && tris_[u][(l + 1) % 3] == a) adj_[t][k] = u;
                }
            }
        }
    }

    const SimplePolygon& polygon() const { return poly_; }
    const std::vector<std::array<std::size_t, 3>>& triangles() const { return tris_; }

    /// Triangle containing p (closest one for points on shared boundaries).
    std::size_t locate(Vec2 p) const
    {
        std::size_t best = 0;
        double score = -INFINITY;
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            const Vec2 a = poly_[tris_[t][0]], b = poly_[tris_[t][1]], c = poly_[tris_[t][2]];
            const double s = std::min({orient(a, b, p) / std::max(dist(a, b), 1e-300),
                                       orient(b, c, p) / std::max(dist(b, c), 1e-300),
                                       orient(c, a, p) / std::max(dist(c, a), 1e-300)});
            if (s > score) score = s, best = t;
        }
        if (score < -kEpsGeom) throw InputError("polygon: point outside polygon");
        return best;
    }

    /// Triangle containing boundary edge e (hence every point of it).
    std::size_t edge_triangle(std::size_t e) const { return edge_tri_[e]; }

    Source source(Vec2 p) const
    {
        Source s;
        s.p = p;
        s.tri = locate(p);
        s.parent.assign(tris_.size(), kNone);
        s.parent[s.tri] = s.tri;
        std::deque<std::size_t> q{s.tri};
        while (!q.empty()) {
            const std::size_t t = q.front();
            q.pop_front();
            for (std::size_t u : adj_[t])
                if (u != kNone && s.parent[u] == kNone) s.parent[u] = t, q.push_back(u);
        }
        return s;
    }

    /// Shortest path from the source to q (q_tri: a triangle containing q, or kNone).
    std::vector<Vec2> path(const Source& s, Vec2 q, std::size_t q_tri = kNone) const
    {
        if (q_tri == kNone) q_tri = locate(q);
        // portals from the source triangle to q's triangle
        std::vector<Vec2> left{s.p}, right{s.p};
        std::vector<std::size_t> chain;
        for (std::size_t t = q_tri; t != s.tri; t = s.parent[t]) chain.push_back(t);
        chain.push_back(s.tri);
        std::reverse(chain.begin(), chain.end());
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const auto& tr = tris_[chain[i]];
            for (int k = 0; k < 3; ++k) {
                if (adj_[chain[i]][k] != chain[i + 1]) continue;
                right.push_back(poly_[tr[k]]);
                left.push_back(poly_[tr[(k + 1) % 3]]);
            }
        }
        left.push_back(q);
        right.push_back(q);
        return funnel(left, right);
    }

    double distance(const Source& s, Vec2 q, std::size_t q_tri = kNone) const
    {
        const auto pts = path(s, q, q_tri);
        double len = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += dist(pts[i], pts[i + 1]);
        return len;
    }

    double distance(Vec2 p, Vec2 q) const { return distance(source(p), q); }
    std::vector<Vec2> path(Vec2 p, Vec2 q) const { return path(source(p), q); }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

private:
    static std::vector<Vec2> funnel(const std::vector<Vec2>& left, const std::vector<Vec2>& right)
    {
        std::vector<Vec2> out{left[0]};
        Vec2 apex = left[0], pl = left[0], pr = right[0];
        std::size_t apex_i = 0, left_i = 0, right_i = 0;
        auto same = [](Vec2 a, Vec2 b) { return dist(a, b) <= 1e-13; };
        for (std::size_t i = 1; i < left.size(); ++i) {
            const Vec2 l = left[i], r = right[i];
            if (cross(pr - apex, r - apex) >= 0.0) {
                if (same(apex, pr) || cross(pl - apex, r - apex) < 0.0) {
                    pr = r;
                    right_i = i;
                } else {
                    apex = pl;
                    apex_i = left_i;
                    out.push_back(apex);
                    pl = pr = apex;
                    left_i = right_i = apex_i;
                    i = apex_i;
                    continue;
                }
            }
            if (cross(pl - apex, l - apex) <= 0.0) {
                if (same(apex, pl) || cross(pr - apex, l - apex) > 0.0) {
                    pl = l;
                    left_i = i;
                } else {
                    apex = pr;
                    apex_i = right_i;
                    out.push_back(apex);
                    pl = pr = apex;
                    left_i = right_i = apex_i;
                    i = apex_i;
                    continue;
                }
            }
        }
        if (!same(out.back(), left.back())) out.push_back(left.back());
        return out;
    }

    SimplePolygon poly_;
    std::vector<std::array<std::size_t, 3>> tris_;
    std::vector<std::array<std::size_t, 3>> adj_;
    std::vector<std::size_t> edge_tri_;
};

inline double geodesic_distance(const GeodesicIndex& idx, Vec2 p, Vec2 q)
{
    if (!idx.polygon().contains(p) || !idx.polygon().contains(q)) throw InputError("polygon: point outside polygon");
    return idx.distance(p, q);
}

namespace detail {

inline Vec2 polyline_point(const PolylineCurve& c, std::size_t seg, double lam)
{
    return lerp(c.vec2(seg), c.vec2(std::min(seg + 1, c.size() - 1)), lam);
}

inline void require_inside(const GeodesicIndex& idx, const PolylineCurve& c)
{
    if (c.dim() != 2) throw InputError("polygon: curve must be planar");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!idx.polygon().contains(c.vec2(i))) throw InputError("polygon: path leaves polygon");
    // a segment lies inside exactly when its geodesic length is its Euclidean length
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const double e = dist(c.vec2(i), c.vec2(i + 1));
        if (idx.distance(c.vec2(i), c.vec2(i + 1)) > e + 1e-9 * std::max(1.0, e))
            throw InputError("polygon: path leaves polygon");
    }
}

} // namespace detail

/// Geodesic distance from p to the nearest point of the path R.
inline double distance_point_to_path(const GeodesicIndex& idx, Vec2 p, const PolylineCurve& R)
{
    if (!idx.polygon().contains(p)) throw InputError("polygon: point outside polygon");
    detail::require_inside(idx, R);
    const auto src = idx.source(p);
    double best = idx.distance(src, R.vec2(0));
    for (std::size_t i = 0; i + 1 < R.size(); ++i) {
        auto f = [&](double lam) { return idx.distance(src, detail::polyline_point(R, i, lam)); };
        best = std::min(best, golden_min(f, 0.0, 1.0, 70).second);
    }
    return best;
}

/// Circular arc of a geodesic disk boundary, centered at the disk center
/// (anchor == kNone) or at a polygon vertex.
struct DiskArc {
    Vec2 center;
    std::size_t anchor = GeodesicIndex::kNone;
    double radius = 0.0;
    double theta0 = 0.0, theta1 = 0.0;
};

struct GeodesicDiskRegion {
    Vec2 center;
    double radius = 0.0;
    std::vector<double> vertex_distance; // geodesic distance from the center to each vertex
    std::vector<DiskArc> arcs;
};

inline bool disk_contains(const GeodesicIndex& idx, const GeodesicDiskRegion& d, Vec2 q, double tol = 1e-9)
{
    return idx.distance(d.center, q) <= d.radius + tol;
}

/// Points at geodesic distance <= r from center. Arcs are found per anchor by
/// angular sampling with bisection refinement of their end angles.
inline GeodesicDiskRegion geodesic_disk(const GeodesicIndex& idx, Vec2 center, double r, int samples = 1440)
{
    const auto& poly = idx.polygon();
    if (!poly.contains(center)) throw InputError("polygon: disk center outside polygon");
    if (r < 0.0) throw InputError("polygon: negative radius");
    GeodesicDiskRegion d;
    d.center = center;
    d.radius = r;
    const auto src = idx.source(center);
    for (std::size_t v = 0; v < poly.size(); ++v) d.vertex_distance.push_back(idx.distance(src, poly[v], idx.edge_triangle(v)));
    if (r == 0.0) return d;
    auto trace = [&](Vec2 a, std::size_t anchor, double rho) {
        auto on_arc = [&](double th) {
            const Vec2 q{a.x + rho * std::cos(th), a.y + rho * std::sin(th)};
            if (!poly.contains(q, 0.0)) return false;
            return std::abs(idx.distance(src, q) - r) <= 1e-7 * (1.0 + r);
        };
        const double step = 2.0 * M_PI / samples;
        std::vector<char> ok(samples);
        for (int k = 0; k < samples; ++k) ok[k] = on_arc(k * step);
        if (std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; })) {
            d.arcs.push_back({a, anchor, rho, 0.0, 2.0 * M_PI});
            return;
        }
        int first = 0;
        while (ok[first]) ++first; // start scanning from an invalid sample
        for (int k = 0; k < samples; ++k) {
            const int i = (first + k) % samples;
            if (!ok[i] || ok[(i + samples - 1) % samples]) continue;
            int j = i;
            while (ok[(j + 1) % samples]) ++j;
            const double lo = i * step, hi = j * step;
            const double t0 = bisect_boundary(on_arc, lo, lo - step, 50);
            const double t1 = bisect_boundary(on_arc, hi, hi + step, 50);
            d.arcs.push_back({a, anchor, rho, t0, t1});
        }
    };
    trace(center, GeodesicIndex::kNone, r);
    for (std::size_t v = 0; v < poly.size(); ++v)
        if (d.vertex_distance[v] < r) trace(poly[v], v, r - d.vertex_distance[v]);
    return d;
}

/// A maximal piece of the polygon boundary outside a disk, from (first_edge,
/// first_param) counter-clockwise to (last_edge, last_param); `closed` when the
/// disk misses the boundary entirely.
struct BoundaryArc {
    std::size_t first_edge = 0, last_edge = 0;
    double first_param = 0.0, last_param = 0.0;
    std::vector<std::size_t> vertices;
    bool closed = false;
};

/// Components of P minus the disk, one per boundary piece outside the disk.
struct ComponentDecomposition {
    std::vector<BoundaryArc> components;
};

namespace detail {

/// Closed parameter interval of boundary edge e within distance r of the source.
inline std::optional<Interval> edge_near_interval(const GeodesicIndex& idx, const GeodesicIndex::Source& src,
                                                  std::size_t e, double r)
{
    const std::size_t tri = idx.edge_triangle(e);
    auto f = [&](double y) { return idx.distance(src, idx.polygon().edge_point(e, y), tri); };
    const auto [ym, fm] = golden_min(f, 0.0, 1.0, 70);
    if (fm > r) return std::nullopt;
    auto near = [&](double y) { return f(y) <= r; };
    const double lo = near(0.0) ? 0.0 : bisect_boundary(near, ym, 0.0, 60);
    const double hi = near(1.0) ? 1.0 : bisect_boundary(near, ym, 1.0, 60);
    return Interval{lo, hi};
}

inline ComponentDecomposition boundary_pieces(const GeodesicIndex& idx, Vec2 center, double r)
{
    const auto& poly = idx.polygon();
    const std::size_t n = poly.size();
    const auto src = idx.source(center);
    std::vector<std::optional<Interval>> near(n);
    for (std::size_t e = 0; e < n; ++e) near[e] = edge_near_interval(idx, src, e, r);
    ComponentDecomposition out;
    std::size_t e0 = n;
    for (std::size_t e = 0; e < n && e0 == n; ++e)
        if (near[e]) e0 = e;
    if (e0 == n) {
        BoundaryArc a;
        a.closed = true;
        a.first_edge = 0;
        a.last_edge = n - 1;
        a.last_param = 1.0;
        for (std::size_t v = 0; v < n; ++v) a.vertices.push_back(v);
        out.components.push_back(std::move(a));
        return out;
    }
    std::optional<BoundaryArc> open;
    auto close = [&](std::size_t e, double y) {
        open->last_edge = e;
        open->last_param = y;
        const bool empty = open->vertices.empty() && open->first_edge == e && y - open->first_param <= 1e-12;
        if (!empty) out.components.push_back(std::move(*open));
        open.reset();
    };
    auto start = [&](std::size_t e, double y) {
        open = BoundaryArc{};
        open->first_edge = e;
        open->first_param = y;
    };
    if (near[e0]->hi < 1.0) start(e0, near[e0]->hi);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t e = (e0 + k) % n;
        if (open) open->vertices.push_back(e);
        if (!near[e]) {
            if (!open) start(e, 0.0);
            continue;
        }
        if (open) close(e, near[e]->lo);
        if (k < n && near[e]->hi < 1.0) start(e, near[e]->hi);
    }
    return out;
}

/// Boundary point reached by extending the last leg of the shortest path from
/// center through b; distance to center only grows along the extension.
inline std::pair<std::size_t, double> extend_to_boundary(const GeodesicIndex& idx, Vec2 center, Vec2 b)
{
    const auto& poly = idx.polygon();
    if (auto on = poly.locate_boundary(b, 1e-12)) return *on;
    const auto pts = idx.path(center, b);
    const Vec2 anchor = pts.size() >= 2 ? pts[pts.size() - 2] : center;
    const Vec2 dir = b - anchor;
    double best = INFINITY;
    std::pair<std::size_t, double> hit{0, 0.0};
    for (std::size_t e = 0; e < poly.size(); ++e) {
        const Vec2 a = poly[e], c = poly[(e + 1) % poly.size()];
        const Vec2 ac = c - a;
        const double den = cross(dir, ac);
        if (std::abs(den) < 1e-300) continue;
        const double lam = cross(a - b, ac) / den;
        const double y = cross(a - b, dir) / den;
        if (lam > 1e-12 && y >= -1e-12 && y <= 1.0 + 1e-12 && lam < best) {
            best = lam;
            hit = {e, std::clamp(y, 0.0, 1.0)};
        }
    }
    if (best == INFINITY) throw InputError("polygon: boundary extension failed");
    return hit;
}

inline bool arc_contains(const BoundaryArc& a, std::size_t n, std::size_t e, double y)
{
    if (a.closed) return true;
    auto key = [&](std::size_t edge, double param) {
        // position measured counter-clockwise from the arc start
        const std::size_t off = (edge + n - a.first_edge) % n;
        return static_cast<double>(off) + param - a.first_param;
    };
    double end = key(a.last_edge, a.last_param);
    if (end < 0.0) end += static_cast<double>(n);
    double at = key(e, y);
    if (at < -1e-12) at += static_cast<double>(n);
    return at >= -1e-12 && at <= end + 1e-12;
}

} // namespace detail

/// Components of P minus the disk, reported through their boundary pieces.
inline ComponentDecomposition components_minus_disk(const GeodesicIndex& idx, const GeodesicDiskRegion& d)
{
    return detail::boundary_pieces(idx, d.center, d.radius);
}

/// Index of the component containing b (nullopt if b is within the disk).
inline std::optional<std::size_t> component_of(const GeodesicIndex& idx, const GeodesicDiskRegion& d,
                                               const ComponentDecomposition& comps, Vec2 b)
{
    if (idx.distance(d.center, b) <= d.radius) return std::nullopt;
    const auto [e, y] = detail::extend_to_boundary(idx, d.center, b);
    for (std::size_t k = 0; k < comps.components.size(); ++k)
        if (detail::arc_contains(comps.components[k], idx.polygon().size(), e, y)) return k;
    return std::nullopt;
}

struct EscapeResult {
    bool yes = false;
    std::optional<Vec2> safe_point;
    explicit operator bool() const { return yes; }
};

/// Red follows a shortest path R; Blue starts at b anywhere in P. Blue escapes
/// iff it starts outside the disk around R's start and its component of the
/// complement holds a point farther than delta from all of R.
inline EscapeResult decide_escape_geodesic_red(const GeodesicIndex& idx, Vec2 b, const PolylineCurve& R, double delta)
{
    const auto& poly = idx.polygon();
    if (!poly.contains(b)) throw InputError("polygon: blue start outside polygon");
    detail::require_inside(idx, R);
    const double len = R.length(), geo = idx.distance(R.vec2(0), R.vec2(R.size() - 1));
    if (std::abs(len - geo) > 1e-9 * std::max(1.0, len)) throw InputError("polygon: red path is not a geodesic");
    const Vec2 t = R.vec2(0);
    if (idx.distance(t, b) <= delta) return {};
    const auto comps = detail::boundary_pieces(idx, t, delta);
    const auto [e, y] = detail::extend_to_boundary(idx, t, b);
    std::vector<Vec2> cand{b, poly.edge_point(e, y)};
    for (const auto& arc : comps.components)
        if (detail::arc_contains(arc, poly.size(), e, y))
            for (std::size_t v : arc.vertices) cand.push_back(poly[v]);
    // distance to a geodesic is convex along segments and at most delta on the
    // disk boundary, so the maximum over the component sits at one of these
    for (Vec2 p : cand)
        if (distance_point_to_path(idx, p, R) > delta) return {true, p};
    return {};
}

/// Distances from points of a Red path to the polygon boundary, as a one-sided field.
class BoundaryGeodesicField {
public:
    BoundaryGeodesicField(const GeodesicIndex& idx, const PolylineCurve& red) : idx_(idx), red_(red)
    {
        const std::size_t n = idx.polygon().size();
        dom_.vertices = n;
        for (std::size_t i = 0; i < n; ++i) dom_.edges.emplace_back(i, (i + 1) % n);
    }

    const BlueDomain& domain() const { return dom_; }
    std::size_t columns() const { return red_.size() - 1; }
    FieldShape shape() const { return FieldShape::Convex; }

    double vertex_distance(double s, std::size_t v) const
    {
        return idx_.distance(source(s), idx_.polygon()[v], idx_.edge_triangle(v));
    }

    double edge_extreme(double s, std::size_t e) const
    {
        const auto& src = source(s);
        auto f = [&](double y) { return idx_.distance(src, idx_.polygon().edge_point(e, y), idx_.edge_triangle(e)); };
        return golden_min(f, 0.0, 1.0, 60).second;
    }

    IntervalSet edge_free(double s, std::size_t e, double delta) const
    {
        const auto& src = source(s);
        auto f = [&](double y) { return idx_.distance(src, idx_.polygon().edge_point(e, y), idx_.edge_triangle(e)); };
        return convex_superlevel(f, 0.0, 1.0, delta);
    }

private:
    const GeodesicIndex::Source& source(double s) const
    {
        if (!cache_ || cache_->first != s) {
            const std::size_t k = std::min(static_cast<std::size_t>(std::max(s, 0.0)), columns() - 1);
            cache_.emplace(s, idx_.source(detail::polyline_point(red_, k, s - static_cast<double>(k))));
        }
        return cache_->second;
    }

    const GeodesicIndex& idx_;
    PolylineCurve red_;
    BlueDomain dom_;
    mutable std::optional<std::pair<double, GeodesicIndex::Source>> cache_;
};

/// Red follows any path R in P; Blue starts at boundary point b. Uses the
/// reduction of Blue's motion to the boundary under geodesic separation.
inline bool decide_escape_arbitrary_red(const GeodesicIndex& idx, Vec2 b, const PolylineCurve& R, double delta)
{
    const auto& poly = idx.polygon();
    const auto on = poly.locate_boundary(b);
    if (!on) throw InputError("polygon: blue start must lie on the boundary");
    detail::require_inside(idx, R);
    if (delta <= 0.0) return true;
    const PolylineCurve red = R.size() > 1 ? R : PolylineCurve(2, {R[0], R[0]});
    if (idx.distance(red.vec2(0), b) < delta) return false;
    const BoundaryGeodesicField field(idx, red);
    return reachability_one_sided(field, BlueStart{false, on->first, on->second}, delta);
}

/// Both agents walk once around their closed curves from vertex starts; the
/// result maximizes the separation value over all start pairs.
inline double sdw_closed_curves(const ClosedCurve& red, const ClosedCurve& blue)
{
    if (red.dim() != blue.dim()) throw InputError("closed curves: dimension mismatch");
    double best = 0.0;
    for (std::size_t s = 0; s < red.size(); ++s) {
        const PolylineCurve r = red.rotated_open(s);
        for (std::size_t y = 0; y < blue.size(); ++y) {
            const PolylineCurve b = blue.rotated_open(y);
            // cheap upper bound from the mandatory start pair
            if (dist(r[0], b[0]) <= best) continue;
            if (!decide_ff(r, b, best).yes) continue;
            best = std::max(best, ff_value(r, b));
        }
    }
    return best;
}

inline bool decide_closed_curves(const ClosedCurve& red, const ClosedCurve& blue, double delta)
{
    for (std::size_t s = 0; s < red.size(); ++s)
        for (std::size_t y = 0; y < blue.size(); ++y)
            if (decide_ff(red.rotated_open(s), blue.rotated_open(y), delta).yes) return true;
    return false;
}

inline ClosedCurve boundary_curve(const SimplePolygon& poly)
{
    return ClosedCurve(PolylineCurve::from_2d(poly.vertices()));
}

inline double sdw_polygon(const SimplePolygon& poly)
{
    const ClosedCurve c = boundary_curve(poly);
    return sdw_closed_curves(c, c);
}

} // namespace sdw

#endif
