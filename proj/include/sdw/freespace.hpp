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
#ifndef SDW_FREESPACE_HPP
#define SDW_FREESPACE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <span>

#include "geom.hpp"
#include "numeric.hpp"

namespace sdw {

/// Squared distance between e(s) = a + s u and f(t) = c + t v over the unit cell:
/// Q(s,t) = |w + s u - t v|^2 = A s^2 + B s t + C t^2 + D s + E t + F with w = a - c.
/// The vectors are kept (reduced to an isometric 3D frame) because root finding
/// on squared distances loses half the digits near tangencies.
struct CellQuadratic {
    double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;
    std::array<double, 3> w{}, u{}, v{};

    static CellQuadratic from_vectors(const std::array<double, 3>& w, const std::array<double, 3>& u,
                                      const std::array<double, 3>& v)
    {
        auto d3 = [](const std::array<double, 3>& x, const std::array<double, 3>& y) {
            return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
        };
        CellQuadratic q;
        q.w = w, q.u = u, q.v = v;
        q.A = d3(u, u);
        q.B = -2.0 * d3(u, v);
        q.C = d3(v, v);
        q.D = 2.0 * d3(w, u);
        q.E = -2.0 * d3(w, v);
        q.F = d3(w, w);
        return q;
    }

    static CellQuadratic from_segments(std::span<const double> a0, std::span<const double> a1,
                                       std::span<const double> c0, std::span<const double> c1)
    {
        const std::size_t d = a0.size();
        std::array<double, 3> w{}, u{}, v{};
        if (d <= 3) {
            for (std::size_t k = 0; k < d; ++k) {
                u[k] = a1[k] - a0[k];
                v[k] = c1[k] - c0[k];
                w[k] = a0[k] - c0[k];
            }
            return from_vectors(w, u, v);
        }
        // coordinates in an orthonormal basis of span{u, v, w}
        std::vector<std::vector<double>> src(3, std::vector<double>(d)), basis;
        for (std::size_t k = 0; k < d; ++k) {
            src[0][k] = a1[k] - a0[k];
            src[1][k] = c1[k] - c0[k];
            src[2][k] = a0[k] - c0[k];
        }
        auto dotv = [&](const std::vector<double>& x, const std::vector<double>& y) {
            double r = 0;
            for (std::size_t k = 0; k < d; ++k) r += x[k] * y[k];
            return r;
        };
        for (const auto& x : src) {
            auto e = x;
            for (const auto& b : basis) {
                const double p = dotv(e, b);
                for (std::size_t k = 0; k < d; ++k) e[k] -= p * b[k];
            }
            const double n = std::sqrt(dotv(e, e));
            if (n > 1e-14 * std::max(1.0, std::sqrt(dotv(x, x)))) {
                for (auto& c : e) c /= n;
                basis.push_back(std::move(e));
            }
        }
        std::array<std::array<double, 3>, 3> out{};
        for (int i = 0; i < 3; ++i)
            for (std::size_t b = 0; b < basis.size(); ++b) out[i][b] = dotv(src[i], basis[b]);
        return from_vectors(out[2], out[0], out[1]);
    }

    /// Difference vector e(s) - f(t).
    std::array<double, 3> diff(double s, double t) const
    {
        return {w[0] + s * u[0] - t * v[0], w[1] + s * u[1] - t * v[1], w[2] + s * u[2] - t * v[2]};
    }

    double operator()(double s, double t) const
    {
        const auto p = diff(s, t);
        return p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    }

    /// Same cell with the axes swapped.
    CellQuadratic transposed() const { return from_vectors({-w[0], -w[1], -w[2]}, v, u); }
};

/// Threshold on Q below which a point is forbidden at separation delta. A tiny
/// relative slack keeps exact boundary cases on the free side.
inline double forbidden_threshold(double delta)
{
    const double d2 = delta * delta;
    return d2 * (1.0 - 1e-12);
}

namespace detail {

/// Q along p0 + lambda (p1 - p0) as |P + lambda V|^2.
struct LineRestriction {
    std::array<double, 3> P{}, V{};
    double vv = 0;   // |V|^2
    double foot = 0; // unconstrained minimizer
    double h2 = 0;   // minimum value of Q on the whole line
};

inline LineRestriction restrict_line(const CellQuadratic& q, double s0, double t0, double s1, double t1)
{
    LineRestriction r;
    r.P = q.diff(s0, t0);
    const double ds = s1 - s0, dt = t1 - t0;
    for (int k = 0; k < 3; ++k) r.V[k] = ds * q.u[k] - dt * q.v[k];
    r.vv = r.V[0] * r.V[0] + r.V[1] * r.V[1] + r.V[2] * r.V[2];
    const double pv = r.P[0] * r.V[0] + r.P[1] * r.V[1] + r.P[2] * r.V[2];
    const double pp = r.P[0] * r.P[0] + r.P[1] * r.P[1] + r.P[2] * r.P[2];
    if (r.vv <= 1e-28 * std::max(1.0, pp)) {
        r.vv = 0.0;
        r.h2 = pp;
        return r;
    }
    r.foot = -pv / r.vv;
    double h2 = 0;
    for (int k = 0; k < 3; ++k) {
        const double c = r.P[k] + r.foot * r.V[k];
        h2 += c * c;
    }
    r.h2 = h2;
    return r;
}

/// Parameters where Q crosses thr on the line (0 or 2 values, ascending).
inline std::vector<double> line_roots(const LineRestriction& r, double thr)
{
    if (r.vv == 0.0 || r.h2 >= thr) return {};
    const double half = std::sqrt((thr - r.h2) / r.vv);
    return {r.foot - half, r.foot + half};
}

/// {lambda in [0,1] : Q >= thr} along the segment p0 -> p1.
inline IntervalSet segment_free(const CellQuadratic& q, double thr, double s0, double t0, double s1, double t1)
{
    const auto r = restrict_line(q, s0, t0, s1, t1);
    IntervalSet out;
    if (r.vv == 0.0) {
        if (r.h2 >= thr) out.add({0.0, 1.0});
        return out;
    }
    const auto roots = line_roots(r, thr);
    if (roots.empty()) {
        out.add({0.0, 1.0});
        return out;
    }
    out.add({0.0, std::min(1.0, roots[0])});
    out.add({std::max(0.0, roots[1]), 1.0});
    return out;
}

inline double segment_min(const CellQuadratic& q, double s0, double t0, double s1, double t1)
{
    const auto r = restrict_line(q, s0, t0, s1, t1);
    if (r.vv == 0.0) return r.h2;
    if (r.foot > 0.0 && r.foot < 1.0) return r.h2;
    return std::min(q(s0, t0), q(s1, t1));
}

struct Rect {
    double s0 = 0, s1 = 1, t0 = 0, t1 = 1;
    bool contains(double s, double t, double tol = 1e-12) const
    {
        return s >= s0 - tol && s <= s1 + tol && t >= t0 - tol && t <= t1 + tol;
    }
};

inline double rect_min(const CellQuadratic& q, const Rect& r)
{
    double best = std::min({segment_min(q, r.s0, r.t0, r.s1, r.t0), segment_min(q, r.s0, r.t1, r.s1, r.t1),
                            segment_min(q, r.s0, r.t0, r.s0, r.t1), segment_min(q, r.s1, r.t0, r.s1, r.t1)});
    const double det = 4.0 * q.A * q.C - q.B * q.B;
    if (det > 1e-12 * std::max(1e-300, q.A * q.C)) {
        const double s = (-2.0 * q.C * q.D + q.B * q.E) / det;
        const double t = (-2.0 * q.A * q.E + q.B * q.D) / det;
        if (r.contains(s, t, 0.0)) best = std::min(best, q(s, t));
    }
    return best;
}

/// Intersections of the line alpha s + beta t + gamma = 0 with Q = thr.
inline void line_conic(const CellQuadratic& q, double alpha, double beta, double gamma, double thr,
                       std::vector<std::pair<double, double>>& out)
{
    if (alpha == 0.0 && beta == 0.0) return;
    double s0, t0, ds, dt;
    if (std::abs(beta) >= std::abs(alpha)) {
        s0 = 0.0, t0 = -gamma / beta, ds = 1.0, dt = -alpha / beta;
    } else {
        s0 = -gamma / alpha, t0 = 0.0, ds = -beta / alpha, dt = 1.0;
    }
    const auto r = restrict_line(q, s0, t0, s0 + ds, t0 + dt);
    for (double l : line_roots(r, thr)) out.emplace_back(s0 + l * ds, t0 + l * dt);
}

/// Minimum of w_s s + w_t t over {Q <= thr} inside the rectangle (nullopt if empty).
/// Only axis objectives are used, so the tangent candidates lie on the line where
/// the gradient is parallel to that axis.
inline std::optional<double> conic_extreme(const CellQuadratic& q, double thr, const Rect& r, double ws, double wt)
{
    std::vector<std::pair<double, double>> cand = {{r.s0, r.t0}, {r.s1, r.t0}, {r.s0, r.t1}, {r.s1, r.t1}};
    auto edge = [&](double s0, double t0, double s1, double t1) {
        for (double l : line_roots(restrict_line(q, s0, t0, s1, t1), thr))
            if (l >= -1e-12 && l <= 1 + 1e-12) {
                l = std::clamp(l, 0.0, 1.0);
                cand.emplace_back(s0 + l * (s1 - s0), t0 + l * (t1 - t0));
            }
    };
    edge(r.s0, r.t0, r.s1, r.t0);
    edge(r.s0, r.t1, r.s1, r.t1);
    edge(r.s0, r.t0, r.s0, r.t1);
    edge(r.s1, r.t0, r.s1, r.t1);
    if (ws != 0.0) line_conic(q, q.B, 2.0 * q.C, q.E, thr, cand); // dQ/dt = 0
    if (wt != 0.0) line_conic(q, 2.0 * q.A, q.B, q.D, thr, cand); // dQ/ds = 0
    // roots carry absolute rounding error in distance units, not in Q units
    const double norm = std::sqrt(std::max({q.A, q.C, q.F, 1.0}));
    const double lim = std::sqrt(thr) + 1e-12 * norm;
    std::optional<double> best;
    for (auto [s, t] : cand) {
        if (!r.contains(s, t)) continue;
        s = std::clamp(s, r.s0, r.s1);
        t = std::clamp(t, r.t0, r.t1);
        if (q(s, t) > lim * lim) continue;
        const double val = ws * s + wt * t;
        if (!best || val < *best) best = val;
    }
    return best;
}

} // namespace detail

/// Free part (separation >= delta) of one side of a cell, parameterized over [0,1].
enum class Side { Left, Right, Bottom, Top };

inline IntervalSet cell_free_intervals(const CellQuadratic& q, Side side, double delta)
{
    const double thr = forbidden_threshold(delta);
    switch (side) {
    case Side::Left: return detail::segment_free(q, thr, 0, 0, 0, 1);
    case Side::Right: return detail::segment_free(q, thr, 1, 0, 1, 1);
    case Side::Bottom: return detail::segment_free(q, thr, 0, 0, 1, 0);
    case Side::Top: break;
    }
    return detail::segment_free(q, thr, 0, 1, 1, 1);
}

/// Free part of an arbitrary axis-parallel line inside the cell; fixed_s selects
/// whether s (vertical line) or t (horizontal line) is held at `value`.
inline IntervalSet cell_line_free(const CellQuadratic& q, bool fixed_s, double value, double thr)
{
    return fixed_s ? detail::segment_free(q, thr, value, 0, value, 1) : detail::segment_free(q, thr, 0, value, 1, value);
}

namespace detail {

inline bool full_interval(const IntervalSet& s) { return s.size() == 1 && s.front().lo <= 0.0 && s.front().hi >= 1.0; }

/// Reachable part of the top side given reachable sets on the left and bottom.
/// A monotone path between two points avoids the convex forbidden region iff one
/// of the two axis-parallel L-shaped paths between them does, which reduces the
/// problem to a handful of extreme points of the region.
inline IntervalSet top_output(const CellQuadratic& q, double thr, const IntervalSet& left, const IntervalSet& bottom)
{
    if (left.empty() && bottom.empty()) return {};
    const Rect box;
    if (rect_min(q, box) >= thr) {
        if (!left.empty()) return IntervalSet{{0.0, 1.0}};
        return IntervalSet{{*bottom.min_value(), 1.0}};
    }
    auto line = [&](double s0, double t0, double s1, double t1) { return segment_free(q, thr, s0, t0, s1, t1); };
    const IntervalSet top_free = line(0, 1, 1, 1);
    const IntervalSet left_free = line(0, 0, 0, 1);
    const IntervalSet bottom_free = line(0, 0, 1, 0);
    const IntervalSet right_free = line(1, 0, 1, 1);
    const double sL = conic_extreme(q, thr, box, 1.0, 0.0).value_or(1.0);
    const double sR = -conic_extreme(q, thr, box, -1.0, 0.0).value_or(-0.0);

    // s values whose whole vertical line is free
    IntervalSet clear;
    if (full_interval(left_free)) clear.add({0.0, std::max(0.0, sL)});
    if (full_interval(right_free)) clear.add({std::min(1.0, sR), 1.0});

    IntervalSet res;
    if (!left.empty()) {
        if (!left_free.empty() && left_free.back().hi >= 1.0 && !top_free.empty() && top_free.front().lo <= 0.0 &&
            !left.intersect(left_free.back()).empty())
            res.add(top_free.front());
        const double c = *left.max_value();
        const Rect upper{0.0, 1.0, c, 1.0};
        if (rect_min(q, upper) >= thr) {
            res.add({0.0, 1.0});
        } else if (auto m = conic_extreme(q, thr, upper, 1.0, 0.0)) {
            // a blocked left column above c forces m = 0
            if (segment_min(q, 0, c, 0, 1) >= thr) res.add({0.0, std::max(0.0, *m)});
        }
        const double pt = *left.min_value();
        if (segment_min(q, 0, pt, 1, pt) >= thr) {
            const double lo = std::min(1.0, sR);
            res.add(clear.intersect(Interval{lo, 1.0}));
        }
    }
    for (const auto& J : bottom_free) {
        const auto m = bottom.intersect(J).min_value();
        if (m) res.add(clear.intersect(Interval{*m, J.hi}));
    }
    const IntervalSet bclear = bottom.intersect(clear);
    for (const auto& I : top_free) {
        const auto m = bclear.intersect(I).min_value();
        if (m) res.add({*m, I.hi});
    }
    return res.intersect(top_free);
}

} // namespace detail

struct CellOutput {
    IntervalSet right;
    IntervalSet top;
};

/// Exact reachable exit sets of one cell (monotone in both parameters).
inline CellOutput propagate_cell(const CellQuadratic& q, double delta, const IntervalSet& reach_left,
                                 const IntervalSet& reach_bottom)
{
    const double thr = forbidden_threshold(delta);
    CellOutput out;
    out.top = detail::top_output(q, thr, reach_left, reach_bottom);
    out.right = detail::top_output(q.transposed(), thr, reach_bottom, reach_left);
    return out;
}

/// True when the axis-parallel segment path p -> corner -> q stays free.
inline bool cell_path_free(const CellQuadratic& q, double thr, double s0, double t0, double sc, double tc, double s1,
                           double t1)
{
    const double tol = 1e-12 * std::max(1.0, std::abs(thr));
    return detail::segment_min(q, s0, t0, sc, tc) >= thr - tol && detail::segment_min(q, sc, tc, s1, t1) >= thr - tol;
}

} // namespace sdw

#endif
