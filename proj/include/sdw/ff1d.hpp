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
#ifndef SDW_FF1D_HPP
#define SDW_FF1D_HPP

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "geom.hpp"
#include "schedule.hpp"

namespace sdw {

using Curve1D = std::vector<double>;

/// A pair of 1D curves where Blue starts at its rightmost point and Red at its
/// leftmost point. `red_index`/`blue_index` map local vertices back to the input
/// (0-based).
struct CanonicalPair1D {
    Curve1D red;
    Curve1D blue;
    std::vector<std::size_t> red_index;
    std::vector<std::size_t> blue_index;
};

struct Reduction1D {
    bool no = false;
    bool reflected = false;
    double b_max = 0.0;
    double r_min = 0.0;
    std::size_t b_max_index = 0; // 1-based, first occurrence
    std::size_t r_min_index = 0; // 1-based, first occurrence
    CanonicalPair1D forward;
    CanonicalPair1D backward;
};

/// Splits a decision instance at Blue's rightmost and Red's leftmost vertex
/// after orienting so that Red starts left of Blue and shifting Blue by -delta.
inline Reduction1D reduce_to_canonical(const Curve1D& red, const Curve1D& blue, double delta)
{
    if (red.empty() || blue.empty()) throw InputError("ff1d: curves must be non-empty");
    Reduction1D out;
    if (red.front() == blue.front()) {
        out.no = true;
        return out;
    }
    out.reflected = red.front() > blue.front();
    const double sign = out.reflected ? -1.0 : 1.0;
    Curve1D r(red.size()), b(blue.size());
    for (std::size_t i = 0; i < red.size(); ++i) r[i] = sign * red[i];
    for (std::size_t j = 0; j < blue.size(); ++j) b[j] = sign * blue[j] - delta;
    if (b.front() - r.front() <= 0.0) {
        out.no = true;
        return out;
    }
    const auto ib = static_cast<std::size_t>(std::max_element(b.begin(), b.end()) - b.begin());
    const auto ir = static_cast<std::size_t>(std::min_element(r.begin(), r.end()) - r.begin());
    out.b_max = b[ib];
    out.r_min = r[ir];
    out.b_max_index = ib + 1;
    out.r_min_index = ir + 1;
    const bool red_clear = std::all_of(r.begin(), r.end(), [&](double x) { return x < out.b_max; });
    const bool blue_clear = std::all_of(b.begin(), b.end(), [&](double x) { return x > out.r_min; });
    if (!red_clear || !blue_clear) {
        out.no = true;
        return out;
    }
    for (std::size_t i = ir; i < r.size(); ++i) {
        out.forward.red.push_back(r[i]);
        out.forward.red_index.push_back(i);
    }
    for (std::size_t j = ib; j < b.size(); ++j) {
        out.forward.blue.push_back(b[j]);
        out.forward.blue_index.push_back(j);
    }
    for (std::size_t i = ir + 1; i-- > 0;) {
        out.backward.red.push_back(r[i]);
        out.backward.red_index.push_back(i);
    }
    for (std::size_t j = ib + 1; j-- > 0;) {
        out.backward.blue.push_back(b[j]);
        out.backward.blue_index.push_back(j);
    }
    return out;
}

namespace detail {

/// Solves a canonical pair (Blue must stay strictly right of Red). On success
/// `path` holds (red vertex, blue vertex) waypoints in local indices, each leg
/// moving a single agent.
inline bool solve_canonical_1d(const CanonicalPair1D& c, std::vector<std::pair<std::size_t, std::size_t>>& path)
{
    const auto& r = c.red;
    const auto& b = c.blue;
    std::size_t r0 = 0, b0 = 0;
    path.clear();
    path.emplace_back(0, 0);
    for (;;) {
        const double b_min = *std::min_element(b.begin() + b0, b.end());
        const double r_max = *std::max_element(r.begin() + r0, r.end());
        if (b_min <= r[r0] || r_max >= b[b0]) return false;
        if (b_min > r_max || b.back() > r_max) {
            path.emplace_back(r0, b.size() - 1);
            path.emplace_back(r.size() - 1, b.size() - 1);
            return true;
        }
        std::size_t bp = b0;
        for (std::size_t j = b0; j < b.size(); ++j)
            if (b[j] > r_max) bp = j;
        std::size_t last = r0;
        for (std::size_t i = r0; i < r.size(); ++i)
            if (r[i] == r_max) last = i;
        const auto rm = static_cast<std::size_t>(std::min_element(r.begin() + last, r.end()) - r.begin());
        path.emplace_back(r0, bp);
        path.emplace_back(rm, bp);
        r0 = rm;
        b0 = bp;
    }
}

} // namespace detail

/// Decides whether Red and Blue can traverse their curves keeping separation
/// strictly greater than delta. The witness uses Red as `red` and one blue
/// parameter.
inline Decision decide_1d(const Curve1D& red, const Curve1D& blue, double delta, bool want_witness = false)
{
    if (red.empty() || blue.empty()) throw InputError("ff1d: curves must be non-empty");
    if (delta < 0.0) {
        // any traversal keeps distance >= 0 > delta
        Decision d{true, std::nullopt};
        if (want_witness) {
            const double n = static_cast<double>(red.size()), m = static_cast<double>(blue.size());
            d.witness = Schedule::from_waypoints({{1.0, {1.0}}, {n, {1.0}}, {n, {m}}}, "ff1d");
        }
        return d;
    }
    const Reduction1D red1 = reduce_to_canonical(red, blue, delta);
    if (red1.no) return {};
    std::vector<std::pair<std::size_t, std::size_t>> fwd, bwd;
    if (!detail::solve_canonical_1d(red1.backward, bwd)) return {};
    if (!detail::solve_canonical_1d(red1.forward, fwd)) return {};
    Decision d{true, std::nullopt};
    if (!want_witness) return d;
    std::vector<std::pair<double, std::vector<double>>> pts;
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
        const double ri = static_cast<double>(red1.backward.red_index[it->first]) + 1.0;
        const double bi = static_cast<double>(red1.backward.blue_index[it->second]) + 1.0;
        pts.push_back({ri, {bi}});
    }
    for (const auto& [i, j] : fwd) {
        const double ri = static_cast<double>(red1.forward.red_index[i]) + 1.0;
        const double bi = static_cast<double>(red1.forward.blue_index[j]) + 1.0;
        pts.push_back({ri, {bi}});
    }
    d.witness = Schedule::from_waypoints(pts, "ff1d");
    return d;
}

/// All candidate values for the supremum separation: 0 and every vertex pair
/// distance, sorted and unique.
inline std::vector<double> ff1d_candidates(const Curve1D& red, const Curve1D& blue)
{
    std::vector<double> c{0.0};
    for (double r : red)
        for (double b : blue) c.push_back(std::abs(b - r));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

/// Supremum separation over all coordinated traversals of two 1D curves.
inline double ff_value_1d(const Curve1D& red, const Curve1D& blue)
{
    const auto cand = ff1d_candidates(red, blue);
    double gap = 1e-9;
    for (std::size_t i = 1; i < cand.size(); ++i) gap = std::min(gap, 0.25 * (cand[i] - cand[i - 1]));
    // value >= c iff separation > c - gap is feasible, since no candidate lies in (c - gap, c)
    auto passes = [&](std::size_t k) { return k == 0 || decide_1d(red, blue, cand[k] - gap).yes; };
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if (passes(mid)) lo = mid;
        else hi = mid - 1;
    }
    return cand[lo];
}

namespace detail {

/// Merges a monotone path over coordinates (..., x) with a monotone path over
/// (x, z) into one path over (..., x, z). Both paths must span the same x range.
inline std::vector<std::vector<double>> merge_chain(const std::vector<std::vector<double>>& p,
                                                    const std::vector<std::pair<double, double>>& q)
{
    constexpr double tol = 1e-12;
    std::vector<std::vector<double>> out;
    std::size_t i = 0, j = 0;
    auto emit = [&](std::vector<double> head, double z) {
        head.push_back(z);
        out.push_back(std::move(head));
    };
    std::vector<double> cur = p[0];
    double z = q[0].second;
    emit(cur, z);
    while (i + 1 < p.size() || j + 1 < q.size()) {
        const double x = cur.back();
        if (i + 1 < p.size() && std::abs(p[i + 1].back() - x) <= tol) {
            cur = p[++i];
            cur.back() = x;
        } else if (j + 1 < q.size() && std::abs(q[j + 1].first - x) <= tol) {
            z = q[++j].second;
        } else {
            const double xp = i + 1 < p.size() ? p[i + 1].back() : x;
            const double xq = j + 1 < q.size() ? q[j + 1].first : x;
            const double nx = std::min(i + 1 < p.size() ? xp : xq, j + 1 < q.size() ? xq : xp);
            if (nx <= x) break;
            const double fp = (nx - p[i].back()) / (p[i + 1].back() - p[i].back());
            cur = lerp_vec(p[i], p[i + 1], fp);
            cur.back() = nx;
            const double fq = (nx - q[j].first) / (q[j + 1].first - q[j].first);
            z = q[j].second + fq * (q[j + 1].second - q[j].second);
            if (std::abs(xp - nx) <= tol) ++i;
            if (std::abs(xq - nx) <= tol) ++j;
        }
        emit(cur, z);
    }
    return out;
}

} // namespace detail

/// k agents on the line, ordered left to right by start position; each must keep
/// separation > delta from its neighbours. Agents cannot pass each other, so the
/// instance is feasible iff every adjacent pair is, and pair witnesses share the
/// middle agent's parameter and can be merged.
inline Decision decide_1d_k_agents(const std::vector<Curve1D>& curves, double delta, bool want_witness = false)
{
    if (curves.empty()) throw InputError("ff1d: no agents");
    for (const auto& c : curves)
        if (c.empty()) throw InputError("ff1d: curves must be non-empty");
    if (curves.size() == 1) {
        Decision d{true, std::nullopt};
        if (want_witness)
            d.witness = Schedule::from_waypoints({{1.0, {}}, {static_cast<double>(curves[0].size()), {}}}, "ff1d-k");
        return d;
    }
    std::vector<Schedule> pair_witness;
    for (std::size_t i = 0; i + 1 < curves.size(); ++i) {
        if (!(curves[i + 1].front() - curves[i].front() > delta)) return {};
        auto d = decide_1d(curves[i], curves[i + 1], delta, want_witness);
        if (!d.yes) return {};
        if (want_witness) pair_witness.push_back(std::move(*d.witness));
    }
    Decision out{true, std::nullopt};
    if (!want_witness) return out;
    std::vector<std::vector<double>> chain;
    for (const auto& bp : pair_witness[0].breakpoints) chain.push_back({bp.red, bp.blue[0]});
    for (std::size_t k = 1; k < pair_witness.size(); ++k) {
        std::vector<std::pair<double, double>> q;
        for (const auto& bp : pair_witness[k].breakpoints) q.emplace_back(bp.red, bp.blue[0]);
        chain = detail::merge_chain(chain, q);
    }
    std::vector<std::pair<double, std::vector<double>>> pts;
    for (const auto& v : chain) pts.push_back({v[0], std::vector<double>(v.begin() + 1, v.end())});
    out.witness = Schedule::from_waypoints(pts, "ff1d-k");
    return out;
}

} // namespace sdw

#endif
