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
#ifndef SDW_FF_HPP
#define SDW_FF_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "freespace.hpp"
#include "geom.hpp"
#include "numeric.hpp"
#include "schedule.hpp"

namespace sdw {

namespace detail {

/// Curves with a single vertex get a zero-length edge so that the diagram has cells.
inline PolylineCurve with_edge(const PolylineCurve& c)
{
    if (c.size() > 1) return c;
    return PolylineCurve(c.dim(), {c[0], c[0]});
}

struct Diagram {
    std::size_t ni = 0, nj = 0; // cell counts
    std::vector<CellQuadratic> quad;
    std::vector<IntervalSet> in_left, in_bottom;
    std::vector<CellOutput> out;
    std::size_t id(std::size_t i, std::size_t j) const { return i * nj + j; }
};

} // namespace detail

/// Decides whether the curves admit a traversal with separation >= delta at all
/// times (both parameters monotone).
inline Decision decide_ff(const PolylineCurve& red_in, const PolylineCurve& blue_in, double delta,
                          bool want_witness = false)
{
    if (red_in.dim() != blue_in.dim()) throw InputError("ff: dimension mismatch");
    const PolylineCurve red = detail::with_edge(red_in);
    const PolylineCurve blue = detail::with_edge(blue_in);
    const double thr = forbidden_threshold(delta);
    if (dist_sqr(red[0], blue[0]) < thr) return {};
    if (dist_sqr(red[red.size() - 1], blue[blue.size() - 1]) < thr) return {};

    detail::Diagram g;
    g.ni = red.size() - 1;
    g.nj = blue.size() - 1;
    const std::size_t cells = g.ni * g.nj;
    g.quad.resize(cells);
    g.in_left.resize(cells);
    g.in_bottom.resize(cells);
    g.out.resize(cells);
    for (std::size_t i = 0; i < g.ni; ++i)
        for (std::size_t j = 0; j < g.nj; ++j)
            g.quad[g.id(i, j)] = CellQuadratic::from_segments(red[i], red[i + 1], blue[j], blue[j + 1]);

    // global left and bottom boundaries: the free prefix that starts at the origin
    bool open = true;
    for (std::size_t j = 0; j < g.nj && open; ++j) {
        const auto fr = cell_free_intervals(g.quad[g.id(0, j)], Side::Left, delta);
        if (fr.empty() || fr.front().lo > 0.0) break;
        g.in_left[g.id(0, j)].add({0.0, fr.front().hi});
        open = fr.front().hi >= 1.0;
    }
    open = true;
    for (std::size_t i = 0; i < g.ni && open; ++i) {
        const auto fr = cell_free_intervals(g.quad[g.id(i, 0)], Side::Bottom, delta);
        if (fr.empty() || fr.front().lo > 0.0) break;
        g.in_bottom[g.id(i, 0)].add({0.0, fr.front().hi});
        open = fr.front().hi >= 1.0;
    }
    for (std::size_t i = 0; i < g.ni; ++i) {
        for (std::size_t j = 0; j < g.nj; ++j) {
            const std::size_t c = g.id(i, j);
            if (i > 0) g.in_left[c] = g.out[g.id(i - 1, j)].right;
            if (j > 0) g.in_bottom[c] = g.out[g.id(i, j - 1)].top;
            if (g.in_left[c].empty() && g.in_bottom[c].empty()) continue;
            g.out[c] = propagate_cell(g.quad[c], delta, g.in_left[c], g.in_bottom[c]);
        }
    }
    const auto& last = g.out[g.id(g.ni - 1, g.nj - 1)];
    const bool yes = last.top.contains(1.0, 1e-12) || last.right.contains(1.0, 1e-12);
    if (!yes) return {};
    Decision d{true, std::nullopt};
    if (!want_witness) return d;

    // backtrack from the final corner through stored entry sets
    std::vector<std::pair<double, double>> rev; // global (red, blue) parameters, 1-based
    std::size_t i = g.ni - 1, j = g.nj - 1;
    double qs = 1.0, qt = 1.0;
    for (;;) {
        const std::size_t c = g.id(i, j);
        const auto& q = g.quad[c];
        const double gi = static_cast<double>(i) + 1.0, gj = static_cast<double>(j) + 1.0;
        rev.emplace_back(gi + qs, gj + qt);
        struct Cand {
            bool from_left;
            double v;
        };
        std::vector<Cand> cands;
        auto extra = [&](const IntervalSet& set, double lim, bool from_left) {
            std::vector<double> keys{lim, 0.0, 1.0};
            const auto ext = [&](double ws, double wt) { return detail::conic_extreme(q, thr, {}, ws, wt); };
            if (from_left) {
                if (auto v = ext(0.0, 1.0)) keys.push_back(*v);
                if (auto v = ext(0.0, -1.0)) keys.push_back(-*v);
            } else {
                if (auto v = ext(1.0, 0.0)) keys.push_back(*v);
                if (auto v = ext(-1.0, 0.0)) keys.push_back(-*v);
            }
            for (const auto& iv : set) {
                if (iv.lo > lim + 1e-12) continue;
                const double hi = std::min(iv.hi, lim);
                cands.push_back({from_left, hi});
                cands.push_back({from_left, iv.lo});
                for (double k : keys)
                    if (k >= iv.lo && k <= hi) cands.push_back({from_left, k});
            }
        };
        extra(g.in_left[c], qt, true);
        extra(g.in_bottom[c], qs, false);
        bool found = false;
        Cand pick{};
        double cs = 0, ct = 0;
        for (const auto& cd : cands) {
            const double ps = cd.from_left ? 0.0 : cd.v;
            const double pt = cd.from_left ? cd.v : 0.0;
            if (cell_path_free(q, thr, ps, pt, qs, pt, qs, qt)) {
                found = true, pick = cd, cs = qs, ct = pt;
            } else if (cell_path_free(q, thr, ps, pt, ps, qt, qs, qt)) {
                found = true, pick = cd, cs = ps, ct = qt;
            }
            if (found) break;
        }
        if (!found) {
            if (cands.empty()) break;
            pick = cands.front();
            cs = pick.from_left ? 0.0 : pick.v;
            ct = qt;
        }
        const double ps = pick.from_left ? 0.0 : pick.v;
        const double pt = pick.from_left ? pick.v : 0.0;
        rev.emplace_back(gi + cs, gj + ct);
        rev.emplace_back(gi + ps, gj + pt);
        if (pick.from_left) {
            if (i == 0) break;
            --i;
            qs = 1.0;
            qt = pt;
        } else {
            if (j == 0) break;
            --j;
            qs = ps;
            qt = 1.0;
        }
    }
    rev.emplace_back(1.0, 1.0);
    std::reverse(rev.begin(), rev.end());
    const double rn = static_cast<double>(red_in.size()), bn = static_cast<double>(blue_in.size());
    std::vector<std::pair<double, std::vector<double>>> pts;
    for (auto [r, b] : rev) pts.push_back({std::min(r, rn), {std::min(b, bn)}});
    d.witness = Schedule::from_waypoints(pts, "ff");
    return d;
}

struct CriticalValue {
    double value = 0.0;
    std::string tag; // "i", "ii" or "iii"
};

/// Candidate values where the decision can change: endpoint pairs, vertex pairs
/// and vertex-edge distances, and for each edge f of one curve and edges e1, e2
/// of the other the value min over p in f of max(d(p,e1), d(p,e2)).
inline std::vector<CriticalValue> critical_values(const PolylineCurve& red_in, const PolylineCurve& blue_in)
{
    if (red_in.dim() != blue_in.dim()) throw InputError("ff: dimension mismatch");
    const PolylineCurve red = detail::with_edge(red_in);
    const PolylineCurve blue = detail::with_edge(blue_in);
    std::vector<CriticalValue> out;
    out.push_back({dist(red[0], blue[0]), "i"});
    out.push_back({dist(red[red.size() - 1], blue[blue.size() - 1]), "i"});
    auto vertex_edge = [&](const PolylineCurve& a, const PolylineCurve& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j + 1 < b.size(); ++j) out.push_back({point_segment_distance(a[i], b[j], b[j + 1]), "ii"});
    };
    vertex_edge(red, blue);
    vertex_edge(blue, red);
    for (std::size_t i = 0; i < red.size(); ++i)
        for (std::size_t j = 0; j < blue.size(); ++j) out.push_back({dist(red[i], blue[j]), "ii"});
    auto triples = [&](const PolylineCurve& a, const PolylineCurve& b) {
        for (std::size_t f = 0; f + 1 < a.size(); ++f) {
            for (std::size_t e1 = 0; e1 + 1 < b.size(); ++e1) {
                for (std::size_t e2 = e1 + 1; e2 + 1 < b.size(); ++e2) {
                    auto h = [&](double x) {
                        const Point p = lerp(a[f], a[f + 1], x);
                        return std::max(point_segment_distance(p, b[e1], b[e1 + 1]),
                                        point_segment_distance(p, b[e2], b[e2 + 1]));
                    };
                    out.push_back({golden_min(h, 0.0, 1.0, 100).second, "iii"});
                }
            }
        }
    };
    triples(blue, red);
    triples(red, blue);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
    std::vector<CriticalValue> uniq;
    for (auto& c : out)
        if (uniq.empty() || c.value - uniq.back().value > kEpsGeom) uniq.push_back(std::move(c));
    return uniq;
}

/// Largest delta for which decide(delta) holds, given sorted candidates and a
/// decision predicate that is monotone in delta; ties resolve to YES.
template <class Decide>
double optimize_over_candidates(std::vector<double> cand, Decide&& decide)
{
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    if (cand.empty() || !decide(cand.front())) {
        double lo = 0.0, hi = cand.empty() ? 1.0 : cand.front();
        if (!decide(lo)) return 0.0;
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            (decide(mid) ? lo : hi) = mid;
        }
        return lo;
    }
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if (decide(cand[mid])) lo = mid;
        else hi = mid - 1;
    }
    const double v = cand[lo];
    if (lo + 1 == cand.size() || !decide(v + 1e-9)) return v;
    double a = v, b = cand[lo + 1];
    while (b - a > 1e-10) {
        const double mid = 0.5 * (a + b);
        (decide(mid) ? a : b) = mid;
    }
    return a;
}

/// Supremum over traversals of the minimum separation (continuous).
inline double ff_value(const PolylineCurve& red, const PolylineCurve& blue)
{
    const double ub = std::min(dist(red[0], blue[0]), dist(red[red.size() - 1], blue[blue.size() - 1]));
    std::vector<double> cand;
    for (const auto& c : critical_values(red, blue))
        if (c.value <= ub + kEpsGeom) cand.push_back(c.value);
    cand.push_back(ub + 1.0); // always NO, caps the search
    return optimize_over_candidates(cand, [&](double d) { return decide_ff(red, blue, d).yes; });
}

} // namespace sdw

#endif
