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
#ifndef SDW_ONE_SIDED_HPP
#define SDW_ONE_SIDED_HPP

// Reachability where only Red's parameter must be monotone. Blue lives on a 1D
// domain (closed curve or graph) and moves at unbounded speed, so at every Red
// parameter it can occupy any point of its current free component.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "numeric.hpp"

namespace sdw {

/// Blue's domain as a graph: edges are parameterized over [0,1] from first to second vertex.
struct BlueDomain {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// How the Red-to-Blue distance behaves along a segment in either argument.
enum class FieldShape { Convex, Concave };

/// Blue's start: a point on an edge, or any free point.
struct BlueStart {
    bool anywhere = false;
    std::size_t edge = 0;
    double param = 0.0;
};

// A field provides, for Red parameter s in [0, columns()]:
//   const BlueDomain& domain() const;
//   std::size_t columns() const;
//   FieldShape shape() const;
//   double vertex_distance(double s, std::size_t v) const;
//   double edge_extreme(double s, std::size_t e) const;   // min (convex) or max (concave) over the edge
//   IntervalSet edge_free(double s, std::size_t e, double delta) const;

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

struct Snapshot {
    std::vector<char> vfree;
    std::vector<std::vector<Interval>> pieces;
    std::vector<std::size_t> base; // node id of the first piece of each edge
    std::vector<std::size_t> comp; // component root per node
    std::size_t nodes = 0;
};

inline constexpr double kTouch = 1e-9;

template <class Field>
Snapshot take_snapshot(const Field& f, double s, double delta)
{
    const auto& dom = f.domain();
    Snapshot sn;
    const double tol = 1e-10 * (1.0 + delta);
    sn.vfree.resize(dom.vertices);
    for (std::size_t v = 0; v < dom.vertices; ++v) sn.vfree[v] = f.vertex_distance(s, v) >= delta - tol;
    sn.pieces.resize(dom.edges.size());
    sn.base.resize(dom.edges.size());
    sn.nodes = dom.vertices;
    for (std::size_t e = 0; e < dom.edges.size(); ++e) {
        sn.base[e] = sn.nodes;
        for (const auto& iv : f.edge_free(s, e, delta)) sn.pieces[e].push_back(iv);
        sn.nodes += sn.pieces[e].size();
    }
    UnionFind uf(sn.nodes);
    for (std::size_t e = 0; e < dom.edges.size(); ++e) {
        const auto [u, v] = dom.edges[e];
        for (std::size_t k = 0; k < sn.pieces[e].size(); ++k) {
            const auto& iv = sn.pieces[e][k];
            if (iv.lo <= kTouch) {
                sn.vfree[u] = 1;
                uf.unite(sn.base[e] + k, u);
            }
            if (iv.hi >= 1.0 - kTouch) {
                sn.vfree[v] = 1;
                uf.unite(sn.base[e] + k, v);
            }
        }
    }
    sn.comp.resize(sn.nodes);
    for (std::size_t x = 0; x < sn.nodes; ++x) sn.comp[x] = uf.find(x);
    return sn;
}

/// Pairs (node in mid snapshot, node in event snapshot) whose sets touch in the
/// limit between the two times. Between events the structure is fixed, so
/// pieces are tracked through the vertices they contain.
inline std::vector<std::pair<std::size_t, std::size_t>> links(const BlueDomain& dom, const Snapshot& mid,
                                                                const Snapshot& ev)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < dom.vertices; ++v)
        if (mid.vfree[v] && ev.vfree[v]) out.emplace_back(v, v);
    for (std::size_t e = 0; e < dom.edges.size(); ++e) {
        const auto [u, v] = dom.edges[e];
        for (std::size_t k = 0; k < mid.pieces[e].size(); ++k) {
            const auto& iv = mid.pieces[e][k];
            const std::size_t node = mid.base[e] + k;
            const bool tu = iv.lo <= kTouch, tv = iv.hi >= 1.0 - kTouch;
            if (tu && ev.vfree[u]) out.emplace_back(node, u);
            if (tv && ev.vfree[v]) out.emplace_back(node, v);
            if (!tu && !tv)
                for (std::size_t j = 0; j < ev.pieces[e].size(); ++j) out.emplace_back(node, ev.base[e] + j);
        }
    }
    return out;
}

/// Roots of f(s) = level on [a, b] for f convex (or concave when `concave`),
/// plus the extremum location.
template <class F>
void shape_events(F&& f, double a, double b, double level, bool concave, std::vector<double>& out)
{
    auto g = [&](double s) { return concave ? -f(s) : f(s); };
    const double lv = concave ? -level : level;
    const auto [xm, fm] = golden_min(g, a, b, 90);
    out.push_back(xm);
    if (fm >= lv) return;
    auto above = [&](double s) { return g(s) >= lv; };
    if (above(a)) out.push_back(bisect_boundary(above, a, xm));
    if (above(b)) out.push_back(bisect_boundary(above, b, xm));
}

} // namespace detail

/// Event values of the Red parameter where the free structure can change.
template <class Field>
std::vector<double> one_sided_events(const Field& f, double delta)
{
    const auto& dom = f.domain();
    const bool concave = f.shape() == FieldShape::Concave;
    std::vector<double> ev;
    for (std::size_t k = 0; k <= f.columns(); ++k) ev.push_back(static_cast<double>(k));
    for (std::size_t k = 0; k < f.columns(); ++k) {
        const double a = static_cast<double>(k), b = a + 1.0;
        for (std::size_t v = 0; v < dom.vertices; ++v)
            detail::shape_events([&](double s) { return f.vertex_distance(s, v); }, a, b, delta, concave, ev);
        for (std::size_t e = 0; e < dom.edges.size(); ++e)
            detail::shape_events([&](double s) { return f.edge_extreme(s, e); }, a, b, delta, concave, ev);
    }
    std::sort(ev.begin(), ev.end());
    std::vector<double> uniq;
    for (double x : ev)
        if (uniq.empty() || x - uniq.back() > 1e-12) uniq.push_back(x);
    return uniq;
}

/// True iff Blue, starting at `start` (or anywhere free), can stay at distance
/// >= delta while Red's parameter sweeps [0, columns()].
template <class Field>
bool reachability_one_sided(const Field& f, const BlueStart& start, double delta)
{
    const auto& dom = f.domain();
    const auto events = one_sided_events(f, delta);
    detail::Snapshot cur = detail::take_snapshot(f, events.front(), delta);
    std::vector<char> reach(cur.nodes, 0);
    if (start.anywhere) {
        for (std::size_t x = 0; x < cur.nodes; ++x)
            if (x >= dom.vertices || cur.vfree[x]) reach[cur.comp[x]] = 1;
    } else {
        if (start.edge >= dom.edges.size()) return false;
        bool found = false;
        for (std::size_t k = 0; k < cur.pieces[start.edge].size(); ++k) {
            const auto& iv = cur.pieces[start.edge][k];
            if (start.param >= iv.lo - detail::kTouch && start.param <= iv.hi + detail::kTouch) {
                reach[cur.comp[cur.base[start.edge] + k]] = 1;
                found = true;
            }
        }
        if (!found) return false;
    }
    auto any_reach = [](const detail::Snapshot& sn, const std::vector<char>& r) {
        for (std::size_t x = 0; x < sn.nodes; ++x)
            if (r[sn.comp[x]]) return true;
        return false;
    };
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        const detail::Snapshot mid = detail::take_snapshot(f, 0.5 * (events[i] + events[i + 1]), delta);
        const detail::Snapshot next = detail::take_snapshot(f, events[i + 1], delta);
        std::vector<char> rmid(mid.nodes, 0), rnext(next.nodes, 0);
        for (auto [m, e] : detail::links(dom, mid, cur))
            if (reach[cur.comp[e]]) rmid[mid.comp[m]] = 1;
        for (auto [m, e] : detail::links(dom, mid, next))
            if (rmid[mid.comp[m]]) rnext[next.comp[e]] = 1;
        cur = std::move(next);
        reach = std::move(rnext);
        if (!any_reach(cur, reach)) return false;
    }
    return any_reach(cur, reach);
}

} // namespace sdw

#endif
