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
#ifndef SDW_TREE_HPP
#define SDW_TREE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "geom.hpp"
#include "schedule.hpp"

namespace sdw {

struct TreeEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    double length = 1.0;
    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

class WeightedTree {
public:
    struct Arc {
        std::size_t to;
        double length;
    };

    WeightedTree() : WeightedTree(1, {}) {}

    WeightedTree(std::size_t n, std::vector<TreeEdge> edges) : n_(n), edges_(std::move(edges)), adj_(n)
    {
        if (n == 0) throw InputError("tree: needs at least one vertex");
        if (edges_.size() != n - 1) throw InputError("tree: expected n-1 edges");
        for (const auto& e : edges_) {
            if (e.u >= n || e.v >= n) throw InputError("tree: vertex out of range");
            if (e.u == e.v) throw InputError("tree: self loop");
            if (!(e.length > 0.0) || !std::isfinite(e.length)) throw InputError("tree: edge lengths must be positive");
            adj_[e.u].push_back({e.v, e.length});
            adj_[e.v].push_back({e.u, e.length});
        }
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& a : adj_[x])
                if (!seen[a.to]) seen[a.to] = 1, ++count, stack.push_back(a.to);
        }
        if (count != n) throw InputError("tree: not connected");
        for (auto& list : adj_)
            std::sort(list.begin(), list.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });
    }

    std::size_t size() const { return n_; }
    const std::vector<TreeEdge>& edges() const { return edges_; }
    const std::vector<Arc>& neighbors(std::size_t v) const { return adj_.at(v); }

    /// Length of edge uv, or a negative value when u and v are not adjacent.
    double edge_length(std::size_t u, std::size_t v) const
    {
        for (const auto& a : adj_.at(u))
            if (a.to == v) return a.length;
        return -1.0;
    }

    WeightedTree scaled(double lambda) const
    {
        auto e = edges_;
        for (auto& x : e) x.length *= lambda;
        return WeightedTree(n_, std::move(e));
    }

private:
    std::size_t n_;
    std::vector<TreeEdge> edges_;
    std::vector<std::vector<Arc>> adj_;
};

struct TreeSearch {
    std::vector<double> dist;
    std::vector<std::size_t> parent; // parent of the source is itself
};

inline TreeSearch tree_search(const WeightedTree& t, std::size_t s)
{
    TreeSearch out{std::vector<double>(t.size(), -1.0), std::vector<std::size_t>(t.size(), s)};
    out.dist.at(s) = 0.0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (const auto& a : t.neighbors(x)) {
            if (out.dist[a.to] >= 0.0) continue;
            out.dist[a.to] = out.dist[x] + a.length;
            out.parent[a.to] = x;
            stack.push_back(a.to);
        }
    }
    return out;
}

/// Vertex path from s to v (inclusive) in a search rooted at s.
inline std::vector<std::size_t> tree_path(const TreeSearch& s, std::size_t v)
{
    std::vector<std::size_t> p{v};
    while (s.parent[p.back()] != p.back()) p.push_back(s.parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
}

struct Diameter {
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<std::size_t> path;
    double length = 0.0;
};

inline Diameter tree_diameter(const WeightedTree& t)
{
    auto far = [](const TreeSearch& s) {
        return static_cast<std::size_t>(std::max_element(s.dist.begin(), s.dist.end()) - s.dist.begin());
    };
    Diameter d;
    d.a = far(tree_search(t, 0));
    const auto sa = tree_search(t, d.a);
    d.b = far(sa);
    d.length = sa.dist[d.b];
    d.path = tree_path(sa, d.b);
    return d;
}

struct TwoOutlierResult {
    std::size_t center = 0;
    double radius = 0.0;
    std::size_t a = 0, b = 0, c = 0; // equal to center when missing
    double da = 0.0, db = 0.0;       // |center a|, |center b|
    std::size_t branches = 0;        // components of T minus center
};

namespace detail {

struct Branch {
    double depth;
    std::size_t vertex;
};

inline bool branch_before(const Branch& x, const Branch& y)
{
    return x.depth != y.depth ? x.depth > y.depth : x.vertex < y.vertex;
}

inline TwoOutlierResult outlier_from_branches(std::size_t r, std::vector<Branch> br)
{
    std::sort(br.begin(), br.end(), branch_before);
    TwoOutlierResult out;
    out.center = out.a = out.b = out.c = r;
    out.branches = br.size();
    if (br.size() > 0) out.a = br[0].vertex, out.da = br[0].depth;
    if (br.size() > 1) out.b = br[1].vertex, out.db = br[1].depth;
    if (br.size() > 2) out.c = br[2].vertex, out.radius = br[2].depth;
    return out;
}

} // namespace detail

/// Furthest vertex of each component of T minus r; the radius is the third
/// largest of these depths.
inline TwoOutlierResult two_outlier_radius(const WeightedTree& t, std::size_t r)
{
    if (r >= t.size()) throw InputError("tree: vertex out of range");
    std::vector<detail::Branch> br;
    std::vector<double> dist(t.size(), -1.0);
    dist[r] = 0.0;
    for (const auto& first : t.neighbors(r)) {
        detail::Branch best{first.length, first.to};
        dist[first.to] = first.length;
        std::vector<std::size_t> stack{first.to};
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            if (detail::branch_before({dist[x], x}, best)) best = {dist[x], x};
            for (const auto& a : t.neighbors(x)) {
                if (dist[a.to] >= 0.0) continue;
                dist[a.to] = dist[x] + a.length;
                stack.push_back(a.to);
            }
        }
        br.push_back(best);
    }
    return detail::outlier_from_branches(r, std::move(br));
}

/// 2-outlier results for every vertex in linear time (rerooting).
inline std::vector<TwoOutlierResult> two_outlier_all(const WeightedTree& t)
{
    const std::size_t n = t.size();
    const auto s = tree_search(t, 0);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return s.dist[x] < s.dist[y]; });
    // down[v]: furthest vertex in the subtree of v, measured from v
    std::vector<detail::Branch> down(n);
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t v = order[i];
        down[v] = {0.0, v};
        for (const auto& a : t.neighbors(v)) {
            if (a.to == s.parent[v] && v != 0) continue;
            const detail::Branch c{down[a.to].depth + a.length, down[a.to].vertex};
            if (detail::branch_before(c, down[v])) down[v] = c;
        }
    }
    // up[v]: furthest vertex outside the subtree of v, measured from v
    std::vector<detail::Branch> up(n, {-1.0, 0});
    std::vector<std::vector<detail::Branch>> branches(n);
    for (const std::size_t v : order) {
        auto& br = branches[v];
        if (v != 0) br.push_back(up[v]);
        for (const auto& a : t.neighbors(v)) {
            if (v != 0 && a.to == s.parent[v]) continue;
            br.push_back({down[a.to].depth + a.length, down[a.to].vertex});
        }
        std::vector<detail::Branch> top = br;
        std::partial_sort(top.begin(), top.begin() + std::min<std::size_t>(2, top.size()), top.end(),
                          detail::branch_before);
        for (const auto& a : t.neighbors(v)) {
            if (v != 0 && a.to == s.parent[v]) continue;
            // best branch of v other than the one through a.to, with v itself as fallback
            detail::Branch best{0.0, v};
            for (std::size_t k = 0; k < std::min<std::size_t>(2, top.size()); ++k) {
                const bool same = top[k].depth == down[a.to].depth + a.length && top[k].vertex == down[a.to].vertex;
                if (!same) {
                    if (detail::branch_before(top[k], best)) best = top[k];
                    break;
                }
            }
            up[a.to] = {best.depth + a.length, best.vertex};
        }
    }
    std::vector<TwoOutlierResult> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) out.push_back(detail::outlier_from_branches(v, branches[v]));
    return out;
}

struct TreeSdwResult {
    double value = 0.0;
    TwoOutlierResult outlier;
};

/// Best 2-outlier radius among the vertices of a diameter path.
inline TreeSdwResult tree_sdw(const WeightedTree& t)
{
    const auto all = two_outlier_all(t);
    const auto d = tree_diameter(t);
    TreeSdwResult out;
    out.outlier = all[d.path.front()];
    for (const std::size_t v : d.path)
        if (all[v].radius > out.outlier.radius) out.outlier = all[v];
    out.value = out.outlier.radius;
    return out;
}

/// Closed depth-first tour from `root`, children in increasing vertex order.
inline std::vector<std::size_t> default_tour(const WeightedTree& t, std::size_t root = 0)
{
    if (root >= t.size()) throw InputError("tree: vertex out of range");
    std::vector<std::size_t> tour{root};
    struct Frame {
        std::size_t v, parent, next;
    };
    std::vector<Frame> stack{{root, root, 0}};
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto& nb = t.neighbors(f.v);
        while (f.next < nb.size() && nb[f.next].to == f.parent && f.v != root) ++f.next;
        if (f.next == nb.size()) {
            stack.pop_back();
            if (!stack.empty()) tour.push_back(stack.back().v);
            continue;
        }
        const std::size_t c = nb[f.next++].to;
        tour.push_back(c);
        stack.push_back({c, f.v, 0});
    }
    return tour;
}

/// A closed walk that crosses every edge once in each direction; in a tree this
/// is exactly a depth-first tour.
inline void validate_tour(const WeightedTree& t, const std::vector<std::size_t>& tour)
{
    const std::size_t n = t.size();
    if (tour.size() != 2 * (n - 1) + 1) throw InputError("tree: tour must have 2(n-1)+1 entries");
    if (tour.front() != tour.back()) throw InputError("tree: tour must be closed");
    std::map<std::pair<std::size_t, std::size_t>, int> used;
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
        if (tour[i] >= n || tour[i + 1] >= n) throw InputError("tree: tour vertex out of range");
        if (t.edge_length(tour[i], tour[i + 1]) < 0.0) throw InputError("tree: tour steps along a non-edge");
        if (++used[{tour[i], tour[i + 1]}] > 1) throw InputError("tree: tour repeats a directed edge");
    }
}

/// A point on edge uv at fraction f of its length from u (u == v for a vertex).
struct TreePoint {
    std::size_t u = 0;
    std::size_t v = 0;
    double f = 0.0;
};

class TreeMetric {
public:
    explicit TreeMetric(const WeightedTree& t) : t_(t), n_(t.size()), d_(n_ * n_)
    {
        for (std::size_t s = 0; s < n_; ++s) {
            const auto r = tree_search(t, s);
            std::copy(r.dist.begin(), r.dist.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
        }
    }

    double operator()(std::size_t x, std::size_t y) const { return d_[x * n_ + y]; }

    double operator()(const TreePoint& p, const TreePoint& q) const
    {
        const double lp = p.u == p.v ? 0.0 : t_.edge_length(p.u, p.v);
        const double lq = q.u == q.v ? 0.0 : t_.edge_length(q.u, q.v);
        const std::pair<std::size_t, double> pe[2] = {{p.u, p.f * lp}, {p.v, (1.0 - p.f) * lp}};
        const std::pair<std::size_t, double> qe[2] = {{q.u, q.f * lq}, {q.v, (1.0 - q.f) * lq}};
        double best = INFINITY;
        for (const auto& [x, ox] : pe)
            for (const auto& [y, oy] : qe) best = std::min(best, ox + (*this)(x, y) + oy);
        if (p.u != p.v && q.u != q.v) {
            if (p.u == q.u && p.v == q.v) best = std::min(best, std::abs(p.f - q.f) * lp);
            if (p.u == q.v && p.v == q.u) best = std::min(best, std::abs(p.f - (1.0 - q.f)) * lp);
        }
        return best;
    }

private:
    const WeightedTree& t_;
    std::size_t n_;
    std::vector<double> d_;
};

/// Red's position at tour parameter p in [1, len(tour)].
inline TreePoint tour_point(const std::vector<std::size_t>& tour, double p)
{
    if (tour.size() == 1) return {tour[0], tour[0], 0.0};
    const double x = std::clamp(p - 1.0, 0.0, static_cast<double>(tour.size() - 1));
    auto k = static_cast<std::size_t>(std::floor(x));
    if (k + 1 >= tour.size()) k = tour.size() - 2;
    return {tour[k], tour[k + 1], x - static_cast<double>(k)};
}

/// Blue waits at one of the witnesses a, b, c. When Red reaches a witness, Blue
/// moves (instantly, along the tree path) to the witness Red visited before it.
/// Blue coordinates are vertex ids; a moving leg crosses a single edge.
inline Schedule blue_strategy(const WeightedTree& t, const TwoOutlierResult& res, const std::vector<std::size_t>& tour)
{
    validate_tour(t, tour);
    const double end = static_cast<double>(tour.size());
    if (res.branches < 3) {
        const double c = static_cast<double>(res.center);
        return Schedule::from_waypoints({{1.0, {c}}, {end, {c}}}, "tree");
    }
    const std::size_t w[3] = {res.a, res.b, res.c};
    std::vector<std::size_t> order; // witnesses in order of Red's visits
    for (std::size_t i = 0; i + 1 < tour.size(); ++i)
        if (std::find(w, w + 3, tour[i]) != w + 3 && std::find(order.begin(), order.end(), tour[i]) == order.end())
            order.push_back(tour[i]);
    if (order.size() != 3) throw InputError("tree: witnesses are not distinct tour vertices");
    std::size_t cur = order[1];
    std::vector<std::pair<double, std::vector<double>>> pts{{1.0, {static_cast<double>(cur)}}};
    for (std::size_t i = 0; i < tour.size(); ++i) {
        const double rp = static_cast<double>(i) + 1.0;
        pts.push_back({rp, {static_cast<double>(cur)}});
        const auto it = std::find(order.begin(), order.end(), tour[i]);
        if (it == order.end() || i + 1 == tour.size()) continue;
        const std::size_t k = static_cast<std::size_t>(it - order.begin());
        const std::size_t target = order[(k + 2) % 3];
        for (const std::size_t v : tree_path(tree_search(t, cur), target)) pts.push_back({rp, {static_cast<double>(v)}});
        cur = target;
    }
    return Schedule::from_waypoints(pts, "tree");
}

/// Minimum tree distance between Red on its tour and Blue following the schedule.
inline double simulate_tree(const WeightedTree& t, const std::vector<std::size_t>& tour, const Schedule& s,
                            int samples_per_leg = 10)
{
    const TreeMetric metric(t);
    const auto& bp = s.breakpoints;
    auto vertex = [&](double x) {
        const double r = std::round(x);
        if (std::abs(x - r) > 1e-9 || r < 0.0 || r >= static_cast<double>(t.size()))
            throw InputError("schedule/domain mismatch: blue must be a tree vertex");
        return static_cast<std::size_t>(r);
    };
    for (std::size_t i = 0; i < bp.size(); ++i) {
        if (bp[i].blue.size() != 1) throw InputError("schedule/domain mismatch: blue arity");
        if (bp[i].red < 1.0 - kEpsGeom || bp[i].red > static_cast<double>(tour.size()) + kEpsGeom)
            throw InputError("schedule/domain mismatch: red parameter out of range");
        if (i > 0) {
            const std::size_t x = vertex(bp[i - 1].blue[0]), y = vertex(bp[i].blue[0]);
            if (x != y && t.edge_length(x, y) < 0.0) throw InputError("schedule/domain mismatch: blue leg is not an edge");
        }
    }
    auto red_at = [&](double p) { return tour_point(tour, p); };
    auto blue_at = [&](const std::vector<double>& a, const std::vector<double>& b, double f) {
        const std::size_t x = vertex(a[0]), y = vertex(b[0]);
        return x == y ? TreePoint{x, x, 0.0} : TreePoint{x, y, f};
    };
    return simulate_min_distance(s, red_at, blue_at, metric, samples_per_leg);
}

} // namespace sdw

#endif
