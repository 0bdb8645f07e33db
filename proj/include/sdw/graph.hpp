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
#ifndef SDW_GRAPH_HPP
#define SDW_GRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "geom.hpp"
#include "numeric.hpp"
#include "one_sided.hpp"
#include "schedule.hpp"

namespace sdw {

using GraphEdge = std::pair<std::size_t, std::size_t>;

namespace detail {

inline std::vector<std::vector<std::size_t>> simple_adjacency(std::size_t n, const std::vector<GraphEdge>& edges,
                                                              const char* what)
{
    std::vector<std::vector<std::size_t>> adj(n);
    std::set<GraphEdge> seen;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InputError(std::string(what) + ": vertex out of range");
        if (u == v) throw InputError(std::string(what) + ": self loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw InputError(std::string(what) + ": repeated edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<char> mark(n, 0);
    std::vector<std::size_t> stack{0};
    mark[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : adj[x])
            if (!mark[y]) mark[y] = 1, ++count, stack.push_back(y);
    }
    if (count != n) throw InputError(std::string(what) + ": not connected");
    return adj;
}

} // namespace detail

/// Unweighted connected simple graph with all-pairs hop distances.
class AbstractGraph {
public:
    AbstractGraph(std::size_t n, std::vector<GraphEdge> edges) : n_(n), edges_(std::move(edges))
    {
        if (n == 0) throw InputError("graph: needs at least one vertex");
        adj_ = detail::simple_adjacency(n, edges_, "graph");
        hop_.assign(n * n, -1);
        for (std::size_t s = 0; s < n; ++s) {
            std::deque<std::size_t> q{s};
            hop_[s * n + s] = 0;
            while (!q.empty()) {
                const std::size_t x = q.front();
                q.pop_front();
                for (std::size_t y : adj_[x])
                    if (hop_[s * n + y] < 0) hop_[s * n + y] = hop_[s * n + x] + 1, q.push_back(y);
            }
        }
    }

    std::size_t size() const { return n_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    int hop(std::size_t u, std::size_t v) const { return hop_[u * n_ + v]; }
    std::size_t max_degree() const
    {
        std::size_t d = 0;
        for (const auto& a : adj_) d = std::max(d, a.size());
        return d;
    }

private:
    std::size_t n_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<int> hop_;
};

/// k copies of the graph; layer i loses every vertex within hop distance < delta
/// of Red's i-th vertex, and (v, i) -> (w, i + 1) whenever hop(v, w) <= speed.
struct LayeredGraph {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<char> deleted;                // k * n
    std::vector<std::vector<std::size_t>> moves; // per vertex, targets in the next layer

    bool alive(std::size_t layer, std::size_t v) const { return !deleted[layer * n + v]; }

    std::size_t vertex_count() const { return n * k; }

    /// Edges between surviving copies.
    std::size_t edge_count() const
    {
        std::size_t m = 0;
        for (std::size_t i = 0; i + 1 < k; ++i)
            for (std::size_t v = 0; v < n; ++v)
                if (alive(i, v))
                    for (std::size_t w : moves[v]) m += alive(i + 1, w) ? 1 : 0;
        return m;
    }
};

inline void validate_red_walk(const AbstractGraph& g, const std::vector<std::size_t>& red)
{
    if (red.empty()) throw InputError("graph: red path is empty");
    for (std::size_t i = 0; i < red.size(); ++i) {
        if (red[i] >= g.size()) throw InputError("graph: red vertex out of range");
        if (i > 0 && g.hop(red[i - 1], red[i]) != 1) throw InputError("graph: red path steps along a non-edge");
    }
}

inline LayeredGraph build_layered(const AbstractGraph& g, const std::vector<std::size_t>& red, int speed, int delta)
{
    validate_red_walk(g, red);
    if (speed < 0) throw InputError("graph: speed must be non-negative");
    if (delta < 1) throw InputError("graph: delta must be at least 1");
    LayeredGraph L;
    L.n = g.size();
    L.k = red.size();
    L.deleted.assign(L.n * L.k, 0);
    for (std::size_t i = 0; i < L.k; ++i)
        for (std::size_t v = 0; v < L.n; ++v) L.deleted[i * L.n + v] = g.hop(red[i], v) <= delta - 1;
    L.moves.resize(L.n);
    for (std::size_t v = 0; v < L.n; ++v)
        for (std::size_t w = 0; w < L.n; ++w)
            if (g.hop(v, w) <= speed) L.moves[v].push_back(w);
    return L;
}

/// Layered reachability. The witness lists Blue's vertex per Red step
/// (domain "abstract-graph", red parameter i + 1 for layer i).
inline Decision decide_abstract(const AbstractGraph& g, const std::vector<std::size_t>& red, int speed, int delta,
                                std::optional<std::size_t> blue_start = std::nullopt, bool want_witness = false)
{
    const LayeredGraph L = build_layered(g, red, speed, delta);
    if (blue_start && *blue_start >= g.size()) throw InputError("graph: blue start out of range");
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> from(L.n * L.k, none);
    std::vector<char> cur(L.n, 0);
    for (std::size_t v = 0; v < L.n; ++v)
        if (L.alive(0, v) && (!blue_start || *blue_start == v)) cur[v] = 1, from[v] = v;
    for (std::size_t i = 0; i + 1 < L.k; ++i) {
        std::vector<char> next(L.n, 0);
        bool any = false;
        for (std::size_t v = 0; v < L.n; ++v) {
            if (!cur[v]) continue;
            for (std::size_t w : L.moves[v]) {
                if (next[w] || !L.alive(i + 1, w)) continue;
                next[w] = 1;
                from[(i + 1) * L.n + w] = v;
                any = true;
            }
        }
        if (!any) return {};
        cur = std::move(next);
    }
    const auto it = std::find(cur.begin(), cur.end(), 1);
    if (it == cur.end()) return {};
    Decision d{true, std::nullopt};
    if (!want_witness) return d;
    std::vector<std::size_t> blue{static_cast<std::size_t>(it - cur.begin())};
    for (std::size_t i = L.k - 1; i > 0; --i) blue.push_back(from[i * L.n + blue.back()]);
    std::reverse(blue.begin(), blue.end());
    Schedule s;
    s.domain = "abstract-graph";
    for (std::size_t i = 0; i < L.k; ++i) {
        const double t = L.k == 1 ? static_cast<double>(i) : static_cast<double>(i) / static_cast<double>(L.k - 1);
        s.breakpoints.push_back({t, static_cast<double>(i) + 1.0, {static_cast<double>(blue[i])}});
    }
    if (L.k == 1) s.breakpoints.push_back({1.0, 1.0, s.breakpoints[0].blue});
    d.witness = std::move(s);
    return d;
}

/// Straight-line graph in the plane with Euclidean edge lengths and all-pairs
/// shortest path distances.
class GeometricGraph {
public:
    GeometricGraph(std::vector<Vec2> nodes, std::vector<GraphEdge> edges) : nodes_(std::move(nodes)), edges_(std::move(edges))
    {
        const std::size_t n = nodes_.size();
        if (n == 0) throw InputError("graph: needs at least one vertex");
        for (Vec2 p : nodes_)
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InputError("graph: non-finite coordinate");
        adj_ = detail::simple_adjacency(n, edges_, "graph");
        for (auto [u, v] : edges_)
            if (!(dist(nodes_[u], nodes_[v]) > 0.0)) throw InputError("graph: zero-length edge");
        d_.assign(n * n, std::numeric_limits<double>::infinity());
        using Item = std::pair<double, std::size_t>;
        for (std::size_t s = 0; s < n; ++s) {
            std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
            d_[s * n + s] = 0.0;
            pq.push({0.0, s});
            while (!pq.empty()) {
                const auto [dx, x] = pq.top();
                pq.pop();
                if (dx > d_[s * n + x]) continue;
                for (std::size_t y : adj_[x]) {
                    const double nd = dx + dist(nodes_[x], nodes_[y]);
                    if (nd < d_[s * n + y]) d_[s * n + y] = nd, pq.push({nd, y});
                }
            }
        }
    }

    std::size_t size() const { return nodes_.size(); }
    const std::vector<Vec2>& nodes() const { return nodes_; }
    Vec2 node(std::size_t v) const { return nodes_.at(v); }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    double edge_length(std::size_t e) const { return dist(nodes_[edges_.at(e).first], nodes_[edges_.at(e).second]); }
    Vec2 point(std::size_t e, double t) const { return lerp(nodes_[edges_.at(e).first], nodes_[edges_.at(e).second], t); }
    double distance(std::size_t u, std::size_t v) const { return d_[u * nodes_.size() + v]; }

    std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const
    {
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if ((edges_[e].first == u && edges_[e].second == v) || (edges_[e].first == v && edges_[e].second == u))
                return e;
        return std::nullopt;
    }

private:
    std::vector<Vec2> nodes_;
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<double> d_;
};

/// Graph distance between the point at arc length x on e (from its first
/// endpoint) and the point at arc length y on f, for e != f:
/// d(x, y) = min(x + d2 + y, x + d1 + |f| - y, |e| - x + d4 + y, |e| - x + d3 + |f| - y)
/// with d1 = |e0 f1|, d2 = |e0 f0|, d3 = |e1 f1|, d4 = |e1 f0|.
struct CellDistanceFunction {
    double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0;
    double le = 0.0, lf = 0.0;

    double operator()(double x, double y) const
    {
        return std::min({x + d2 + y, x + d1 + lf - y, le - x + d4 + y, le - x + d3 + lf - y});
    }
};

inline CellDistanceFunction geodesic_cell_distance(const GeometricGraph& g, std::size_t e, std::size_t f)
{
    if (e >= g.edges().size() || f >= g.edges().size()) throw InputError("graph: edge out of range");
    if (e == f) throw InputError("graph: cell distance needs two different edges");
    const auto [e0, e1] = g.edges()[e];
    const auto [f0, f1] = g.edges()[f];
    return {g.distance(e0, f1), g.distance(e0, f0), g.distance(e1, f1), g.distance(e1, f0), g.edge_length(e),
            g.edge_length(f)};
}

enum class GraphMetric { Euclidean, Geodesic };

namespace detail {

inline double field_slack(double delta) { return 1e-10 * (1.0 + delta); }

inline BlueDomain graph_domain(const GeometricGraph& g)
{
    BlueDomain d;
    d.vertices = g.size();
    d.edges = g.edges();
    return d;
}

} // namespace detail

/// Red moves along a plane polyline; Blue on the graph; Euclidean separation.
class GraphEuclidField {
public:
    GraphEuclidField(const GeometricGraph& g, const PolylineCurve& red)
        : g_(g), red_(red.size() > 1 ? red : PolylineCurve(2, {red[0], red[0]})), dom_(detail::graph_domain(g))
    {
        if (red.dim() != 2) throw InputError("graph: red must be planar");
    }

    const BlueDomain& domain() const { return dom_; }
    std::size_t columns() const { return red_.size() - 1; }
    FieldShape shape() const { return FieldShape::Convex; }

    Vec2 red_at(double s) const
    {
        const std::size_t k = std::min(static_cast<std::size_t>(std::max(s, 0.0)), columns() - 1);
        return lerp(red_.vec2(k), red_.vec2(k + 1), s - static_cast<double>(k));
    }

    double vertex_distance(double s, std::size_t v) const { return dist(red_at(s), g_.node(v)); }

    double edge_extreme(double s, std::size_t e) const
    {
        return point_segment_distance(red_at(s), g_.node(dom_.edges[e].first), g_.node(dom_.edges[e].second));
    }

    IntervalSet edge_free(double s, std::size_t e, double delta) const
    {
        const Vec2 p = red_at(s), a = g_.node(dom_.edges[e].first), b = g_.node(dom_.edges[e].second);
        const Vec2 v = b - a, w = a - p;
        const double lim = std::max(0.0, delta - detail::field_slack(delta));
        const auto r = quadratic_roots(dot(v, v), 2.0 * dot(w, v), dot(w, w) - lim * lim);
        IntervalSet out;
        if (r.size() < 2) {
            out.add({0.0, 1.0});
            return out;
        }
        if (r[0] > 0.0) out.add({0.0, std::min(1.0, r[0])});
        if (r[1] < 1.0) out.add({std::max(0.0, r[1]), 1.0});
        return out;
    }

private:
    const GeometricGraph& g_;
    PolylineCurve red_;
    BlueDomain dom_;
};

/// Red walks along the graph itself; separation is graph distance. The graph
/// is refined at Red's vertices so that every Red column runs along one whole
/// edge of the refined graph (or stays at a node).
class GraphGeodesicField {
public:
    struct Column {
        std::size_t from = 0, to = 0;
        std::optional<std::size_t> edge; // empty when Red stays at `from`
    };

    GraphGeodesicField(const GeometricGraph& g, const PolylineCurve& red) : g_(refine(g, red))
    {
        dom_ = detail::graph_domain(g_);
        if (stops_.size() == 1) cols_.push_back({stops_[0], stops_[0], std::nullopt});
        for (std::size_t i = 0; i + 1 < stops_.size(); ++i) {
            const std::size_t a = stops_[i], b = stops_[i + 1];
            if (a == b) {
                cols_.push_back({a, a, std::nullopt});
                continue;
            }
            // refined nodes on the segment, ordered from a to b
            const Vec2 pa = g_.node(a), pb = g_.node(b);
            const double tol = 1e-9 * std::max(1.0, dist(pa, pb));
            std::vector<std::pair<double, std::size_t>> on;
            for (std::size_t w = 0; w < g_.size(); ++w)
                if (point_segment_distance(g_.node(w), pa, pb) <= tol)
                    on.emplace_back(dot(g_.node(w) - pa, pb - pa), w);
            std::sort(on.begin(), on.end());
            for (std::size_t k = 0; k + 1 < on.size(); ++k) {
                const auto e = g_.edge_between(on[k].second, on[k + 1].second);
                if (!e) throw InputError("graph: red leaves the graph");
                cols_.push_back({on[k].second, on[k + 1].second, e});
            }
        }
    }

    const GeometricGraph& graph() const { return g_; }
    const std::vector<Column>& red_columns() const { return cols_; }
    const BlueDomain& domain() const { return dom_; }
    std::size_t columns() const { return cols_.size(); }
    FieldShape shape() const { return FieldShape::Concave; }

    /// Distance to the point at arc length y on edge f is min(alpha + y, beta - y)
    /// and, when Red is on f at arc length x, also |x - y|.
    struct Profile {
        double alpha = 0.0, beta = 0.0, length = 0.0;
        bool self = false;
        double x = 0.0;
        double operator()(double y) const
        {
            const double d = std::min(alpha + y, beta - y);
            return self ? std::min(d, std::abs(x - y)) : d;
        }
    };

    Profile profile(double s, std::size_t f) const
    {
        const auto [f0, f1] = g_.edges()[f];
        Profile p;
        p.length = g_.edge_length(f);
        const auto [col, x, ge] = locate(s);
        if (!ge) {
            p.alpha = g_.distance(col.from, f0);
            p.beta = g_.distance(col.from, f1) + p.length;
            return p;
        }
        const auto [g0, g1] = g_.edges()[*ge];
        const double lg = g_.edge_length(*ge);
        p.alpha = std::min(x + g_.distance(g0, f0), lg - x + g_.distance(g1, f0));
        p.beta = std::min(x + g_.distance(g0, f1), lg - x + g_.distance(g1, f1)) + p.length;
        if (*ge == f) p.self = true, p.x = x;
        return p;
    }

    double vertex_distance(double s, std::size_t v) const
    {
        const auto [col, x, ge] = locate(s);
        if (!ge) return g_.distance(col.from, v);
        const auto [g0, g1] = g_.edges()[*ge];
        return std::min(x + g_.distance(g0, v), g_.edge_length(*ge) - x + g_.distance(g1, v));
    }

    double edge_extreme(double s, std::size_t f) const
    {
        const Profile p = profile(s, f);
        std::vector<double> ys{0.0, p.length, 0.5 * (p.beta - p.alpha)};
        if (p.self) ys.insert(ys.end(), {0.5 * (p.beta + p.x), 0.5 * (p.x - p.alpha)});
        double best = 0.0;
        for (double y : ys) best = std::max(best, p(std::clamp(y, 0.0, p.length)));
        return best;
    }

    IntervalSet edge_free(double s, std::size_t f, double delta) const
    {
        const Profile p = profile(s, f);
        const double lim = delta - detail::field_slack(delta);
        const double lo = std::max(0.0, lim - p.alpha), hi = std::min(p.length, p.beta - lim);
        IntervalSet out;
        auto add = [&](double a, double b) {
            if (a <= b) out.add({a / p.length, b / p.length});
        };
        if (!p.self) {
            add(lo, hi);
        } else {
            add(lo, std::min(hi, p.x - lim));
            add(std::max(lo, p.x + lim), hi);
        }
        return out;
    }

private:
    struct Where {
        Column col;
        double x;
        std::optional<std::size_t> edge;
    };

    Where locate(double s) const
    {
        const std::size_t k = std::min(static_cast<std::size_t>(std::max(s, 0.0)), cols_.size() - 1);
        const Column& c = cols_[k];
        const double t = std::clamp(s - static_cast<double>(k), 0.0, 1.0);
        if (!c.edge) return {c, 0.0, std::nullopt};
        const double l = g_.edge_length(*c.edge);
        const double x = g_.edges()[*c.edge].first == c.from ? t * l : (1.0 - t) * l;
        return {c, x, c.edge};
    }

    GeometricGraph refine(const GeometricGraph& g, const PolylineCurve& red)
    {
        if (red.dim() != 2) throw InputError("graph: red must be planar");
        std::vector<Vec2> nodes = g.nodes();
        std::vector<std::vector<std::pair<double, std::size_t>>> cuts(g.edges().size());
        double scale = 1.0;
        for (Vec2 p : nodes) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
        const double tol = 1e-9 * scale;
        for (std::size_t i = 0; i < red.size(); ++i) {
            const Vec2 p = red.vec2(i);
            std::optional<std::size_t> id;
            for (std::size_t v = 0; v < nodes.size() && !id; ++v)
                if (dist(nodes[v], p) <= tol) id = v;
            for (std::size_t e = 0; e < g.edges().size() && !id; ++e) {
                const Vec2 a = g.node(g.edges()[e].first), b = g.node(g.edges()[e].second);
                if (point_segment_distance(p, a, b) > tol) continue;
                const double t = std::clamp(dot(p - a, b - a) / dot(b - a, b - a), 0.0, 1.0);
                id = nodes.size();
                nodes.push_back(lerp(a, b, t));
                cuts[e].emplace_back(t, *id);
            }
            if (!id) throw InputError("graph: red must lie on the graph");
            stops_.push_back(*id);
        }
        std::vector<GraphEdge> edges;
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            auto& c = cuts[e];
            std::sort(c.begin(), c.end());
            std::size_t prev = g.edges()[e].first;
            for (const auto& [t, v] : c) edges.emplace_back(prev, v), prev = v;
            edges.emplace_back(prev, g.edges()[e].second);
        }
        return GeometricGraph(std::move(nodes), std::move(edges));
    }

    std::vector<std::size_t> stops_;
    GeometricGraph g_;
    BlueDomain dom_;
    std::vector<Column> cols_;
};

/// Can Blue, starting anywhere free on the graph and moving arbitrarily along
/// it, keep separation >= delta while Red follows `red` once?
inline bool decide_blue_on_graph(const PolylineCurve& red, const GeometricGraph& g, double delta, GraphMetric metric)
{
    if (delta <= 0.0) return true;
    const BlueStart any{true, 0, 0.0};
    if (metric == GraphMetric::Euclidean) return reachability_one_sided(GraphEuclidField(g, red), any, delta);
    return reachability_one_sided(GraphGeodesicField(g, red), any, delta);
}

class SearchCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Subdivided {
    std::vector<Vec2> nodes;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj; // (node, piece)
    std::size_t pieces = 0;
};

inline Subdivided subdivide(const GeometricGraph& g, int res)
{
    Subdivided s;
    s.nodes = g.nodes();
    s.adj.resize(s.nodes.size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        std::size_t prev = g.edges()[e].first;
        for (int k = 1; k <= res; ++k) {
            std::size_t cur = g.edges()[e].second;
            if (k < res) {
                cur = s.nodes.size();
                s.nodes.push_back(g.point(e, static_cast<double>(k) / res));
                s.adj.emplace_back();
            }
            s.adj[prev].push_back({cur, s.pieces});
            s.adj[cur].push_back({prev, s.pieces});
            ++s.pieces;
            prev = cur;
        }
    }
    return s;
}

} // namespace detail

/// Small-instance search for SDW(H, G) >= delta: Red must cover every edge of
/// H (backtracking allowed) while Blue moves freely on G, Euclidean separation
/// checked at subdivision nodes. A state is (Red node, Blue's free component);
/// Red steps one piece while Blue waits at a node free for both positions.
/// Steps are reversible, so a walk can use every step of its connected
/// component of states, and the answer is whether some component's steps
/// cover all pieces of H.
inline bool sdw_graphs_small(const GeometricGraph& h, const GeometricGraph& g, double delta, int resolution,
                             std::size_t max_states = 1'000'000)
{
    if (resolution < 1) throw InputError("graph: resolution must be positive");
    const auto hs = detail::subdivide(h, resolution);
    const auto gs = detail::subdivide(g, resolution);
    const std::size_t nh = hs.nodes.size(), ng = gs.nodes.size();
    if (nh * ng > max_states) throw SearchCapExceeded("graph: state cap exceeded");
    std::vector<std::vector<int>> label(nh, std::vector<int>(ng, -1));
    std::vector<std::size_t> base(nh + 1, 0);
    for (std::size_t p = 0; p < nh; ++p) {
        int c = 0;
        auto free = [&](std::size_t x) { return dist(hs.nodes[p], gs.nodes[x]) >= delta; };
        for (std::size_t x = 0; x < ng; ++x) {
            if (label[p][x] >= 0 || !free(x)) continue;
            std::vector<std::size_t> stack{x};
            label[p][x] = c;
            while (!stack.empty()) {
                const std::size_t y = stack.back();
                stack.pop_back();
                for (auto [z, piece] : gs.adj[y])
                    if (label[p][z] < 0 && free(z)) label[p][z] = c, stack.push_back(z);
            }
            ++c;
        }
        base[p + 1] = base[p] + static_cast<std::size_t>(c);
    }
    if (base[nh] == 0) return false;
    detail::UnionFind uf(base[nh]);
    std::vector<std::pair<std::size_t, std::size_t>> steps; // (state, piece)
    for (std::size_t p = 0; p < nh; ++p) {
        for (auto [q, piece] : hs.adj[p]) {
            if (q < p) continue;
            for (std::size_t x = 0; x < ng; ++x) {
                if (label[p][x] < 0 || label[q][x] < 0) continue;
                const std::size_t a = base[p] + static_cast<std::size_t>(label[p][x]);
                uf.unite(a, base[q] + static_cast<std::size_t>(label[q][x]));
                steps.emplace_back(a, piece);
            }
        }
    }
    std::vector<std::vector<char>> covered(base[nh]);
    std::vector<std::size_t> count(base[nh], 0);
    for (auto [a, piece] : steps) {
        auto& c = covered[uf.find(a)];
        if (c.empty()) c.assign(hs.pieces, 0);
        if (!c[piece]) c[piece] = 1, ++count[uf.find(a)];
    }
    for (std::size_t r = 0; r < base[nh]; ++r)
        if (uf.find(r) == r && count[r] == hs.pieces) return true;
    return false;
}

} // namespace sdw

#endif
