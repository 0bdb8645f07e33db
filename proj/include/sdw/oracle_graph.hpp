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
#ifndef SDW_ORACLE_GRAPH_HPP
#define SDW_ORACLE_GRAPH_HPP

// Brute-force graph references. Graphs are node lists plus index pairs.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sdw::oracle {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
using XY = std::pair<double, double>;

/// Memoized search over (Blue vertex, Red step): Blue survives step i at v if
/// hop(v, r_i) >= delta and some vertex within `speed` hops survives step i + 1.
inline bool abstract_game(std::size_t n, const Edges& edges, const std::vector<std::size_t>& red, int speed, int delta,
                          std::optional<std::size_t> blue_start = std::nullopt)
{
    const int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> hop(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i) hop[i][i] = 0;
    for (auto [u, v] : edges) hop[u][v] = hop[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) hop[i][j] = std::min(hop[i][j], hop[i][k] + hop[k][j]);
    const std::size_t k = red.size();
    std::vector<signed char> memo(n * k, -1);
    auto win = [&](auto&& self, std::size_t v, std::size_t i) -> bool {
        signed char& m = memo[i * n + v];
        if (m >= 0) return m != 0;
        bool ok = hop[v][red[i]] >= delta;
        if (ok && i + 1 < k) {
            ok = false;
            for (std::size_t w = 0; w < n && !ok; ++w)
                if (hop[v][w] <= speed) ok = self(self, w, i + 1);
        }
        m = ok ? 1 : 0;
        return ok;
    };
    if (blue_start) return win(win, *blue_start, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (win(win, v, 0)) return true;
    return false;
}

inline double xy_dist(XY a, XY b) { return std::hypot(a.first - b.first, a.second - b.second); }

namespace detail {

inline std::vector<double> dijkstra(const std::vector<std::vector<std::pair<std::size_t, double>>>& adj, std::size_t s)
{
    std::vector<double> d(adj.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[s] = 0.0;
    pq.push({0.0, s});
    while (!pq.empty()) {
        auto [dx, x] = pq.top();
        pq.pop();
        if (dx > d[x]) continue;
        for (auto [y, w] : adj[x])
            if (dx + w < d[y]) d[y] = dx + w, pq.push({d[y], y});
    }
    return d;
}

} // namespace detail

/// Graph distance between the point at arc length x on edge e and the point at
/// arc length y on edge f, by inserting both points as new nodes.
inline double subdivision_distance(const std::vector<XY>& nodes, const Edges& edges, std::size_t e, double x,
                                   std::size_t f, double y)
{
    const std::size_t n = nodes.size();
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n + 2);
    auto link = [&](std::size_t a, std::size_t b, double w) {
        adj[a].push_back({b, w});
        adj[b].push_back({a, w});
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        const double l = xy_dist(nodes[u], nodes[v]);
        std::vector<std::pair<double, std::size_t>> cut{{0.0, u}};
        if (i == e) cut.push_back({x, n});
        if (i == f) cut.push_back({y, n + 1});
        cut.push_back({l, v});
        std::sort(cut.begin(), cut.end());
        for (std::size_t k = 0; k + 1 < cut.size(); ++k) link(cut[k].second, cut[k + 1].second, cut[k + 1].first - cut[k].first);
    }
    return detail::dijkstra(adj, n)[n + 1];
}

struct GraphGridConfig {
    int resolution = 64;            // subdivisions per graph edge and samples per Red segment
    std::size_t max_states = 10'000'000;
};

class GraphCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Time-expanded check: Red sampled along its polyline, Blue on graph
/// subdivision nodes, relocating within its free component between samples.
/// With `geodesic`, Red lies on the graph and distance is measured along it.
inline bool graph_grid(const std::vector<XY>& nodes, const Edges& edges, const std::vector<XY>& red, double delta,
                       bool geodesic, const GraphGridConfig& cfg = {})
{
    const int res = cfg.resolution;
    std::vector<XY> pts = nodes;
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(nodes.size());
    std::vector<std::vector<std::size_t>> chain(edges.size()); // node ids along each edge
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        chain[e].push_back(u);
        for (int k = 1; k < res; ++k) {
            const double t = static_cast<double>(k) / res;
            pts.push_back({nodes[u].first + t * (nodes[v].first - nodes[u].first),
                           nodes[u].second + t * (nodes[v].second - nodes[u].second)});
            adj.emplace_back();
            chain[e].push_back(pts.size() - 1);
        }
        chain[e].push_back(v);
        for (std::size_t k = 0; k + 1 < chain[e].size(); ++k) {
            const double w = xy_dist(pts[chain[e][k]], pts[chain[e][k + 1]]);
            adj[chain[e][k]].push_back({chain[e][k + 1], w});
            adj[chain[e][k + 1]].push_back({chain[e][k], w});
        }
    }
    const std::size_t m = pts.size();
    std::vector<XY> samples;
    for (std::size_t i = 0; i + 1 < red.size(); ++i)
        for (int k = 0; k < res; ++k) {
            const double t = static_cast<double>(k) / res;
            samples.push_back({red[i].first + t * (red[i + 1].first - red[i].first),
                               red[i].second + t * (red[i + 1].second - red[i].second)});
        }
    samples.push_back(red.back());
    if (samples.size() * m > cfg.max_states) throw GraphCapExceeded("graph oracle: state cap exceeded");

    auto distances = [&](XY p) {
        std::vector<double> d(m);
        if (!geodesic) {
            for (std::size_t x = 0; x < m; ++x) d[x] = xy_dist(p, pts[x]);
            return d;
        }
        // attach p to the chain piece that contains it
        auto a2 = adj;
        a2.emplace_back();
        bool placed = false;
        for (std::size_t e = 0; e < edges.size() && !placed; ++e) {
            for (std::size_t k = 0; k + 1 < chain[e].size() && !placed; ++k) {
                const XY a = pts[chain[e][k]], b = pts[chain[e][k + 1]];
                const double l = xy_dist(a, b);
                if (std::abs(xy_dist(a, p) + xy_dist(p, b) - l) > 1e-9 * std::max(1.0, l)) continue;
                a2[m].push_back({chain[e][k], xy_dist(a, p)});
                a2[m].push_back({chain[e][k + 1], xy_dist(p, b)});
                a2[chain[e][k]].push_back({m, xy_dist(a, p)});
                a2[chain[e][k + 1]].push_back({m, xy_dist(p, b)});
                placed = true;
            }
        }
        if (!placed) throw std::invalid_argument("graph oracle: red point off the graph");
        auto full = detail::dijkstra(a2, m);
        full.pop_back();
        return full;
    };
    auto expand = [&](std::vector<char> x, const std::vector<char>& free) {
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < m; ++i)
            if (x[i]) stack.push_back(i);
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            for (auto [b, w] : adj[a])
                if (!x[b] && free[b]) x[b] = 1, stack.push_back(b);
        }
        return x;
    };
    std::vector<char> cur(m, 0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto d = distances(samples[i]);
        std::vector<char> free(m);
        for (std::size_t x = 0; x < m; ++x) free[x] = d[x] >= delta;
        if (i == 0) {
            cur = free;
        } else {
            for (std::size_t x = 0; x < m; ++x) cur[x] = cur[x] && free[x];
            cur = expand(std::move(cur), free);
        }
        if (std::find(cur.begin(), cur.end(), 1) == cur.end()) return false;
    }
    return true;
}

} // namespace sdw::oracle

#endif
