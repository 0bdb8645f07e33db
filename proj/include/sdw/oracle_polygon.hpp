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
#ifndef SDW_ORACLE_POLYGON_HPP
#define SDW_ORACLE_POLYGON_HPP

// Brute-force polygon references: visibility graphs and a time-expanded grid
// for escape questions. Independent of the solver headers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace sdw::oracle {

struct P2 {
    double x = 0, y = 0;
};

inline double len(P2 a, P2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double crs(P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline double seg_dist(P2 p, P2 a, P2 b)
{
    const double dx = b.x - a.x, dy = b.y - a.y, l2 = dx * dx + dy * dy;
    double t = l2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / l2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return len(p, {a.x + t * dx, a.y + t * dy});
}

inline bool inside(const std::vector<P2>& poly, P2 p, double tol = 1e-9)
{
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        if (seg_dist(p, poly[i], poly[(i + 1) % n]) <= tol) return true;
    int wind = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const P2 a = poly[i], b = poly[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && crs(a, b, p) > 0) ++wind;
        } else if (b.y <= p.y && crs(a, b, p) < 0) {
            --wind;
        }
    }
    return wind != 0;
}

/// Segment pq lies in the closed polygon: every piece between boundary contacts
/// has an inside midpoint.
inline bool visible(const std::vector<P2>& poly, P2 p, P2 q)
{
    const std::size_t n = poly.size();
    std::vector<double> cuts{0.0, 1.0};
    const double dx = q.x - p.x, dy = q.y - p.y, l2 = dx * dx + dy * dy;
    if (l2 == 0.0) return inside(poly, p);
    auto param = [&](P2 r) { return ((r.x - p.x) * dx + (r.y - p.y) * dy) / l2; };
    for (std::size_t i = 0; i < n; ++i) {
        const P2 a = poly[i], b = poly[(i + 1) % n];
        const double d1 = crs(p, q, a), d2 = crs(p, q, b), d3 = crs(a, b, p), d4 = crs(a, b, q);
        if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
            const double t = d3 / (d3 - d4);
            cuts.push_back(t);
        }
        for (P2 r : {a, b})
            if (seg_dist(r, p, q) <= 1e-12) cuts.push_back(param(r));
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double lo = std::clamp(cuts[k], 0.0, 1.0), hi = std::clamp(cuts[k + 1], 0.0, 1.0);
        if (hi - lo < 1e-12) continue;
        const double m = 0.5 * (lo + hi);
        if (!inside(poly, {p.x + m * dx, p.y + m * dy}, 1e-10)) return false;
    }
    return true;
}

/// Dijkstra on the visibility graph of the polygon vertices plus p and q.
inline double visibility_distance(const std::vector<P2>& poly, P2 p, P2 q)
{
    std::vector<P2> nodes = poly;
    nodes.push_back(p);
    nodes.push_back(q);
    const std::size_t n = nodes.size(), src = n - 2, dst = n - 1;
    std::vector<double> d(n, INFINITY);
    std::vector<char> done(n, 0);
    d[src] = 0.0;
    for (std::size_t it = 0; it < n; ++it) {
        std::size_t u = n;
        for (std::size_t k = 0; k < n; ++k)
            if (!done[k] && (u == n || d[k] < d[u])) u = k;
        if (u == n || d[u] == INFINITY) break;
        done[u] = 1;
        if (u == dst) break;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            const double w = len(nodes[u], nodes[k]);
            if (d[u] + w < d[k] && visible(poly, nodes[u], nodes[k])) d[k] = d[u] + w;
        }
    }
    return d[dst];
}

struct EscapeGridConfig {
    int resolution = 64;            // grid points per bounding-box side, samples per edge
    std::size_t max_states = 10'000'000;
};

class EscapeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Time-expanded search: Red is sampled along R, Blue occupies grid points of P
/// (plus boundary samples and b) and may jump anywhere inside its free
/// component between consecutive Red samples. Distances are geodesic.
inline bool escape_grid(const std::vector<P2>& poly, P2 b, const std::vector<P2>& red, double delta,
                        const EscapeGridConfig& cfg = {})
{
    const std::size_t n = poly.size();
    const int res = cfg.resolution;
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (P2 p : poly) x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    const double step = std::max(x1 - x0, y1 - y0) / res;

    std::vector<P2> nodes{b};
    for (int i = 0; i <= res; ++i)
        for (int j = 0; j <= res; ++j) {
            const P2 q{x0 + i * step, y0 + j * step};
            if (inside(poly, q, 0.0)) nodes.push_back(q);
        }
    for (std::size_t e = 0; e < n; ++e)
        for (int k = 0; k < res; ++k) {
            const double f = static_cast<double>(k) / res;
            const P2 a = poly[e], c = poly[(e + 1) % n];
            nodes.push_back({a.x + f * (c.x - a.x), a.y + f * (c.y - a.y)});
        }
    const std::size_t m = nodes.size();
    std::vector<P2> reds;
    for (std::size_t i = 0; i + 1 < red.size(); ++i)
        for (int k = 0; k < res; ++k) {
            const double f = static_cast<double>(k) / res;
            reds.push_back({red[i].x + f * (red[i + 1].x - red[i].x), red[i].y + f * (red[i + 1].y - red[i].y)});
        }
    reds.push_back(red.back());
    if (m * reds.size() > cfg.max_states) throw EscapeCapExceeded("escape oracle: state cap exceeded");

    // adjacency: nearby visible pairs
    std::vector<std::vector<std::size_t>> adj(m);
    const double reach = 1.5 * step;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (len(nodes[i], nodes[j]) <= reach && visible(poly, nodes[i], nodes[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    // vertex visibility for geodesic distances
    std::vector<std::vector<double>> vv(n, std::vector<double>(n, INFINITY));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j || visible(poly, poly[i], poly[j])) vv[i][j] = len(poly[i], poly[j]);
    std::vector<std::vector<std::size_t>> node_sees(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t w = 0; w < n; ++w)
            if (visible(poly, nodes[i], poly[w])) node_sees[i].push_back(w);

    auto free_at = [&](P2 p) {
        // distances from p to the vertices (Dijkstra over vertex visibility)
        std::vector<double> d(n, INFINITY);
        std::vector<char> done(n, 0);
        for (std::size_t w = 0; w < n; ++w)
            if (visible(poly, p, poly[w])) d[w] = len(p, poly[w]);
        for (std::size_t it = 0; it < n; ++it) {
            std::size_t u = n;
            for (std::size_t k = 0; k < n; ++k)
                if (!done[k] && (u == n || d[k] < d[u])) u = k;
            if (u == n || d[u] == INFINITY) break;
            done[u] = 1;
            for (std::size_t k = 0; k < n; ++k) d[k] = std::min(d[k], d[u] + vv[u][k]);
        }
        std::vector<char> fr(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            const double e = len(p, nodes[i]);
            if (e >= delta) {
                fr[i] = 1;
                continue;
            }
            double via = INFINITY;
            for (std::size_t w : node_sees[i]) via = std::min(via, d[w] + len(poly[w], nodes[i]));
            if (via < delta) continue;
            fr[i] = !visible(poly, p, nodes[i]);
        }
        return fr;
    };
    auto spread = [&](std::vector<char>& mark, const std::vector<char>& fr) {
        std::deque<std::size_t> q;
        for (std::size_t i = 0; i < m; ++i)
            if (mark[i]) q.push_back(i);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v : adj[u])
                if (fr[v] && !mark[v]) mark[v] = 1, q.push_back(v);
        }
    };
    std::vector<char> fr = free_at(reds[0]);
    if (!fr[0]) return false;
    std::vector<char> mark(m, 0);
    mark[0] = 1;
    spread(mark, fr);
    for (std::size_t k = 1; k < reds.size(); ++k) {
        fr = free_at(reds[k]);
        bool any = false;
        for (std::size_t i = 0; i < m; ++i) {
            mark[i] = mark[i] && fr[i];
            any = any || mark[i];
        }
        if (!any) return false;
        spread(mark, fr);
    }
    return true;
}

} // namespace sdw::oracle

#endif
