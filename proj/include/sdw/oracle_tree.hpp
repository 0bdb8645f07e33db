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
#ifndef SDW_ORACLE_TREE_HPP
#define SDW_ORACLE_TREE_HPP

// Brute-force tree references. Trees are (n, list of (u, v, length)).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sdw::oracle {

using TreeEdges = std::vector<std::tuple<std::size_t, std::size_t, double>>;

class TreeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Floyd-Warshall over the tree.
inline std::vector<std::vector<double>> tree_apsp(std::size_t n, const TreeEdges& edges)
{
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const auto& [u, v, w] : edges) d[u][v] = d[v][u] = std::min(d[u][v], w);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline double tree_diameter_allpairs(std::size_t n, const TreeEdges& edges)
{
    double best = 0.0;
    for (const auto& row : tree_apsp(n, edges))
        for (double x : row) best = std::max(best, x);
    return best;
}

/// Removes r, labels the components, and returns the third largest component depth.
inline double outlier_radius_bruteforce(std::size_t n, const TreeEdges& edges, std::size_t r)
{
    const auto d = tree_apsp(n, edges);
    std::vector<int> comp(n, -1);
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (s == r || comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& [u, v, w] : edges) {
                const std::size_t y = u == x ? v : v == x ? u : n;
                if (y == n || y == r || comp[y] >= 0) continue;
                comp[y] = count;
                stack.push_back(y);
            }
        }
        ++count;
    }
    std::vector<double> depth(static_cast<std::size_t>(count), 0.0);
    for (std::size_t x = 0; x < n; ++x)
        if (x != r) depth[static_cast<std::size_t>(comp[x])] = std::max(depth[static_cast<std::size_t>(comp[x])], d[r][x]);
    std::sort(depth.rbegin(), depth.rend());
    return depth.size() >= 3 ? depth[2] : 0.0;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> tree_adj(std::size_t n, const TreeEdges& edges)
{
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [u, v, w] : edges) adj[u].push_back(v), adj[v].push_back(u);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

inline std::string ahu(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent)
{
    std::vector<std::string> kids;
    for (std::size_t c : adj[v])
        if (c != parent) kids.push_back(ahu(adj, c, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

} // namespace detail

/// Canonical form of an unlabeled tree: smallest rooted encoding over its centers.
inline std::string tree_canonical(std::size_t n, const TreeEdges& edges)
{
    const auto adj = detail::tree_adj(n, edges);
    std::vector<std::size_t> deg(n);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t left = n;
    while (left > 2) {
        left -= layer.size();
        std::vector<std::size_t> next;
        for (std::size_t v : layer)
            for (std::size_t c : adj[v])
                if (--deg[c] == 1) next.push_back(c);
        layer = std::move(next);
    }
    std::string best;
    for (std::size_t c : layer) {
        auto s = detail::ahu(adj, c, n);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

/// One representative per isomorphism class of unweighted trees with n vertices
/// (unit edge lengths), grown leaf by leaf.
inline std::vector<TreeEdges> all_unlabeled_trees(std::size_t n)
{
    std::vector<TreeEdges> cur{TreeEdges{}};
    for (std::size_t k = 1; k < n; ++k) {
        std::set<std::string> seen;
        std::vector<TreeEdges> next;
        for (const auto& t : cur) {
            for (std::size_t v = 0; v < k; ++v) {
                auto e = t;
                e.emplace_back(v, k, 1.0);
                if (seen.insert(tree_canonical(k + 1, e)).second) next.push_back(std::move(e));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

struct TreeGameConfig {
    int subdivision = 4;           // pieces per edge
    std::size_t max_tours = 5040;  // distinct depth-first tours tried
    std::size_t max_nodes = 4096;
};

/// Largest piece length of the subdivided tree.
inline double tree_game_step(const TreeEdges& edges, const TreeGameConfig& cfg = {})
{
    double w = 0.0;
    for (const auto& e : edges) w = std::max(w, std::get<2>(e));
    return w / cfg.subdivision;
}

/// Perpetual pursuit game on the subdivided tree. Red walks a depth-first tour
/// one piece per step; Blue may relocate within its free component (distance
/// >= value from Red) while Red stands on a node. YES iff Blue survives forever
/// against every tour.
inline bool oracle_tree_game(std::size_t n, const TreeEdges& edges, double value, const TreeGameConfig& cfg = {})
{
    if (n == 0 || edges.size() + 1 != n) throw std::invalid_argument("tree oracle: not a tree");
    if (n > 12) throw TreeCapExceeded("tree oracle: n > 12");
    const double tol = 1e-12 * std::max(1.0, std::abs(value));
    if (n == 1) return value <= tol;
    const std::size_t s = static_cast<std::size_t>(std::max(1, cfg.subdivision));
    const std::size_t nodes = n + edges.size() * (s - 1);
    if (nodes > cfg.max_nodes) throw TreeCapExceeded("tree oracle: node cap exceeded");

    // subdivided graph
    std::vector<std::vector<std::pair<std::size_t, double>>> g(nodes);
    auto interior = [&](std::size_t e, std::size_t k) { return n + e * (s - 1) + (k - 1); };
    auto chain = [&](std::size_t e, std::size_t from) { // nodes of edge e starting at endpoint `from`, excluding the far end
        const auto& [u, v, w] = edges[e];
        std::vector<std::size_t> out{from};
        for (std::size_t k = 1; k < s; ++k) out.push_back(interior(e, from == u ? k : s - k));
        return out;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& [u, v, w] = edges[e];
        auto c = chain(e, u);
        c.push_back(v);
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            g[c[k]].push_back({c[k + 1], w / static_cast<double>(s)});
            g[c[k + 1]].push_back({c[k], w / static_cast<double>(s)});
        }
    }
    std::vector<std::vector<double>> d(nodes, std::vector<double>(nodes, -1.0));
    for (std::size_t a = 0; a < nodes; ++a) {
        d[a][a] = 0.0;
        std::vector<std::size_t> stack{a};
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (auto [y, w] : g[x])
                if (d[a][y] < 0.0) d[a][y] = d[a][x] + w, stack.push_back(y);
        }
    }
    // free components for each Red node
    std::vector<std::vector<int>> label(nodes, std::vector<int>(nodes, -1));
    for (std::size_t r = 0; r < nodes; ++r) {
        int c = 0;
        for (std::size_t x = 0; x < nodes; ++x) {
            if (label[r][x] >= 0 || d[r][x] < value - tol) continue;
            std::vector<std::size_t> stack{x};
            label[r][x] = c;
            while (!stack.empty()) {
                const std::size_t y = stack.back();
                stack.pop_back();
                for (auto [z, w] : g[y])
                    if (label[r][z] < 0 && d[r][z] >= value - tol) label[r][z] = c, stack.push_back(z);
            }
            ++c;
        }
    }
    auto survives = [&](const std::vector<std::size_t>& seq) {
        const std::size_t k = seq.size();
        std::vector<char> cur(nodes), next(nodes), hit(nodes);
        for (std::size_t x = 0; x < nodes; ++x) cur[x] = label[seq[0]][x] >= 0;
        for (;;) {
            std::vector<char> x_set = cur;
            for (std::size_t i = 1; i <= k; ++i) {
                const auto& lab = label[seq[i % k]];
                std::fill(hit.begin(), hit.end(), 0);
                for (std::size_t x = 0; x < nodes; ++x)
                    if (x_set[x] && lab[x] >= 0) hit[static_cast<std::size_t>(lab[x])] = 1;
                bool any = false;
                for (std::size_t x = 0; x < nodes; ++x) {
                    x_set[x] = lab[x] >= 0 && hit[static_cast<std::size_t>(lab[x])];
                    any = any || x_set[x];
                }
                if (!any) return false;
            }
            if (x_set == cur) return true;
            cur = std::move(x_set);
        }
    };

    // every depth-first tour is fixed by a cyclic neighbour order at each vertex
    const auto adj = detail::tree_adj(n, edges);
    std::vector<std::vector<std::vector<std::size_t>>> rot(n);
    double tours = 1.0;
    for (std::size_t v = 0; v < n; ++v) {
        auto a = adj[v];
        do rot[v].push_back(a);
        while (a.size() > 1 && std::next_permutation(a.begin() + 1, a.end()));
        tours *= static_cast<double>(rot[v].size());
    }
    if (tours > static_cast<double>(cfg.max_tours)) throw TreeCapExceeded("tree oracle: tour cap exceeded");
    auto edge_of = [&](std::size_t x, std::size_t y) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& [u, v, w] = edges[e];
            if ((u == x && v == y) || (u == y && v == x)) return e;
        }
        return edges.size();
    };
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        std::vector<std::size_t> seq;
        std::size_t prev = 0, at = rot[0][pick[0]][0];
        seq = chain(edge_of(0, at), 0);
        for (std::size_t step = 1; step < 2 * (n - 1); ++step) {
            const auto& cyc = rot[at][pick[at]];
            const std::size_t i = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), prev) - cyc.begin());
            const std::size_t nxt = cyc[(i + 1) % cyc.size()];
            const auto c = chain(edge_of(at, nxt), at);
            seq.insert(seq.end(), c.begin(), c.end());
            prev = at;
            at = nxt;
        }
        if (!survives(seq)) return false;
        std::size_t v = 0;
        while (v < n && ++pick[v] == rot[v].size()) pick[v++] = 0;
        if (v == n) return true;
    }
}

} // namespace sdw::oracle

#endif
