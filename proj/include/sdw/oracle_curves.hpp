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
#ifndef SDW_ORACLE_CURVES_HPP
#define SDW_ORACLE_CURVES_HPP

// Brute-force references for curve problems. Nothing in here calls the solvers.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace sdw::oracle {

using Pt = std::vector<double>;
using Poly = std::vector<Pt>;

struct GridConfig {
    int resolution = 64;                 // samples per edge
    std::size_t max_states = 10'000'000;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Points along a polyline, `res` samples per edge (single vertices stay single).
inline std::vector<Pt> sample_polyline(const Poly& c, int res)
{
    std::vector<Pt> out;
    if (c.size() == 1) return {c[0]};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        for (int k = 0; k < res; ++k) {
            const double f = static_cast<double>(k) / res;
            Pt p(c[i].size());
            for (std::size_t d = 0; d < p.size(); ++d) p[d] = c[i][d] + f * (c[i + 1][d] - c[i][d]);
            out.push_back(std::move(p));
        }
    }
    out.push_back(c.back());
    return out;
}

inline double euclid(const Pt& a, const Pt& b)
{
    double s = 0;
    for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

/// Staircase BFS over sampled parameter pairs; every visited node keeps distance >= delta.
inline bool grid_curves(const Poly& red, const Poly& blue, double delta, const GridConfig& cfg = {})
{
    const auto rs = sample_polyline(red, cfg.resolution);
    const auto bs = sample_polyline(blue, cfg.resolution);
    const std::size_t n = rs.size(), m = bs.size();
    if (n * m > cfg.max_states) throw CapExceeded("grid oracle: state cap exceeded");
    auto ok = [&](std::size_t i, std::size_t j) { return euclid(rs[i], bs[j]) >= delta; };
    std::vector<std::uint8_t> seen(n * m, 0);
    if (!ok(0, 0)) return false;
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const std::size_t i = id / m, j = id % m;
        if (i == n - 1 && j == m - 1) return true;
        const std::size_t next[2][2] = {{i + 1, j}, {i, j + 1}};
        for (const auto& nx : next) {
            if (nx[0] >= n || nx[1] >= m) continue;
            const std::size_t k = nx[0] * m + nx[1];
            if (seen[k] || !ok(nx[0], nx[1])) continue;
            seen[k] = 1;
            queue.push_back(k);
        }
    }
    return false;
}

struct CellGridResult {
    std::vector<bool> top;   // node (k/res, 1)
    std::vector<bool> right; // node (1, k/res)
};

/// Staircase BFS inside one cell of the parameter square of edges a0a1 (horizontal)
/// and b0b1 (vertical). Start nodes are free boundary nodes inside the given
/// left / bottom parameter intervals.
inline CellGridResult grid_cell(const Pt& a0, const Pt& a1, const Pt& b0, const Pt& b1, double delta,
                                const std::vector<std::pair<double, double>>& left,
                                const std::vector<std::pair<double, double>>& bottom, int res)
{
    const std::size_t n = static_cast<std::size_t>(res) + 1;
    auto at = [](const Pt& p, const Pt& q, double f) {
        Pt r(p.size());
        for (std::size_t d = 0; d < p.size(); ++d) r[d] = p[d] + f * (q[d] - p[d]);
        return r;
    };
    std::vector<std::uint8_t> free(n * n), seen(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            free[i * n + j] = euclid(at(a0, a1, double(i) / res), at(b0, b1, double(j) / res)) >= delta;
    auto inside = [](const std::vector<std::pair<double, double>>& ivs, double x) {
        for (auto [lo, hi] : ivs)
            if (x >= lo - 1e-12 && x <= hi + 1e-12) return true;
        return false;
    };
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < n; ++j)
        if (free[j] && inside(left, double(j) / res)) seen[j] = 1, queue.push_back(j);
    for (std::size_t i = 0; i < n; ++i)
        if (free[i * n] && !seen[i * n] && inside(bottom, double(i) / res)) seen[i * n] = 1, queue.push_back(i * n);
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const std::size_t i = id / n, j = id % n;
        if (i + 1 < n && free[id + n] && !seen[id + n]) seen[id + n] = 1, queue.push_back(id + n);
        if (j + 1 < n && free[id + 1] && !seen[id + 1]) seen[id + 1] = 1, queue.push_back(id + 1);
    }
    CellGridResult out;
    for (std::size_t k = 0; k < n; ++k) {
        out.top.push_back(seen[k * n + (n - 1)] != 0);
        out.right.push_back(seen[(n - 1) * n + k] != 0);
    }
    return out;
}

/// Three agents on sampled curves, one agent steps at a time; adjacent agents
/// (0-1 and 1-2) keep distance >= delta.
inline bool grid_three_agents(const Poly& a, const Poly& b, const Poly& c, double delta, const GridConfig& cfg = {})
{
    const auto as = sample_polyline(a, cfg.resolution);
    const auto bs = sample_polyline(b, cfg.resolution);
    const auto cs = sample_polyline(c, cfg.resolution);
    const std::size_t na = as.size(), nb = bs.size(), nc = cs.size();
    if (na * nb * nc > cfg.max_states) throw CapExceeded("grid oracle: state cap exceeded");
    auto ok = [&](std::size_t i, std::size_t j, std::size_t k) {
        return euclid(as[i], bs[j]) >= delta && euclid(bs[j], cs[k]) >= delta;
    };
    auto key = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * nb + j) * nc + k; };
    std::vector<std::uint8_t> seen(na * nb * nc, 0);
    if (!ok(0, 0, 0)) return false;
    std::deque<std::array<std::size_t, 3>> queue{{0, 0, 0}};
    seen[0] = 1;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        if (s[0] == na - 1 && s[1] == nb - 1 && s[2] == nc - 1) return true;
        const std::size_t lim[3] = {na, nb, nc};
        for (int ax = 0; ax < 3; ++ax) {
            auto t = s;
            if (++t[ax] >= lim[ax]) continue;
            const std::size_t k = key(t[0], t[1], t[2]);
            if (seen[k] || !ok(t[0], t[1], t[2])) continue;
            seen[k] = 1;
            queue.push_back(t);
        }
    }
    return false;
}

/// Maximum over every monotone vertex traversal of its minimum pair distance,
/// by explicit enumeration.
inline double dff_exhaustive(const Poly& p, const Poly& q)
{
    if (p.size() + q.size() > 16) throw CapExceeded("dff oracle: size cap exceeded");
    double best = -1.0;
    auto walk = [&](auto&& self, std::size_t i, std::size_t j, double cur) -> void {
        cur = std::min(cur, euclid(p[i], q[j]));
        if (cur <= best) return; // cannot improve
        if (i + 1 == p.size() && j + 1 == q.size()) {
            best = cur;
            return;
        }
        if (i + 1 < p.size()) self(self, i + 1, j, cur);
        if (j + 1 < q.size()) self(self, i, j + 1, cur);
        if (i + 1 < p.size() && j + 1 < q.size()) self(self, i + 1, j + 1, cur);
    };
    walk(walk, 0, 0, INFINITY);
    return best;
}

} // namespace sdw::oracle

#endif
