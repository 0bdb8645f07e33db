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
#ifndef SDW_DFF_HPP
#define SDW_DFF_HPP

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "geom.hpp"

namespace sdw {

enum class Move : unsigned char { None, Diag, Left, Down };

struct DPTable {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<double> values;
    std::vector<Move> pred;

    double at(std::size_t i, std::size_t j) const { return values[i * m + j]; }
};

/// Discrete table over vertex pairs (0-based). "Left" advances P (i - 1), "Down"
/// advances Q (j - 1).
inline DPTable dff_table(const PolylineCurve& p, const PolylineCurve& q)
{
    if (p.dim() != q.dim()) throw InputError("dff: dimension mismatch");
    DPTable t;
    t.n = p.size();
    t.m = q.size();
    t.values.assign(t.n * t.m, 0.0);
    t.pred.assign(t.n * t.m, Move::None);
    for (std::size_t i = 0; i < t.n; ++i) {
        for (std::size_t j = 0; j < t.m; ++j) {
            const double d = dist(p[i], q[j]);
            if (i == 0 && j == 0) {
                t.values[0] = d;
                continue;
            }
            double best = -std::numeric_limits<double>::infinity();
            Move mv = Move::None;
            if (i > 0 && j > 0 && t.at(i - 1, j - 1) > best) { best = t.at(i - 1, j - 1); mv = Move::Diag; }
            if (i > 0 && t.at(i - 1, j) > best) { best = t.at(i - 1, j); mv = Move::Left; }
            if (j > 0 && t.at(i, j - 1) > best) { best = t.at(i, j - 1); mv = Move::Down; }
            t.values[i * t.m + j] = std::min(d, best);
            t.pred[i * t.m + j] = mv;
        }
    }
    return t;
}

inline double dff_value(const PolylineCurve& p, const PolylineCurve& q)
{
    const auto t = dff_table(p, q);
    return t.values.back();
}

/// Optimal traversal as 1-based index pairs from (1,1) to (n,m).
inline std::vector<std::pair<std::size_t, std::size_t>> dff_witness(const PolylineCurve& p, const PolylineCurve& q)
{
    const auto t = dff_table(p, q);
    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::size_t i = t.n - 1, j = t.m - 1;
    for (;;) {
        path.emplace_back(i + 1, j + 1);
        const Move mv = t.pred[i * t.m + j];
        if (mv == Move::None) break;
        if (mv == Move::Diag) { --i; --j; }
        else if (mv == Move::Left) --i;
        else --j;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace sdw

#endif
