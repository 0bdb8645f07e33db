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
#include <gtest/gtest.h>

#include <random>

#include "sdw/dff.hpp"
#include "sdw/oracle_curves.hpp"

using namespace sdw;

namespace {

PolylineCurve random_curve(std::mt19937_64& rng, int n, int d)
{
    std::uniform_real_distribution<double> u(-3, 3);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        Point p;
        for (int k = 0; k < d; ++k) p.push_back(u(rng));
        pts.push_back(p);
    }
    return PolylineCurve(d, pts);
}

} // namespace

TEST(Dff, Examples)
{
    const auto p = PolylineCurve::from_2d({{0, 0}, {1, 1}, {2, 0}});
    EXPECT_DOUBLE_EQ(dff_value(p, p), 0.0);
    EXPECT_DOUBLE_EQ(dff_value(PolylineCurve::from_1d({0}), PolylineCurve::from_1d({5})), 5.0);
    const auto w = dff_witness(PolylineCurve::from_1d({0}), PolylineCurve::from_1d({5}));
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], (std::pair<std::size_t, std::size_t>{1, 1}));
    const auto w2 = dff_witness(PolylineCurve::from_1d({0, 0}), PolylineCurve::from_1d({5, 5}));
    EXPECT_EQ(w2.back(), (std::pair<std::size_t, std::size_t>{2, 2}));
}

TEST(Dff, MatchesExhaustiveAndWitness)
{
    std::mt19937_64 rng(21);
    for (int it = 0; it < 300; ++it) {
        const int d = 1 + it % 3;
        const auto p = random_curve(rng, 1 + it % 7, d), q = random_curve(rng, 1 + (it / 7) % 7, d);
        const double v = dff_value(p, q);
        EXPECT_EQ(v, oracle::dff_exhaustive(p.points(), q.points()));
        EXPECT_EQ(v, dff_value(q, p));
        EXPECT_LE(v, std::min(dist(p[0], q[0]), dist(p[p.size() - 1], q[q.size() - 1])));
        const auto w = dff_witness(p, q);
        ASSERT_FALSE(w.empty());
        EXPECT_EQ(w.front(), (std::pair<std::size_t, std::size_t>{1, 1}));
        EXPECT_EQ(w.back(), (std::pair<std::size_t, std::size_t>{p.size(), q.size()}));
        double m = INFINITY;
        for (std::size_t k = 0; k < w.size(); ++k) {
            m = std::min(m, dist(p[w[k].first - 1], q[w[k].second - 1]));
            if (k == 0) continue;
            const auto di = w[k].first - w[k - 1].first, dj = w[k].second - w[k - 1].second;
            EXPECT_TRUE((di == 1 && dj == 0) || (di == 0 && dj == 1) || (di == 1 && dj == 1));
        }
        EXPECT_EQ(m, v);
    }
}
