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
#ifndef SDW_NUMERIC_HPP
#define SDW_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace sdw {

struct Interval {
    double lo;
    double hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted list of disjoint closed intervals.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(std::initializer_list<Interval> xs)
    {
        for (auto iv : xs) add(iv);
    }

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    const std::vector<Interval>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const Interval& front() const { return items_.front(); }
    const Interval& back() const { return items_.back(); }

    /// Inserts [lo, hi], merging with anything it touches (within tol).
    void add(Interval iv, double tol = 0.0)
    {
        if (!(iv.lo <= iv.hi)) return;
        std::vector<Interval> out;
        out.reserve(items_.size() + 1);
        bool placed = false;
        for (const auto& cur : items_) {
            if (cur.hi + tol < iv.lo) {
                out.push_back(cur);
            } else if (iv.hi + tol < cur.lo) {
                if (!placed) {
                    out.push_back(iv);
                    placed = true;
                }
                out.push_back(cur);
            } else {
                iv.lo = std::min(iv.lo, cur.lo);
                iv.hi = std::max(iv.hi, cur.hi);
            }
        }
        if (!placed) out.push_back(iv);
        items_ = std::move(out);
    }

    void add(const IntervalSet& other, double tol = 0.0)
    {
        for (auto iv : other.items_) add(iv, tol);
    }

    bool contains(double x, double tol = 0.0) const
    {
        for (const auto& iv : items_)
            if (x >= iv.lo - tol && x <= iv.hi + tol) return true;
        return false;
    }

    IntervalSet intersect(const IntervalSet& other) const
    {
        IntervalSet r;
        std::size_t i = 0, j = 0;
        while (i < items_.size() && j < other.items_.size()) {
            const double lo = std::max(items_[i].lo, other.items_[j].lo);
            const double hi = std::min(items_[i].hi, other.items_[j].hi);
            if (lo <= hi) r.items_.push_back({lo, hi});
            if (items_[i].hi < other.items_[j].hi) ++i;
            else ++j;
        }
        return r;
    }

    IntervalSet intersect(Interval iv) const { return intersect(IntervalSet{iv}); }

    std::optional<double> min_value() const
    {
        if (items_.empty()) return std::nullopt;
        return items_.front().lo;
    }
    std::optional<double> max_value() const
    {
        if (items_.empty()) return std::nullopt;
        return items_.back().hi;
    }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> items_;
};

/// Golden-section search for the minimizer of a unimodal f on [a, b].
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, int iters = 80)
{
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < iters && b - a > 1e-15; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    double best = f1 <= f2 ? x1 : x2;
    double fb = std::min(f1, f2);
    const double fa = f(a), fbb = f(b);
    if (fa < fb) { best = a; fb = fa; }
    if (fbb < fb) { best = b; fb = fbb; }
    return {best, fb};
}

/// Bisection on a predicate that is true at `yes` and false at `no`; returns the
/// boundary point on the `yes` side.
template <class P>
double bisect_boundary(P&& pred, double yes, double no, int iters = 100)
{
    for (int it = 0; it < iters; ++it) {
        const double mid = 0.5 * (yes + no);
        if (mid == yes || mid == no) break;
        if (pred(mid)) yes = mid;
        else no = mid;
    }
    return yes;
}

/// For f convex on [a, b]: the closed set {x in [a,b] : f(x) >= level}, at most two intervals.
template <class F>
IntervalSet convex_superlevel(F&& f, double a, double b, double level)
{
    auto [xm, fm] = golden_min(f, a, b);
    if (fm >= level) return IntervalSet{{a, b}};
    IntervalSet r;
    auto ok = [&](double x) { return f(x) >= level; };
    if (ok(a)) r.add({a, bisect_boundary(ok, a, xm)});
    if (ok(b)) r.add({bisect_boundary(ok, b, xm), b});
    return r;
}

/// For f concave on [a, b]: the closed set {x in [a,b] : f(x) >= level}, at most one interval.
template <class F>
IntervalSet concave_superlevel(F&& f, double a, double b, double level)
{
    auto neg = [&](double x) { return -f(x); };
    auto [xm, fm] = golden_min(neg, a, b);
    if (-fm < level) return {};
    auto ok = [&](double x) { return f(x) >= level; };
    const double lo = ok(a) ? a : bisect_boundary(ok, xm, a);
    const double hi = ok(b) ? b : bisect_boundary(ok, xm, b);
    return IntervalSet{{lo, hi}};
}

/// Real roots of a x^2 + b x + c = 0 in ascending order.
inline std::vector<double> quadratic_roots(double a, double b, double c)
{
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == 0.0) return {};
    if (std::abs(a) <= 1e-14 * scale) {
        if (std::abs(b) <= 1e-14 * scale) return {};
        return {-c / b};
    }
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        if (disc > -1e-12 * std::max(1.0, b * b)) disc = 0.0;
        else return {};
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
    double r1 = q / a;
    double r2 = q != 0.0 ? c / q : r1;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

} // namespace sdw

#endif
