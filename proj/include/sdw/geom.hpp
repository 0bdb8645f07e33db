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
#ifndef SDW_GEOM_HPP
#define SDW_GEOM_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdw {

/// Absolute tolerance for all distance comparisons.
inline constexpr double kEpsGeom = 1e-9;

/// Raised for malformed instances and violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Point = std::vector<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Twice the signed area of (o, a, b); positive when b is left of o->a.
inline double orient(Vec2 o, Vec2 a, Vec2 b) { return cross(a - o, b - o); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 lerp(Vec2 a, Vec2 b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

inline double dist_sqr(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

inline double dist(std::span<const double> a, std::span<const double> b) { return std::sqrt(dist_sqr(a, b)); }

inline Point lerp(std::span<const double> a, std::span<const double> b, double t)
{
    Point p(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) p[k] = a[k] + t * (b[k] - a[k]);
    return p;
}

/// Parameter in [0,1] of the point of segment ab closest to p.
inline double project_param(std::span<const double> p, std::span<const double> a, std::span<const double> b)
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double u = b[k] - a[k];
        num += (p[k] - a[k]) * u;
        den += u * u;
    }
    if (den <= 0.0) return 0.0;
    return std::clamp(num / den, 0.0, 1.0);
}

inline double point_segment_distance(std::span<const double> p, std::span<const double> a, std::span<const double> b)
{
    if (p.size() != a.size() || a.size() != b.size()) throw InputError("point_segment_distance: dimension mismatch");
    const double t = project_param(p, a, b);
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double d = p[k] - (a[k] + t * (b[k] - a[k]));
        s += d * d;
    }
    return std::sqrt(s);
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b)
{
    const Vec2 u = b - a;
    const double den = dot(u, u);
    const double t = den <= 0.0 ? 0.0 : std::clamp(dot(p - a, u) / den, 0.0, 1.0);
    return dist(p, lerp(a, b, t));
}

/// Polygonal curve with vertices points[0..n-1], parameterized over [1, n].
class PolylineCurve {
public:
    PolylineCurve() = default;

    PolylineCurve(int dim, std::vector<Point> points) : dim_(dim), points_(std::move(points))
    {
        if (dim_ < 1) throw InputError("curve: dim must be positive");
        if (points_.empty()) throw InputError("curve: points must be non-empty");
        for (const auto& p : points_) {
            if (static_cast<int>(p.size()) != dim_) throw InputError("curve: point dimension does not match dim");
            for (double c : p)
                if (!std::isfinite(c)) throw InputError("curve: non-finite coordinate");
        }
    }

    static PolylineCurve from_1d(const std::vector<double>& xs)
    {
        std::vector<Point> pts;
        pts.reserve(xs.size());
        for (double x : xs) pts.push_back({x});
        return PolylineCurve(1, std::move(pts));
    }

    static PolylineCurve from_2d(const std::vector<Vec2>& vs)
    {
        std::vector<Point> pts;
        pts.reserve(vs.size());
        for (auto v : vs) pts.push_back({v.x, v.y});
        return PolylineCurve(2, std::move(pts));
    }

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    /// 0-indexed vertex access.
    const Point& operator[](std::size_t i) const { return points_[i]; }
    Vec2 vec2(std::size_t i) const { return {points_[i][0], dim_ > 1 ? points_[i][1] : 0.0}; }

    /// Point at parameter t in [1, n].
    Point at(double t) const
    {
        const double n = static_cast<double>(points_.size());
        if (!(t >= 1.0 - kEpsGeom && t <= n + kEpsGeom)) throw InputError("curve parameter out of range");
        t = std::clamp(t, 1.0, n);
        std::size_t i = static_cast<std::size_t>(std::floor(t)) - 1;
        if (i + 1 >= points_.size()) return points_.back();
        return lerp(points_[i], points_[i + 1], t - std::floor(t));
    }

    double length() const
    {
        double l = 0.0;
        for (std::size_t i = 0; i + 1 < points_.size(); ++i) l += dist(points_[i], points_[i + 1]);
        return l;
    }

    PolylineCurve reversed() const
    {
        std::vector<Point> pts(points_.rbegin(), points_.rend());
        return PolylineCurve(dim_, std::move(pts));
    }

    friend bool operator==(const PolylineCurve&, const PolylineCurve&) = default;

private:
    int dim_ = 1;
    std::vector<Point> points_;
};

inline Point curve_point_at(const PolylineCurve& c, double t) { return c.at(t); }

/// Closed curve: the edge from the last vertex back to the first is implicit.
class ClosedCurve {
public:
    ClosedCurve() = default;
    explicit ClosedCurve(PolylineCurve c) : curve_(std::move(c)) {}

    const PolylineCurve& curve() const { return curve_; }
    std::size_t size() const { return curve_.size(); }
    int dim() const { return curve_.dim(); }

    /// Open polyline starting at vertex `start` that walks once around the loop
    /// (n + 1 vertices, first == last).
    PolylineCurve rotated_open(std::size_t start) const
    {
        const std::size_t n = curve_.size();
        std::vector<Point> pts;
        pts.reserve(n + 1);
        for (std::size_t k = 0; k <= n; ++k) pts.push_back(curve_[(start + k) % n]);
        return PolylineCurve(curve_.dim(), std::move(pts));
    }

    friend bool operator==(const ClosedCurve&, const ClosedCurve&) = default;

private:
    PolylineCurve curve_;
};

} // namespace sdw

#endif
