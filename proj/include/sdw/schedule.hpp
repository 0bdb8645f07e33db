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
#ifndef SDW_SCHEDULE_HPP
#define SDW_SCHEDULE_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "geom.hpp"

namespace sdw {

/// One breakpoint of a coordinated traversal. `blue` is domain specific: a curve
/// parameter, a list of parameters (k agents), a plane point, or a tree point.
struct Breakpoint {
    double time = 0.0;
    double red = 1.0;
    std::vector<double> blue;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear witness of a coordinated traversal over time [0, 1].
struct Schedule {
    std::vector<Breakpoint> breakpoints;
    std::string domain;

    void validate() const
    {
        if (breakpoints.empty()) throw InputError("schedule: no breakpoints");
        if (breakpoints.front().time != 0.0 || breakpoints.back().time != 1.0)
            throw InputError("schedule: times must start at 0 and end at 1");
        for (std::size_t i = 1; i < breakpoints.size(); ++i) {
            if (!(breakpoints[i].time > breakpoints[i - 1].time))
                throw InputError("schedule: times must be strictly increasing");
            if (breakpoints[i].red < breakpoints[i - 1].red - kEpsGeom)
                throw InputError("schedule: red parameter must be non-decreasing");
            if (breakpoints[i].blue.size() != breakpoints[0].blue.size())
                throw InputError("schedule: inconsistent blue position arity");
        }
    }

    /// Evenly timed schedule through the given (red, blue) waypoints. Consecutive
    /// duplicates are dropped; a single waypoint becomes a static schedule.
    static Schedule from_waypoints(const std::vector<std::pair<double, std::vector<double>>>& pts, std::string domain)
    {
        std::vector<std::pair<double, std::vector<double>>> clean;
        for (const auto& p : pts)
            if (clean.empty() || clean.back() != p) clean.push_back(p);
        if (clean.empty()) throw InputError("schedule: no waypoints");
        if (clean.size() == 1) clean.push_back(clean.front());
        Schedule s;
        s.domain = std::move(domain);
        const double k = static_cast<double>(clean.size() - 1);
        for (std::size_t i = 0; i < clean.size(); ++i) {
            const double t = i + 1 == clean.size() ? 1.0 : static_cast<double>(i) / k;
            s.breakpoints.push_back({t, clean[i].first, clean[i].second});
        }
        return s;
    }

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Answer of a decision procedure plus an optional traversal witness.
struct Decision {
    bool yes = false;
    std::optional<Schedule> witness;
    explicit operator bool() const { return yes; }
};

inline std::vector<double> lerp_vec(const std::vector<double>& a, const std::vector<double>& b, double f)
{
    std::vector<double> r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + f * (b[k] - a[k]);
    return r;
}

/// Minimum separation seen along a schedule, sampled at every breakpoint and at
/// `samples_per_leg` interior times per leg. `red_at(param)` and
/// `blue_at(from, to, fraction)` produce positions, `distance` compares them.
template <class RedAt, class BlueAt, class Distance>
double simulate_min_distance(const Schedule& schedule, RedAt&& red_at, BlueAt&& blue_at, Distance&& distance,
                             int samples_per_leg)
{
    schedule.validate();
    const auto& bp = schedule.breakpoints;
    double best = std::numeric_limits<double>::infinity();
    auto probe = [&](std::size_t leg, double f) {
        const auto& a = bp[leg];
        const auto& b = bp[std::min(leg + 1, bp.size() - 1)];
        const double red = a.red + f * (b.red - a.red);
        best = std::min(best, distance(red_at(red), blue_at(a.blue, b.blue, f)));
    };
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        probe(i, 0.0);
        for (int k = 1; k <= samples_per_leg; ++k) probe(i, static_cast<double>(k) / (samples_per_leg + 1));
    }
    probe(bp.size() - 1, 0.0);
    return best;
}

/// Euclidean simulation where every blue coordinate is a parameter of one of
/// the `blues` curves; the reported value is the minimum over all agent pairs
/// that are adjacent in the list red, blues[0], blues[1], ...
inline double simulate_curves(const Schedule& schedule, const PolylineCurve& red, const std::vector<PolylineCurve>& blues,
                              int samples_per_leg)
{
    for (const auto& bp : schedule.breakpoints) {
        if (bp.blue.size() != blues.size()) throw InputError("schedule/domain mismatch: blue arity");
        if (bp.red < 1.0 - kEpsGeom || bp.red > static_cast<double>(red.size()) + kEpsGeom)
            throw InputError("schedule/domain mismatch: red parameter out of range");
        for (std::size_t k = 0; k < blues.size(); ++k)
            if (bp.blue[k] < 1.0 - kEpsGeom || bp.blue[k] > static_cast<double>(blues[k].size()) + kEpsGeom)
                throw InputError("schedule/domain mismatch: blue parameter out of range");
    }
    struct Agents {
        std::vector<Point> pos;
    };
    auto red_at = [&](double p) { return red.at(p); };
    auto blue_at = [&](const std::vector<double>& a, const std::vector<double>& b, double f) {
        Agents ag;
        const auto v = lerp_vec(a, b, f);
        for (std::size_t k = 0; k < blues.size(); ++k) ag.pos.push_back(blues[k].at(v[k]));
        return ag;
    };
    auto distance = [&](const Point& r, const Agents& ag) {
        double d = dist(r, ag.pos[0]);
        for (std::size_t k = 1; k < ag.pos.size(); ++k) d = std::min(d, dist(ag.pos[k - 1], ag.pos[k]));
        return d;
    };
    return simulate_min_distance(schedule, red_at, blue_at, distance, samples_per_leg);
}

} // namespace sdw

#endif
