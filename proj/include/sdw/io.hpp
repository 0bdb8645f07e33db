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
#ifndef SDW_IO_HPP
#define SDW_IO_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geom.hpp"
#include "graph.hpp"
#include "polygon.hpp"
#include "schedule.hpp"
#include "tree.hpp"

namespace sdw::io {

using json = nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";

namespace detail {

inline const json& field(const json& j, const char* key)
{
    if (!j.is_object()) throw InputError("json: expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("json: missing field '") + key + "'");
    return *it;
}

inline double number(const json& j, const std::string& where)
{
    if (!j.is_number()) throw InputError("json: field '" + where + "' must be a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InputError("json: field '" + where + "' must be finite");
    return x;
}

inline std::size_t index(const json& j, const std::string& where)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw InputError("json: field '" + where + "' must be a non-negative integer");
    return j.get<std::size_t>();
}

inline const json& array(const json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError("json: field '" + where + "' must be an array");
    return j;
}

inline std::vector<Vec2> points2(const json& j, const std::string& where)
{
    std::vector<Vec2> out;
    for (const auto& p : array(j, where)) {
        if (!p.is_array() || p.size() != 2) throw InputError("json: field '" + where + "' needs [x,y] pairs");
        out.push_back({number(p[0], where), number(p[1], where)});
    }
    return out;
}

} // namespace detail

inline json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("io: cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("io: '" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw InputError("io: cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
inline std::string digest(const json& j)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline PolylineCurve curve_from_json(const json& j)
{
    const int dim = static_cast<int>(detail::index(detail::field(j, "dim"), "dim"));
    std::vector<Point> pts;
    for (const auto& p : detail::array(detail::field(j, "points"), "points")) {
        if (!p.is_array()) throw InputError("json: field 'points' must hold coordinate arrays");
        Point q;
        for (const auto& c : p) q.push_back(detail::number(c, "points"));
        pts.push_back(std::move(q));
    }
    return PolylineCurve(dim, std::move(pts));
}

inline json curve_to_json(const PolylineCurve& c)
{
    json pts = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) pts.push_back(c[i]);
    return {{"dim", c.dim()}, {"points", pts}};
}

inline bool is_closed(const json& j) { return j.is_object() && j.value("closed", false); }

inline ClosedCurve closed_curve_from_json(const json& j)
{
    return ClosedCurve(curve_from_json(j));
}

inline json schedule_to_json(const Schedule& s)
{
    json bps = json::array();
    for (const auto& b : s.breakpoints) {
        json row = {b.time, b.red};
        for (double x : b.blue) row.push_back(x);
        bps.push_back(row);
    }
    return {{"domain", s.domain}, {"breakpoints", bps}};
}

inline Schedule schedule_from_json(const json& j)
{
    Schedule s;
    if (j.contains("domain")) s.domain = j.at("domain").get<std::string>();
    for (const auto& row : detail::array(detail::field(j, "breakpoints"), "breakpoints")) {
        if (!row.is_array() || row.size() < 2) throw InputError("json: field 'breakpoints' rows need [t, red, ...]");
        Breakpoint b{detail::number(row[0], "breakpoints"), detail::number(row[1], "breakpoints"), {}};
        for (std::size_t k = 2; k < row.size(); ++k) b.blue.push_back(detail::number(row[k], "breakpoints"));
        s.breakpoints.push_back(std::move(b));
    }
    s.validate();
    return s;
}

inline SimplePolygon polygon_from_json(const json& j)
{
    return SimplePolygon(detail::points2(detail::field(j, "vertices"), "vertices"));
}

inline json polygon_to_json(const SimplePolygon& p)
{
    json v = json::array();
    for (Vec2 q : p.vertices()) v.push_back({q.x, q.y});
    return {{"vertices", v}};
}

inline WeightedTree tree_from_json(const json& j)
{
    const std::size_t n = detail::index(detail::field(j, "n"), "n");
    std::vector<TreeEdge> e;
    for (const auto& x : detail::array(detail::field(j, "edges"), "edges")) {
        if (!x.is_array() || x.size() != 3) throw InputError("json: field 'edges' needs [u,v,w] triples");
        e.push_back({detail::index(x[0], "edges"), detail::index(x[1], "edges"), detail::number(x[2], "edges")});
    }
    return WeightedTree(n, std::move(e));
}

inline json tree_to_json(const WeightedTree& t)
{
    json e = json::array();
    for (const auto& x : t.edges()) e.push_back({x.u, x.v, x.length});
    return {{"n", t.size()}, {"edges", e}};
}

namespace detail {

inline std::vector<GraphEdge> graph_edges(const json& j)
{
    std::vector<GraphEdge> out;
    for (const auto& x : array(field(j, "edges"), "edges")) {
        if (!x.is_array() || x.size() != 2) throw InputError("json: field 'edges' needs [i,j] pairs");
        out.emplace_back(index(x[0], "edges"), index(x[1], "edges"));
    }
    return out;
}

} // namespace detail

inline GeometricGraph geometric_graph_from_json(const json& j)
{
    return GeometricGraph(detail::points2(detail::field(j, "nodes"), "nodes"), detail::graph_edges(j));
}

inline json graph_to_json(const GeometricGraph& g)
{
    json nodes = json::array(), edges = json::array();
    for (Vec2 p : g.nodes()) nodes.push_back({p.x, p.y});
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"nodes", nodes}, {"edges", edges}};
}

/// Abstract graphs give either "n" or a "nodes" list (coordinates ignored).
inline AbstractGraph abstract_graph_from_json(const json& j)
{
    std::size_t n = 0;
    if (j.is_object() && j.contains("n")) n = detail::index(j.at("n"), "n");
    else n = detail::array(detail::field(j, "nodes"), "nodes").size();
    return AbstractGraph(n, detail::graph_edges(j));
}

inline json abstract_graph_to_json(const AbstractGraph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", edges}};
}

struct RunReport {
    std::string command;
    std::vector<std::string> digests;
    std::string answer;           // "YES", "NO" or a value
    std::optional<double> value;
    std::string witness;          // path, empty when none was written
    double wall_time = 0.0;       // seconds
    json extra = json::object();

    json to_json() const
    {
        json j = {{"command", command}, {"digests", digests},   {"answer", answer},
                  {"witness", witness}, {"wall_time", wall_time}, {"version", kVersion}};
        if (value) j["value"] = *value;
        if (!extra.empty()) j["details"] = extra;
        return j;
    }
};

} // namespace sdw::io

#endif
