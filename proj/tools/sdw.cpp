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
// Command-line front end. Every command prints a JSON run report; exit codes are
// 0 for YES or a value, 1 for NO, 2 for input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdw/generators.hpp"
#include "sdw/io.hpp"
#include "sdw/oracles.hpp"
#include "sdw/sdw.hpp"

using namespace sdw;
using nlohmann::json;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    int resolution = 64;
    std::string witness;
    bool quiet = false;
    std::string metric = "euclidean";
};

struct Outcome {
    int code = 0;
    io::RunReport report;
};

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

Outcome yes_no(bool yes)
{
    Outcome o;
    o.code = yes ? 0 : 1;
    o.report.answer = yes ? "YES" : "NO";
    return o;
}

Outcome valued(double v)
{
    Outcome o;
    o.report.answer = fmt(v);
    o.report.value = v;
    return o;
}

/// Reads an instance file and records its digest.
json load(const std::string& path, std::vector<std::string>& digests)
{
    json j = io::read_file(path);
    digests.push_back(io::digest(j));
    return j;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

double parse_double(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        const double x = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(x)) throw std::invalid_argument(s);
        return x;
    } catch (const std::logic_error&) {
        throw InputError("cli: bad number '" + s + "' for " + what);
    }
}

Vec2 parse_point(const std::string& s, const std::string& what)
{
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw InputError("cli: " + what + " must be \"x,y\"");
    return {parse_double(parts[0], what), parse_double(parts[1], what)};
}

std::vector<std::size_t> parse_vertices(const std::string& s, const std::string& what)
{
    std::vector<std::size_t> out;
    for (const auto& tok : split(s, ',')) {
        const double x = parse_double(tok, what);
        if (x < 0 || x != std::floor(x)) throw InputError("cli: " + what + " needs vertex indices");
        out.push_back(static_cast<std::size_t>(x));
    }
    if (out.empty()) throw InputError("cli: " + what + " is empty");
    return out;
}

std::vector<std::vector<int>> parse_bits(const std::string& s, const std::string& what)
{
    std::vector<std::vector<int>> out;
    for (const auto& tok : split(s, ',')) {
        std::vector<int> v;
        for (char c : tok) {
            if (c != '0' && c != '1') throw InputError("cli: " + what + " vectors must be 0/1 strings");
            v.push_back(c - '0');
        }
        out.push_back(std::move(v));
    }
    return out;
}

Curve1D as_1d(const PolylineCurve& c, const std::string& what)
{
    if (c.dim() != 1) throw InputError("cli: " + what + " must be a 1D curve");
    Curve1D out;
    for (const auto& p : c.points()) out.push_back(p[0]);
    return out;
}

std::vector<oracle::P2> to_p2(const std::vector<Vec2>& vs)
{
    std::vector<oracle::P2> out;
    for (Vec2 v : vs) out.push_back({v.x, v.y});
    return out;
}

oracle::Poly to_poly(const PolylineCurve& c) { return oracle::Poly(c.points().begin(), c.points().end()); }

oracle::TreeEdges to_tree_edges(const WeightedTree& t)
{
    oracle::TreeEdges out;
    for (const auto& e : t.edges()) out.emplace_back(e.u, e.v, e.length);
    return out;
}

oracle::Edges to_edges(const std::vector<GraphEdge>& es) { return oracle::Edges(es.begin(), es.end()); }

std::vector<oracle::XY> to_xy(const std::vector<Vec2>& vs)
{
    std::vector<oracle::XY> out;
    for (Vec2 v : vs) out.emplace_back(v.x, v.y);
    return out;
}

std::vector<oracle::XY> to_xy(const PolylineCurve& c)
{
    std::vector<oracle::XY> out;
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c.vec2(i).x, c.vec2(i).y);
    return out;
}

GraphMetric parse_metric(const std::string& m)
{
    if (m == "euclidean") return GraphMetric::Euclidean;
    if (m == "geodesic") return GraphMetric::Geodesic;
    throw InputError("cli: metric must be euclidean or geodesic");
}

void require_euclidean(const Globals& g)
{
    if (g.metric != "euclidean") throw InputError("cli: this command supports only --metric euclidean");
}

/// Writes a witness when --witness was given, after re-checking it by simulation.
void emit_witness(const Globals& g, Outcome& o, const json& w, std::optional<double> simulated)
{
    if (simulated) o.report.extra["witness_min_distance"] = *simulated;
    if (g.witness.empty()) return;
    io::write_file(g.witness, w);
    o.report.witness = g.witness;
}

} // namespace

namespace cmd {

struct CurvePair {
    std::string red, blue;
    double delta = 0.0;
};

Outcome ff1d_decide(const Globals& g, const CurvePair& a)
{
    io::RunReport r;
    const auto red = io::curve_from_json(load(a.red, r.digests));
    const auto blue = io::curve_from_json(load(a.blue, r.digests));
    const auto d = decide_1d(as_1d(red, "red"), as_1d(blue, "blue"), a.delta, !g.witness.empty());
    Outcome o = yes_no(d.yes);
    o.report.digests = r.digests;
    if (d.witness) emit_witness(g, o, io::schedule_to_json(*d.witness), simulate_curves(*d.witness, red, {blue}, 10));
    return o;
}

Outcome ff1d_value(const Globals&, const CurvePair& a)
{
    io::RunReport r;
    const auto red = io::curve_from_json(load(a.red, r.digests));
    const auto blue = io::curve_from_json(load(a.blue, r.digests));
    Outcome o = valued(ff_value_1d(as_1d(red, "red"), as_1d(blue, "blue")));
    o.report.digests = r.digests;
    return o;
}

Outcome ff_decide(const Globals& g, const CurvePair& a)
{
    require_euclidean(g);
    io::RunReport r;
    const json jr = load(a.red, r.digests), jb = load(a.blue, r.digests);
    if (io::is_closed(jr) || io::is_closed(jb)) {
        Outcome o = yes_no(decide_closed_curves(io::closed_curve_from_json(jr), io::closed_curve_from_json(jb), a.delta));
        o.report.digests = r.digests;
        o.report.extra["closed"] = true;
        return o;
    }
    const auto red = io::curve_from_json(jr), blue = io::curve_from_json(jb);
    const auto d = decide_ff(red, blue, a.delta, !g.witness.empty());
    Outcome o = yes_no(d.yes);
    o.report.digests = r.digests;
    if (d.witness) emit_witness(g, o, io::schedule_to_json(*d.witness), simulate_curves(*d.witness, red, {blue}, 10));
    return o;
}

Outcome ff_value(const Globals& g, const CurvePair& a)
{
    require_euclidean(g);
    io::RunReport r;
    const json jr = load(a.red, r.digests), jb = load(a.blue, r.digests);
    if (io::is_closed(jr) || io::is_closed(jb)) {
        Outcome o = valued(sdw_closed_curves(io::closed_curve_from_json(jr), io::closed_curve_from_json(jb)));
        o.report.digests = r.digests;
        o.report.extra["closed"] = true;
        return o;
    }
    const auto red = io::curve_from_json(jr), blue = io::curve_from_json(jb);
    const double v = sdw::ff_value(red, blue);
    Outcome o = valued(v);
    o.report.digests = r.digests;
    if (!g.witness.empty()) {
        const auto d = decide_ff(red, blue, v, true);
        if (d.witness) emit_witness(g, o, io::schedule_to_json(*d.witness), simulate_curves(*d.witness, red, {blue}, 10));
    }
    return o;
}

Outcome ff_criticals(const Globals& g, const CurvePair& a)
{
    require_euclidean(g);
    io::RunReport r;
    const auto red = io::curve_from_json(load(a.red, r.digests));
    const auto blue = io::curve_from_json(load(a.blue, r.digests));
    json list = json::array();
    for (const auto& c : critical_values(red, blue)) list.push_back({{"value", c.value}, {"tag", c.tag}});
    Outcome o;
    o.report.answer = std::to_string(list.size());
    o.report.digests = r.digests;
    o.report.extra["criticals"] = list;
    return o;
}

Outcome dff_value(const Globals& g, const std::string& p_path, const std::string& q_path)
{
    io::RunReport r;
    const auto p = io::curve_from_json(load(p_path, r.digests));
    const auto q = io::curve_from_json(load(q_path, r.digests));
    Outcome o = valued(sdw::dff_value(p, q));
    o.report.digests = r.digests;
    if (!g.witness.empty()) {
        const auto path = dff_witness(p, q);
        std::vector<std::pair<double, std::vector<double>>> pts;
        double worst = INFINITY;
        for (auto [i, j] : path) {
            pts.push_back({static_cast<double>(i), {static_cast<double>(j)}});
            worst = std::min(worst, dist(p[i - 1], q[j - 1]));
        }
        emit_witness(g, o, io::schedule_to_json(Schedule::from_waypoints(pts, "dff")), worst);
    }
    return o;
}

struct PolyArgs {
    std::string polygon, red, blue_start;
    double delta = 0.0;
    bool require_geodesic = false;
};

Outcome poly_escape(const Globals&, const PolyArgs& a)
{
    io::RunReport r;
    const GeodesicIndex idx(io::polygon_from_json(load(a.polygon, r.digests)));
    const auto red = io::curve_from_json(load(a.red, r.digests));
    const Vec2 b = parse_point(a.blue_start, "--blue-start");
    const bool on_boundary = idx.polygon().locate_boundary(b).has_value();
    Outcome o;
    if (a.require_geodesic || !on_boundary) {
        const auto res = decide_escape_geodesic_red(idx, b, red, a.delta);
        o = yes_no(res.yes);
        o.report.extra["solver"] = "geodesic-red";
        if (res.safe_point) {
            o.report.extra["safe_point"] = {res.safe_point->x, res.safe_point->y};
            o.report.extra["safe_point_distance"] = distance_point_to_path(idx, *res.safe_point, red);
        }
    } else {
        o = yes_no(decide_escape_arbitrary_red(idx, b, red, a.delta));
        o.report.extra["solver"] = "boundary-reduction";
    }
    o.report.digests = r.digests;
    return o;
}

Outcome poly_sdw(const Globals& g, const std::string& path)
{
    require_euclidean(g);
    io::RunReport r;
    const auto poly = io::polygon_from_json(load(path, r.digests));
    Outcome o = valued(sdw_polygon(poly));
    o.report.digests = r.digests;
    return o;
}

Outcome tree_sdw(const Globals& g, const std::string& path, const std::string& strategy)
{
    io::RunReport r;
    const auto t = io::tree_from_json(load(path, r.digests));
    const auto res = sdw::tree_sdw(t);
    Outcome o = valued(res.value);
    o.report.digests = r.digests;
    const auto& x = res.outlier;
    o.report.extra["center"] = x.center;
    o.report.extra["witnesses"] = {x.a, x.b, x.c};
    o.report.extra["diameter"] = tree_diameter(t).length;
    const std::string out = strategy.empty() ? g.witness : strategy;
    if (!out.empty()) {
        const auto tour = default_tour(t);
        const auto s = blue_strategy(t, x, tour);
        o.report.extra["witness_min_distance"] = simulate_tree(t, tour, s);
        io::write_file(out, {{"tour", tour}, {"schedule", io::schedule_to_json(s)}});
        o.report.witness = out;
    }
    return o;
}

struct GraphArgs {
    std::string graph, red, h, g, blue_start;
    double delta = 0.0;
    int speed = 1;
};

Outcome graph_abstract(const Globals& gl, const GraphArgs& a)
{
    io::RunReport r;
    const auto g = io::abstract_graph_from_json(load(a.graph, r.digests));
    const auto red = parse_vertices(a.red, "--red");
    if (a.delta != std::floor(a.delta)) throw InputError("cli: abstract graphs need an integer --delta");
    std::optional<std::size_t> start;
    if (!a.blue_start.empty()) start = parse_vertices(a.blue_start, "--blue-start").front();
    const auto d = decide_abstract(g, red, a.speed, static_cast<int>(a.delta), start, !gl.witness.empty());
    Outcome o = yes_no(d.yes);
    o.report.digests = r.digests;
    if (d.witness) {
        double worst = INFINITY;
        for (const auto& bp : d.witness->breakpoints)
            worst = std::min(worst, static_cast<double>(g.hop(red[static_cast<std::size_t>(bp.red) - 1],
                                                              static_cast<std::size_t>(bp.blue[0]))));
        emit_witness(gl, o, io::schedule_to_json(*d.witness), worst);
    }
    return o;
}

Outcome graph_geometric(const Globals& gl, const GraphArgs& a)
{
    io::RunReport r;
    const auto g = io::geometric_graph_from_json(load(a.graph, r.digests));
    const auto red = io::curve_from_json(load(a.red, r.digests));
    Outcome o = yes_no(decide_blue_on_graph(red, g, a.delta, parse_metric(gl.metric)));
    o.report.digests = r.digests;
    o.report.extra["metric"] = gl.metric;
    return o;
}

Outcome graph_sdw_small(const Globals& gl, const GraphArgs& a)
{
    io::RunReport r;
    const auto h = io::geometric_graph_from_json(load(a.h, r.digests));
    const auto g = io::geometric_graph_from_json(load(a.g, r.digests));
    Outcome o = yes_no(sdw_graphs_small(h, g, a.delta, gl.resolution));
    o.report.digests = r.digests;
    o.report.extra["resolution"] = gl.resolution;
    return o;
}

struct GenArgs {
    std::string u, v, out_red, out_blue, kind, out;
    std::size_t n = 10, extra = 0;
};

Outcome gen_ov(const GenArgs& a, bool planar)
{
    const OVInstance inst{parse_bits(a.u, "--u"), parse_bits(a.v, "--v")};
    const auto [red, blue] = planar ? gen_ov_2d(inst) : gen_ov_1d_discrete(inst);
    const json jr = io::curve_to_json(red), jb = io::curve_to_json(blue);
    Outcome o;
    o.report.answer = inst.has_orthogonal_pair() ? "orthogonal" : "none";
    o.report.digests = {io::digest(jr), io::digest(jb)};
    o.report.extra["red_vertices"] = red.size();
    o.report.extra["blue_vertices"] = blue.size();
    if (!a.out_red.empty()) io::write_file(a.out_red, jr);
    if (!a.out_blue.empty()) io::write_file(a.out_blue, jb);
    if (a.out_red.empty() && a.out_blue.empty()) o.report.extra["instance"] = {{"red", jr}, {"blue", jb}};
    return o;
}

Outcome gen_random(const Globals& g, const GenArgs& a)
{
    Rng rng(g.seed);
    json inst;
    if (a.kind == "curve1d") inst = io::curve_to_json(PolylineCurve::from_1d(random_curve_1d(rng, a.n)));
    else if (a.kind == "curve2d") inst = io::curve_to_json(random_curve_2d(rng, a.n));
    else if (a.kind == "polygon") inst = io::polygon_to_json(random_polygon(rng, a.n));
    else if (a.kind == "tree") inst = io::tree_to_json(random_tree(rng, a.n));
    else if (a.kind == "graph") inst = io::graph_to_json(random_geometric_graph(rng, a.n, a.extra));
    else throw InputError("cli: --kind must be curve1d, curve2d, polygon, tree or graph");
    Outcome o;
    o.report.answer = a.kind;
    o.report.digests = {io::digest(inst)};
    o.report.extra["seed"] = g.seed;
    if (a.out.empty()) o.report.extra["instance"] = inst;
    else io::write_file(a.out, inst);
    return o;
}

struct OracleArgs {
    std::string red, blue, polygon, blue_start, tree, graph, from, to, red_walk;
    double delta = 0.0, value = 0.0;
    int speed = 1;
};

Outcome oracle_grid_curves(const Globals& g, const OracleArgs& a)
{
    io::RunReport r;
    const auto red = io::curve_from_json(load(a.red, r.digests));
    const auto blue = io::curve_from_json(load(a.blue, r.digests));
    if (red.dim() != blue.dim()) throw InputError("cli: dimension mismatch");
    Outcome o = yes_no(oracle::grid_curves(to_poly(red), to_poly(blue), a.delta, {g.resolution}));
    o.report.digests = r.digests;
    return o;
}

Outcome oracle_dff(const Globals&, const OracleArgs& a)
{
    io::RunReport r;
    const auto p = io::curve_from_json(load(a.red, r.digests));
    const auto q = io::curve_from_json(load(a.blue, r.digests));
    Outcome o = valued(oracle::dff_exhaustive(to_poly(p), to_poly(q)));
    o.report.digests = r.digests;
    return o;
}

Outcome oracle_escape(const Globals& g, const OracleArgs& a)
{
    io::RunReport r;
    const auto poly = io::polygon_from_json(load(a.polygon, r.digests));
    const auto red = io::curve_from_json(load(a.red, r.digests));
    const Vec2 b = parse_point(a.blue_start, "--blue-start");
    std::vector<oracle::P2> rp;
    for (std::size_t i = 0; i < red.size(); ++i) rp.push_back({red.vec2(i).x, red.vec2(i).y});
    Outcome o = yes_no(oracle::escape_grid(to_p2(poly.vertices()), {b.x, b.y}, rp, a.delta, {g.resolution}));
    o.report.digests = r.digests;
    return o;
}

Outcome oracle_visibility(const Globals&, const OracleArgs& a)
{
    io::RunReport r;
    const auto poly = io::polygon_from_json(load(a.polygon, r.digests));
    const Vec2 p = parse_point(a.from, "--from"), q = parse_point(a.to, "--to");
    Outcome o = valued(oracle::visibility_distance(to_p2(poly.vertices()), {p.x, p.y}, {q.x, q.y}));
    o.report.digests = r.digests;
    return o;
}

Outcome oracle_tree(const Globals&, const OracleArgs& a)
{
    io::RunReport r;
    const auto t = io::tree_from_json(load(a.tree, r.digests));
    const auto e = to_tree_edges(t);
    Outcome o = yes_no(oracle::oracle_tree_game(t.size(), e, a.value));
    o.report.digests = r.digests;
    o.report.extra["step"] = oracle::tree_game_step(e);
    return o;
}

Outcome oracle_graph_grid(const Globals& g, const OracleArgs& a)
{
    io::RunReport r;
    const auto gr = io::geometric_graph_from_json(load(a.graph, r.digests));
    const auto red = io::curve_from_json(load(a.red, r.digests));
    const bool geo = parse_metric(g.metric) == GraphMetric::Geodesic;
    Outcome o = yes_no(oracle::graph_grid(to_xy(gr.nodes()), to_edges(gr.edges()), to_xy(red), a.delta, geo, {g.resolution}));
    o.report.digests = r.digests;
    return o;
}

Outcome oracle_abstract(const Globals&, const OracleArgs& a)
{
    io::RunReport r;
    const auto g = io::abstract_graph_from_json(load(a.graph, r.digests));
    if (a.delta != std::floor(a.delta)) throw InputError("cli: abstract graphs need an integer --delta");
    std::optional<std::size_t> start;
    if (!a.blue_start.empty()) start = parse_vertices(a.blue_start, "--blue-start").front();
    const auto red = parse_vertices(a.red_walk, "--red");
    validate_red_walk(g, red);
    Outcome o = yes_no(oracle::abstract_game(g.size(), to_edges(g.edges()), red, a.speed, static_cast<int>(a.delta), start));
    o.report.digests = r.digests;
    return o;
}

struct BenchArgs {
    std::string suite;
    std::size_t nmax = 2, n = 8, count = 20;
};

/// All instances with N vectors per side of dimension dim when there are at most
/// 256 of them, else `sample` random ones.
std::vector<OVInstance> ov_instances(Rng& rng, std::size_t n, std::size_t dim, std::size_t sample)
{
    if (sample == 0) return {};
    const auto vecs = all_binary_vectors(dim);
    const double total = std::pow(static_cast<double>(vecs.size()), 2.0 * static_cast<double>(n));
    std::vector<OVInstance> out;
    if (total <= 256.0) {
        std::vector<std::size_t> digit(2 * n, 0);
        for (;;) {
            OVInstance inst;
            for (std::size_t k = 0; k < n; ++k) inst.U.push_back(vecs[digit[k]]), inst.V.push_back(vecs[digit[n + k]]);
            out.push_back(std::move(inst));
            std::size_t k = 0;
            while (k < digit.size() && ++digit[k] == vecs.size()) digit[k++] = 0;
            if (k == digit.size()) break;
        }
        return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, vecs.size() - 1);
    for (std::size_t i = 0; i < sample; ++i) {
        OVInstance inst;
        for (std::size_t k = 0; k < n; ++k) inst.U.push_back(vecs[pick(rng)]), inst.V.push_back(vecs[pick(rng)]);
        out.push_back(std::move(inst));
    }
    return out;
}

Outcome bench(const Globals& g, const BenchArgs& a)
{
    Rng rng(g.seed);
    json rows = json::array();
    bool all = true;
    auto row = [&](json r, bool ok) {
        r["agree"] = ok;
        all = all && ok;
        rows.push_back(std::move(r));
    };
    if (a.suite == "ov") {
        for (std::size_t n = 1; n <= a.nmax; ++n)
            for (std::size_t dim : {2u, 4u})
                for (const auto& inst : ov_instances(rng, n, dim, a.count)) {
                    const bool orth = inst.has_orthogonal_pair();
                    const auto [r2, b2] = gen_ov_2d(inst);
                    const bool ff_ok = orth ? decide_ff(r2, b2, 1.0).yes : !decide_ff(r2, b2, ov_alpha() + 1e-9).yes;
                    const auto [r1, b1] = gen_ov_1d_discrete(inst);
                    const double v1 = dff_value(r1, b1);
                    const bool dff_ok = orth ? v1 >= 1.0 - 1e-12 : v1 <= 2.0 / 3.0 + 1e-12;
                    row({{"N", n}, {"D", dim}, {"orthogonal", orth}, {"ff_ok", ff_ok}, {"dff_ok", dff_ok}}, ff_ok && dff_ok);
                }
    } else if (a.suite == "random-curves") {
        if (a.n > 8) throw InputError("cli: random-curves needs --n <= 8 (exhaustive oracle cap)");
        for (std::size_t i = 0; i < a.count; ++i) {
            const auto p = random_curve_2d(rng, a.n), q = random_curve_2d(rng, a.n);
            const double dv = dff_value(p, q), de = oracle::dff_exhaustive(to_poly(p), to_poly(q));
            const double fv = sdw::ff_value(p, q);
            const bool bracket = decide_ff(p, q, fv).yes && !decide_ff(p, q, fv + 1e-6).yes;
            row({{"i", i}, {"dff", dv}, {"dff_oracle", de}, {"ff", fv}, {"ff_bracket", bracket}}, std::abs(dv - de) <= 1e-12 && bracket);
        }
    } else if (a.suite == "trees") {
        if (a.nmax > 9) throw InputError("cli: trees needs --nmax <= 9");
        for (std::size_t n = 1; n <= a.nmax; ++n)
            for (const auto& e : oracle::all_unlabeled_trees(n)) {
                std::vector<TreeEdge> te;
                for (const auto& [u, v, w] : e) te.push_back({u, v, w});
                const double v = sdw::tree_sdw(WeightedTree(n, te)).value;
                const double step = n == 1 ? 1e-6 : oracle::tree_game_step(e);
                const bool ok = oracle::oracle_tree_game(n, e, v) && !oracle::oracle_tree_game(n, e, v + step);
                row({{"n", n}, {"value", v}, {"step", step}}, ok);
            }
    } else if (a.suite == "polygons") {
        for (std::size_t i = 0; i < a.count; ++i) {
            const auto poly = random_polygon(rng, std::max<std::size_t>(a.n, 3));
            const GeodesicIndex idx(poly);
            double worst = 0.0;
            for (int k = 0; k < 5; ++k) {
                const Vec2 p = random_point_in(rng, poly), q = random_point_in(rng, poly);
                worst = std::max(worst, std::abs(idx.distance(p, q) -
                                                 oracle::visibility_distance(to_p2(poly.vertices()), {p.x, p.y}, {q.x, q.y})));
            }
            row({{"i", i}, {"max_error", worst}}, worst <= 1e-9);
        }
    } else {
        throw InputError("cli: --suite must be ov, random-curves, trees or polygons");
    }
    Outcome o;
    o.code = all ? 0 : 1;
    o.report.answer = all ? "PASS" : "FAIL";
    o.report.extra["suite"] = a.suite;
    o.report.extra["rows"] = rows;
    return o;
}

} // namespace cmd

int main(int argc, char** argv)
{
    CLI::App app{"Social distance width solvers"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--resolution", g.resolution, "grid resolution for oracles and sdw-small")->check(CLI::PositiveNumber);
    app.add_option("--witness", g.witness, "write the witness schedule here");
    app.add_flag("--quiet", g.quiet, "do not print the report");
    app.add_option("--metric", g.metric, "euclidean or geodesic");

    std::function<Outcome()> run;
    std::string command;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<Outcome()> fn) {
        auto* sub = parent->add_subcommand(name, desc);
        sub->callback([&, parent, sub, fn] {
            run = fn;
            command = (parent == &app ? "" : parent->get_name() + " ") + sub->get_name();
        });
        return sub;
    };

    cmd::CurvePair cp;
    auto curve_opts = [&](CLI::App* s, bool with_delta) {
        s->add_option("--red", cp.red, "red curve")->required();
        s->add_option("--blue", cp.blue, "blue curve")->required();
        if (with_delta) s->add_option("--delta", cp.delta, "separation")->required();
    };
    auto* ff1d = app.add_subcommand("ff1d", "curves on the line");
    ff1d->require_subcommand(1);
    curve_opts(leaf(ff1d, "decide", "separation > delta feasible?", [&] { return cmd::ff1d_decide(g, cp); }), true);
    curve_opts(leaf(ff1d, "value", "supremum separation", [&] { return cmd::ff1d_value(g, cp); }), false);

    auto* ff = app.add_subcommand("ff", "continuous curves in R^d");
    ff->require_subcommand(1);
    curve_opts(leaf(ff, "decide", "separation >= delta feasible?", [&] { return cmd::ff_decide(g, cp); }), true);
    curve_opts(leaf(ff, "value", "best separation", [&] { return cmd::ff_value(g, cp); }), false);
    curve_opts(leaf(ff, "criticals", "candidate values", [&] { return cmd::ff_criticals(g, cp); }), false);

    std::string p_path, q_path;
    auto* dff = app.add_subcommand("dff", "discrete curves");
    dff->require_subcommand(1);
    auto* dffv = leaf(dff, "value", "discrete value", [&] { return cmd::dff_value(g, p_path, q_path); });
    dffv->add_option("--p", p_path)->required();
    dffv->add_option("--q", q_path)->required();

    cmd::PolyArgs pa;
    auto* poly = app.add_subcommand("poly", "simple polygons");
    poly->require_subcommand(1);
    auto* esc = leaf(poly, "escape", "can Blue keep away from Red?", [&] { return cmd::poly_escape(g, pa); });
    esc->add_option("--polygon", pa.polygon)->required();
    esc->add_option("--red", pa.red)->required();
    esc->add_option("--blue-start", pa.blue_start, "\"x,y\"")->required();
    esc->add_option("--delta", pa.delta)->required();
    esc->add_flag("--require-geodesic", pa.require_geodesic);
    leaf(poly, "sdw", "width of the polygon boundary", [&] { return cmd::poly_sdw(g, pa.polygon); })
        ->add_option("--polygon", pa.polygon)
        ->required();

    std::string tree_path, strategy;
    auto* tree = app.add_subcommand("tree", "weighted trees");
    tree->require_subcommand(1);
    auto* ts = leaf(tree, "sdw", "width of a tree", [&] { return cmd::tree_sdw(g, tree_path, strategy); });
    ts->add_option("--tree", tree_path)->required();
    ts->add_option("--strategy", strategy, "write Blue's strategy here");

    cmd::GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "graphs");
    graph->require_subcommand(1);
    auto* ab = leaf(graph, "abstract", "Red walk on an abstract graph", [&] { return cmd::graph_abstract(g, ga); });
    ab->add_option("--graph", ga.graph)->required();
    ab->add_option("--red", ga.red, "\"v1,v2,...\"")->required();
    ab->add_option("--speed", ga.speed)->check(CLI::NonNegativeNumber);
    ab->add_option("--delta", ga.delta)->required();
    ab->add_option("--blue-start", ga.blue_start);
    auto* geo = leaf(graph, "geometric", "Blue confined to a geometric graph", [&] { return cmd::graph_geometric(g, ga); });
    geo->add_option("--graph", ga.graph)->required();
    geo->add_option("--red", ga.red)->required();
    geo->add_option("--delta", ga.delta)->required();
    auto* small = leaf(graph, "sdw-small", "both agents on graphs", [&] { return cmd::graph_sdw_small(g, ga); });
    small->set_help_flag("--help", "Print this help message and exit");
    small->add_option("--h", ga.h)->required();
    small->add_option("--g", ga.g)->required();
    small->add_option("--delta", ga.delta)->required();

    cmd::GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    for (const bool planar : {true, false}) {
        auto* s = leaf(gen, planar ? "ov2d" : "ov1d", "OV gadget curves",
                       [&, planar] { return cmd::gen_ov(gen_args, planar); });
        s->add_option("--u", gen_args.u, "\"010,110\"")->required();
        s->add_option("--v", gen_args.v)->required();
        s->add_option("--out-red", gen_args.out_red);
        s->add_option("--out-blue", gen_args.out_blue);
    }
    auto* rnd = leaf(gen, "random", "random instance", [&] { return cmd::gen_random(g, gen_args); });
    rnd->add_option("--kind", gen_args.kind)->required();
    rnd->add_option("--n", gen_args.n)->check(CLI::Range(1, 10000));
    rnd->add_option("--extra", gen_args.extra, "extra edges for graphs");
    rnd->add_option("--out", gen_args.out);

    cmd::OracleArgs oa;
    auto* orc = app.add_subcommand("oracle", "brute-force references");
    orc->require_subcommand(1);
    auto* gc = leaf(orc, "grid-curves", "sampled staircase search", [&] { return cmd::oracle_grid_curves(g, oa); });
    gc->add_option("--red", oa.red)->required();
    gc->add_option("--blue", oa.blue)->required();
    gc->add_option("--delta", oa.delta)->required();
    auto* dx = leaf(orc, "dff-exhaustive", "all vertex traversals", [&] { return cmd::oracle_dff(g, oa); });
    dx->add_option("--p", oa.red)->required();
    dx->add_option("--q", oa.blue)->required();
    auto* eg = leaf(orc, "escape-grid", "time-expanded polygon grid", [&] { return cmd::oracle_escape(g, oa); });
    eg->add_option("--polygon", oa.polygon)->required();
    eg->add_option("--red", oa.red)->required();
    eg->add_option("--blue-start", oa.blue_start)->required();
    eg->add_option("--delta", oa.delta)->required();
    auto* vis = leaf(orc, "visibility", "visibility-graph distance", [&] { return cmd::oracle_visibility(g, oa); });
    vis->add_option("--polygon", oa.polygon)->required();
    vis->add_option("--from", oa.from)->required();
    vis->add_option("--to", oa.to)->required();
    auto* tg = leaf(orc, "tree-game", "pursuit game on a subdivided tree", [&] { return cmd::oracle_tree(g, oa); });
    tg->add_option("--tree", oa.tree)->required();
    tg->add_option("--value", oa.value)->required();
    auto* gg = leaf(orc, "graph-grid", "time-expanded graph grid", [&] { return cmd::oracle_graph_grid(g, oa); });
    gg->add_option("--graph", oa.graph)->required();
    gg->add_option("--red", oa.red)->required();
    gg->add_option("--delta", oa.delta)->required();
    auto* ag = leaf(orc, "abstract-game", "memoized game search", [&] { return cmd::oracle_abstract(g, oa); });
    ag->add_option("--graph", oa.graph)->required();
    ag->add_option("--red", oa.red_walk)->required();
    ag->add_option("--speed", oa.speed);
    ag->add_option("--delta", oa.delta)->required();
    ag->add_option("--blue-start", oa.blue_start);

    cmd::BenchArgs ba;
    auto* be = leaf(&app, "bench", "solver/oracle agreement suites", [&] { return cmd::bench(g, ba); });
    be->add_option("--suite", ba.suite)->required();
    be->add_option("--nmax", ba.nmax);
    be->add_option("--n", ba.n);
    be->add_option("--count", ba.count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "sdw: " << e.what() << "\n";
        return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const InputError& e) {
        std::cerr << "sdw: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "sdw: malformed json: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "sdw: " << e.what() << "\n";
        return 2;
    }
    o.report.command = command;
    o.report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!g.quiet) std::cout << o.report.to_json().dump(2) << "\n";
    return o.code;
}
