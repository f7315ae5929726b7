/*
hyperfan
Copyright 2026 The hyperfan authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "hyperfan/graph.hpp"
#include "hyperfan/henneberg.hpp"
#include "hyperfan/stress.hpp"
#include "hyperfan/tiling.hpp"

namespace hyperfan {

using json = nlohmann::json;

// Graph files: {"vertices": ["a", ...], "edges": [["a","b"], ...]}

inline json graph_to_json(const Graph& g)
{
    json j;
    j["vertices"] = g.vertex_ids();
    auto& edges = j["edges"] = json::array();
    for (const auto& [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    return j;
}

inline Graph graph_from_json(const json& j)
{
    Graph g;
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw MalformedGraph("graph JSON needs 'vertices' and 'edges'");
    }
    for (const auto& v : j.at("vertices")) {
        g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw MalformedGraph("graph edge entries must be [a, b]");
        }
        g.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    return g;
}

// Henneberg sequences mirror the in-memory fields.

inline json sequence_to_json(const HennebergSequence& seq)
{
    json j;
    j["base"] = seq.base == HennebergSequence::Base::K4 ? "K4" : "SingleEdge";
    j["base_vertices"] = seq.base_vertices;
    auto& steps = j["steps"] = json::array();
    for (const auto& s : seq.steps) {
        json js;
        js["new_vertex"] = s.new_vertex;
        if (s.kind == HennebergStep::Kind::H1) {
            js["kind"] = "H1";
            js["attach"] = {s.attach[0], s.attach[1]};
        }
        else {
            js["kind"] = "H2";
            js["split_edge"] = {s.split_edge[0], s.split_edge[1]};
            js["third"] = s.third;
        }
        steps.push_back(std::move(js));
    }
    return j;
}

inline HennebergSequence sequence_from_json(const json& j)
{
    HennebergSequence seq;
    const auto base = j.at("base").get<std::string>();
    if (base == "K4") {
        seq.base = HennebergSequence::Base::K4;
    }
    else if (base == "SingleEdge") {
        seq.base = HennebergSequence::Base::SingleEdge;
    }
    else {
        throw InvalidStep("unknown base graph: " + base);
    }
    for (const auto& v : j.at("base_vertices")) {
        seq.base_vertices.push_back(v.get<std::string>());
    }
    for (const auto& js : j.at("steps")) {
        HennebergStep s;
        s.new_vertex = js.at("new_vertex").get<std::string>();
        const auto kind = js.at("kind").get<std::string>();
        if (kind == "H1") {
            s.kind = HennebergStep::Kind::H1;
            s.attach = {js.at("attach").at(0).get<std::string>(),
                        js.at("attach").at(1).get<std::string>()};
        }
        else if (kind == "H2") {
            s.kind = HennebergStep::Kind::H2;
            s.split_edge = {js.at("split_edge").at(0).get<std::string>(),
                            js.at("split_edge").at(1).get<std::string>()};
            s.third = js.at("third").get<std::string>();
        }
        else {
            throw InvalidStep("unknown step kind: " + kind);
        }
        seq.steps.push_back(std::move(s));
    }
    return seq;
}

// Tiling files: {"vertices": [{"id": "...", "xyz": [x,y,z]}, ...],
//                "edges": [["a","b"] or ["a","b","major"], ...],
//                "faces": [["a","b","c"], ...]}
// The optional third edge entry marks an edge that takes the long way around
// its great circle. A "meta" object, when present, is ignored on input.

inline json tiling_to_json(const Tiling& t)
{
    json j;
    auto& vs = j["vertices"] = json::array();
    for (const auto& v : t.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["xyz"] = {v.pos.x, v.pos.y, v.pos.z};
        vs.push_back(std::move(jv));
    }
    auto& es = j["edges"] = json::array();
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        json je = {t.vertices[t.edges[e].first].id, t.vertices[t.edges[e].second].id};
        if (t.edge_major[e] != 0) {
            je.push_back("major");
        }
        es.push_back(std::move(je));
    }
    auto& fs = j["faces"] = json::array();
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        json jf = json::array();
        for (const int v : t.face_vertices(static_cast<int>(f))) {
            jf.push_back(t.vertices[v].id);
        }
        fs.push_back(std::move(jf));
    }
    return j;
}

inline Tiling tiling_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j.contains("faces")) {
        throw MalformedGraph("tiling JSON needs 'vertices', 'edges' and 'faces'");
    }
    std::vector<std::pair<std::string, SpherePoint>> vs;
    for (const auto& jv : j.at("vertices")) {
        const auto& xyz = jv.at("xyz");
        vs.emplace_back(
            jv.at("id").get<std::string>(),
            Vec3{xyz.at(0).get<double>(), xyz.at(1).get<double>(), xyz.at(2).get<double>()});
    }
    std::vector<EdgeSpec> es;
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() < 2 || je.size() > 3) {
            throw MalformedGraph("tiling edge entries must be [a, b] or [a, b, \"major\"]");
        }
        EdgeSpec e;
        e.a = je.at(0).get<std::string>();
        e.b = je.at(1).get<std::string>();
        if (je.size() == 3) {
            if (je.at(2).get<std::string>() != "major") {
                throw MalformedGraph("unknown edge marker " + je.at(2).dump());
            }
            e.major = true;
        }
        es.push_back(std::move(e));
    }
    std::vector<std::vector<std::string>> fs;
    for (const auto& jf : j.at("faces")) {
        std::vector<std::string> cyc;
        for (const auto& id : jf) {
            cyc.push_back(id.get<std::string>());
        }
        fs.push_back(std::move(cyc));
    }
    return build_tiling(vs, es, fs);
}

inline json count_report_to_json(const CountReport& r)
{
    json j;
    j["v"] = r.v;
    j["e"] = r.e;
    j["c"] = r.c;
    j["f2"] = r.f2;
    j["f3"] = r.f3;
    j["euler_residual"] = r.euler_residual;
    j["corner_residual_a"] = r.corner_residual_a;
    j["corner_residual_b"] = r.corner_residual_b;
    return j;
}

inline json polytope_to_json(const VirtualPolytope& vp)
{
    json j;
    j["tiling"] = tiling_to_json(vp.fan);
    auto& linears = j["tile_linears"] = json::array();
    for (const auto& a : vp.tile_linears) {
        linears.push_back({a.x, a.y, a.z});
    }
    j["stress"] = vp.stress.weights;
    j["closure_residual"] = vp.closure_residual;
    return j;
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw MalformedGraph("cannot open " + path);
    }
    return json::parse(in);
}

}  // namespace hyperfan
