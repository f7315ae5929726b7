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
#include <catch2/catch_amalgamated.hpp>

#include "hyperfan/corpus.hpp"
#include "hyperfan/embedder.hpp"
#include "hyperfan/json_io.hpp"
#include "hyperfan/render.hpp"

using namespace hyperfan;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("graph JSON round-trips")
{
    Graph g = Graph::complete({"a", "b", "c", "d"});
    g.add_vertex("e");
    g.add_edge("e", "a");
    g.add_edge("e", "b");
    const json j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);
    CHECK(dump_json(graph_to_json(graph_from_json(j))) == dump_json(j));

    CHECK_THROWS_AS(graph_from_json(json::object()), MalformedGraph);
    CHECK_THROWS_AS(
        graph_from_json(json::parse(R"({"vertices":["a"],"edges":[["a","a"]]})")),
        MalformedGraph);
    CHECK_THROWS_AS(
        graph_from_json(json::parse(R"({"vertices":["a","b"],"edges":[["a","z"]]})")),
        MalformedGraph);
    CHECK_THROWS_AS(
        graph_from_json(
            json::parse(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})")),
        MalformedGraph);
}

TEST_CASE("Henneberg sequence JSON mirrors the fields")
{
    Graph g = Graph::complete({"p", "q", "r", "s"});
    g = apply_step(g, HennebergStep{HennebergStep::Kind::H1, "t", {"p", "q"}, {}, ""});
    g = apply_step(g, HennebergStep{HennebergStep::Kind::H2, "u", {}, {"p", "r"}, "t"});
    const auto seq = henneberg_decompose(g);
    const auto back = sequence_from_json(sequence_to_json(seq));
    CHECK(back.base == seq.base);
    CHECK(back.base_vertices == seq.base_vertices);
    REQUIRE(back.steps.size() == seq.steps.size());
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        CHECK(back.steps[i].kind == seq.steps[i].kind);
        CHECK(back.steps[i].new_vertex == seq.steps[i].new_vertex);
        CHECK(back.steps[i].attach == seq.steps[i].attach);
        CHECK(back.steps[i].split_edge == seq.steps[i].split_edge);
        CHECK(back.steps[i].third == seq.steps[i].third);
    }
    CHECK(replay(back) == g);
}

TEST_CASE("tiling JSON round-trips byte for byte")
{
    for (const Tiling& t : {seed_k4(), octahedron()}) {
        const std::string once = dump_json(tiling_to_json(t));
        const Tiling back = tiling_from_json(json::parse(once));
        const std::string twice = dump_json(tiling_to_json(back));
        CHECK(once == twice);
        CHECK(back.vertices.size() == t.vertices.size());
        CHECK(back.edges.size() == t.edges.size());
        CHECK(back.faces.size() == t.faces.size());
        for (std::size_t v = 0; v < t.vertices.size(); ++v) {
            CHECK(back.vertices[v].pos == t.vertices[v].pos);  // exact doubles
        }
        for (std::size_t e = 0; e < t.edges.size(); ++e) {
            CHECK(back.edge_major[e] == t.edge_major[e]);
        }
    }
}

TEST_CASE("tiling JSON rejects malformed input")
{
    CHECK_THROWS_AS(tiling_from_json(json::object()), MalformedGraph);
    json j = tiling_to_json(seed_k4());
    j["edges"][0] = {"a", "b", "sideways"};
    CHECK_THROWS_AS(tiling_from_json(j), MalformedGraph);
}

TEST_CASE("SVG output has one polyline per edge and one path per di-gon")
{
    const Tiling seed = seed_k4();
    RenderSpec spec;
    spec.highlight = RenderSpec::Highlight::Digons;
    const std::string svg = render_svg(seed, spec);
    CHECK(count_occurrences(svg, "<polyline") == seed.edges.size());
    CHECK(count_occurrences(svg, "<path") == 4);

    // Deterministic output, and sample count changes geometry but not structure.
    CHECK(render_svg(seed, spec) == svg);
    RenderSpec fine = spec;
    fine.samples_per_arc = 64;
    const std::string svg2 = render_svg(seed, fine);
    CHECK(svg2 != svg);
    CHECK(count_occurrences(svg2, "<polyline") == seed.edges.size());
    CHECK(count_occurrences(svg2, "<path") == 4);

    RenderSpec bad;
    bad.samples_per_arc = 4;
    CHECK_THROWS_AS(render_svg(seed, bad), MalformedGraph);
}

TEST_CASE("corpus generation is reproducible and classified")
{
    CorpusConfig cfg;
    cfg.count = 6;
    cfg.vertices = 8;
    cfg.seed = 31337;
    cfg.base = CorpusConfig::Base::Edge;
    const auto once = generate_corpus(cfg);
    const auto twice = generate_corpus(cfg);
    REQUIRE(once.size() == 6);
    for (std::size_t i = 0; i < once.size(); ++i) {
        CHECK(once[i] == twice[i]);
        CHECK(classify_sparsity(once[i]).tag == SparsityClass::Tag::Laman);
    }

    cfg.base = CorpusConfig::Base::K4;
    for (const auto& g : generate_corpus(cfg)) {
        CHECK(is_laman_plus_one(g));
        CHECK(is_planar(g));
    }
}
