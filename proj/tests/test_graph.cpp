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
#include "hyperfan/henneberg.hpp"
#include "hyperfan/isomorphism.hpp"
#include "hyperfan/pebble.hpp"
#include "hyperfan/rng.hpp"
#include "oracles.hpp"

using namespace hyperfan;

namespace {

Graph k4() { return Graph::complete({"a", "b", "c", "d"}); }

Graph triangle() { return Graph::complete({"a", "b", "c"}); }

/** All labeled simple graphs on n vertices, by edge-subset mask. */
Graph graph_from_mask(int n, std::uint64_t mask)
{
    Graph g;
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
        ids.push_back("v" + std::to_string(i));
        g.add_vertex(ids.back());
    }
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (mask & (std::uint64_t{1} << bit)) {
                g.add_edge(ids[i], ids[j]);
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("graph invariants are enforced")
{
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    CHECK_THROWS_AS(g.add_vertex("a"), MalformedGraph);
    CHECK_THROWS_AS(g.add_edge("a", "a"), MalformedGraph);
    CHECK_THROWS_AS(g.add_edge("a", "zz"), MalformedGraph);
    g.add_edge("a", "b");
    CHECK_THROWS_AS(g.add_edge("b", "a"), MalformedGraph);
}

TEST_CASE("tight sparsity on the canonical examples")
{
    CHECK_FALSE(is_tight_sparse(k4()));  // 6 edges > 2*4-3
    CHECK(is_tight_sparse(Graph::single_edge("a", "b")));
    CHECK(is_tight_sparse(triangle()));
    CHECK(oracle::tight_sparse_exhaustive(triangle()));
    CHECK(is_tight_sparse(Graph{}));  // vacuous
}

TEST_CASE("pebble game matches exhaustive subset counting, v <= 5")
{
    for (int n = 1; n <= 5; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            REQUIRE(is_tight_sparse(g) == oracle::tight_sparse_exhaustive(g));
        }
    }
}

TEST_CASE("pebble game matches exhaustive subset counting on random v = 6, 7")
{
    std::mt19937_64 rng(5);
    for (int n : {6, 7}) {
        const int bits = n * (n - 1) / 2;
        for (int t = 0; t < 300; ++t) {
            std::uint64_t mask = 0;
            for (int b = 0; b < bits; ++b) {
                if (uniform01(rng) < 0.5) {
                    mask |= std::uint64_t{1} << b;
                }
            }
            const Graph g = graph_from_mask(n, mask);
            REQUIRE(is_tight_sparse(g) == oracle::tight_sparse_exhaustive(g));
        }
    }
}

TEST_CASE("classification of the canonical examples")
{
    const auto ck4 = classify_sparsity(k4());
    CHECK(ck4.tag == SparsityClass::Tag::LamanPlusK);
    CHECK(ck4.k == 1);
    REQUIRE(ck4.witness.size() == 1);

    Graph km = k4();
    km.remove_edge("a", "b");
    CHECK(classify_sparsity(km).tag == SparsityClass::Tag::Laman);
    CHECK(oracle::tight_sparse_exhaustive(km));

    // e = 2v+2 with a full-rank sparse spanning subgraph
    Graph k6 = Graph::complete({"a", "b", "c", "d", "e", "f"});
    k6.remove_edge("a", "b");
    const auto c6 = classify_sparsity(k6);
    CHECK(c6.tag == SparsityClass::Tag::LamanPlusK);
    CHECK(c6.k == 5);

    Graph path;
    path.add_vertex("a");
    path.add_vertex("b");
    path.add_vertex("c");
    path.add_edge("a", "b");
    path.add_edge("b", "c");
    CHECK(classify_sparsity(path).tag == SparsityClass::Tag::Deficient);

    Graph single;
    single.add_vertex("a");
    CHECK(classify_sparsity(single).tag == SparsityClass::Tag::Deficient);
}

TEST_CASE("removing the witness edges leaves a Laman graph")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_henneberg_graph(
            CorpusConfig::Base::K4, 5 + int(uniform_index(rng, 5)), rng, false);
        const auto cls = classify_sparsity(g);
        REQUIRE(cls.tag == SparsityClass::Tag::LamanPlusK);
        Graph h = g;
        for (const auto& [a, b] : cls.witness) {
            h.remove_edge(a, b);
        }
        CHECK(classify_sparsity(h).tag == SparsityClass::Tag::Laman);
    }
}

TEST_CASE("classification is invariant under relabeling")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_henneberg_graph(
            CorpusConfig::Base::Edge, 6 + int(uniform_index(rng, 4)), rng, false);
        Graph h;
        for (const auto& id : g.vertex_ids()) {
            h.add_vertex("x" + id);
        }
        for (const auto& [a, b] : g.edges()) {
            h.add_edge("x" + a, "x" + b);
        }
        CHECK(classify_sparsity(h).tag == classify_sparsity(g).tag);
    }
}

TEST_CASE("rigidity circuits")
{
    CHECK(is_rigidity_circuit(k4()));
    CHECK(oracle::rigidity_circuit_exhaustive(k4()));
    CHECK_FALSE(is_rigidity_circuit(triangle()));

    Graph g = k4();  // K4 plus a vertex joined to two of its corners
    g.add_vertex("e");
    g.add_edge("e", "a");
    g.add_edge("e", "b");
    CHECK_FALSE(is_rigidity_circuit(g));
    CHECK_FALSE(oracle::rigidity_circuit_exhaustive(g));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        const Graph r = random_henneberg_graph(
            CorpusConfig::Base::K4, 5 + int(uniform_index(rng, 3)), rng, false);
        CHECK(is_rigidity_circuit(r) == oracle::rigidity_circuit_exhaustive(r));
    }
}

TEST_CASE("decomposition of the base cases")
{
    const auto sk4 = henneberg_decompose(k4());
    CHECK(sk4.base == HennebergSequence::Base::K4);
    CHECK(sk4.steps.empty());
    CHECK(sk4.base_vertices.size() == 4);

    Graph km = k4();
    km.remove_edge("a", "b");
    const auto skm = henneberg_decompose(km);
    CHECK(skm.base == HennebergSequence::Base::SingleEdge);
    CHECK(skm.steps.size() == 2);
    CHECK(replay(skm) == km);

    Graph g = apply_step(
        k4(), HennebergStep{HennebergStep::Kind::H1, "e", {"a", "b"}, {}, ""});
    const auto sg = henneberg_decompose(g);
    CHECK(sg.base == HennebergSequence::Base::K4);
    CHECK(sg.steps.size() == 1);
    CHECK(sg.steps[0].kind == HennebergStep::Kind::H1);

    Graph path;
    path.add_vertex("a");
    path.add_vertex("b");
    path.add_vertex("c");
    path.add_edge("a", "b");
    path.add_edge("b", "c");
    CHECK_THROWS_AS(henneberg_decompose(path), NotDecomposable);
}

TEST_CASE("apply_step validates its inputs")
{
    CHECK_THROWS_AS(
        apply_step(k4(), HennebergStep{HennebergStep::Kind::H1, "a", {"b", "c"}, {}, ""}),
        InvalidStep);  // vertex exists
    CHECK_THROWS_AS(
        apply_step(k4(), HennebergStep{HennebergStep::Kind::H1, "e", {"b", "b"}, {}, ""}),
        InvalidStep);  // attach not distinct
    CHECK_THROWS_AS(
        apply_step(
            k4(), HennebergStep{HennebergStep::Kind::H2, "e", {}, {"a", "b"}, "a"}),
        InvalidStep);  // third inside split edge
    Graph km = k4();
    km.remove_edge("a", "b");
    CHECK_THROWS_AS(
        apply_step(km, HennebergStep{HennebergStep::Kind::H2, "e", {}, {"a", "b"}, "c"}),
        InvalidStep);  // split edge missing

    const Graph g = apply_step(
        triangle(), HennebergStep{HennebergStep::Kind::H1, "d", {"a", "b"}, {}, ""});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);

    const Graph h = apply_step(
        k4(), HennebergStep{HennebergStep::Kind::H2, "e", {}, {"a", "b"}, "c"});
    CHECK(h.degree("e") == 3);
    CHECK_FALSE(h.has_edge("a", "b"));
}

TEST_CASE("decompose and replay round-trips on a random corpus")
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        const auto base =
            uniform01(rng) < 0.5 ? CorpusConfig::Base::Edge : CorpusConfig::Base::K4;
        const Graph g = random_henneberg_graph(
            base, 5 + int(uniform_index(rng, 8)), rng, false);
        const auto seq = henneberg_decompose(g);

        // Edge counts along the replay stay on the class line.
        Graph cur = seq.base == HennebergSequence::Base::K4
                        ? Graph::complete(seq.base_vertices)
                        : Graph::single_edge(seq.base_vertices[0], seq.base_vertices[1]);
        const long offset = seq.base == HennebergSequence::Base::K4 ? -2 : -3;
        for (const auto& s : seq.steps) {
            cur = apply_step(cur, s);
            REQUIRE(
                static_cast<long>(cur.edge_count()) ==
                2 * static_cast<long>(cur.vertex_count()) + offset);
        }
        CHECK(cur == g);
        CHECK(is_isomorphic(cur, g));
        CHECK(seq.steps.size() <= g.vertex_count() - seq.base_vertices.size());
    }
}

TEST_CASE("isomorphism checker distinguishes basic cases")
{
    CHECK(is_isomorphic(k4(), Graph::complete({"w", "x", "y", "z"})));
    Graph path;
    path.add_vertex("a");
    path.add_vertex("b");
    path.add_vertex("c");
    path.add_edge("a", "b");
    path.add_edge("b", "c");
    CHECK_FALSE(is_isomorphic(triangle(), path));

    // Same degree sequence, different structure: C6 vs two C3.
    Graph c6, c33;
    for (int i = 0; i < 6; ++i) {
        c6.add_vertex("v" + std::to_string(i));
        c33.add_vertex("v" + std::to_string(i));
    }
    for (int i = 0; i < 6; ++i) {
        c6.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % 6));
    }
    for (int i = 0; i < 3; ++i) {
        c33.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % 3));
        c33.add_edge("v" + std::to_string(3 + i), "v" + std::to_string(3 + (i + 1) % 3));
    }
    CHECK_FALSE(is_isomorphic(c6, c33));
}
