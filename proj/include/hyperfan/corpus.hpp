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

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "hyperfan/henneberg.hpp"
#include "hyperfan/rng.hpp"

namespace hyperfan {

inline bool is_planar(const Graph& g)
{
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    const auto ids = g.vertex_ids();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        index[ids[i]] = static_cast<int>(i);
    }
    BoostGraph bg(ids.size());
    for (const auto& [a, b] : g.edges()) {
        boost::add_edge(index[a], index[b], bg);
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

struct CorpusConfig {
    enum class Base { Edge, K4 };
    int count{10};
    int vertices{8};
    std::uint64_t seed{0};
    Base base{Base::Edge};
    // Sphere embeddings only exist for planar graphs, so growth steps that
    // break planarity are redrawn by default for the K4 base (the embedding
    // corpus). The Laman corpus is combinatorial and unrestricted.
    std::optional<bool> planar_only;
};

/**
 * @brief One random graph grown by Henneberg 1/2 steps from the chosen base.
 *
 * Steps pick the kind with equal probability, then uniform attach vertices
 * (H1) or a uniform edge plus third vertex (H2). With planar_only, steps
 * that break planarity are redrawn (up to 200 tries each, then the graph
 * restarts from the base). Vertices are named v0, v1, ... in creation order.
 */
inline Graph random_henneberg_graph(
    CorpusConfig::Base base, int target_vertices, std::mt19937_64& rng, bool planar_only)
{
    while (true) {
        Graph g = base == CorpusConfig::Base::K4
                      ? Graph::complete({"v0", "v1", "v2", "v3"})
                      : Graph::single_edge("v0", "v1");
        int next = static_cast<int>(g.vertex_count());
        bool stuck = false;
        while (static_cast<int>(g.vertex_count()) < target_vertices && !stuck) {
            const std::string w = "v" + std::to_string(next);
            stuck = true;
            for (int tries = 0; tries < 200; ++tries) {
                const auto ids = g.vertex_ids();
                HennebergStep s;
                s.new_vertex = w;
                const bool h2_possible = g.vertex_count() >= 3;
                if (!h2_possible || uniform01(rng) < 0.5) {
                    const std::size_t i = uniform_index(rng, ids.size());
                    const std::size_t j = uniform_index(rng, ids.size());
                    if (i == j) {
                        continue;
                    }
                    s.kind = HennebergStep::Kind::H1;
                    s.attach = {ids[i], ids[j]};
                }
                else {
                    const auto es = g.edges();
                    const auto& e = es[uniform_index(rng, es.size())];
                    const std::string& c = ids[uniform_index(rng, ids.size())];
                    if (c == e.first || c == e.second) {
                        continue;
                    }
                    s.kind = HennebergStep::Kind::H2;
                    s.split_edge = {e.first, e.second};
                    s.third = c;
                }
                const Graph h = apply_step(g, s);
                if (planar_only && !is_planar(h)) {
                    continue;
                }
                g = h;
                stuck = false;
                ++next;
                break;
            }
        }
        if (!stuck) {
            return g;
        }
    }
}

/**
 * @brief Deterministic corpus: graph i is drawn from a generator seeded with
 * seed XOR i, so members are independent of generation order.
 */
inline std::vector<Graph> generate_corpus(const CorpusConfig& cfg)
{
    const bool planar_only = cfg.planar_only.value_or(cfg.base == CorpusConfig::Base::K4);
    std::vector<Graph> out;
    out.reserve(cfg.count);
    for (int i = 0; i < cfg.count; ++i) {
        std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(i));
        Graph g = random_henneberg_graph(cfg.base, cfg.vertices, rng, planar_only);
        const auto cls = classify_sparsity(g);
        const bool ok = cfg.base == CorpusConfig::Base::K4
                            ? (cls.tag == SparsityClass::Tag::LamanPlusK && cls.k == 1)
                            : cls.tag == SparsityClass::Tag::Laman;
        if (!ok) {
            throw NotDecomposable("corpus generator produced an off-class graph");
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace hyperfan
