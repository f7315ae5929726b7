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

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperfan/graph.hpp"
#include "hyperfan/pebble.hpp"

namespace hyperfan {

/**
 * @brief One vertex-addition step.
 *
 * H1 adds `new_vertex` with edges to the two `attach` vertices. H2 removes
 * `split_edge`, then adds `new_vertex` joined to both of its endpoints and to
 * `third`.
 */
struct HennebergStep {
    enum class Kind { H1, H2 };
    Kind kind{Kind::H1};
    std::string new_vertex;
    std::array<std::string, 2> attach;      // H1
    std::array<std::string, 2> split_edge;  // H2
    std::string third;                      // H2
};

/**
 * @brief A base graph plus an ordered step list.
 *
 * `base_vertices` pins the ids of the base graph so the steps' vertex
 * references resolve on replay. Base SingleEdge needs 2 ids, base K4 needs 4.
 */
struct HennebergSequence {
    enum class Base { SingleEdge, K4 };
    Base base{Base::SingleEdge};
    std::vector<std::string> base_vertices;
    std::vector<HennebergStep> steps;
};

/** Applies one step, validating it against the current graph. */
inline Graph apply_step(const Graph& g, const HennebergStep& s)
{
    Graph out = g;
    if (out.has_vertex(s.new_vertex)) {
        throw InvalidStep("new vertex already present: " + s.new_vertex);
    }
    if (s.kind == HennebergStep::Kind::H1) {
        const auto& [a, b] = s.attach;
        if (a == b) {
            throw InvalidStep("H1 attach vertices must be distinct");
        }
        if (!out.has_vertex(a) || !out.has_vertex(b)) {
            throw InvalidStep("H1 attach vertex missing");
        }
        out.add_vertex(s.new_vertex);
        out.add_edge(s.new_vertex, a);
        out.add_edge(s.new_vertex, b);
    }
    else {
        const auto& [a, b] = s.split_edge;
        if (!out.has_edge(a, b)) {
            throw InvalidStep("H2 split edge missing: " + a + "-" + b);
        }
        if (s.third == a || s.third == b || !out.has_vertex(s.third)) {
            throw InvalidStep("H2 third vertex invalid: " + s.third);
        }
        out.remove_edge(a, b);
        out.add_vertex(s.new_vertex);
        out.add_edge(s.new_vertex, a);
        out.add_edge(s.new_vertex, b);
        out.add_edge(s.new_vertex, s.third);
    }
    return out;
}

/** Rebuilds the graph encoded by a sequence. */
inline Graph replay(const HennebergSequence& seq)
{
    Graph g;
    if (seq.base == HennebergSequence::Base::SingleEdge) {
        if (seq.base_vertices.size() != 2) {
            throw InvalidStep("SingleEdge base needs exactly 2 vertices");
        }
        g = Graph::single_edge(seq.base_vertices[0], seq.base_vertices[1]);
    }
    else {
        if (seq.base_vertices.size() != 4) {
            throw InvalidStep("K4 base needs exactly 4 vertices");
        }
        g = Graph::complete(seq.base_vertices);
    }
    for (const auto& s : seq.steps) {
        g = apply_step(g, s);
    }
    return g;
}

namespace detail {

inline bool in_target_class(const Graph& g, HennebergSequence::Base base)
{
    return base == HennebergSequence::Base::SingleEdge ? is_laman(g) : is_laman_plus_one(g);
}

inline bool is_base(const Graph& g, HennebergSequence::Base base)
{
    if (base == HennebergSequence::Base::SingleEdge) {
        return g.vertex_count() == 2 && g.edge_count() == 1;
    }
    return g.vertex_count() == 4 && g.edge_count() == 6;
}

}  // namespace detail

namespace detail {

template <typename Fn>
inline bool enumerate_rec(
    const Graph& g,
    HennebergSequence::Base base,
    std::vector<HennebergStep>& fwd,
    long& budget,
    const Fn& fn)
{
    if (budget <= 0) {
        return false;
    }
    if (is_base(g, base)) {
        --budget;
        HennebergSequence seq;
        seq.base = base;
        seq.base_vertices = g.vertex_ids();
        seq.steps = fwd;
        return fn(seq);
    }

    for (const auto& id : g.vertex_ids()) {
        if (g.degree(id) != 2) {
            continue;
        }
        const auto& nbrs = g.neighbors(id);
        auto it = nbrs.begin();
        const std::string a = *it++;
        const std::string b = *it;
        Graph h = g;
        h.remove_vertex(id);
        if (!in_target_class(h, base)) {
            continue;
        }
        HennebergStep s;
        s.kind = HennebergStep::Kind::H1;
        s.new_vertex = id;
        s.attach = {a, b};
        fwd.insert(fwd.begin(), s);
        if (enumerate_rec(h, base, fwd, budget, fn)) {
            return true;
        }
        fwd.erase(fwd.begin());
    }

    for (const auto& id : g.vertex_ids()) {
        if (g.degree(id) != 3) {
            continue;
        }
        std::vector<std::string> nbrs(g.neighbors(id).begin(), g.neighbors(id).end());
        const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
        for (const auto& p : pairs) {
            const std::string& a = nbrs[p[0]];
            const std::string& b = nbrs[p[1]];
            if (g.has_edge(a, b)) {
                continue;
            }
            Graph h = g;
            h.remove_vertex(id);
            h.add_edge(a, b);
            if (!in_target_class(h, base)) {
                continue;
            }
            HennebergStep s;
            s.kind = HennebergStep::Kind::H2;
            s.new_vertex = id;
            s.split_edge = {a, b};
            s.third = nbrs[3 - p[0] - p[1]];
            fwd.insert(fwd.begin(), s);
            if (enumerate_rec(h, base, fwd, budget, fn)) {
                return true;
            }
            fwd.erase(fwd.begin());
        }
    }
    return false;
}

}  // namespace detail

/**
 * @brief Depth-first enumeration of all Henneberg decompositions.
 *
 * Reverse moves (degree-2 removal, degree-3 removal plus edge re-insertion)
 * are tried in sorted-id order and must stay inside the sparsity class, so
 * the walk is deterministic. `fn` receives complete sequences in forward
 * replay order and returns true to stop; at most `max_sequences` are
 * produced. Returns whether fn stopped the walk.
 */
template <typename Fn>
inline bool for_each_decomposition(const Graph& g, long max_sequences, const Fn& fn)
{
    const auto cls = classify_sparsity(g);
    HennebergSequence::Base base;
    if (cls.tag == SparsityClass::Tag::Laman) {
        base = HennebergSequence::Base::SingleEdge;
    }
    else if (cls.tag == SparsityClass::Tag::LamanPlusK && cls.k == 1) {
        base = HennebergSequence::Base::K4;
    }
    else {
        throw NotDecomposable("graph is neither Laman nor Laman-plus-one");
    }
    std::vector<HennebergStep> fwd;
    long budget = max_sequences;
    return detail::enumerate_rec(g, base, fwd, budget, fn);
}

/**
 * @brief Reverse Henneberg search for Laman and Laman-plus-one graphs.
 *
 * Removes a degree-2 vertex (H1 undo) or a degree-3 vertex with a valid edge
 * re-insertion (H2 undo) at each level, keeping the graph inside its sparsity
 * class, until the base (single edge resp. K4) is reached. Replaying the
 * result reproduces the input graph. Terminates in at most v - base steps.
 */
inline HennebergSequence henneberg_decompose(const Graph& g)
{
    std::optional<HennebergSequence> found;
    for_each_decomposition(g, 1000000, [&](const HennebergSequence& seq) {
        found = seq;
        return true;
    });
    if (!found) {
        throw NotDecomposable("reverse search dead-ended before reaching the base graph");
    }
    return *found;
}

}  // namespace hyperfan
