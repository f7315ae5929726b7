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

#include <string>
#include <vector>

#include "hyperfan/graph.hpp"

namespace hyperfan {

/** Edges kept / discarded by a pebble game run, in insertion order. */
struct PebbleOutcome {
    std::vector<EdgeIds> accepted;
    std::vector<EdgeIds> rejected;
};

/**
 * @brief (k, l)-pebble game over the graph's edges in sorted order.
 *
 * Every vertex starts with k pebbles. An edge is accepted when l+1 pebbles
 * can be gathered onto its endpoints by reversing directed paths; acceptance
 * consumes one pebble and directs the edge. The accepted set is a maximal
 * (k, l)-sparse subgraph, so a graph is (k, l)-sparse exactly when nothing is
 * rejected. Vertex ordering is fixed (sorted ids), making runs reproducible.
 */
inline PebbleOutcome pebble_game(const Graph& g, int k = 2, int l = 3)
{
    const auto ids = g.vertex_ids();
    const int n = static_cast<int>(ids.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        index[ids[i]] = i;
    }

    std::vector<std::vector<int>> out(n);
    std::vector<int> pebbles(n, k);

    // Move one pebble to `target` by reversing a directed path to a vertex
    // holding a free pebble; `avoid` may not be visited.
    const auto gather = [&](int target, int avoid) -> bool {
        std::vector<int> parent(n, -2);
        parent[target] = -1;
        std::vector<int> stack{target};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const int y : out[x]) {
                if (y == avoid || parent[y] != -2) {
                    continue;
                }
                parent[y] = x;
                if (pebbles[y] > 0) {
                    --pebbles[y];
                    ++pebbles[target];
                    int cur = y;
                    while (parent[cur] != -1) {
                        const int pre = parent[cur];
                        auto& po = out[pre];
                        po.erase(std::find(po.begin(), po.end(), cur));
                        out[cur].push_back(pre);
                        cur = pre;
                    }
                    return true;
                }
                stack.push_back(y);
            }
        }
        return false;
    };

    PebbleOutcome res;
    for (const auto& e : g.edges()) {
        const int u = index[e.first];
        const int v = index[e.second];
        while (pebbles[u] + pebbles[v] < l + 1) {
            if (!gather(u, v) && !gather(v, u)) {
                break;
            }
        }
        if (pebbles[u] + pebbles[v] >= l + 1) {
            int tail = u;
            int head = v;
            if (pebbles[tail] == 0) {
                std::swap(tail, head);
            }
            --pebbles[tail];
            out[tail].push_back(head);
            res.accepted.push_back(e);
        }
        else {
            res.rejected.push_back(e);
        }
    }
    return res;
}

/** True iff every m-vertex subset (m >= 2) spans at most k*m - l edges. */
inline bool is_tight_sparse(const Graph& g, int k = 2, int l = 3)
{
    if (g.vertex_count() < 2) {
        return true;  // vacuous
    }
    return pebble_game(g, k, l).rejected.empty();
}

struct SparsityClass {
    enum class Tag { Laman, LamanPlusK, Deficient, Other };
    Tag tag{Tag::Other};
    int k{0};                      // set for LamanPlusK
    std::vector<EdgeIds> witness;  // removable edges for LamanPlusK
};

/**
 * @brief Pebble-game classification against the 2v-3 count.
 *
 * Laman: e = 2v-3 and sparse. LamanPlusK(k): the maximal sparse subgraph
 * found by the game spans 2v-3 edges and k = e - (2v-3) > 0; the witness is
 * the rejected edge set (removing it leaves a Laman graph). Deficient when
 * e < 2v-3 or v < 2; Other otherwise.
 */
inline SparsityClass classify_sparsity(const Graph& g)
{
    SparsityClass c;
    const long v = static_cast<long>(g.vertex_count());
    const long e = static_cast<long>(g.edge_count());
    if (v < 2) {
        c.tag = SparsityClass::Tag::Deficient;
        return c;
    }
    const long tight = 2 * v - 3;
    const auto outcome = pebble_game(g);
    const long rank = static_cast<long>(outcome.accepted.size());

    if (e == tight && outcome.rejected.empty()) {
        c.tag = SparsityClass::Tag::Laman;
    }
    else if (rank == tight && e > tight) {
        c.tag = SparsityClass::Tag::LamanPlusK;
        c.k = static_cast<int>(e - tight);
        c.witness = outcome.rejected;
    }
    else if (e < tight) {
        c.tag = SparsityClass::Tag::Deficient;
    }
    else {
        c.tag = SparsityClass::Tag::Other;
    }
    return c;
}

inline bool is_laman(const Graph& g)
{
    return classify_sparsity(g).tag == SparsityClass::Tag::Laman;
}

inline bool is_laman_plus_one(const Graph& g)
{
    const auto c = classify_sparsity(g);
    return c.tag == SparsityClass::Tag::LamanPlusK && c.k == 1;
}

/**
 * @brief Minimal Laman-plus-one test: e = 2v-2 and every proper vertex subset
 * spans at most 2m-3 edges.
 *
 * Equivalent check at this scale: deleting any single edge must leave a Laman
 * graph. One pebble-game run per edge.
 */
inline bool is_rigidity_circuit(const Graph& g)
{
    const long v = static_cast<long>(g.vertex_count());
    const long e = static_cast<long>(g.edge_count());
    if (v < 4 || e != 2 * v - 2) {
        return false;
    }
    for (const auto& edge : g.edges()) {
        Graph h = g;
        h.remove_edge(edge.first, edge.second);
        if (!is_laman(h)) {
            return false;
        }
    }
    return true;
}

}  // namespace hyperfan
