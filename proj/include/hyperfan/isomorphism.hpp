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
#include <map>
#include <string>
#include <vector>

#include "hyperfan/graph.hpp"

namespace hyperfan {

namespace detail {

// Iterated neighborhood-color refinement; returns the stable coloring.
inline std::vector<int> refine_colors(const std::vector<std::vector<int>>& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n, 0);
    for (int i = 0; i < n; ++i) {
        color[i] = static_cast<int>(adj[i].size());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> nb;
            nb.reserve(adj[i].size());
            for (const int j : adj[i]) {
                nb.push_back(color[j]);
            }
            std::sort(nb.begin(), nb.end());
            sig[i] = {color[i], std::move(nb)};
        }
        std::map<std::pair<int, std::vector<int>>, int> remap;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            auto it = remap.find(sig[i]);
            if (it == remap.end()) {
                it = remap.emplace(sig[i], static_cast<int>(remap.size())).first;
            }
            next[i] = it->second;
        }
        if (next == color) {
            break;
        }
        color = std::move(next);
    }
    return color;
}

inline std::vector<std::vector<int>> index_adjacency(const Graph& g)
{
    const auto ids = g.vertex_ids();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        index[ids[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> adj(ids.size());
    for (const auto& [a, b] : g.edges()) {
        adj[index[a]].push_back(index[b]);
        adj[index[b]].push_back(index[a]);
    }
    return adj;
}

}  // namespace detail

/**
 * @brief Isomorphism test for small graphs (intended scale v <= 20).
 *
 * Color refinement prunes the search, then a backtracking assignment maps
 * same-colored vertices while checking adjacency consistency.
 */
inline bool is_isomorphic(const Graph& ga, const Graph& gb)
{
    if (ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count()) {
        return false;
    }
    const auto a = detail::index_adjacency(ga);
    const auto b = detail::index_adjacency(gb);
    const int n = static_cast<int>(a.size());
    if (n == 0) {
        return true;
    }

    const auto ca = detail::refine_colors(a);
    const auto cb = detail::refine_colors(b);
    {
        auto sa = ca;
        auto sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
            return false;
        }
    }

    // Order vertices of `a` by color rarity so constrained ones map first.
    std::map<int, int> freq;
    for (const int c : ca) {
        ++freq[c];
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::pair{freq[ca[i]], i} < std::pair{freq[ca[j]], j};
    });

    std::vector<char> adj_a(n * n, 0);
    std::vector<char> adj_b(n * n, 0);
    for (int i = 0; i < n; ++i) {
        for (const int j : a[i]) {
            adj_a[i * n + j] = 1;
        }
        for (const int j : b[i]) {
            adj_b[i * n + j] = 1;
        }
    }

    std::vector<int> map_ab(n, -1);
    std::vector<char> used(n, 0);
    const auto backtrack = [&](auto&& self, int pos) -> bool {
        if (pos == n) {
            return true;
        }
        const int u = order[pos];
        for (int v = 0; v < n; ++v) {
            if (used[v] || cb[v] != ca[u]) {
                continue;
            }
            bool ok = true;
            for (int q = 0; q < pos; ++q) {
                const int w = order[q];
                if (adj_a[u * n + w] != adj_b[v * n + map_ab[w]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            map_ab[u] = v;
            used[v] = 1;
            if (self(self, pos + 1)) {
                return true;
            }
            used[v] = 0;
            map_ab[u] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

}  // namespace hyperfan
