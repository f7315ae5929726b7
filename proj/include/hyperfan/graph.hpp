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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperfan/errors.hpp"

namespace hyperfan {

/** Unordered edge with endpoints kept in sorted order. */
using EdgeIds = std::pair<std::string, std::string>;

inline EdgeIds make_edge(std::string a, std::string b)
{
    if (a == b) {
        throw MalformedGraph("loop edge " + a + "-" + b);
    }
    if (b < a) {
        std::swap(a, b);
    }
    return {std::move(a), std::move(b)};
}

/**
 * @brief Simple undirected graph over opaque string vertex ids.
 *
 * No loops, no parallel edges; edge endpoints must be declared vertices.
 * Iteration orders are sorted by id so every algorithm built on top is
 * deterministic.
 */
class Graph
{
public:
    Graph() = default;

    static Graph single_edge(const std::string& a, const std::string& b)
    {
        Graph g;
        g.add_vertex(a);
        g.add_vertex(b);
        g.add_edge(a, b);
        return g;
    }

    static Graph complete(const std::vector<std::string>& ids)
    {
        Graph g;
        for (const auto& id : ids) {
            g.add_vertex(id);
        }
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                g.add_edge(ids[i], ids[j]);
            }
        }
        return g;
    }

    void add_vertex(const std::string& id)
    {
        if (adj_.count(id) != 0) {
            throw MalformedGraph("duplicate vertex " + id);
        }
        adj_[id];
    }

    void add_edge(const std::string& a, const std::string& b)
    {
        const auto e = make_edge(a, b);
        auto ia = adj_.find(e.first);
        auto ib = adj_.find(e.second);
        if (ia == adj_.end() || ib == adj_.end()) {
            throw MalformedGraph("edge endpoint not declared: " + e.first + "-" + e.second);
        }
        if (ia->second.count(e.second) != 0) {
            throw MalformedGraph("parallel edge " + e.first + "-" + e.second);
        }
        ia->second.insert(e.second);
        ib->second.insert(e.first);
        ++edge_count_;
    }

    void remove_edge(const std::string& a, const std::string& b)
    {
        const auto e = make_edge(a, b);
        if (!has_edge(e.first, e.second)) {
            throw MalformedGraph("removing absent edge " + e.first + "-" + e.second);
        }
        adj_[e.first].erase(e.second);
        adj_[e.second].erase(e.first);
        --edge_count_;
    }

    /** Removes the vertex together with all incident edges. */
    void remove_vertex(const std::string& id)
    {
        auto it = adj_.find(id);
        if (it == adj_.end()) {
            throw MalformedGraph("removing absent vertex " + id);
        }
        for (const auto& n : it->second) {
            adj_[n].erase(id);
            --edge_count_;
        }
        adj_.erase(it);
    }

    bool has_vertex(const std::string& id) const { return adj_.count(id) != 0; }

    bool has_edge(const std::string& a, const std::string& b) const
    {
        auto it = adj_.find(a);
        return it != adj_.end() && it->second.count(b) != 0;
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::vector<std::string> vertex_ids() const
    {
        std::vector<std::string> ids;
        ids.reserve(adj_.size());
        for (const auto& [id, _] : adj_) {
            ids.push_back(id);
        }
        return ids;
    }

    std::vector<EdgeIds> edges() const
    {
        std::vector<EdgeIds> es;
        es.reserve(edge_count_);
        for (const auto& [id, nbrs] : adj_) {
            for (const auto& n : nbrs) {
                if (id < n) {
                    es.emplace_back(id, n);
                }
            }
        }
        return es;
    }

    const std::set<std::string>& neighbors(const std::string& id) const
    {
        auto it = adj_.find(id);
        if (it == adj_.end()) {
            throw MalformedGraph("unknown vertex " + id);
        }
        return it->second;
    }

    std::size_t degree(const std::string& id) const { return neighbors(id).size(); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::map<std::string, std::set<std::string>> adj_;
    std::size_t edge_count_{0};
};

}  // namespace hyperfan
