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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperfan/henneberg.hpp"
#include "hyperfan/rng.hpp"
#include "hyperfan/tiling.hpp"

namespace hyperfan {

/** Placement clearance from angle and arc degeneracies, in radians. */
inline constexpr double kPlacementMargin = 1e-6;

struct EmbedderConfig {
    std::uint64_t rng_seed{0};
    int max_samples_per_step{10000};
    double perturbation_radius{0.05};  // retry radius for degenerate samples, in (0, 0.1)
};

struct EmbedStats {
    /** Re-runs of an earlier step with a fresh sub-seed after sampling exhaustion. */
    int backtracks{0};
    /** Placed steps undone while searching host-face / decomposition choices. */
    int undo_events{0};
    /** Decompositions attempted before one replayed. */
    int sequences_tried{0};
    long samples{0};
};

/**
 * @brief Pointed embedding of K4: four vertices, four pseudo-di-gon tiles.
 *
 * Coordinates were found once by constrained random search (sample four
 * points, choose a perfect matching of edges to take the long way around,
 * keep configurations whose tiling validates as nice) and frozen. No
 * embedding of K4 with six short arcs can be pointed, so the two matched
 * edges are major arcs; every vertex is the endpoint of exactly one.
 */
inline Tiling seed_k4()
{
    const std::vector<std::pair<std::string, SpherePoint>> vs = {
        {"a", {-0x1.54d292d68e922p-4, 0x1.ecfd826334bep-1, -0x1.06fad39eb3ac8p-2}},
        {"b", {-0x1.c936748b8cf5cp-1, -0x1.c1cb122c3d9dep-6, 0x1.cc034b7a65064p-2}},
        {"c", {0x1.51e8dedc04004p-3, -0x1.5edb2cb0040eep-1, -0x1.6b30d5a9a9892p-1}},
        {"d", {0x1.7f3fc1bb6774ap-1, -0x1.2beb9dd07a454p-2, 0x1.30977a13d075ap-1}},
    };
    const std::vector<EdgeSpec> es = {
        {"a", "b", true},  {"a", "c", false}, {"a", "d", false},
        {"b", "c", false}, {"b", "d", false}, {"c", "d", true},
    };
    const std::vector<std::vector<std::string>> fs = {
        {"a", "d", "b"},
        {"a", "b", "c"},
        {"a", "c", "d"},
        {"b", "d", "c"},
    };
    return build_tiling(vs, es, fs);
}

/** Renames vertices; structure and geometry are untouched. */
inline Tiling relabel(const Tiling& t, const std::map<std::string, std::string>& names)
{
    Tiling out = t;
    for (auto& v : out.vertices) {
        const auto it = names.find(v.id);
        if (it != names.end()) {
            v.id = it->second;
        }
    }
    std::set<std::string> ids;
    for (const auto& v : out.vertices) {
        if (!ids.insert(v.id).second) {
            throw MalformedGraph("relabel produces duplicate id " + v.id);
        }
    }
    return out;
}

/** Abstract graph underlying a tiling. */
inline Graph skeleton(const Tiling& t)
{
    Graph g;
    for (const auto& v : t.vertices) {
        g.add_vertex(v.id);
    }
    for (const auto& [a, b] : t.edges) {
        g.add_edge(t.vertices[a].id, t.vertices[b].id);
    }
    return g;
}

namespace detail {

// A closed vertex walk with the long-way flag of each edge along it. Used for
// host regions: a face cycle, or two face cycles merged across a removed edge.
struct Loop {
    std::vector<int> verts;
    std::vector<char> majors;  // flag of edge (verts[i], verts[i+1])

    std::size_t size() const { return verts.size(); }
    int at(std::size_t i) const { return verts[i % verts.size()]; }
    bool major_at(std::size_t i) const { return majors[i % majors.size()] != 0; }
};

inline Loop loop_of_face(const Tiling& t, int f)
{
    Loop l;
    for (const int h : t.face_cycle(f)) {
        l.verts.push_back(t.halves[h].origin);
        l.majors.push_back(t.halves[h].major ? 1 : 0);
    }
    return l;
}

inline Vec3 flagged_tangent(const Tiling& t, int from, int to, bool major)
{
    const Vec3 tg = tangent_toward(t.vertices[from].pos, t.vertices[to].pos);
    return major ? -tg : tg;
}

/** Departure tangent at loop position i along the walk. */
inline Vec3 loop_dep(const Tiling& t, const Loop& l, std::size_t i)
{
    return flagged_tangent(t, l.at(i), l.at(i + 1), l.major_at(i));
}

/** Tangent at loop position i back toward the previous vertex. */
inline Vec3 loop_back(const Tiling& t, const Loop& l, std::size_t i)
{
    const std::size_t p = (i + l.size() - 1) % l.size();
    return flagged_tangent(t, l.at(i), l.at(p), l.major_at(p));
}

/** Interior corner width of the region at loop position i. */
inline double loop_corner(const Tiling& t, const Loop& l, std::size_t i)
{
    return ccw_angle(loop_dep(t, l, i), loop_back(t, l, i), t.vertices[l.at(i)].pos);
}

inline Arc loop_arc(const Tiling& t, const Loop& l, std::size_t i)
{
    return Arc{
        t.vertices[l.at(i)].pos, t.vertices[l.at(i + 1)].pos, l.major_at(i)};
}

/** Spherical cap from which placements inside the loop region are drawn. */
struct Cap {
    Vec3 center{0, 0, 1};
    double radius{kPi};
};

inline Cap loop_cap(const Tiling& t, const Loop& l)
{
    Cap cap;
    Vec3 sum{0, 0, 0};
    for (const int v : l.verts) {
        sum = sum + t.vertices[v].pos;
    }
    const double n = norm(sum);
    if (n < 1e-9) {
        return cap;  // whole sphere
    }
    cap.center = sum / n;
    double r = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        r = std::max(r, max_distance_to_arc(cap.center, loop_arc(t, l, i)));
    }
    cap.radius = std::min(kPi, r + 0.05);
    return cap;
}

/**
 * Flag choices for a new arc from the vertex at loop position i toward w:
 * the arc must leave the vertex through the region's corner there. A reflex
 * corner can admit both the short and the long arc; candidates are returned
 * short-way first.
 */
inline std::vector<bool> attach_flags(
    const Tiling& t, const Loop& l, std::size_t i, const Vec3& w)
{
    std::vector<bool> out;
    const Vec3 p = t.vertices[l.at(i)].pos;
    const double chord = angular_distance(p, w);
    if (chord < kPlacementMargin || chord > kPi - kPlacementMargin) {
        return out;
    }
    const Vec3 dep = loop_dep(t, l, i);
    const double theta = loop_corner(t, l, i);
    const Vec3 minor_dir = tangent_toward(p, w);
    for (const bool major : {false, true}) {
        const Vec3 dir = major ? -minor_dir : minor_dir;
        const double d = ccw_angle(dep, dir, p);
        if (d > kPlacementMargin && d < theta - kPlacementMargin) {
            out.push_back(major);
        }
    }
    return out;
}

/** One attachment of the new vertex to the loop. */
struct Attachment {
    std::size_t pos{0};  // loop position
    bool major{false};   // flag of the new arc
};

/**
 * Splits the loop region at the given attachments (sorted by position) by
 * joining each to a new vertex w placed inside. Returns the vertex cycles of
 * the resulting sub-faces, each ending with w, plus the new edges' flags.
 */
inline std::vector<std::vector<int>> split_loop(
    const Loop& l, const std::vector<Attachment>& at, int w_index)
{
    std::vector<std::vector<int>> out;
    for (std::size_t j = 0; j < at.size(); ++j) {
        const std::size_t from = at[j].pos;
        const std::size_t to = at[(j + 1) % at.size()].pos;
        std::vector<int> cyc;
        std::size_t i = from;
        cyc.push_back(l.at(i));
        while (i % l.size() != to % l.size()) {
            ++i;
            cyc.push_back(l.at(i));
        }
        cyc.push_back(w_index);
        out.push_back(std::move(cyc));
    }
    return out;
}

/** Everything needed to rebuild a tiling with one region replaced. */
struct RegionEdit {
    Loop loop;                     // region boundary
    std::vector<int> dead_faces;   // faces consumed by the region
    std::set<std::pair<int, int>> dead_edges;  // edges removed with the region
};

/**
 * Rebuilds the tiling with the edit's faces replaced by the split pieces.
 * Piece k replaces dead_faces[k] (index order preserved); extra pieces are
 * appended, so untouched faces keep their indices.
 */
inline Tiling rebuild(
    const Tiling& t,
    const RegionEdit& edit,
    const std::vector<std::vector<int>>& pieces,
    const std::vector<Attachment>& at,
    const std::string& w_id,
    const Vec3& w_pos)
{
    std::vector<Tiling::Vertex> verts = t.vertices;
    const int w_index = static_cast<int>(verts.size());
    verts.push_back({w_id, w_pos});

    std::set<std::pair<int, int>> majors;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        if (t.edge_major[e] != 0 && edit.dead_edges.count(t.edges[e]) == 0) {
            majors.insert(t.edges[e]);
        }
    }
    for (const auto& a : at) {
        if (a.major) {
            const int v = edit.loop.at(a.pos);
            majors.emplace(std::min(v, w_index), std::max(v, w_index));
        }
    }

    std::vector<std::vector<int>> cycles;
    std::size_t next_piece = 0;
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const bool dead =
            std::find(edit.dead_faces.begin(), edit.dead_faces.end(), static_cast<int>(f)) !=
            edit.dead_faces.end();
        if (dead) {
            cycles.push_back(pieces[next_piece++]);
        }
        else {
            cycles.push_back(t.face_vertices(static_cast<int>(f)));
        }
    }
    for (; next_piece < pieces.size(); ++next_piece) {
        cycles.push_back(pieces[next_piece]);
    }

    return assemble(std::move(verts), cycles, majors);
}

/** Fast placement viability checks before the full rebuild. */
inline bool arcs_admissible(
    const Tiling& t,
    const Loop& l,
    const std::vector<Attachment>& at,
    const Vec3& w)
{
    std::vector<Arc> fresh;
    for (const auto& a : at) {
        fresh.emplace_back(w, t.vertices[l.at(a.pos)].pos, a.major);
    }
    try {
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            for (std::size_t j = i + 1; j < fresh.size(); ++j) {
                if (arcs_cross(fresh[i], fresh[j])) {
                    return false;
                }
            }
        }
        for (std::size_t i = 0; i < l.size(); ++i) {
            const Arc boundary = loop_arc(t, l, i);
            for (const auto& arc : fresh) {
                if (arcs_cross(arc, boundary)) {
                    return false;
                }
            }
        }
    }
    catch (const DegenerateConfiguration&) {
        return false;
    }
    return true;
}

/**
 * Accepts the candidate tiling when the step preserved niceness and the
 * pseudo-di-gon count. Validation skips the quadratic crossing pass; new
 * arcs were already checked against the host region, and arcs confined to
 * one region cannot reach any other.
 */
inline bool step_valid(const Tiling& cand, int expected_digons)
{
    try {
        validate_tiling(cand, false);
        if (!is_nice(cand).nice) {
            return false;
        }
        return digon_count(cand) == expected_digons;
    }
    catch (const Error&) {
        return false;
    }
}

/**
 * Core placement search: sample w inside the loop region, pick wedge-
 * compatible flags for the new arcs at each required attachment vertex, and
 * accept the first sample whose rebuilt tiling is nice with the expected
 * di-gon count. `required` lists loop vertices (by index into t) that the new
 * vertex must join.
 */
inline std::optional<Tiling> place_in_region(
    const Tiling& t,
    const RegionEdit& edit,
    const std::vector<int>& required,
    const std::string& w_id,
    int expected_digons,
    const EmbedderConfig& cfg,
    std::uint64_t seed,
    int budget,
    EmbedStats* stats,
    bool* region_usable = nullptr)
{
    const Loop& l = edit.loop;
    const Cap cap = loop_cap(t, l);
    std::mt19937_64 rng(seed);
    if (region_usable != nullptr) {
        *region_usable = true;
    }

    // Positions of each required vertex along the loop.
    std::vector<std::vector<std::size_t>> positions(required.size());
    for (std::size_t k = 0; k < required.size(); ++k) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l.at(i) == required[k]) {
                positions[k].push_back(i);
            }
        }
        if (positions[k].empty()) {
            if (region_usable != nullptr) {
                *region_usable = false;  // vertex not on the region boundary
            }
            return std::nullopt;
        }
    }

    std::optional<Vec3> near_miss;
    for (int sample = 0; sample < budget; ++sample) {
        if (stats != nullptr) {
            ++stats->samples;
        }
        Vec3 w;
        if (near_miss && sample % 3 == 2) {
            // Perturb the last rejected placement and retry; thin feasible
            // regions are usually entered this way.
            w = uniform_cap(rng, *near_miss, cfg.perturbation_radius);
        }
        else if (sample % 5 == 4) {
            w = uniform_sphere(rng);  // escape hatch off the cap
        }
        else {
            w = uniform_cap(rng, cap.center, cap.radius);
        }

        // Too close to an existing vertex or its antipode never validates.
        bool clear = true;
        for (const auto& v : t.vertices) {
            const double d = angular_distance(v.pos, w);
            if (d < kPlacementMargin || d > kPi - kPlacementMargin) {
                clear = false;
                break;
            }
        }
        if (!clear) {
            continue;
        }

        // Enumerate wedge-compatible attachments, short arcs first.
        std::vector<std::vector<Attachment>> options(required.size());
        bool feasible = true;
        for (std::size_t k = 0; k < required.size() && feasible; ++k) {
            for (const std::size_t pos : positions[k]) {
                for (const bool mj : attach_flags(t, l, pos, w)) {
                    options[k].push_back({pos, mj});
                }
            }
            feasible = !options[k].empty();
        }
        if (!feasible) {
            continue;
        }

        std::vector<std::size_t> pick(required.size(), 0);
        while (true) {
            std::vector<Attachment> at;
            at.reserve(required.size());
            for (std::size_t k = 0; k < required.size(); ++k) {
                at.push_back(options[k][pick[k]]);
            }
            std::sort(at.begin(), at.end(), [](const Attachment& x, const Attachment& y) {
                return x.pos < y.pos;
            });
            bool distinct = true;
            for (std::size_t k = 1; k < at.size(); ++k) {
                if (at[k].pos == at[k - 1].pos) {
                    distinct = false;
                }
            }
            if (distinct && arcs_admissible(t, l, at, w)) {
                try {
                    const auto pieces =
                        split_loop(l, at, static_cast<int>(t.vertices.size()));
                    Tiling cand = rebuild(t, edit, pieces, at, w_id, w);
                    if (step_valid(cand, expected_digons)) {
                        return cand;
                    }
                }
                catch (const Error&) {
                    // fall through to the next combination
                }
            }
            // next combination
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == options[k].size()) {
                pick[k] = 0;
                ++k;
            }
            if (k == pick.size()) {
                break;
            }
        }
        // All attachments were wedge-visible but no combination validated.
        near_miss = w;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * @brief Geometric vertex addition: new vertex inside `face`, joined to the
 * boundary vertices u and v.
 *
 * The placement is rejection-sampled inside the host face and accepted only
 * when the result is again a nice pseudo-tiling with an unchanged
 * pseudo-di-gon count (the face count of pseudo-triangles grows by one). Old
 * vertex positions are never moved.
 */
inline Tiling henneberg1_geometric(
    const Tiling& t,
    int face,
    const std::string& u,
    const std::string& v,
    const std::string& new_id,
    const EmbedderConfig& cfg,
    std::optional<std::uint64_t> seed = std::nullopt,
    EmbedStats* stats = nullptr)
{
    if (face < 0 || face >= static_cast<int>(t.faces.size())) {
        throw FeasibleRegionExhausted("host face index out of range");
    }
    const int iu = t.vertex_index(u);
    const int iv = t.vertex_index(v);
    if (iu < 0 || iv < 0 || iu == iv) {
        throw FeasibleRegionExhausted("attach vertices not in tiling");
    }
    detail::RegionEdit edit;
    edit.loop = detail::loop_of_face(t, face);
    edit.dead_faces = {face};

    const int digons = digon_count(t);
    auto out = detail::place_in_region(
        t, edit, {iu, iv}, new_id, digons, cfg,
        seed.value_or(derive_seed(cfg.rng_seed, 0x48314731u)), cfg.max_samples_per_step,
        stats);
    if (!out) {
        throw FeasibleRegionExhausted(
            "no valid placement for vertex " + new_id + " in face " + std::to_string(face));
    }
    return *out;
}

/**
 * @brief Geometric edge split: removes split_edge, merges its two tiles and
 * places the new vertex inside the merged region, joined to both old
 * endpoints and to `third`.
 */
namespace detail {

/** Merged region obtained by deleting an edge; nullopt when the edge borders one face twice. */
inline std::optional<RegionEdit> merged_region(const Tiling& t, int edge)
{
    const int h1 = t.edge_half[edge];
    const int h2 = t.halves[h1].twin;
    const int f1 = t.halves[h1].face;
    const int f2 = t.halves[h2].face;
    if (f1 == f2) {
        return std::nullopt;
    }
    // Walk f1 from past h1 back around to h1, then f2 from past h2. The edge
    // flags line up because each walk ends exactly where the other starts.
    RegionEdit edit;
    const auto splice = [&](int h_skip) {
        int h = t.halves[h_skip].next;
        while (h != h_skip) {
            edit.loop.verts.push_back(t.halves[h].origin);
            edit.loop.majors.push_back(t.halves[h].major ? 1 : 0);
            h = t.halves[h].next;
        }
    };
    splice(h1);
    splice(h2);
    edit.dead_faces = {std::min(f1, f2), std::max(f1, f2)};
    edit.dead_edges.insert(t.edges[edge]);
    return edit;
}

}  // namespace detail

inline Tiling henneberg2_geometric(
    const Tiling& t,
    const std::string& edge_a,
    const std::string& edge_b,
    const std::string& third,
    const std::string& new_id,
    const EmbedderConfig& cfg,
    std::optional<std::uint64_t> seed = std::nullopt,
    EmbedStats* stats = nullptr)
{
    const int ia = t.vertex_index(edge_a);
    const int ib = t.vertex_index(edge_b);
    const int ic = t.vertex_index(third);
    if (ia < 0 || ib < 0 || ic < 0) {
        throw FeasibleRegionExhausted("split edge or third vertex not in tiling");
    }
    const int e = t.edge_index(ia, ib);
    if (e < 0) {
        throw FeasibleRegionExhausted("split edge not present: " + edge_a + "-" + edge_b);
    }
    const auto edit = detail::merged_region(t, e);
    if (!edit) {
        throw FeasibleRegionExhausted("split edge borders one face twice");
    }

    const int digons = digon_count(t);
    auto out = detail::place_in_region(
        t, *edit, {ia, ib, ic}, new_id, digons, cfg,
        seed.value_or(derive_seed(cfg.rng_seed, 0x48324732u)), cfg.max_samples_per_step,
        stats);
    if (!out) {
        throw FeasibleRegionExhausted(
            "no valid placement splitting " + edge_a + "-" + edge_b + " toward " + third);
    }
    return *out;
}

namespace detail {

/** Search state of one replay level. */
struct ReplayLevel {
    std::vector<int> hosts;    // candidate host faces (H2 steps get one pseudo-entry)
    std::size_t choice{0};     // next host to try
    int seed_attempt{0};       // bumped by fresh-seed backtracking
};

/**
 * Replays one decomposition as a depth-first search over host-face choices.
 * A step that fails for lack of combinatorial options advances the previous
 * level to its next choice; a step whose sampling budget runs out re-runs
 * the previous step with a fresh sub-seed, up to `max_backtracks` times (the
 * counter is shared across the whole run via stats).
 */
inline std::optional<Tiling> replay_sequence(
    const Graph& g,
    const HennebergSequence& seq,
    const EmbedderConfig& cfg,
    std::uint64_t seq_salt,
    int max_backtracks,
    int& backtracks,
    EmbedStats* stats)
{
    std::map<std::string, std::string> names;
    const Tiling seed = seed_k4();
    for (std::size_t i = 0; i < 4; ++i) {
        names[seed.vertices[i].id] = seq.base_vertices[i];
    }

    const std::size_t n = seq.steps.size();
    std::vector<Tiling> chain;
    chain.reserve(n + 1);
    chain.push_back(relabel(seed, names));
    std::vector<ReplayLevel> level(n);
    std::vector<char> fresh(n, 1);
    long nodes = 0;

    const auto pop = [&](bool count_undo) {
        chain.pop_back();
        if (count_undo && stats != nullptr) {
            ++stats->undo_events;
        }
    };

    std::size_t i = 0;
    while (i < n) {
        const auto& s = seq.steps[i];
        const Tiling& cur = chain[i];

        if (fresh[i]) {
            fresh[i] = 0;
            level[i] = ReplayLevel{};
            if (s.kind == HennebergStep::Kind::H1) {
                const int iu = cur.vertex_index(s.attach[0]);
                const int iv = cur.vertex_index(s.attach[1]);
                for (std::size_t f = 0; f < cur.faces.size(); ++f) {
                    const auto fv = cur.face_vertices(static_cast<int>(f));
                    if (std::find(fv.begin(), fv.end(), iu) != fv.end() &&
                        std::find(fv.begin(), fv.end(), iv) != fv.end()) {
                        level[i].hosts.push_back(static_cast<int>(f));
                    }
                }
            }
            else {
                level[i].hosts.push_back(-1);  // merged region, no face choice
            }
        }

        if (level[i].choice >= level[i].hosts.size() || nodes > 4000) {
            // Combinatorially exhausted: undo the previous placement.
            if (i == 0) {
                return std::nullopt;
            }
            pop(true);
            --i;
            ++level[i].choice;
            continue;
        }

        const std::uint64_t sub = derive_seed(
            cfg.rng_seed,
            seq_salt * 7919ULL + 131ULL * i + 17ULL * level[i].choice +
                static_cast<std::uint64_t>(level[i].seed_attempt));
        std::optional<Tiling> next;
        bool had_options = false;
        ++nodes;

        if (s.kind == HennebergStep::Kind::H1) {
            const int host = level[i].hosts[level[i].choice];
            RegionEdit edit;
            edit.loop = loop_of_face(cur, host);
            edit.dead_faces = {host};
            const int iu = cur.vertex_index(s.attach[0]);
            const int iv = cur.vertex_index(s.attach[1]);
            next = place_in_region(
                cur, edit, {iu, iv}, s.new_vertex, digon_count(cur), cfg, sub,
                cfg.max_samples_per_step, stats, &had_options);
        }
        else {
            const int ia = cur.vertex_index(s.split_edge[0]);
            const int ib = cur.vertex_index(s.split_edge[1]);
            const int ic = cur.vertex_index(s.third);
            const int e = cur.edge_index(ia, ib);
            const auto edit = e >= 0 ? merged_region(cur, e) : std::nullopt;
            if (edit) {
                next = place_in_region(
                    cur, *edit, {ia, ib, ic}, s.new_vertex, digon_count(cur), cfg, sub,
                    cfg.max_samples_per_step, stats, &had_options);
            }
        }

        if (next) {
            chain.push_back(std::move(*next));
            for (std::size_t j = i + 1; j < n; ++j) {
                fresh[j] = 1;
            }
            ++i;
            continue;
        }

        if (had_options && i > 0 && backtracks < max_backtracks) {
            // Sampling exhausted inside a nonempty region: re-run the
            // previous step with a fresh sub-seed before giving up on it.
            ++backtracks;
            if (stats != nullptr) {
                ++stats->backtracks;
            }
            pop(false);
            --i;
            ++level[i].seed_attempt;
            continue;
        }
        ++level[i].choice;
    }
    return std::move(chain.back());
}

}  // namespace detail

/**
 * @brief Full pipeline: decompose a Laman-plus-one graph and replay the
 * steps geometrically from the pointed K4 seed.
 *
 * The replay searches depth-first over the Henneberg decompositions of the
 * graph and, within each, over the candidate host faces of every H1 step;
 * the first placement that keeps the tiling nice wins. Sampling dead ends
 * re-run the preceding step with a fresh sub-seed up to 3 times per run.
 * Everything is deterministic for a fixed (graph, rng_seed). The result has
 * exactly 4 pseudo-di-gons and its skeleton equals the input graph.
 */
inline Tiling embed_laman_plus_one(
    const Graph& g, const EmbedderConfig& cfg, EmbedStats* stats = nullptr)
{
    if (!is_laman_plus_one(g)) {
        throw NotLamanPlusOne("input graph is not Laman-plus-one");
    }

    std::optional<Tiling> result;
    int backtracks = 0;
    std::uint64_t seq_salt = 0;
    for_each_decomposition(g, 256, [&](const HennebergSequence& seq) {
        if (stats != nullptr) {
            ++stats->sequences_tried;
        }
        result = detail::replay_sequence(g, seq, cfg, seq_salt++, 3, backtracks, stats);
        return result.has_value();
    });
    if (!result) {
        throw EmbeddingFailed("no decomposition of the graph could be replayed", 0);
    }

    validate_tiling(*result);
    if (!is_nice(*result).nice || digon_count(*result) != 4) {
        throw EmbeddingFailed("replayed tiling failed final checks", 0);
    }
    if (!(skeleton(*result) == g)) {
        throw EmbeddingFailed("replayed tiling skeleton differs from input graph", 0);
    }
    return *result;
}

}  // namespace hyperfan
