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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperfan/errors.hpp"
#include "hyperfan/sphere.hpp"

namespace hyperfan {

/** One edge of a tiling under construction; `major` selects the long geodesic. */
struct EdgeSpec {
    std::string a;
    std::string b;
    bool major{false};
};

/**
 * @brief Half-edge cell complex on the unit sphere with geodesic edges.
 *
 * Face cycles are oriented counterclockwise seen from outside the sphere, so
 * each face's interior lies left of its directed half-edges and the two
 * half-edges of an edge run in opposite directions. Edges may take the long
 * way around their great circle (major = true). Tilings are immutable after
 * assembly; every transformation builds a new value.
 */
struct Tiling {
    struct Vertex {
        std::string id;
        SpherePoint pos;
    };
    struct HalfEdge {
        int origin{-1};
        int twin{-1};
        int next{-1};
        int face{-1};
        bool major{false};
    };
    struct Face {
        int first{-1};  // one half-edge of the cycle
        int size{0};
    };

    std::vector<Vertex> vertices;
    std::vector<HalfEdge> halves;
    std::vector<Face> faces;

    /** Undirected edges as sorted vertex-index pairs, lexicographic order. */
    std::vector<std::pair<int, int>> edges;
    /** Long-way flag per entry of `edges`. */
    std::vector<char> edge_major;
    /** One representative half-edge per entry of `edges`. */
    std::vector<int> edge_half;

    int target(int h) const { return halves[halves[h].twin].origin; }

    int prev(int h) const
    {
        int cur = h;
        while (halves[cur].next != h) {
            cur = halves[cur].next;
        }
        return cur;
    }

    int vertex_index(const std::string& id) const
    {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i].id == id) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }

    int edge_index(int a, int b) const
    {
        const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        const auto it = std::lower_bound(edges.begin(), edges.end(), key);
        if (it == edges.end() || *it != key) {
            return -1;
        }
        return static_cast<int>(it - edges.begin());
    }

    /** Geometric arc of a half-edge, oriented along it. */
    Arc half_arc(int h) const
    {
        return Arc{
            vertices[halves[h].origin].pos, vertices[target(h)].pos, halves[h].major};
    }

    /** Unit tangent at origin(h) departing along the half-edge. */
    Vec3 departure(int h) const
    {
        const Vec3 t =
            tangent_toward(vertices[halves[h].origin].pos, vertices[target(h)].pos);
        return halves[h].major ? -t : t;
    }

    std::vector<int> face_cycle(int f) const
    {
        std::vector<int> cyc;
        cyc.reserve(faces[f].size);
        int h = faces[f].first;
        do {
            cyc.push_back(h);
            h = halves[h].next;
        } while (h != faces[f].first);
        return cyc;
    }

    std::vector<int> face_vertices(int f) const
    {
        std::vector<int> vs;
        for (const int h : face_cycle(f)) {
            vs.push_back(halves[h].origin);
        }
        return vs;
    }

    /** Half-edges with origin v, in clockwise rotational order. */
    std::vector<int> star(int v) const
    {
        std::vector<int> out;
        int start = -1;
        for (std::size_t h = 0; h < halves.size(); ++h) {
            if (halves[h].origin == v) {
                start = static_cast<int>(h);
                break;
            }
        }
        if (start < 0) {
            return out;
        }
        int h = start;
        do {
            out.push_back(h);
            h = halves[halves[h].twin].next;  // rotate around the origin
        } while (h != start && static_cast<int>(out.size()) <= static_cast<int>(halves.size()));
        return out;
    }
};

/**
 * @brief Interior angle of face(h) at origin(h), classified against pi.
 *
 * Measured between the departing tangent of h and the returning tangent of
 * prev(h), inside the face (left of the cycle). Throws
 * DegenerateConfiguration for corners pinched to 0 or 2pi.
 */
inline AngleClass corner_angle(const Tiling& t, int h)
{
    const int at = t.halves[h].origin;
    const Vec3 t_next = t.departure(h);
    const Vec3 t_prev = t.departure(t.halves[t.prev(h)].twin);
    const double theta = ccw_angle(t_next, t_prev, t.vertices[at].pos);
    if (theta < kEpsAngle || theta > kTwoPi - kEpsAngle) {
        throw DegenerateConfiguration("zero-width corner at vertex " + t.vertices[at].id);
    }
    return classify_angle(theta);
}

struct TileClass {
    enum class Tag { PseudoTriangle, PseudoDiGon, ConvexTile, Other };
    Tag tag{Tag::Other};
    int convex_corners{0};
    int reflex_corners{0};
};

/**
 * @brief Classifies a face by its convex/reflex corner counts.
 *
 * Exactly 3 convex corners (rest reflex) is a pseudo-triangle; a spherical
 * triangle with three convex corners therefore reports PseudoTriangle even
 * though it is also convex. Exactly 2 convex corners is a pseudo-di-gon.
 * All-convex faces with more than three corners report ConvexTile. A
 * degenerate corner raises DegenerateConfiguration.
 */
inline TileClass classify_face(const Tiling& t, int f)
{
    TileClass c;
    for (const int h : t.face_cycle(f)) {
        const auto a = corner_angle(t, h);
        if (a.degenerate()) {
            throw DegenerateConfiguration(
                "flat corner in face " + std::to_string(f) + " at vertex " +
                t.vertices[t.halves[h].origin].id);
        }
        if (a.convex()) {
            ++c.convex_corners;
        }
        else {
            ++c.reflex_corners;
        }
    }
    const int n = c.convex_corners + c.reflex_corners;
    if (c.convex_corners == 3) {
        c.tag = TileClass::Tag::PseudoTriangle;
    }
    else if (c.convex_corners == 2 && c.reflex_corners >= 1) {
        c.tag = TileClass::Tag::PseudoDiGon;
    }
    else if (c.convex_corners == n) {
        c.tag = TileClass::Tag::ConvexTile;
    }
    else {
        c.tag = TileClass::Tag::Other;
    }
    return c;
}

struct PointedReport {
    bool pointed{false};
    std::vector<std::string> non_pointed;
};

/** A vertex is pointed iff exactly one of its incident face angles is reflex. */
inline PointedReport is_pointed(const Tiling& t)
{
    PointedReport rep;
    rep.pointed = true;
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
        int reflex = 0;
        for (const int h : t.star(static_cast<int>(v))) {
            const auto a = corner_angle(t, h);
            if (a.degenerate()) {
                throw DegenerateConfiguration("flat corner at vertex " + t.vertices[v].id);
            }
            if (a.reflex()) {
                ++reflex;
            }
        }
        if (reflex != 1) {
            rep.pointed = false;
            rep.non_pointed.push_back(t.vertices[v].id);
        }
    }
    return rep;
}

struct NiceReport {
    bool nice{false};
    std::string witness;  // first violation; empty when nice
};

/** Pointed and every tile a pseudo-triangle or pseudo-di-gon. */
inline NiceReport is_nice(const Tiling& t)
{
    NiceReport rep;
    const auto p = is_pointed(t);
    if (!p.pointed) {
        rep.witness = "vertex " + p.non_pointed.front() + " is not pointed";
        return rep;
    }
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const auto c = classify_face(t, static_cast<int>(f));
        if (c.tag != TileClass::Tag::PseudoTriangle && c.tag != TileClass::Tag::PseudoDiGon) {
            rep.witness = "face " + std::to_string(f) + " has " +
                          std::to_string(c.convex_corners) + " convex corners";
            return rep;
        }
    }
    rep.nice = true;
    return rep;
}

inline int digon_count(const Tiling& t)
{
    int n = 0;
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        if (classify_face(t, static_cast<int>(f)).tag == TileClass::Tag::PseudoDiGon) {
            ++n;
        }
    }
    return n;
}

/**
 * @brief Integer counts and the residuals of the three tiling identities.
 *
 * c counts convex face corners. For a nice pseudo-tiling all residuals are 0:
 * Euler (v - e + f2 + f3 - 2), corner/face (c - 2*f2 - 3*f3) and
 * corner/vertex (c - 2*e + v); the last one needs pointedness, since every
 * pointed vertex contributes deg - 1 convex corners.
 */
struct CountReport {
    long v{0}, e{0}, c{0}, f2{0}, f3{0};
    long euler_residual{0};
    long corner_residual_a{0};
    long corner_residual_b{0};
};

/** Throws NonNiceTiling when some face is neither pseudo-triangle nor pseudo-di-gon. */
inline CountReport count_report(const Tiling& t)
{
    CountReport r;
    r.v = static_cast<long>(t.vertices.size());
    r.e = static_cast<long>(t.edges.size());
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const auto c = classify_face(t, static_cast<int>(f));
        r.c += c.convex_corners;
        if (c.tag == TileClass::Tag::PseudoTriangle) {
            ++r.f3;
        }
        else if (c.tag == TileClass::Tag::PseudoDiGon) {
            ++r.f2;
        }
        else {
            throw NonNiceTiling(
                "face " + std::to_string(f) + " is neither pseudo-triangle nor pseudo-di-gon");
        }
    }
    r.euler_residual = r.v - r.e + r.f2 + r.f3 - 2;
    r.corner_residual_a = r.c - (2 * r.f2 + 3 * r.f3);
    r.corner_residual_b = r.c - (2 * r.e - r.v);
    return r;
}

namespace detail {

/** Links twins and builds the edge table; purely combinatorial. */
inline Tiling assemble(
    std::vector<Tiling::Vertex> vertices,
    const std::vector<std::vector<int>>& cycles,
    const std::set<std::pair<int, int>>& major_pairs)
{
    Tiling t;
    t.vertices = std::move(vertices);
    const int n = static_cast<int>(t.vertices.size());

    std::map<std::pair<int, int>, int> directed;
    for (std::size_t f = 0; f < cycles.size(); ++f) {
        const auto& cyc = cycles[f];
        if (cyc.size() < 3) {
            throw NonSphericalComplex("face " + std::to_string(f) + " has fewer than 3 vertices");
        }
        const int base = static_cast<int>(t.halves.size());
        const int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            const int u = cyc[i];
            const int v = cyc[(i + 1) % k];
            if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
                throw NonSphericalComplex("face cycle references invalid vertex");
            }
            if (!directed.emplace(std::pair{u, v}, base + i).second) {
                throw NonSphericalComplex(
                    "directed edge used twice; face orientations are incoherent");
            }
            Tiling::HalfEdge h;
            h.origin = u;
            h.next = base + (i + 1) % k;
            h.face = static_cast<int>(f);
            h.major = major_pairs.count({std::min(u, v), std::max(u, v)}) != 0;
            t.halves.push_back(h);
        }
        t.faces.push_back({base, k});
    }

    for (const auto& [dir, h] : directed) {
        const auto it = directed.find({dir.second, dir.first});
        if (it == directed.end()) {
            throw NonSphericalComplex(
                "unmatched half-edge " + t.vertices[dir.first].id + "->" +
                t.vertices[dir.second].id);
        }
        t.halves[h].twin = it->second;
    }

    for (const auto& [dir, h] : directed) {
        if (dir.first < dir.second) {
            t.edges.emplace_back(dir);
            t.edge_half.push_back(h);
            t.edge_major.push_back(t.halves[h].major ? 1 : 0);
        }
    }
    // std::map iteration already gives lexicographic (i, j) order.
    return t;
}

/** Angular sum of all face corners at each vertex must be a full turn. */
inline void check_angle_sums(const Tiling& t)
{
    std::vector<double> sums(t.vertices.size(), 0.0);
    std::vector<int> counted(t.vertices.size(), 0);
    for (std::size_t h = 0; h < t.halves.size(); ++h) {
        const auto a = corner_angle(t, static_cast<int>(h));
        sums[t.halves[h].origin] += a.value;
        ++counted[t.halves[h].origin];
    }
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
        if (counted[v] == 0) {
            throw NonSphericalComplex("isolated vertex " + t.vertices[v].id);
        }
        if (std::abs(sums[v] - kTwoPi) > 1e-9) {
            throw NonSphericalComplex(
                "face angles at vertex " + t.vertices[v].id + " do not sum to a full turn");
        }
    }
}

}  // namespace detail

/**
 * @brief Validates an assembled complex: vertex positions, rotation orbits,
 * Euler relation, angle sums and (optionally) pairwise non-crossing arcs.
 */
inline void validate_tiling(const Tiling& t, bool check_crossings = true)
{
    for (const auto& v : t.vertices) {
        if (!is_unit(v.pos)) {
            throw DegenerateConfiguration("vertex " + v.id + " is not on the unit sphere");
        }
    }

    const long v = static_cast<long>(t.vertices.size());
    const long e = static_cast<long>(t.edges.size());
    const long f = static_cast<long>(t.faces.size());
    if (v - e + f != 2) {
        throw NonSphericalComplex("Euler relation v - e + f = 2 fails");
    }

    // Every vertex's half-edges must form a single rotational orbit.
    std::vector<int> deg(t.vertices.size(), 0);
    for (const auto& h : t.halves) {
        ++deg[h.origin];
    }
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        if (static_cast<int>(t.star(static_cast<int>(i)).size()) != deg[i]) {
            throw NonSphericalComplex(
                "vertex " + t.vertices[i].id + " is pinched (disconnected rotation)");
        }
    }

    std::vector<Arc> arcs;
    arcs.reserve(t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        // Arc construction rejects antipodal endpoint pairs.
        arcs.emplace_back(
            t.vertices[t.edges[i].first].pos, t.vertices[t.edges[i].second].pos,
            t.edge_major[i] != 0);
    }

    if (check_crossings) {
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            for (std::size_t j = i + 1; j < arcs.size(); ++j) {
                if (arcs_cross(arcs[i], arcs[j])) {
                    throw CrossingEdges(
                        "edges " + std::to_string(i) + " and " + std::to_string(j) + " cross");
                }
            }
        }
    }

    detail::check_angle_sums(t);
}

/**
 * @brief Builds and validates a tiling from named vertices, edges and face
 * cycles.
 *
 * The declared edge set must match the face boundaries exactly. Face cycles
 * may be given in either global orientation; if the angle sums reject the
 * input as-is, the mirrored orientation is tried before failing.
 */
inline Tiling build_tiling(
    const std::vector<std::pair<std::string, SpherePoint>>& vertices,
    const std::vector<EdgeSpec>& edges,
    const std::vector<std::vector<std::string>>& face_cycles)
{
    std::vector<Tiling::Vertex> vs;
    std::map<std::string, int> index;
    for (const auto& [id, pos] : vertices) {
        if (!index.emplace(id, static_cast<int>(vs.size())).second) {
            throw MalformedGraph("duplicate vertex id " + id);
        }
        if (!is_unit(pos)) {
            throw DegenerateConfiguration("vertex " + id + " is not on the unit sphere");
        }
        vs.push_back({id, pos});
    }
    const auto resolve = [&](const std::string& id) {
        const auto it = index.find(id);
        if (it == index.end()) {
            throw MalformedGraph("unknown vertex id " + id);
        }
        return it->second;
    };

    std::set<std::pair<int, int>> declared;
    std::set<std::pair<int, int>> major_pairs;
    for (const auto& e : edges) {
        const int ia = resolve(e.a);
        const int ib = resolve(e.b);
        if (ia == ib) {
            throw MalformedGraph("loop edge " + e.a);
        }
        const std::pair<int, int> key{std::min(ia, ib), std::max(ia, ib)};
        if (!declared.insert(key).second) {
            throw MalformedGraph("duplicate edge " + e.a + "-" + e.b);
        }
        if (e.major) {
            major_pairs.insert(key);
        }
    }

    std::vector<std::vector<int>> cycles;
    std::set<std::pair<int, int>> used;
    for (const auto& cyc : face_cycles) {
        std::vector<int> c;
        for (const auto& id : cyc) {
            c.push_back(resolve(id));
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int a = c[i];
            const int b = c[(i + 1) % c.size()];
            used.emplace(std::min(a, b), std::max(a, b));
        }
        cycles.push_back(std::move(c));
    }
    if (used != declared) {
        throw NonSphericalComplex("declared edges do not match face boundaries");
    }

    Tiling t = detail::assemble(vs, cycles, major_pairs);
    try {
        validate_tiling(t);
        return t;
    }
    catch (const NonSphericalComplex&) {
        // Retry with the mirrored global orientation before giving up.
        std::vector<std::vector<int>> flipped;
        flipped.reserve(cycles.size());
        for (const auto& c : cycles) {
            flipped.emplace_back(c.rbegin(), c.rend());
        }
        Tiling m = detail::assemble(std::move(vs), flipped, major_pairs);
        validate_tiling(m);
        return m;
    }
}

/**
 * @brief Derives face cycles from vertex positions and edges alone.
 *
 * Sorts each vertex's incident departure tangents by azimuth and traces the
 * faces of the induced rotation system. The arcs must be pairwise
 * non-crossing for the result to mean anything; callers validate the
 * assembled tiling.
 */
inline Tiling tiling_from_arcs(
    const std::vector<std::pair<std::string, SpherePoint>>& vertices,
    const std::vector<EdgeSpec>& edges)
{
    std::vector<Tiling::Vertex> vs;
    std::map<std::string, int> index;
    for (const auto& [id, pos] : vertices) {
        if (!index.emplace(id, static_cast<int>(vs.size())).second) {
            throw MalformedGraph("duplicate vertex id " + id);
        }
        vs.push_back({id, pos});
    }

    std::vector<std::vector<std::pair<int, bool>>> nbrs(vs.size());
    std::set<std::pair<int, int>> major_pairs;
    for (const auto& e : edges) {
        const int ia = index.at(e.a);
        const int ib = index.at(e.b);
        nbrs[ia].emplace_back(ib, e.major);
        nbrs[ib].emplace_back(ia, e.major);
        if (e.major) {
            major_pairs.emplace(std::min(ia, ib), std::max(ia, ib));
        }
    }

    // Counterclockwise departure order around each vertex.
    for (std::size_t v = 0; v < vs.size(); ++v) {
        const Vec3 p = vs[v].pos;
        const Vec3 axis = std::abs(p.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        const Vec3 e1 = normalized(cross(p, axis));
        const Vec3 e2 = cross(p, e1);
        const auto azimuth = [&](const std::pair<int, bool>& nb) {
            Vec3 tg = tangent_toward(p, vs[nb.first].pos);
            if (nb.second) {
                tg = -tg;
            }
            return std::atan2(dot(tg, e2), dot(tg, e1));
        };
        std::sort(nbrs[v].begin(), nbrs[v].end(), [&](const auto& a, const auto& b) {
            return azimuth(a) < azimuth(b);
        });
    }

    const auto cw_next = [&](int v, int from) {
        const auto& list = nbrs[v];
        std::size_t i = 0;
        while (list[i].first != from) {
            ++i;
        }
        return list[(i + list.size() - 1) % list.size()].first;
    };

    // Trace faces: after arriving at v along u->v, the left face continues
    // with the clockwise-next edge from v->u.
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> cycles;
    for (std::size_t v = 0; v < vs.size(); ++v) {
        for (const auto& [w, m] : nbrs[v]) {
            if (seen.count({static_cast<int>(v), w}) != 0) {
                continue;
            }
            std::vector<int> cyc;
            int cu = static_cast<int>(v);
            int cv = w;
            do {
                cyc.push_back(cu);
                seen.emplace(cu, cv);
                const int nx = cw_next(cv, cu);
                cu = cv;
                cv = nx;
            } while (!(cu == static_cast<int>(v) && cv == w) &&
                     cyc.size() <= 2 * edges.size() + 1);
            cycles.push_back(std::move(cyc));
        }
    }

    return detail::assemble(std::move(vs), cycles, major_pairs);
}

/** Regular octahedral tiling: 6 axis vertices, 12 edges, 8 convex triangles. */
inline Tiling octahedron()
{
    const std::vector<std::pair<std::string, SpherePoint>> vs = {
        {"px", {1, 0, 0}},  {"nx", {-1, 0, 0}}, {"py", {0, 1, 0}},
        {"ny", {0, -1, 0}}, {"pz", {0, 0, 1}},  {"nz", {0, 0, -1}},
    };
    std::vector<EdgeSpec> es;
    for (const auto& a : {"px", "nx"}) {
        for (const auto& b : {"py", "ny"}) {
            es.push_back({a, b, false});
        }
    }
    for (const auto& a : {"px", "nx", "py", "ny"}) {
        for (const auto& b : {"pz", "nz"}) {
            es.push_back({a, b, false});
        }
    }
    std::vector<std::vector<std::string>> fs;
    for (const auto& [x, y, z] : std::vector<std::array<const char*, 3>>{
             {"px", "py", "pz"},
             {"py", "nx", "pz"},
             {"nx", "ny", "pz"},
             {"ny", "px", "pz"},
             {"py", "px", "nz"},
             {"nx", "py", "nz"},
             {"ny", "nx", "nz"},
             {"px", "ny", "nz"}}) {
        fs.push_back({x, y, z});
    }
    return build_tiling(vs, es, fs);
}

}  // namespace hyperfan
