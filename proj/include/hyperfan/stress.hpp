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

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hyperfan/tiling.hpp"

namespace hyperfan {

/** Equilibrium tolerance for self-stresses and lift closure. */
inline constexpr double kEpsEquilibrium = 1e-8;
/** Relative singular-value threshold for the stress null space. */
inline constexpr double kSvdThreshold = 1e-10;

/**
 * @brief Edge weights on a tiling, aligned with its edge table.
 *
 * A self-stress satisfies, at every vertex i, the vector identity
 * sum_j w_ij * s_ij * (p_i x p_j) = 0, where the sum runs over incident
 * edges and s_ij is -1 on long-way edges and +1 otherwise. The sign makes
 * the weights compatible with the support-function jumps of a lift; on a
 * tiling without long edges it reduces to the plain cross-product form.
 */
struct Stress {
    std::vector<double> weights;

    double weight(const Tiling& t, const std::string& a, const std::string& b) const
    {
        const int e = t.edge_index(t.vertex_index(a), t.vertex_index(b));
        if (e < 0) {
            throw MalformedGraph("no such edge: " + a + "-" + b);
        }
        return weights[static_cast<std::size_t>(e)];
    }
};

/** Bar framework on the sphere: positions plus flagged index edges. */
struct Framework {
    struct Edge {
        int a;
        int b;
        bool major;
    };
    std::vector<SpherePoint> points;
    std::vector<Edge> edges;
};

inline Framework framework_of(const Tiling& t)
{
    Framework fw;
    for (const auto& v : t.vertices) {
        fw.points.push_back(v.pos);
    }
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        fw.edges.push_back({t.edges[e].first, t.edges[e].second, t.edge_major[e] != 0});
    }
    return fw;
}

/** Signed cross-product column of an edge, oriented first -> second endpoint. */
inline Vec3 edge_column(const Framework& fw, std::size_t e)
{
    const auto& [i, j, major] = fw.edges[e];
    const Vec3 c = cross(fw.points[i], fw.points[j]);
    return major ? -c : c;
}

inline Vec3 edge_column(const Tiling& t, std::size_t e)
{
    const auto& [i, j] = t.edges[e];
    const Vec3 c = cross(t.vertices[i].pos, t.vertices[j].pos);
    return t.edge_major[e] != 0 ? -c : c;
}

/** Largest vertex equilibrium residual of the weights. */
inline double equilibrium_residual(const Framework& fw, const Stress& s)
{
    if (s.weights.size() != fw.edges.size()) {
        throw NotASelfStress("weight count does not match edge count");
    }
    std::vector<Vec3> acc(fw.points.size());
    for (std::size_t e = 0; e < fw.edges.size(); ++e) {
        const Vec3 col = edge_column(fw, e);
        acc[fw.edges[e].a] = acc[fw.edges[e].a] + s.weights[e] * col;
        acc[fw.edges[e].b] = acc[fw.edges[e].b] - s.weights[e] * col;
    }
    double worst = 0;
    for (const auto& r : acc) {
        worst = std::max(worst, norm(r));
    }
    return worst;
}

inline double equilibrium_residual(const Tiling& t, const Stress& s)
{
    return equilibrium_residual(framework_of(t), s);
}

/**
 * @brief Orthonormal basis of the self-stress space of the tiling's
 * framework.
 *
 * Builds the 3v x e equilibrium matrix (each edge contributes its signed
 * cross-product column to both endpoint blocks with opposite signs) and
 * returns the right singular vectors whose singular values fall below
 * kSvdThreshold times the largest one. An empty result means the framework
 * is independent (generic Laman embeddings); dimension 1 is the generic
 * rigidity-circuit case.
 */
inline std::vector<Stress> self_stress_basis(const Framework& fw)
{
    const std::size_t ne = fw.edges.size();
    const std::size_t nv = fw.points.size();
    if (ne == 0) {
        return {};
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3 * nv, ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const Vec3 col = edge_column(fw, e);
        const int i = fw.edges[e].a;
        const int j = fw.edges[e].b;
        m(3 * i + 0, e) = col.x;
        m(3 * i + 1, e) = col.y;
        m(3 * i + 2, e) = col.z;
        m(3 * j + 0, e) = -col.x;
        m(3 * j + 1, e) = -col.y;
        m(3 * j + 2, e) = -col.z;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? sv(0) * kSvdThreshold : 0.0;

    std::vector<Stress> basis;
    for (Eigen::Index k = 0; k < svd.matrixV().cols(); ++k) {
        if (k < sv.size() && sv(k) > cutoff) {
            continue;
        }
        Stress s;
        s.weights.resize(ne);
        for (std::size_t e = 0; e < ne; ++e) {
            s.weights[e] = svd.matrixV()(static_cast<Eigen::Index>(e), k);
        }
        basis.push_back(std::move(s));
    }
    return basis;
}

inline std::vector<Stress> self_stress_basis(const Tiling& t)
{
    return self_stress_basis(framework_of(t));
}

/** Spanning-tree flavor for the lift propagation; results agree up to gauge. */
enum class DualTree { Bfs, Dfs };

/**
 * @brief A tiling together with one linear functional per tile.
 *
 * The piecewise linear support function is x -> dot(tile_linears[f], x) on
 * the cone over face f. Across every edge the difference of the two adjacent
 * linears is parallel to the cross product of the endpoints;
 * closure_residual is the worst violation over non-tree dual edges.
 */
struct VirtualPolytope {
    Tiling fan;
    std::vector<Vec3> tile_linears;
    double closure_residual{0};
    Stress stress;
};

/**
 * @brief Maxwell lift of a self-stress to a PL support function.
 *
 * Fixes the gauge by assigning the zero functional to `root_face` and
 * propagates across a spanning tree of the dual graph: crossing the edge
 * under half-edge h adds w_e * s_e * (origin x target) to the linear of the
 * face left of h. Vertex equilibrium makes the propagation path-independent;
 * the residual is measured over all non-tree edges.
 */
inline VirtualPolytope lift(
    const Tiling& t, const Stress& s, int root_face = 0, DualTree tree = DualTree::Bfs)
{
    const double eq = equilibrium_residual(t, s);
    if (eq > kEpsEquilibrium) {
        throw NotASelfStress("equilibrium residual " + std::to_string(eq));
    }
    if (root_face < 0 || root_face >= static_cast<int>(t.faces.size())) {
        throw LiftInconsistent("root face out of range");
    }

    // Jump added to the left face relative to the right face of half h.
    const auto jump = [&](int h) {
        const int e = t.edge_index(t.halves[h].origin, t.target(h));
        const Vec3 c = cross(t.vertices[t.halves[h].origin].pos, t.vertices[t.target(h)].pos);
        const Vec3 oriented = t.halves[h].major ? -c : c;
        return s.weights[static_cast<std::size_t>(e)] * oriented;
    };

    std::vector<Vec3> a(t.faces.size());
    std::vector<char> known(t.faces.size(), 0);
    std::vector<char> tree_edge(t.edges.size(), 0);
    known[root_face] = 1;

    std::vector<int> frontier{root_face};
    while (!frontier.empty()) {
        int f;
        if (tree == DualTree::Bfs) {
            f = frontier.front();
            frontier.erase(frontier.begin());
        }
        else {
            f = frontier.back();
            frontier.pop_back();
        }
        for (const int h : t.face_cycle(f)) {
            const int g = t.halves[t.halves[h].twin].face;
            if (known[g]) {
                continue;
            }
            // Crossing from f (left of twin) into g: g is left of twin(h).
            a[g] = a[f] + jump(t.halves[h].twin);
            known[g] = 1;
            tree_edge[t.edge_index(t.halves[h].origin, t.target(h))] = 1;
            frontier.push_back(g);
        }
    }
    for (const char k : known) {
        if (!k) {
            throw LiftInconsistent("dual graph is disconnected");
        }
    }

    VirtualPolytope vp;
    vp.fan = t;
    vp.tile_linears = std::move(a);
    vp.stress = s;
    double worst = 0;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        if (tree_edge[e]) {
            continue;
        }
        const int h = t.edge_half[e];
        const int left = t.halves[h].face;
        const int right = t.halves[t.halves[h].twin].face;
        const Vec3 gap =
            vp.tile_linears[left] - vp.tile_linears[right] - jump(h);
        worst = std::max(worst, norm(gap));
    }
    vp.closure_residual = worst;
    if (vp.closure_residual >= kEpsEquilibrium) {
        throw LiftInconsistent(
            "lift closure residual " + std::to_string(vp.closure_residual));
    }
    return vp;
}

enum class Hyperbolicity { CertifiedHyperbolic, NotCertified };

/**
 * @brief Pointedness certificate for hyperbolicity.
 *
 * A pointed fan suffices for the support function to be a saddle; for
 * simplicial polytopes (all fan tiles 3-cycles) the criterion is also
 * necessary, so `simplicial` is reported alongside.
 */
struct HyperbolicityReport {
    Hyperbolicity verdict{Hyperbolicity::NotCertified};
    bool simplicial{false};
};

inline bool is_simplicial(const Tiling& t)
{
    for (const auto& f : t.faces) {
        if (f.size != 3) {
            return false;
        }
    }
    return true;
}

inline HyperbolicityReport is_hyperbolic_certificate(const VirtualPolytope& vp)
{
    HyperbolicityReport rep;
    rep.simplicial = is_simplicial(vp.fan);
    if (is_pointed(vp.fan).pointed) {
        rep.verdict = Hyperbolicity::CertifiedHyperbolic;
    }
    return rep;
}

/** Horns are dual to pseudo-di-gons; requires a certified nice fan. */
inline int horn_count(const VirtualPolytope& vp)
{
    if (is_hyperbolic_certificate(vp).verdict != Hyperbolicity::CertifiedHyperbolic) {
        throw NotNiceFan("polytope is not certified hyperbolic");
    }
    if (!is_nice(vp.fan).nice) {
        throw NotNiceFan("fan is not a nice pseudo-tiling");
    }
    return digon_count(vp.fan);
}

enum class EdgeColor { Red, Blue };

/** Color per fan edge, aligned with the tiling edge table. */
struct EdgeColoring {
    std::vector<EdgeColor> colors;
};

/**
 * @brief Concavity classification of the support function across each edge.
 *
 * At the edge midpoint m the two adjacent tile linears agree; stepping off
 * the edge into the right tile along direction d, the function is concave up
 * (Red) when the right linear dominates the left one's extension, i.e. when
 * dot(a_right - a_left, d) > 0, and concave down (Blue) otherwise. A jump
 * below kEpsEquilibrium raises DegenerateJump.
 */
inline EdgeColoring color_edges(const VirtualPolytope& vp)
{
    const Tiling& t = vp.fan;
    EdgeColoring out;
    out.colors.reserve(t.edges.size());
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const int h = t.edge_half[e];
        const int left = t.halves[h].face;
        const int right = t.halves[t.halves[h].twin].face;
        const Arc arc = t.half_arc(h);
        const Vec3 m = arc.midpoint();
        const Vec3 travel = cross(arc.normal(), m);
        const Vec3 into_right = -cross(m, travel);
        const double step =
            dot(vp.tile_linears[right] - vp.tile_linears[left], into_right);
        if (std::abs(step) <= kEpsEquilibrium) {
            throw DegenerateJump(
                "flat support-function jump across edge " + std::to_string(e));
        }
        out.colors.push_back(step > 0 ? EdgeColor::Red : EdgeColor::Blue);
    }
    return out;
}

/**
 * @brief Closed polytopal surface dual to the fan.
 *
 * One mesh vertex per fan tile (its linear functional as a point), one
 * polygonal mesh face per fan vertex, walking the incident tiles in
 * rotational order. Self-intersections are expected and allowed.
 */
struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;
};

inline Mesh reciprocal_surface(const VirtualPolytope& vp)
{
    Mesh mesh;
    mesh.vertices = vp.tile_linears;
    const Tiling& t = vp.fan;
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
        std::vector<int> cyc;
        for (const int h : t.star(static_cast<int>(v))) {
            cyc.push_back(t.halves[h].face);
        }
        mesh.faces.push_back(std::move(cyc));
    }
    return mesh;
}

/** Per-edge and per-vertex combinatorial data paired with stress signs. */
struct SurveyReport {
    struct EdgeRow {
        std::string edge_id;  // "<a>~<b>" with sorted ids
        EdgeColor color;
        int sign;  // sign of the stress weight
    };
    struct VertexRow {
        std::string vertex_id;
        int degree;
        int reflex_position;  // corner index of the reflex angle, in star order
    };
    std::vector<EdgeRow> edges;
    std::vector<VertexRow> vertices;
};

/**
 * @brief Pairs each edge's color with its stress sign and each vertex's
 * degree with the rotational position of its reflex corner.
 *
 * Raw material for studying whether the sign pattern is readable off the
 * combinatorics; no detection rule is claimed.
 */
inline SurveyReport survey_report(const VirtualPolytope& vp)
{
    SurveyReport rep;
    const Tiling& t = vp.fan;
    const EdgeColoring coloring = color_edges(vp);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        SurveyReport::EdgeRow row;
        const auto& [i, j] = t.edges[e];
        row.edge_id = t.vertices[i].id + "~" + t.vertices[j].id;
        row.color = coloring.colors[e];
        const double w = vp.stress.weights[e];
        row.sign = w > 0 ? 1 : (w < 0 ? -1 : 0);
        rep.edges.push_back(std::move(row));
    }
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
        SurveyReport::VertexRow row;
        row.vertex_id = t.vertices[v].id;
        const auto star = t.star(static_cast<int>(v));
        row.degree = static_cast<int>(star.size());
        row.reflex_position = -1;
        for (std::size_t k = 0; k < star.size(); ++k) {
            if (corner_angle(t, star[k]).reflex()) {
                row.reflex_position = static_cast<int>(k);
                break;
            }
        }
        rep.vertices.push_back(std::move(row));
    }
    return rep;
}

}  // namespace hyperfan
