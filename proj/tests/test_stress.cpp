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

#include "hyperfan/embedder.hpp"
#include "hyperfan/stress.hpp"

using namespace hyperfan;

namespace {

/** Spherical triangle tiling: 3 vertices, 3 edges, inner and outer face. */
Tiling triangle_tiling()
{
    const std::vector<std::pair<std::string, SpherePoint>> vs = {
        {"a", normalized(Vec3{1, 0.2, 0.3})},
        {"b", normalized(Vec3{-0.2, 1, 0.25})},
        {"c", normalized(Vec3{0.1, -0.15, 1})},
    };
    const std::vector<EdgeSpec> es = {{"a", "b", false}, {"b", "c", false}, {"a", "c", false}};
    const std::vector<std::vector<std::string>> fs = {{"a", "b", "c"}, {"c", "b", "a"}};
    return build_tiling(vs, es, fs);
}

Vec3 rotated(const Vec3& p, const Vec3& k, double angle)
{
    return std::cos(angle) * p + std::sin(angle) * cross(k, p) +
           (1 - std::cos(angle)) * dot(k, p) * k;
}

}  // namespace

TEST_CASE("a rigidity circuit embedding carries a one-dimensional stress space")
{
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    REQUIRE(basis.size() == 1);
    CHECK(equilibrium_residual(seed, basis[0]) < kEpsEquilibrium);
    for (const double w : basis[0].weights) {
        CHECK(std::abs(w) > 1e-6);  // non-vanishing on every edge
    }

    Stress scaled;
    for (const double w : basis[0].weights) {
        scaled.weights.push_back(2.5 * w);
    }
    CHECK(equilibrium_residual(seed, scaled) < 2.5 * kEpsEquilibrium);
}

TEST_CASE("a generic Laman embedding has no self-stress")
{
    const Tiling tri = triangle_tiling();
    CHECK(self_stress_basis(tri).empty());

    // Seed framework minus one edge is Laman: stress space drops to zero.
    Framework fw = framework_of(seed_k4());
    fw.edges.erase(fw.edges.begin());
    CHECK(self_stress_basis(fw).empty());
}

TEST_CASE("lifting the zero stress gives the zero polytope")
{
    const Tiling seed = seed_k4();
    Stress zero;
    zero.weights.assign(seed.edges.size(), 0.0);
    const auto vp = lift(seed, zero);
    CHECK(vp.closure_residual == 0.0);
    for (const auto& a : vp.tile_linears) {
        CHECK(norm(a) == 0.0);
    }
}

TEST_CASE("lift is linear in the stress")
{
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    REQUIRE(basis.size() == 1);
    Stress scaled;
    for (const double w : basis[0].weights) {
        scaled.weights.push_back(-1.75 * w);
    }
    const auto vp1 = lift(seed, basis[0]);
    const auto vp2 = lift(seed, scaled);
    for (std::size_t f = 0; f < vp1.tile_linears.size(); ++f) {
        CHECK(norm(vp2.tile_linears[f] - (-1.75) * vp1.tile_linears[f]) < 1e-12);
    }
}

TEST_CASE("seed lift closes up and certifies hyperbolic with four horns")
{
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    REQUIRE(basis.size() == 1);
    const auto vp = lift(seed, basis[0]);
    CHECK(vp.closure_residual < kEpsEquilibrium);

    const auto cert = is_hyperbolic_certificate(vp);
    CHECK(cert.verdict == Hyperbolicity::CertifiedHyperbolic);
    CHECK(cert.simplicial);
    CHECK(horn_count(vp) == 4);
}

TEST_CASE("octahedron stresses exist but the fan is not pointed")
{
    const Tiling octa = octahedron();
    const auto basis = self_stress_basis(octa);
    REQUIRE(!basis.empty());  // e - (2v - 3) = 3 independent stresses at least
    const auto vp = lift(octa, basis[0]);
    CHECK(is_hyperbolic_certificate(vp).verdict == Hyperbolicity::NotCertified);
    CHECK_THROWS_AS(horn_count(vp), NotNiceFan);
}

TEST_CASE("lift is independent of the spanning tree up to a constant shift")
{
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    const auto vp1 = lift(seed, basis[0], 0, DualTree::Bfs);
    const auto vp2 = lift(seed, basis[0], 2, DualTree::Dfs);
    const Vec3 shift = vp2.tile_linears[0] - vp1.tile_linears[0];
    for (std::size_t f = 0; f < vp1.tile_linears.size(); ++f) {
        CHECK(norm(vp2.tile_linears[f] - vp1.tile_linears[f] - shift) < 1e-8);
    }
}

TEST_CASE("lift rejects weights that are not a self-stress")
{
    const Tiling seed = seed_k4();
    Stress bogus;
    bogus.weights.assign(seed.edges.size(), 1.0);
    CHECK_THROWS_AS(lift(seed, bogus), NotASelfStress);
}

TEST_CASE("negating the stress swaps every edge color")
{
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    Stress neg;
    for (const double w : basis[0].weights) {
        neg.weights.push_back(-w);
    }
    const auto c1 = color_edges(lift(seed, basis[0]));
    const auto c2 = color_edges(lift(seed, neg));
    REQUIRE(c1.colors.size() == c2.colors.size());
    bool saw_red = false, saw_blue = false;
    for (std::size_t e = 0; e < c1.colors.size(); ++e) {
        CHECK(c1.colors[e] != c2.colors[e]);
        saw_red = saw_red || c1.colors[e] == EdgeColor::Red;
        saw_blue = saw_blue || c1.colors[e] == EdgeColor::Blue;
    }
    // A saddle support function cannot be one-sidedly convex.
    CHECK(saw_red);
    CHECK(saw_blue);

    // Positive scaling leaves the coloring unchanged.
    Stress scaled;
    for (const double w : basis[0].weights) {
        scaled.weights.push_back(3.0 * w);
    }
    const auto c3 = color_edges(lift(seed, scaled));
    for (std::size_t e = 0; e < c1.colors.size(); ++e) {
        CHECK(c1.colors[e] == c3.colors[e]);
    }
}

TEST_CASE("edge colors follow the stress signs")
{
    // Positively stressed edges color red, negatively stressed ones blue.
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    const auto vp = lift(seed, basis[0]);
    const auto coloring = color_edges(vp);
    for (std::size_t e = 0; e < seed.edges.size(); ++e) {
        const bool positive = basis[0].weights[e] > 0;
        CHECK((coloring.colors[e] == EdgeColor::Red) == positive);
    }
}

TEST_CASE("reciprocal surface swaps the roles of faces and vertices")
{
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    const auto vp = lift(seed, basis[0]);
    const auto mesh = reciprocal_surface(vp);
    CHECK(mesh.vertices.size() == seed.faces.size());
    CHECK(mesh.faces.size() == seed.vertices.size());
    for (const auto& f : mesh.faces) {
        CHECK(f.size() == 3);  // seed vertices all have degree 3
    }

    Stress zero;
    zero.weights.assign(seed.edges.size(), 0.0);
    const auto flat = reciprocal_surface(lift(seed, zero));
    for (const auto& v : flat.vertices) {
        CHECK(norm(v) == 0.0);
    }
}

TEST_CASE("stress space and lift are rotation equivariant")
{
    const Tiling seed = seed_k4();
    const Vec3 axis = normalized(Vec3{1, 2, 3});
    const double angle = 0.7;
    Tiling turned = seed;
    for (auto& v : turned.vertices) {
        v.pos = normalized(rotated(v.pos, axis, angle));
    }

    const auto b1 = self_stress_basis(seed);
    const auto b2 = self_stress_basis(turned);
    REQUIRE(b1.size() == 1);
    REQUIRE(b2.size() == 1);

    // One-dimensional spaces: unit basis vectors agree up to sign.
    double dot_w = 0;
    for (std::size_t e = 0; e < b1[0].weights.size(); ++e) {
        dot_w += b1[0].weights[e] * b2[0].weights[e];
    }
    CHECK(std::abs(std::abs(dot_w) - 1.0) < 1e-6);

    // Tile linears of the matched stress transform with the rotation.
    Stress matched;
    for (const double w : b2[0].weights) {
        matched.weights.push_back(dot_w < 0 ? -w : w);
    }
    const auto vp1 = lift(seed, b1[0]);
    const auto vp2 = lift(turned, matched);
    for (std::size_t f = 0; f < vp1.tile_linears.size(); ++f) {
        CHECK(norm(vp2.tile_linears[f] - rotated(vp1.tile_linears[f], axis, angle)) < 1e-6);
    }
}

TEST_CASE("survey pairs cardinalities and is deterministic")
{
    const Tiling seed = seed_k4();
    const auto basis = self_stress_basis(seed);
    const auto vp = lift(seed, basis[0]);
    const auto rep = survey_report(vp);
    CHECK(rep.edges.size() == 6);
    CHECK(rep.vertices.size() == 4);
    for (const auto& row : rep.vertices) {
        CHECK(row.degree == 3);
        CHECK(row.reflex_position >= 0);
    }
    const auto rep2 = survey_report(vp);
    for (std::size_t i = 0; i < rep.edges.size(); ++i) {
        CHECK(rep.edges[i].edge_id == rep2.edges[i].edge_id);
        CHECK(rep.edges[i].sign == rep2.edges[i].sign);
    }
}
