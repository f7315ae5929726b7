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

#include "hyperfan/rng.hpp"
#include "hyperfan/sphere.hpp"
#include "oracles.hpp"

using namespace hyperfan;

namespace {

Vec3 lonlat(double lon_deg, double lat_deg)
{
    const double lon = lon_deg * kPi / 180.0;
    const double lat = lat_deg * kPi / 180.0;
    return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

}  // namespace

TEST_CASE("orient on canonical triples")
{
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    CHECK(orient(x, y, z) == 1);
    CHECK(orient(y, x, z) == -1);
    CHECK(orient(x, y, -y) == 0);
}

TEST_CASE("orient is antisymmetric under transpositions")
{
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 200) {
        const Vec3 p = uniform_sphere(rng);
        const Vec3 q = uniform_sphere(rng);
        const Vec3 r = uniform_sphere(rng);
        if (std::abs(det3(p, q, r)) < 10 * kEpsDet) {
            continue;
        }
        const int s = orient(p, q, r);
        CHECK(orient(q, p, r) == -s);
        CHECK(orient(p, r, q) == -s);
        CHECK(orient(r, q, p) == -s);
        ++checked;
    }
}

TEST_CASE("arc construction rejects degenerate endpoints")
{
    const Vec3 x{1, 0, 0};
    CHECK_THROWS_AS(Arc(x, x), DegenerateConfiguration);
    CHECK_THROWS_AS(Arc(x, -x), DegenerateConfiguration);
}

TEST_CASE("major arcs run the long way")
{
    const Arc minor{lonlat(0, 0), lonlat(90, 0), false};
    const Arc major{lonlat(0, 0), lonlat(90, 0), true};
    CHECK(minor.length() == Catch::Approx(kPi / 2));
    CHECK(major.length() == Catch::Approx(3 * kPi / 2));
    CHECK(norm(minor.departure() + major.departure()) < 1e-12);
    CHECK(norm(minor.point_at(0.0) - minor.a) < 1e-12);
    CHECK(norm(major.point_at(1.0) - major.b) < 1e-9);
    // the long way passes through the antipode of the short midpoint
    CHECK(norm(major.midpoint() + minor.midpoint()) < 1e-9);
}

TEST_CASE("arcs on one great circle with disjoint ranges do not cross")
{
    const Arc a{lonlat(0, 0), lonlat(60, 0)};
    const Arc b{lonlat(90, 0), lonlat(150, 0)};
    CHECK_FALSE(arcs_cross(a, b));
    CHECK_FALSE(arcs_cross(b, a));
}

TEST_CASE("long equator arc crosses a meridian arc")
{
    const Arc equator{lonlat(0, 0), lonlat(170, 0)};
    const Arc meridian{lonlat(80, -40), lonlat(80, 45)};
    const auto expected = oracle::arcs_cross_sampled(equator, meridian);
    REQUIRE(expected.has_value());
    CHECK(*expected);
    CHECK(arcs_cross(equator, meridian));
}

TEST_CASE("arcs sharing exactly one endpoint do not cross")
{
    const Arc a{lonlat(0, 0), lonlat(90, 30)};
    const Arc b{lonlat(0, 0), lonlat(-60, -10)};
    CHECK_FALSE(arcs_cross(a, b));
}

TEST_CASE("endpoint in the interior of another arc is degenerate")
{
    const Arc a{lonlat(-60, 0), lonlat(60, 0)};
    const Arc t{lonlat(0, 0), lonlat(10, 50)};  // starts on a's interior
    CHECK_THROWS_AS(arcs_cross(a, t), DegenerateConfiguration);
}

TEST_CASE("arcs_cross agrees with the sampled oracle and is symmetric")
{
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 300) {
        Vec3 p1 = uniform_sphere(rng), p2 = uniform_sphere(rng);
        Vec3 q1 = uniform_sphere(rng), q2 = uniform_sphere(rng);
        const bool maj_a = uniform01(rng) < 0.25;
        const bool maj_b = uniform01(rng) < 0.25;
        try {
            const Arc a{p1, p2, maj_a};
            const Arc b{q1, q2, maj_b};
            const auto expected = oracle::arcs_cross_sampled(a, b);
            if (!expected.has_value()) {
                continue;  // oracle cannot decide close calls
            }
            const bool got = arcs_cross(a, b);
            CHECK(got == *expected);
            CHECK(arcs_cross(b, a) == got);
            ++checked;
        }
        catch (const DegenerateConfiguration&) {
            continue;
        }
    }
}

TEST_CASE("octant corner measures a right angle")
{
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    const Arc in{x, y};
    const Arc out{y, z};
    const auto left = interior_angle(in, out, y, Side::Left);
    CHECK(left.value == Catch::Approx(kPi / 2));
    CHECK(left.convex());

    const auto right = interior_angle(in, out, y, Side::Right);
    CHECK(right.value == Catch::Approx(3 * kPi / 2));
    CHECK(right.reflex());
    CHECK(left.value + right.value == Catch::Approx(kTwoPi));
}

TEST_CASE("complementary sides always sum to a full turn")
{
    std::mt19937_64 rng(37);
    int checked = 0;
    while (checked < 100) {
        const Vec3 at = uniform_sphere(rng);
        const Vec3 p = uniform_sphere(rng);
        const Vec3 q = uniform_sphere(rng);
        try {
            const Arc in{p, at};
            const Arc out{at, q};
            const auto l = interior_angle(in, out, at, Side::Left);
            const auto r = interior_angle(in, out, at, Side::Right);
            CHECK(l.value + r.value == Catch::Approx(kTwoPi).margin(1e-9));
            ++checked;
        }
        catch (const DegenerateConfiguration&) {
            continue;
        }
    }
}

TEST_CASE("angle classification tolerances")
{
    CHECK(classify_angle(kPi - 1e-6).convex());
    CHECK(classify_angle(kPi + 1e-6).reflex());
    CHECK(classify_angle(kPi).degenerate());
    CHECK(classify_angle(kPi + 0.5e-9).degenerate());
}

TEST_CASE("max distance to an arc covers the far point")
{
    const Arc a{lonlat(0, 0), lonlat(90, 0)};
    // From the north pole every point of the equator is a quarter turn away.
    CHECK(max_distance_to_arc(Vec3{0, 0, 1}, a) == Catch::Approx(kPi / 2));
    // From a point near one endpoint the other endpoint is the farthest.
    CHECK(
        max_distance_to_arc(lonlat(0, 5), a) ==
        Catch::Approx(angular_distance(lonlat(0, 5), lonlat(90, 0))));
}
