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

#include <cmath>
#include <utility>

#include "hyperfan/errors.hpp"
#include "hyperfan/vec3.hpp"

namespace hyperfan {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/** Angle classification tolerance (radians). */
inline constexpr double kEpsAngle = 1e-9;
/** Orientation predicate tolerance on the 3x3 determinant. */
inline constexpr double kEpsDet = 1e-12;
/** Allowed deviation of a point's norm from 1. */
inline constexpr double kEpsUnit = 1e-12;
/** Below this sine of the dihedral angle, two great circles are treated as equal. */
inline constexpr double kEpsCoplanar = 1e-10;

/** A point on the unit sphere. Producers renormalize after every construction. */
using SpherePoint = Vec3;

/** Normalize to the unit sphere; rejects near-zero input. */
inline SpherePoint sphere_point(double x, double y, double z)
{
    const Vec3 v{x, y, z};
    const double n = norm(v);
    if (n < 1e-300) {
        throw DegenerateConfiguration("cannot normalize zero vector to sphere point");
    }
    return v / n;
}

inline bool is_unit(const Vec3& v) { return std::abs(norm(v) - 1.0) <= kEpsUnit; }

/** Angle between unit vectors, computed via atan2 for stability near 0 and pi. */
inline double angular_distance(const Vec3& a, const Vec3& b)
{
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

/**
 * @brief Sign of det[p; q; r] with tolerance kEpsDet.
 *
 * +1 when r lies on the positive side of the oriented great circle through
 * p and q, -1 on the negative side, 0 when the triple is numerically coplanar.
 */
inline int orient(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r)
{
    const double d = det3(p, q, r);
    if (d > kEpsDet) {
        return 1;
    }
    if (d < -kEpsDet) {
        return -1;
    }
    return 0;
}

/** Unit tangent at `from` pointing along the shorter geodesic toward `to`. */
inline Vec3 tangent_toward(const SpherePoint& from, const SpherePoint& to)
{
    const Vec3 t = to - dot(to, from) * from;
    const double n = norm(t);
    if (n < kEpsAngle) {
        throw DegenerateConfiguration("tangent undefined: points coincide or are antipodal");
    }
    return t / n;
}

/**
 * @brief Angle in [0, 2pi) rotating `a` onto `b` counterclockwise in the
 * tangent plane with outward normal `n` (all three unit, a,b orthogonal to n).
 */
inline double ccw_angle(const Vec3& a, const Vec3& b, const Vec3& n)
{
    double t = std::atan2(dot(cross(a, b), n), dot(a, b));
    if (t < 0) {
        t += kTwoPi;
    }
    return t;
}

/**
 * @brief Directed geodesic arc between two sphere points.
 *
 * Endpoints must be distinct and non-antipodal so the supporting great circle
 * is unique; the chord angle has to stay inside (kEpsAngle, pi - kEpsAngle).
 * `major` selects the long way around: a geodesic segment may be longer than
 * pi, which pointed tilings genuinely need. Travel from a to b runs
 * counterclockwise around normal(), covering length() radians.
 */
struct Arc {
    SpherePoint a;
    SpherePoint b;
    bool major{false};

    Arc(const SpherePoint& a_, const SpherePoint& b_, bool major_ = false)
        : a{a_}, b{b_}, major{major_}
    {
        const double d = angular_distance(a, b);
        if (d <= kEpsAngle || d >= kPi - kEpsAngle) {
            throw DegenerateConfiguration("arc endpoints equal or antipodal");
        }
    }

    /** Chord angle between the endpoints, always in (0, pi). */
    double chord_angle() const { return angular_distance(a, b); }

    /** Arc length: the chord angle, or its complement to 2pi on the long way. */
    double length() const
    {
        const double d = chord_angle();
        return major ? kTwoPi - d : d;
    }

    /** Unit normal such that travel a -> b along the arc is counterclockwise. */
    Vec3 normal() const
    {
        const Vec3 n = normalized(cross(a, b));
        return major ? -n : n;
    }

    /** Unit tangent at a, pointing along the arc. */
    Vec3 departure() const { return cross(normal(), a); }

    /** Unit tangent at b, pointing back along the arc toward a. */
    Vec3 arrival_back() const { return cross(b, normal()); }

    /** Arc midpoint. */
    Vec3 midpoint() const { return point_at(0.5); }

    /** Point at parameter s in [0, 1] along the arc. */
    Vec3 point_at(double s) const
    {
        const Vec3 n = normal();
        const Vec3 e2 = cross(n, a);
        const double phi = s * length();
        return normalized(std::cos(phi) * a + std::sin(phi) * e2);
    }

    Arc reversed() const { return Arc{b, a, major}; }
};

namespace detail {

enum class ArcPosition { Outside, Interior, AtEndpoint };

/** CCW angle of on-circle point x from the arc start, in [0, 2pi). */
inline double angle_from_start(const Vec3& x, const Arc& arc)
{
    const Vec3 n = arc.normal();
    const Vec3 e2 = cross(n, arc.a);
    double phi = std::atan2(dot(x, e2), dot(x, arc.a));
    if (phi < 0) {
        phi += kTwoPi;
    }
    return phi;
}

/** Where a point already known to lie on the arc's great circle sits relative to the arc. */
inline ArcPosition position_on_arc(const Vec3& x, const Arc& arc)
{
    if (angular_distance(x, arc.a) < kEpsAngle || angular_distance(x, arc.b) < kEpsAngle) {
        return ArcPosition::AtEndpoint;
    }
    const double phi = angle_from_start(x, arc);
    return (phi > kEpsAngle && phi < arc.length() - kEpsAngle) ? ArcPosition::Interior
                                                               : ArcPosition::Outside;
}

/** Crossing test for arcs on the same great circle: do the travel ranges overlap? */
inline bool coplanar_arcs_cross(const Arc& A, const Arc& B)
{
    const bool endpoint_inside =
        position_on_arc(B.a, A) == ArcPosition::Interior ||
        position_on_arc(B.b, A) == ArcPosition::Interior ||
        position_on_arc(A.a, B) == ArcPosition::Interior ||
        position_on_arc(A.b, B) == ArcPosition::Interior;

    // Map B onto A's travel coordinate. B sweeps forward when its oriented
    // normal agrees with A's, backward otherwise.
    const double la = A.length();
    const double lb = B.length();
    const double pb = angle_from_start(B.a, A);
    double lo, hi;
    if (dot(A.normal(), B.normal()) > 0) {
        lo = pb;
        hi = pb + lb;
    }
    else {
        lo = pb - lb;
        hi = pb;
    }
    // Overlap of [lo, hi] (mod 2pi) with [0, la].
    double overlap = 0.0;
    for (const double shift : {-kTwoPi, 0.0, kTwoPi}) {
        overlap += std::max(0.0, std::min(hi + shift, la) - std::max(lo + shift, 0.0));
    }

    if (endpoint_inside) {
        if (overlap > kEpsAngle) {
            return true;
        }
        throw DegenerateConfiguration("collinear arcs touch at a non-endpoint");
    }
    return overlap > kEpsAngle;
}

}  // namespace detail

/**
 * @brief Do the open interiors of two arcs share a point?
 *
 * Arcs that merely share an endpoint do not cross. An endpoint lying in the
 * other arc's interior (a T-contact) is reported as DegenerateConfiguration
 * rather than silently classified.
 */
inline bool arcs_cross(const Arc& A, const Arc& B)
{
    const Vec3 n1 = A.normal();
    const Vec3 n2 = B.normal();
    const Vec3 d = cross(n1, n2);
    const double dn = norm(d);

    if (dn < kEpsCoplanar) {
        return detail::coplanar_arcs_cross(A, B);
    }

    const Vec3 x1 = d / dn;
    for (const Vec3& x : {x1, -x1}) {
        const auto pa = detail::position_on_arc(x, A);
        const auto pb = detail::position_on_arc(x, B);
        using detail::ArcPosition;
        if (pa == ArcPosition::Outside || pb == ArcPosition::Outside) {
            continue;
        }
        if (pa == ArcPosition::Interior && pb == ArcPosition::Interior) {
            return true;
        }
        if (pa == ArcPosition::AtEndpoint && pb == ArcPosition::AtEndpoint) {
            continue;  // shared endpoint
        }
        throw DegenerateConfiguration("arc endpoint lies on another arc's interior");
    }
    return false;
}

enum class AngleTag { Convex, Reflex, Degenerate };

/** A face angle in (0, 2pi) with its classification against pi. */
struct AngleClass {
    double value{0};
    AngleTag tag{AngleTag::Degenerate};

    bool convex() const { return tag == AngleTag::Convex; }
    bool reflex() const { return tag == AngleTag::Reflex; }
    bool degenerate() const { return tag == AngleTag::Degenerate; }
};

inline AngleClass classify_angle(double value)
{
    AngleClass c;
    c.value = value;
    if (value < kPi - kEpsAngle) {
        c.tag = AngleTag::Convex;
    }
    else if (value > kPi + kEpsAngle) {
        c.tag = AngleTag::Reflex;
    }
    else {
        c.tag = AngleTag::Degenerate;
    }
    return c;
}

/** Selects which of the two faces bordering a vertex corner the angle is measured in. */
enum class Side { Left, Right };

/**
 * @brief Interior angle at `at` between an incoming and an outgoing arc.
 *
 * `incoming` must end at `at` and `outgoing` must start there. Side::Left
 * measures inside the face lying left of the walk (counterclockwise face
 * cycles seen from outside the sphere); Side::Right gives the complement to
 * 2pi. Throws DegenerateConfiguration when the two tangents are parallel
 * within kEpsAngle, i.e. the corner pinches to width 0 or 2pi.
 */
inline AngleClass interior_angle(
    const Arc& incoming, const Arc& outgoing, const SpherePoint& at, Side side = Side::Left)
{
    if (angular_distance(incoming.b, at) > 1e-9 || angular_distance(outgoing.a, at) > 1e-9) {
        throw DegenerateConfiguration("interior_angle: arcs not incident to the vertex");
    }
    const Vec3 t_prev = incoming.arrival_back();
    const Vec3 t_next = outgoing.departure();
    double theta = ccw_angle(t_next, t_prev, at);
    if (theta < kEpsAngle || theta > kTwoPi - kEpsAngle) {
        throw DegenerateConfiguration("corner tangents are parallel");
    }
    if (side == Side::Right) {
        theta = kTwoPi - theta;
    }
    return classify_angle(theta);
}

/** Largest angular distance from `c` to any point of the arc. */
inline double max_distance_to_arc(const Vec3& c, const Arc& arc)
{
    double best = std::max(angular_distance(c, arc.a), angular_distance(c, arc.b));
    const Vec3 n = arc.normal();
    const Vec3 proj = c - dot(c, n) * n;
    const double pn = norm(proj);
    if (pn > 1e-12) {
        const Vec3 far = -1.0 * (proj / pn);  // farthest point on the full circle
        if (detail::position_on_arc(far, arc) == detail::ArcPosition::Interior) {
            best = std::max(best, angular_distance(c, far));
        }
    }
    return best;
}

}  // namespace hyperfan
