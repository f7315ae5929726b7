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

#include <cstdint>
#include <random>

#include "hyperfan/vec3.hpp"

namespace hyperfan {

// Randomized algorithms draw through these helpers only, never through
// std::*_distribution, so a (seed, call sequence) pair reproduces the same
// stream on every standard library.

/** SplitMix64 step; used to derive independent sub-seeds. */
inline std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt)
{
    return mix_seed(seed ^ mix_seed(salt));
}

/** Uniform double in [0, 1) from the top 53 bits. */
inline double uniform01(std::mt19937_64& g)
{
    return std::ldexp(static_cast<double>(g() >> 11), -53);
}

inline double uniform(std::mt19937_64& g, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(g);
}

/** Uniform integer in [0, n). */
inline std::size_t uniform_index(std::mt19937_64& g, std::size_t n)
{
    return static_cast<std::size_t>(uniform01(g) * static_cast<double>(n)) % n;
}

/** Uniform point on the unit sphere. */
inline Vec3 uniform_sphere(std::mt19937_64& g)
{
    const double z = uniform(g, -1.0, 1.0);
    const double phi = uniform(g, 0.0, 6.283185307179586476925286766559);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

/** Uniform point in the spherical cap of angular radius `radius` around `center`. */
inline Vec3 uniform_cap(std::mt19937_64& g, const Vec3& center, double radius)
{
    // z uniform over [cos(radius), 1] gives area-uniform sampling.
    const double z = 1.0 - uniform01(g) * (1.0 - std::cos(radius));
    const double phi = uniform(g, 0.0, 6.283185307179586476925286766559);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    // Local frame around center.
    const Vec3 axis = std::abs(center.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(cross(center, axis));
    const Vec3 e2 = cross(center, e1);
    return normalized(z * center + (r * std::cos(phi)) * e1 + (r * std::sin(phi)) * e2);
}

}  // namespace hyperfan
