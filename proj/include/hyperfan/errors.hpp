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

#include <stdexcept>
#include <string>

namespace hyperfan {

/** Base class for all hyperfan errors. */
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string& msg) : std::runtime_error{msg} {}
};

/** Graph violates the simple-graph contract (loop, parallel edge, unknown endpoint). */
class MalformedGraph : public Error
{
public:
    using Error::Error;
};

/** Reverse Henneberg search cannot reach the base graph. */
class NotDecomposable : public Error
{
public:
    using Error::Error;
};

/** A Henneberg step does not apply to the given graph. */
class InvalidStep : public Error
{
public:
    using Error::Error;
};

/** Numerically degenerate configuration (flat angle, point on arc, parallel tangents). */
class DegenerateConfiguration : public Error
{
public:
    using Error::Error;
};

/** Two arcs of a complex intersect in their interiors. */
class CrossingEdges : public Error
{
public:
    using Error::Error;
};

/** Half-edge complex is not a valid tiling of the sphere. */
class NonSphericalComplex : public Error
{
public:
    using Error::Error;
};

/** A tile is neither a pseudo-triangle nor a pseudo-di-gon. */
class NonNiceTiling : public Error
{
public:
    using Error::Error;
};

/** Sampling budget exhausted without finding a valid placement. */
class FeasibleRegionExhausted : public Error
{
public:
    using Error::Error;
};

/** Input graph is not Laman-plus-one. */
class NotLamanPlusOne : public Error
{
public:
    using Error::Error;
};

/** Geometric replay failed; carries the index of the failing step. */
class EmbeddingFailed : public Error
{
public:
    EmbeddingFailed(const std::string& msg, std::size_t step)
        : Error{msg}, failing_step{step}
    {
    }
    std::size_t failing_step;
};

/** Weights do not satisfy vertex equilibrium. */
class NotASelfStress : public Error
{
public:
    using Error::Error;
};

/** Lift propagation does not close up over the dual cycles. */
class LiftInconsistent : public Error
{
public:
    using Error::Error;
};

/** Operation requires a fan that is a nice pseudo-tiling. */
class NotNiceFan : public Error
{
public:
    using Error::Error;
};

/** Support function jump across an edge is numerically zero. */
class DegenerateJump : public Error
{
public:
    using Error::Error;
};

}  // namespace hyperfan
