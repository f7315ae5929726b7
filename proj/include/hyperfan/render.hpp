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

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "hyperfan/stress.hpp"
#include "hyperfan/tiling.hpp"

namespace hyperfan {

struct RenderSpec {
    enum class Projection { StereographicNorth, StereographicSouth, BothHemispheres };
    enum class Highlight { Digons, Colors, None };
    Projection projection{Projection::BothHemispheres};
    int samples_per_arc{32};  // >= 8
    Highlight highlight{Highlight::None};
};

namespace detail {

struct Panel {
    double cx, cy;  // SVG center
    bool north;     // projects the hemisphere around +z
};

/** Stereographic image; the pole opposite the viewed hemisphere projects to infinity. */
inline std::pair<double, double> project(const Vec3& p, bool north)
{
    const double denom = north ? 1.0 + p.z : 1.0 - p.z;
    const double guard = std::abs(denom) < 1e-9 ? (denom < 0 ? -1e-9 : 1e-9) : denom;
    const double x = p.x / guard;
    const double y = north ? p.y / guard : -p.y / guard;
    // Clamp far-side blowups; off-canvas points are cropped by the viewBox.
    const double r = std::sqrt(x * x + y * y);
    if (r > 1e4) {
        return {x / r * 1e4, y / r * 1e4};
    }
    return {x, y};
}

inline std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

inline void emit_point(
    std::ostringstream& out, const Panel& panel, const Vec3& p, double scale)
{
    const auto [x, y] = project(p, panel.north);
    out << fmt(panel.cx + scale * x) << "," << fmt(panel.cy - scale * y) << " ";
}

}  // namespace detail

/**
 * @brief Renders a tiling as an SVG with one or two stereographic panels.
 *
 * Geodesic arcs are drawn as sampled polylines, one polyline per edge,
 * placed in the panel whose hemisphere contains the arc midpoint (or the
 * single requested panel). Highlight::Digons shades pseudo-di-gon tiles with
 * one path element each; Highlight::Colors strokes edges red/blue from the
 * supplied coloring. If a vertex lies within 1e-6 of a projection pole, the
 * whole picture is rotated by a fixed small angle until clear, so output
 * depends only on input and flags.
 */
inline std::string render_svg(
    const Tiling& input,
    const RenderSpec& spec,
    const std::optional<EdgeColoring>& coloring = std::nullopt)
{
    if (spec.samples_per_arc < 8) {
        throw MalformedGraph("samples_per_arc must be at least 8");
    }
    if (spec.highlight == RenderSpec::Highlight::Colors &&
        (!coloring || coloring->colors.size() != input.edges.size())) {
        throw MalformedGraph("highlight=colors requires a coloring with one entry per edge");
    }

    // Rotate deterministically until no vertex is near either pole.
    Tiling t = input;
    for (int tries = 0; tries < 64; ++tries) {
        bool clear = true;
        for (const auto& v : t.vertices) {
            if (std::abs(std::abs(v.pos.z) - 1.0) < 1e-6) {
                clear = false;
                break;
            }
        }
        if (clear) {
            break;
        }
        constexpr double c = 0.99500416527802576609;  // cos(0.1)
        constexpr double s = 0.09983341664682815230;  // sin(0.1)
        for (auto& v : t.vertices) {
            const Vec3 p = v.pos;
            v.pos = normalized(Vec3{p.x, c * p.y - s * p.z, s * p.y + c * p.z});
        }
    }

    const double scale = 180.0;
    std::vector<detail::Panel> panels;
    if (spec.projection == RenderSpec::Projection::StereographicNorth) {
        panels.push_back({210, 210, true});
    }
    else if (spec.projection == RenderSpec::Projection::StereographicSouth) {
        panels.push_back({210, 210, false});
    }
    else {
        panels.push_back({210, 210, true});
        panels.push_back({630, 210, false});
    }
    const double width = panels.size() == 1 ? 420 : 840;

    const auto panel_for = [&](const Vec3& anchor) -> const detail::Panel& {
        if (panels.size() == 1) {
            return panels[0];
        }
        return anchor.z >= 0 ? panels[0] : panels[1];
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"420\" viewBox=\"0 0 " << width << " 420\">\n";
    out << "<rect width=\"" << width << "\" height=\"420\" fill=\"white\"/>\n";
    for (const auto& p : panels) {
        out << "<circle cx=\"" << p.cx << "\" cy=\"" << p.cy << "\" r=\"" << scale
            << "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    }

    // Shaded pseudo-di-gons first so edges draw on top.
    if (spec.highlight == RenderSpec::Highlight::Digons) {
        for (std::size_t f = 0; f < t.faces.size(); ++f) {
            if (classify_face(t, static_cast<int>(f)).tag != TileClass::Tag::PseudoDiGon) {
                continue;
            }
            const auto cycle = t.face_cycle(static_cast<int>(f));
            const detail::Panel& panel = panel_for(t.half_arc(cycle.front()).midpoint());
            std::ostringstream pts;
            for (const int h : cycle) {
                const Arc arc = t.half_arc(h);
                for (int k = 0; k < spec.samples_per_arc; ++k) {
                    detail::emit_point(
                        pts, panel, arc.point_at(double(k) / spec.samples_per_arc), scale);
                }
            }
            out << "<path d=\"M " << pts.str() << "Z\" fill=\"#cccccc\" fill-opacity=\"0.6\""
                << " stroke=\"none\"/>\n";
        }
    }

    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const Arc arc{
            t.vertices[t.edges[e].first].pos, t.vertices[t.edges[e].second].pos,
            t.edge_major[e] != 0};
        const detail::Panel& panel = panel_for(arc.midpoint());
        std::ostringstream pts;
        for (int k = 0; k < spec.samples_per_arc; ++k) {
            detail::emit_point(
                pts, panel, arc.point_at(double(k) / (spec.samples_per_arc - 1)), scale);
        }
        std::string stroke = "#222222";
        if (spec.highlight == RenderSpec::Highlight::Colors) {
            stroke = coloring->colors[e] == EdgeColor::Red ? "#cc2222" : "#2244cc";
        }
        out << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"1.5\"/>\n";
    }

    for (const auto& v : t.vertices) {
        const detail::Panel& panel = panel_for(v.pos);
        const auto [x, y] = detail::project(v.pos, panel.north);
        out << "<circle cx=\"" << detail::fmt(panel.cx + scale * x) << "\" cy=\""
            << detail::fmt(panel.cy - scale * y) << "\" r=\"3\" fill=\"#000\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace hyperfan
