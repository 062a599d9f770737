#pragma once

#include <span>
#include <string>

#include "maxcurve/point.hpp"
#include "maxcurve/poly.hpp"

namespace maxcurve::cli {

struct RenderOptions {
    bool highlight_maximal = false;
};

struct Rendering {
    std::string svg;
    // Factors that are not lines, drawn as sampled polylines.
    std::size_t approximate_factors = 0;
    std::size_t circles = 0;
    std::size_t strokes = 0;
};

/// Deterministic 800x800 SVG of the nodes and curve factors. The node
/// bounding box is fitted with a 5% margin; lines are clipped to the canvas.
/// Maximal lines of an n-correct set are highlighted on request.
Rendering render_svg(const NodeSet& x, int n, std::span<const Curve> curves,
                     const RenderOptions& options);

}  // namespace maxcurve::cli
