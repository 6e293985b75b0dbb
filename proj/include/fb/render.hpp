#pragma once

#include "fb/engine.hpp"
#include "fb/plane_graph.hpp"
#include "fb/region.hpp"

#include <optional>

namespace fb {

// Overlay data for a rendered graph: highlighted curve, fire state.
struct RenderOverlay {
    const JordanCurve* curve = nullptr;      // bold edges; the closing arc dashed
    const SpanningTree* tree = nullptr;      // tree edges solid, rest thin
    std::vector<Vertex> burned;              // filled red
    std::vector<Vertex> protected_vertices;  // filled blue
};

// Deterministic straight-line SVG drawing: outer face on a regular polygon,
// interior vertices at the barycenter of their neighbors. Degenerate
// placements (non-3-connected graphs) are acceptable; this is a diagnostic
// view only.
std::string render_svg(const PlaneGraph& g, const RenderOverlay& overlay = {});

} // namespace fb
