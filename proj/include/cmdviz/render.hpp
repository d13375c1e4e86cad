#pragma once

#include <string>

#include "cmdviz/encode.hpp"

namespace cmdviz {

struct RenderConfig {
    int width_px = 960;
    int height_px = 540;
    double font_size_pt = 12.0;
    std::string palette = "#2b6cb0";  // base hue for scheme-3 boxes
};

// Deterministic SVG 1.1 subset. Byte-identical for identical inputs.
std::string render_svg(const DiagramModel& dm, const RenderConfig& cfg = {});

// DOT digraph: one rank-same subgraph cluster per column, node ids
// s<t>_c<id>, edge labels carry agent counts.
std::string render_dot(const DiagramModel& dm);

}  // namespace cmdviz
