#include "cmdviz/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "cmdviz/errors.hpp"

namespace cmdviz {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string iv_caption(const Vec& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += fmt(values[i]);
    }
    return s;
}

struct NodePos {
    double x = 0.0;
    double y = 0.0;
};

// Display order within a column: first centroid coordinate descending,
// ties by node id.
std::vector<int> column_order(const DiagramColumn& col) {
    std::vector<int> order(col.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double ca = col.nodes[a].centroid.empty() ? 0.0 : col.nodes[a].centroid.front();
        const double cb = col.nodes[b].centroid.empty() ? 0.0 : col.nodes[b].centroid.front();
        if (ca != cb) return ca > cb;
        return col.nodes[a].id < col.nodes[b].id;
    });
    return order;
}

}  // namespace

std::string render_svg(const DiagramModel& dm, const RenderConfig& cfg) {
    if (cfg.width_px <= 0 || cfg.height_px <= 0 || cfg.font_size_pt <= 0.0) {
        throw ConfigError("render_svg: dimensions and font size must be positive");
    }

    const double w = cfg.width_px;
    const double h = cfg.height_px;
    const double top = 50.0;
    const double bottom = 20.0;
    const double side = 40.0;
    const double col_w = (w - 2.0 * side) / static_cast<double>(dm.columns.size());
    const double node_r = 18.0;
    const double box_w = 64.0;
    const double box_h = 36.0;

    // Node centers, keyed by (step_index, node id).
    std::map<std::pair<int, int>, NodePos> pos;
    for (std::size_t c = 0; c < dm.columns.size(); ++c) {
        const auto& col = dm.columns[c];
        const double x = side + (static_cast<double>(c) + 0.5) * col_w;
        const auto order = column_order(col);
        const double slot = (h - top - bottom) / static_cast<double>(col.nodes.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto& node = col.nodes[order[i]];
            pos[{col.step_index, node.id}] = {x, top + (static_cast<double>(i) + 0.5) * slot};
        }
    }

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width_px << "\" height=\""
        << cfg.height_px << "\" viewBox=\"0 0 " << cfg.width_px << " " << cfg.height_px << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << cfg.width_px << "\" height=\"" << cfg.height_px
        << "\" fill=\"white\"/>\n";

    // Column captions: step index plus independent values.
    for (std::size_t c = 0; c < dm.columns.size(); ++c) {
        const auto& col = dm.columns[c];
        const double x = side + (static_cast<double>(c) + 0.5) * col_w;
        std::string caption = "t=" + std::to_string(col.step_index);
        if (!col.independent_values.empty()) caption += "  [" + iv_caption(col.independent_values) + "]";
        svg << "<text class=\"caption\" x=\"" << fmt(x) << "\" y=\"" << fmt(top - 24.0)
            << "\" font-size=\"" << fmt(cfg.font_size_pt) << "\" text-anchor=\"middle\">" << caption
            << "</text>\n";
    }
    if (!dm.axis_meta.empty()) {
        std::string axes;
        for (std::size_t i = 0; i < dm.axis_meta.size(); ++i) {
            if (i) axes += " / ";
            axes += dm.axis_meta[i];
        }
        svg << "<text class=\"axes\" x=\"" << fmt(w / 2.0) << "\" y=\"" << fmt(h - 6.0)
            << "\" font-size=\"" << fmt(cfg.font_size_pt * 0.85) << "\" text-anchor=\"middle\">" << axes
            << "</text>\n";
    }

    // Edges first, so nodes overlay the line ends.
    for (const auto& edge : dm.edges) {
        const NodePos a = pos.at({edge.from_step, edge.from_node});
        const NodePos b = pos.at({edge.from_step + 1, edge.to_node});
        const double glyph_half = dm.scheme == 3 ? box_w / 2.0 : node_r;
        const double x1 = a.x + glyph_half;
        const double x2 = b.x - glyph_half - 8.0;  // leave room for the arrowhead
        const double dy = (b.y - a.y) / (b.x - a.x);
        const double y1 = a.y + dy * (x1 - a.x);
        const double y2 = a.y + dy * (x2 - a.x);
        const double stroke = 1.0 + 0.75 * edge.agent_count;
        svg << "<path class=\"edge\" d=\"M " << fmt(x1) << " " << fmt(y1) << " L " << fmt(x2) << " "
            << fmt(y2) << "\" stroke=\"#444444\" stroke-width=\"" << fmt(stroke)
            << "\" fill=\"none\"/>\n";
        // Arrowhead as an explicit triangle.
        const double tip_x = x2 + 8.0;
        const double tip_y = a.y + dy * (tip_x - a.x);
        const double nx = 1.0 / std::sqrt(1.0 + dy * dy);
        const double ny = dy * nx;
        const double px = -ny, py = nx;  // unit normal
        const double back_x = tip_x - 8.0 * nx;
        const double back_y = tip_y - 8.0 * ny;
        svg << "<polygon class=\"edge-arrow\" points=\"" << fmt(tip_x) << "," << fmt(tip_y) << " "
            << fmt(back_x + 4.0 * px) << "," << fmt(back_y + 4.0 * py) << " " << fmt(back_x - 4.0 * px)
            << "," << fmt(back_y - 4.0 * py) << "\" fill=\"#444444\"/>\n";
    }

    for (const auto& col : dm.columns) {
        for (const auto& node : col.nodes) {
            const NodePos p = pos.at({col.step_index, node.id});
            if (dm.scheme == 3) {
                svg << "<rect class=\"node\" x=\"" << fmt(p.x - box_w / 2.0) << "\" y=\""
                    << fmt(p.y - box_h / 2.0) << "\" width=\"" << fmt(box_w) << "\" height=\""
                    << fmt(box_h) << "\" fill=\"" << cfg.palette << "\" fill-opacity=\""
                    << fmt(node.style.intensity) << "\" stroke=\"black\" stroke-width=\""
                    << fmt(4.0 * node.style.border_weight) << "\"/>\n";
            } else {
                svg << "<circle class=\"node\" cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y)
                    << "\" r=\"" << fmt(node_r)
                    << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.50\"/>\n";
                svg << "<text class=\"node-label\" x=\"" << fmt(p.x) << "\" y=\""
                    << fmt(p.y + cfg.font_size_pt * 0.35) << "\" font-size=\"" << fmt(cfg.font_size_pt)
                    << "\" text-anchor=\"middle\">" << node.label << "</text>\n";
            }
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string render_dot(const DiagramModel& dm) {
    std::ostringstream dot;
    dot << "digraph cmd {\n";
    dot << "  rankdir=LR;\n";
    for (const auto& col : dm.columns) {
        dot << "  subgraph cluster_t" << col.step_index << " {\n";
        dot << "    rank=same;\n";
        dot << "    label=\"t=" << col.step_index;
        if (!col.independent_values.empty()) dot << " [" << iv_caption(col.independent_values) << "]";
        dot << "\";\n";
        for (const auto& node : col.nodes) {
            dot << "    s" << col.step_index << "_c" << node.id << " [label=\"" << node.label
                << "\"];\n";
        }
        dot << "  }\n";
    }
    // Skeleton edge order is already (step, from, to) lexicographic.
    for (const auto& edge : dm.edges) {
        dot << "  s" << edge.from_step << "_c" << edge.from_node << " -> s" << edge.from_step + 1
            << "_c" << edge.to_node << " [label=" << edge.agent_count << "];\n";
    }
    dot << "}\n";
    return dot.str();
}

}  // namespace cmdviz
