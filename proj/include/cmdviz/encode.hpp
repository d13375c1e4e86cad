#pragma once

#include <string>
#include <vector>

#include "cmdviz/group.hpp"

namespace cmdviz {

struct NodeStyle {
    double intensity = 1.0;      // cluster size / M, in (0, 1]
    double border_weight = 1.0;  // independent value mapped onto [0.25, 1.0]
};

struct DiagramNode {
    int id = 0;  // dense within its column, same ordering as the partition
    std::vector<int> members;
    Vec centroid;
    std::string label;
    int size = 0;
    NodeStyle style;
};

struct DiagramColumn {
    int step_index = 0;
    Vec independent_values;
    std::vector<DiagramNode> nodes;
};

// Aggregated cluster flow between column from_step and from_step + 1.
struct DiagramEdge {
    int from_step = 0;
    int from_node = 0;
    int to_node = 0;
    int agent_count = 0;
};

// Encoding-agnostic diagram layout: one column per step, one node per
// cluster, aggregated transition edges. Only labels and styles differ
// between schemes.
struct DiagramModel {
    int scheme = 1;
    std::vector<DiagramColumn> columns;
    std::vector<DiagramEdge> edges;
    std::vector<std::string> axis_meta;
};

// Per-step independent values plus axis names, carried alongside the group
// states (which hold neither).
struct EncodeContext {
    std::vector<Vec> independent_schedule;  // one K-vector per step; may be empty
    std::vector<std::string> axis_names;
};

// Unique symbols per membership set ('a', 'b', ..., 'z', 'aa', ...).
DiagramModel encode_scheme1(const std::vector<GroupState>& gs, const EncodeContext& ctx = {});

// Member counts as labels.
DiagramModel encode_scheme2(const std::vector<GroupState>& gs, const EncodeContext& ctx = {});

// Colored boxes: intensity = size/M, border weight follows the first
// independent variable. Edges omitted unless draw_edges is set.
DiagramModel encode_scheme3(const std::vector<GroupState>& gs, const EncodeContext& ctx = {},
                            bool draw_edges = false);

// The symbol for canonical-enumeration index i: 'a'..'z', then 'aa'..'zz'.
std::string subset_label(int index);

}  // namespace cmdviz
