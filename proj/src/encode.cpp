#include "cmdviz/encode.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "cmdviz/errors.hpp"

namespace cmdviz {

namespace {

constexpr int kMaxCanonicalSubsets = 702;  // 26 + 26*26 symbols

// Builds the skeleton shared by all schemes: columns, nodes, aggregated edges.
DiagramModel skeleton(const std::vector<GroupState>& gs, const EncodeContext& ctx) {
    if (gs.empty()) throw UsageError("encode: need at least one group state");
    for (std::size_t i = 1; i < gs.size(); ++i) {
        if (gs[i].step_index != gs[i - 1].step_index + 1) {
            throw UsageError("encode: group states are not consecutive");
        }
    }

    DiagramModel dm;
    dm.axis_meta = ctx.axis_names;
    for (std::size_t t = 0; t < gs.size(); ++t) {
        DiagramColumn col;
        col.step_index = gs[t].step_index;
        if (t < ctx.independent_schedule.size()) col.independent_values = ctx.independent_schedule[t];
        const auto& clusters = gs[t].partition.clusters;
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            DiagramNode node;
            node.id = static_cast<int>(c);
            node.members = clusters[c].members;
            node.centroid = clusters[c].centroid;
            node.size = static_cast<int>(clusters[c].members.size());
            col.nodes.push_back(std::move(node));
        }
        dm.columns.push_back(std::move(col));
    }
    for (std::size_t t = 0; t + 1 < gs.size(); ++t) {
        for (const auto& [from, to, count] : transition_counts(gs[t], gs[t + 1])) {
            dm.edges.push_back(DiagramEdge{gs[t].step_index, from, to, count});
        }
    }
    return dm;
}

// Canonical rank of a non-empty subset of {0..m-1}: all subsets ordered by
// size ascending, then lexicographically by member list.
int canonical_rank(const std::vector<int>& members, int m) {
    // Enumerate; m is at most 9 when this path is taken.
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> s;
        for (int j = 0; j < m; ++j) {
            if (mask & (1 << j)) s.push_back(j);
        }
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    const auto it = std::find(subsets.begin(), subsets.end(), members);
    return static_cast<int>(it - subsets.begin());
}

}  // namespace

std::string subset_label(int index) {
    if (index < 26) return std::string(1, static_cast<char>('a' + index));
    index -= 26;
    std::string label;
    label.push_back(static_cast<char>('a' + index / 26));
    label.push_back(static_cast<char>('a' + index % 26));
    return label;
}

DiagramModel encode_scheme1(const std::vector<GroupState>& gs, const EncodeContext& ctx) {
    DiagramModel dm = skeleton(gs, ctx);
    dm.scheme = 1;
    const int m = static_cast<int>(gs.front().partition.assignments.size());

    const bool canonical = m < 10 && ((1 << m) - 1) <= kMaxCanonicalSubsets;
    std::map<std::vector<int>, std::string> assigned;
    for (auto& col : dm.columns) {
        for (auto& node : col.nodes) {
            auto it = assigned.find(node.members);
            if (it == assigned.end()) {
                const int index = canonical ? canonical_rank(node.members, m)
                                            : static_cast<int>(assigned.size());
                it = assigned.emplace(node.members, subset_label(index)).first;
            }
            node.label = it->second;
        }
    }
    return dm;
}

DiagramModel encode_scheme2(const std::vector<GroupState>& gs, const EncodeContext& ctx) {
    DiagramModel dm = skeleton(gs, ctx);
    dm.scheme = 2;
    for (auto& col : dm.columns) {
        for (auto& node : col.nodes) node.label = std::to_string(node.size);
    }
    return dm;
}

DiagramModel encode_scheme3(const std::vector<GroupState>& gs, const EncodeContext& ctx,
                            bool draw_edges) {
    DiagramModel dm = skeleton(gs, ctx);
    dm.scheme = 3;
    if (!draw_edges) dm.edges.clear();
    const double m = static_cast<double>(gs.front().partition.assignments.size());

    // Border weight follows the first independent variable over the
    // experiment-wide range, mapped onto [0.25, 1.0].
    double v_min = std::numeric_limits<double>::infinity();
    double v_max = -std::numeric_limits<double>::infinity();
    for (const auto& col : dm.columns) {
        if (!col.independent_values.empty()) {
            v_min = std::min(v_min, col.independent_values.front());
            v_max = std::max(v_max, col.independent_values.front());
        }
    }
    for (auto& col : dm.columns) {
        double weight = 1.0;
        if (!col.independent_values.empty() && v_max > v_min) {
            weight = 0.25 + 0.75 * (col.independent_values.front() - v_min) / (v_max - v_min);
        }
        for (auto& node : col.nodes) {
            node.style.intensity = node.size / m;
            node.style.border_weight = weight;
        }
    }
    return dm;
}

}  // namespace cmdviz
