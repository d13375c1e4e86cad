#include "cmdviz/group.hpp"

#include <map>
#include <string>

#include "cmdviz/errors.hpp"

namespace cmdviz {

GroupState group_state(const ClusterPartition& partition, const std::vector<AgentState>& states) {
    if (states.size() != partition.assignments.size()) {
        throw UsageError("group_state: partition covers " + std::to_string(partition.assignments.size()) +
                         " agents but " + std::to_string(states.size()) + " states given");
    }
    for (const auto& s : states) {
        if (s.step_index != partition.step_index) {
            throw UsageError("group_state: state at step " + std::to_string(s.step_index) +
                             " does not match partition step " + std::to_string(partition.step_index));
        }
    }

    GroupState gs;
    gs.step_index = partition.step_index;
    gs.partition = partition;
    gs.matrix.reserve(states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
        gs.matrix.push_back(partition.clusters[partition.assignments[j]].centroid);
    }
    return gs;
}

std::vector<GroupMove> group_moves(const std::vector<GroupState>& gs) {
    for (std::size_t i = 1; i < gs.size(); ++i) {
        if (gs[i].step_index != gs[i - 1].step_index + 1) {
            throw UsageError("group_moves: steps " + std::to_string(gs[i - 1].step_index) + " and " +
                             std::to_string(gs[i].step_index) + " are not consecutive");
        }
    }
    std::vector<GroupMove> moves;
    if (gs.size() < 2) return moves;

    const std::size_t m = gs.front().matrix.size();
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t t = 0; t + 1 < gs.size(); ++t) {
            const auto& from = gs[t];
            const auto& to = gs[t + 1];
            GroupMove mv;
            mv.agent_index = static_cast<int>(j);
            mv.from_step = from.step_index;
            mv.to_step = to.step_index;
            mv.from_row = from.matrix[j];
            mv.to_row = to.matrix[j];
            mv.from_membership = from.partition.clusters[from.partition.assignments[j]].members;
            mv.to_membership = to.partition.clusters[to.partition.assignments[j]].members;
            moves.push_back(std::move(mv));
        }
    }
    return moves;
}

std::vector<TransitionCount> transition_counts(const GroupState& from, const GroupState& to) {
    if (to.step_index != from.step_index + 1) {
        throw UsageError("transition_counts: steps " + std::to_string(from.step_index) + " and " +
                         std::to_string(to.step_index) + " are not consecutive");
    }
    if (from.partition.assignments.size() != to.partition.assignments.size()) {
        throw UsageError("transition_counts: agent counts differ between steps");
    }
    std::map<std::pair<int, int>, int> counts;
    for (std::size_t j = 0; j < from.partition.assignments.size(); ++j) {
        ++counts[{from.partition.assignments[j], to.partition.assignments[j]}];
    }
    std::vector<TransitionCount> out;
    out.reserve(counts.size());
    for (const auto& [pair, n] : counts) out.emplace_back(pair.first, pair.second, n);
    return out;
}

}  // namespace cmdviz
