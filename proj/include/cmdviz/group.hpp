#pragma once

#include <tuple>
#include <vector>

#include "cmdviz/cluster.hpp"
#include "cmdviz/model.hpp"

namespace cmdviz {

// Centroid-substituted M x N matrix for one step: row j is the centroid of
// agent j's cluster, so same-cluster agents carry identical rows.
struct GroupState {
    int step_index = 0;
    Matrix matrix;
    ClusterPartition partition;
};

struct GroupMove {
    int agent_index = 0;
    int from_step = 0;
    int to_step = 0;
    Vec from_row;
    Vec to_row;
    std::vector<int> from_membership;
    std::vector<int> to_membership;
};

// (from_cluster_id, to_cluster_id, agent_count)
using TransitionCount = std::tuple<int, int, int>;

GroupState group_state(const ClusterPartition& partition, const std::vector<AgentState>& states);

// M x (T-1) per-agent moves across consecutive group states, agent-major.
std::vector<GroupMove> group_moves(const std::vector<GroupState>& gs);

// Aggregated cluster flow between two consecutive group states, in
// (from_id, to_id) lexicographic order. Counts sum to M.
std::vector<TransitionCount> transition_counts(const GroupState& from, const GroupState& to);

}  // namespace cmdviz
