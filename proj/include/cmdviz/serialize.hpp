#pragma once

#include <string>
#include <vector>

#include "cmdviz/encode.hpp"
#include "cmdviz/group.hpp"
#include "cmdviz/model.hpp"
#include "cmdviz/reduce.hpp"

namespace cmdviz {

std::string diagram_to_json(const DiagramModel& dm);
std::string partitions_to_json(const std::vector<ClusterPartition>& parts);
std::string group_states_to_json(const std::vector<GroupState>& gs);
std::string agent_moves_to_json(const Experiment& exp);
std::string group_moves_to_json(const std::vector<GroupMove>& moves);
std::string pca_to_json(const PcaModel& model);

}  // namespace cmdviz
