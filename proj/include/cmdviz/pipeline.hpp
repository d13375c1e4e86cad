#pragma once

#include <optional>

#include "cmdviz/cluster.hpp"
#include "cmdviz/encode.hpp"
#include "cmdviz/group.hpp"
#include "cmdviz/model.hpp"
#include "cmdviz/reduce.hpp"

namespace cmdviz {

enum class ReduceMode {
    Auto,  // PCA to 2 components when N exceeds auto_limit
    None,
    Pca,   // always reduce, to `components`
};

struct PipelineOptions {
    ClusterConfig cluster;
    ReduceMode reduce = ReduceMode::Auto;
    int components = 2;
    int auto_limit = 3;
    int scheme = 1;
    bool scheme3_edges = false;
};

struct PipelineResult {
    std::optional<PcaModel> pca;
    std::vector<std::vector<AgentState>> states;  // post-reduction, per step
    std::vector<ClusterPartition> partitions;
    std::vector<GroupState> group_states;
    DiagramModel diagram;
};

// ingest (done by caller) -> reduce -> cluster -> group -> encode
PipelineResult run_pipeline(const Experiment& exp, const PipelineOptions& opts);

}  // namespace cmdviz
