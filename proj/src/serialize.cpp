#include "cmdviz/serialize.hpp"

#include <json.hpp>

namespace cmdviz {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json partition_json(const ClusterPartition& part) {
    ordered_json jp;
    jp["step_index"] = part.step_index;
    jp["assignments"] = part.assignments;
    jp["clusters"] = ordered_json::array();
    for (const auto& c : part.clusters) {
        ordered_json jc;
        jc["members"] = c.members;
        jc["centroid"] = c.centroid;
        jp["clusters"].push_back(std::move(jc));
    }
    return jp;
}

}  // namespace

std::string diagram_to_json(const DiagramModel& dm) {
    ordered_json root;
    root["scheme"] = dm.scheme;
    root["axis_meta"] = dm.axis_meta;
    root["columns"] = ordered_json::array();
    for (const auto& col : dm.columns) {
        ordered_json jc;
        jc["step_index"] = col.step_index;
        jc["independent_values"] = col.independent_values;
        jc["nodes"] = ordered_json::array();
        for (const auto& node : col.nodes) {
            ordered_json jn;
            jn["id"] = node.id;
            jn["label"] = node.label;
            jn["members"] = node.members;
            jn["centroid"] = node.centroid;
            jn["size"] = node.size;
            if (dm.scheme == 3) {
                jn["style"] = {{"intensity", node.style.intensity},
                               {"border_weight", node.style.border_weight}};
            }
            jc["nodes"].push_back(std::move(jn));
        }
        root["columns"].push_back(std::move(jc));
    }
    root["edges"] = ordered_json::array();
    for (const auto& e : dm.edges) {
        root["edges"].push_back({{"from_step", e.from_step},
                                 {"from_node", e.from_node},
                                 {"to_node", e.to_node},
                                 {"agent_count", e.agent_count}});
    }
    return root.dump(2) + "\n";
}

std::string partitions_to_json(const std::vector<ClusterPartition>& parts) {
    ordered_json root = ordered_json::array();
    for (const auto& part : parts) root.push_back(partition_json(part));
    return root.dump(2) + "\n";
}

std::string group_states_to_json(const std::vector<GroupState>& gs) {
    ordered_json root = ordered_json::array();
    for (const auto& g : gs) {
        ordered_json jg;
        jg["step_index"] = g.step_index;
        jg["matrix"] = g.matrix;
        jg["partition"] = partition_json(g.partition);
        root.push_back(std::move(jg));
    }
    std::string out = root.dump(2) + "\n";
    return out;
}

std::string agent_moves_to_json(const Experiment& exp) {
    ordered_json root = ordered_json::array();
    for (int j = 0; j < exp.num_agents(); ++j) {
        for (const auto& mv : agent_moves(exp, j)) {
            root.push_back({{"agent", exp.agents()[mv.agent_index]},
                            {"agent_index", mv.agent_index},
                            {"from_step", mv.from_step},
                            {"to_step", mv.to_step},
                            {"from_values", mv.from_values},
                            {"to_values", mv.to_values}});
        }
    }
    return root.dump(2) + "\n";
}

std::string group_moves_to_json(const std::vector<GroupMove>& moves) {
    ordered_json root = ordered_json::array();
    for (const auto& mv : moves) {
        root.push_back({{"agent_index", mv.agent_index},
                        {"from_step", mv.from_step},
                        {"to_step", mv.to_step},
                        {"from_row", mv.from_row},
                        {"to_row", mv.to_row},
                        {"from_membership", mv.from_membership},
                        {"to_membership", mv.to_membership}});
    }
    return root.dump(2) + "\n";
}

std::string pca_to_json(const PcaModel& model) {
    ordered_json root;
    root["mean"] = model.mean;
    root["components"] = model.components;
    root["explained_variance"] = model.explained_variance;
    root["zero_variance"] = model.zero_variance;
    return root.dump(2) + "\n";
}

}  // namespace cmdviz
