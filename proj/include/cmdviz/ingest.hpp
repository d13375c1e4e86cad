#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmdviz/cluster.hpp"
#include "cmdviz/model.hpp"

namespace cmdviz {

struct IngestReport {
    Experiment experiment;
    std::vector<std::string> warnings;
    // Optional `clustering` block from the JSON file.
    std::optional<ClusterConfig> clustering;
};

IngestReport parse_json(std::string_view text);

// Long format: header `step,agent,outcome,value` plus one `iv:<name>`
// column per independent variable.
IngestReport parse_csv(std::string_view text);

// Canonical serialization: fixed key order, shortest round-trip floats.
// parse_json(write_json(e)) reproduces e bit-exactly.
std::string write_json(const Experiment& exp);

}  // namespace cmdviz
