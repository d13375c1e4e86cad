#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cmdviz/model.hpp"

namespace cmdviz {

// Planted-structure generator spec. Agent j's step-t vector is its cluster
// center plus isotropic Gaussian noise from a stream keyed by (seed, t, j).
struct SynthSpec {
    int num_agents = 0;
    int num_outcomes = 0;
    int num_steps = 0;
    std::vector<std::vector<std::vector<int>>> planted_partitions;  // [t][cluster] -> members
    std::vector<std::vector<Vec>> cluster_centers;                  // [t][cluster] -> N-vector
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    std::vector<Vec> independent_schedule;  // one K-vector per step
};

Experiment generate(const SynthSpec& spec);

SynthSpec parse_synth_spec(std::string_view text);

}  // namespace cmdviz
