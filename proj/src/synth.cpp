#include "cmdviz/synth.hpp"

#include <string>

#include <json.hpp>

#include "cmdviz/errors.hpp"
#include "cmdviz/rng.hpp"

namespace cmdviz {

namespace {

void validate(const SynthSpec& spec) {
    if (spec.num_agents < 1 || spec.num_outcomes < 1 || spec.num_steps < 1) {
        throw ConfigError("synth: M, N and T must be positive");
    }
    if (spec.noise_sigma < 0.0) throw ConfigError("synth: noise_sigma must be non-negative");
    if (static_cast<int>(spec.planted_partitions.size()) != spec.num_steps) {
        throw ConfigError("synth: need one planted partition per step");
    }
    if (static_cast<int>(spec.cluster_centers.size()) != spec.num_steps) {
        throw ConfigError("synth: need one center list per step");
    }
    if (static_cast<int>(spec.independent_schedule.size()) != spec.num_steps) {
        throw ConfigError("synth: independent_schedule must have one entry per step");
    }
    const std::size_t k = spec.independent_schedule.front().size();
    if (k == 0) throw ConfigError("synth: independent_schedule entries must be non-empty");

    for (int t = 0; t < spec.num_steps; ++t) {
        const auto& partition = spec.planted_partitions[t];
        const auto& centers = spec.cluster_centers[t];
        if (partition.size() != centers.size()) {
            throw ConfigError("synth: step " + std::to_string(t) +
                              ": partition and center counts differ");
        }
        if (spec.independent_schedule[t].size() != k) {
            throw ConfigError("synth: step " + std::to_string(t) + ": ragged independent_schedule");
        }
        std::vector<bool> covered(spec.num_agents, false);
        for (std::size_t c = 0; c < partition.size(); ++c) {
            if (partition[c].empty()) {
                throw ConfigError("synth: step " + std::to_string(t) + ": empty planted cluster");
            }
            if (static_cast<int>(centers[c].size()) != spec.num_outcomes) {
                throw ConfigError("synth: step " + std::to_string(t) + ": center dimension mismatch");
            }
            for (int j : partition[c]) {
                if (j < 0 || j >= spec.num_agents || covered[j]) {
                    throw ConfigError("synth: step " + std::to_string(t) +
                                      ": planted partition is not a partition of the agents");
                }
                covered[j] = true;
            }
        }
        for (int j = 0; j < spec.num_agents; ++j) {
            if (!covered[j]) {
                throw ConfigError("synth: step " + std::to_string(t) + ": agent " +
                                  std::to_string(j) + " missing from planted partition");
            }
        }
    }
}

}  // namespace

Experiment generate(const SynthSpec& spec) {
    validate(spec);

    std::vector<std::string> agents, outcomes, independents;
    for (int j = 0; j < spec.num_agents; ++j) agents.push_back("A" + std::to_string(j + 1));
    for (int i = 0; i < spec.num_outcomes; ++i) outcomes.push_back("y" + std::to_string(i + 1));
    for (std::size_t k = 0; k < spec.independent_schedule.front().size(); ++k) {
        independents.push_back("x" + std::to_string(k + 1));
    }

    std::vector<Step> steps;
    for (int t = 0; t < spec.num_steps; ++t) {
        Step step;
        step.index = t;
        step.independent_values = spec.independent_schedule[t];
        step.measurements.assign(spec.num_agents, Vec(spec.num_outcomes, 0.0));

        const auto& partition = spec.planted_partitions[t];
        for (std::size_t c = 0; c < partition.size(); ++c) {
            for (int j : partition[c]) {
                // Per-(t, j) stream: generation order does not matter.
                SplitMix64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(t),
                                        static_cast<std::uint64_t>(j)));
                for (int i = 0; i < spec.num_outcomes; ++i) {
                    double v = spec.cluster_centers[t][c][i];
                    if (spec.noise_sigma > 0.0) v += spec.noise_sigma * rng.next_gaussian();
                    step.measurements[j][i] = v;
                }
            }
        }
        steps.push_back(std::move(step));
    }
    return Experiment::make(std::move(agents), std::move(outcomes), std::move(independents),
                            std::move(steps));
}

SynthSpec parse_synth_spec(std::string_view text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        SynthSpec spec;
        spec.num_agents = root.at("num_agents").get<int>();
        spec.num_outcomes = root.at("num_outcomes").get<int>();
        spec.num_steps = root.at("num_steps").get<int>();
        spec.planted_partitions =
            root.at("planted_partitions").get<std::vector<std::vector<std::vector<int>>>>();
        spec.cluster_centers = root.at("cluster_centers").get<std::vector<std::vector<Vec>>>();
        spec.noise_sigma = root.value("noise_sigma", 0.0);
        spec.seed = root.value("seed", std::uint64_t{0});
        spec.independent_schedule = root.at("independent_schedule").get<std::vector<Vec>>();
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("synth spec: ") + e.what());
    }
}

}  // namespace cmdviz
