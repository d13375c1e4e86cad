#pragma once

#include <string>
#include <vector>

namespace cmdviz {

using Vec = std::vector<double>;
using Matrix = std::vector<Vec>;

// One scenario manipulation: the per-step independent values plus the
// M x N outcome readings (row j = agent j).
struct Step {
    int index = 0;
    Vec independent_values;
    Matrix measurements;
};

// The full measurement record of a multi-agent, multi-step experiment.
// Immutable after construction; build through make() so the invariants
// (unique names, M x N matrices, finite values) hold everywhere downstream.
class Experiment {
public:
    static Experiment make(std::vector<std::string> agents,
                           std::vector<std::string> outcomes,
                           std::vector<std::string> independents,
                           std::vector<Step> steps);

    const std::vector<std::string>& agents() const { return agents_; }
    const std::vector<std::string>& outcomes() const { return outcomes_; }
    const std::vector<std::string>& independents() const { return independents_; }
    const std::vector<Step>& steps() const { return steps_; }

    int num_agents() const { return static_cast<int>(agents_.size()); }
    int num_outcomes() const { return static_cast<int>(outcomes_.size()); }
    int num_independents() const { return static_cast<int>(independents_.size()); }
    int num_steps() const { return static_cast<int>(steps_.size()); }

    bool operator==(const Experiment& other) const;

private:
    Experiment() = default;

    std::vector<std::string> agents_;
    std::vector<std::string> outcomes_;
    std::vector<std::string> independents_;
    std::vector<Step> steps_;
};

// One agent's outcome vector at one step.
struct AgentState {
    int agent_index = 0;
    int step_index = 0;
    Vec values;
};

// The transition of one agent's state between consecutive steps.
struct AgentMove {
    int agent_index = 0;
    int from_step = 0;
    int to_step = 0;
    Vec from_values;
    Vec to_values;
};

// All M agent states at step t, in agent order.
std::vector<AgentState> agent_states(const Experiment& exp, int t);

// The T-1 consecutive moves of agent j, in step order. Empty when T == 1.
std::vector<AgentMove> agent_moves(const Experiment& exp, int j);

}  // namespace cmdviz
