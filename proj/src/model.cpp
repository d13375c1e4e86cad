#include "cmdviz/model.hpp"

#include <cmath>
#include <unordered_set>

#include "cmdviz/errors.hpp"

namespace cmdviz {

namespace {

void require_unique(const std::vector<std::string>& names, const char* kind) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) {
            throw ValidationError(std::string("duplicate ") + kind + " name '" + n + "'");
        }
    }
}

}  // namespace

Experiment Experiment::make(std::vector<std::string> agents,
                            std::vector<std::string> outcomes,
                            std::vector<std::string> independents,
                            std::vector<Step> steps) {
    if (agents.empty()) throw ValidationError("experiment needs at least one agent");
    if (outcomes.empty()) throw ValidationError("experiment needs at least one outcome variable");
    if (independents.empty()) throw ValidationError("experiment needs at least one independent variable");
    if (steps.empty()) throw ValidationError("experiment needs at least one step");
    require_unique(agents, "agent");
    require_unique(outcomes, "outcome");
    require_unique(independents, "independent");

    const auto m = agents.size();
    const auto n = outcomes.size();
    const auto k = independents.size();
    for (std::size_t t = 0; t < steps.size(); ++t) {
        auto& step = steps[t];
        step.index = static_cast<int>(t);
        if (step.independent_values.size() != k) {
            throw ValidationError("step " + std::to_string(t) + ": expected " + std::to_string(k) +
                                  " independent values, got " + std::to_string(step.independent_values.size()));
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (!std::isfinite(step.independent_values[i])) {
                throw ValidationError("step " + std::to_string(t) + ": non-finite value for independent '" +
                                      independents[i] + "'");
            }
        }
        if (step.measurements.size() != m) {
            throw ValidationError("step " + std::to_string(t) + ": expected " + std::to_string(m) +
                                  " measurement rows, got " + std::to_string(step.measurements.size()));
        }
        for (std::size_t j = 0; j < m; ++j) {
            const auto& row = step.measurements[j];
            if (row.size() != n) {
                throw ValidationError("step " + std::to_string(t) + ": agent '" + agents[j] + "': expected " +
                                      std::to_string(n) + " values, got " + std::to_string(row.size()));
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (!std::isfinite(row[i])) {
                    throw ValidationError("step " + std::to_string(t) + ": agent '" + agents[j] +
                                          "': non-finite value for outcome '" + outcomes[i] + "'");
                }
            }
        }
    }

    Experiment exp;
    exp.agents_ = std::move(agents);
    exp.outcomes_ = std::move(outcomes);
    exp.independents_ = std::move(independents);
    exp.steps_ = std::move(steps);
    return exp;
}

bool Experiment::operator==(const Experiment& other) const {
    if (agents_ != other.agents_ || outcomes_ != other.outcomes_ || independents_ != other.independents_)
        return false;
    if (steps_.size() != other.steps_.size()) return false;
    for (std::size_t t = 0; t < steps_.size(); ++t) {
        if (steps_[t].independent_values != other.steps_[t].independent_values) return false;
        if (steps_[t].measurements != other.steps_[t].measurements) return false;
    }
    return true;
}

std::vector<AgentState> agent_states(const Experiment& exp, int t) {
    if (t < 0 || t >= exp.num_steps()) {
        throw UsageError("step index " + std::to_string(t) + " out of range [0, " +
                         std::to_string(exp.num_steps()) + ")");
    }
    std::vector<AgentState> states;
    states.reserve(exp.num_agents());
    const auto& step = exp.steps()[t];
    for (int j = 0; j < exp.num_agents(); ++j) {
        states.push_back(AgentState{j, t, step.measurements[j]});
    }
    return states;
}

std::vector<AgentMove> agent_moves(const Experiment& exp, int j) {
    if (j < 0 || j >= exp.num_agents()) {
        throw UsageError("agent index " + std::to_string(j) + " out of range [0, " +
                         std::to_string(exp.num_agents()) + ")");
    }
    std::vector<AgentMove> moves;
    for (int t = 0; t + 1 < exp.num_steps(); ++t) {
        moves.push_back(AgentMove{j, t, t + 1, exp.steps()[t].measurements[j],
                                  exp.steps()[t + 1].measurements[j]});
    }
    return moves;
}

}  // namespace cmdviz
