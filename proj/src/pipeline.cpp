#include "cmdviz/pipeline.hpp"

#include <string>

#include "cmdviz/errors.hpp"

namespace cmdviz {

PipelineResult run_pipeline(const Experiment& exp, const PipelineOptions& opts) {
    if (opts.scheme < 1 || opts.scheme > 3) {
        throw ConfigError("scheme must be 1, 2 or 3, got " + std::to_string(opts.scheme));
    }
    if (opts.components < 1) throw ConfigError("components must be at least 1");

    PipelineResult result;

    const bool want_pca = opts.reduce == ReduceMode::Pca ||
                          (opts.reduce == ReduceMode::Auto && exp.num_outcomes() > opts.auto_limit);
    const int k = opts.reduce == ReduceMode::Pca ? opts.components : 2;

    std::vector<std::string> axis_names;
    for (int t = 0; t < exp.num_steps(); ++t) result.states.push_back(agent_states(exp, t));

    if (want_pca) {
        // Fit on the pooled states so components are shared across steps.
        Matrix pooled;
        for (const auto& step_states : result.states) {
            for (const auto& s : step_states) pooled.push_back(s.values);
        }
        result.pca = fit_pca(pooled, k);
        for (auto& step_states : result.states) {
            Matrix rows;
            for (const auto& s : step_states) rows.push_back(s.values);
            Matrix projected = project(*result.pca, rows);
            for (std::size_t j = 0; j < step_states.size(); ++j) {
                step_states[j].values = std::move(projected[j]);
            }
        }
        for (int c = 0; c < k; ++c) axis_names.push_back("PC" + std::to_string(c + 1));
    } else {
        axis_names = exp.outcomes();
    }

    for (int t = 0; t < exp.num_steps(); ++t) {
        result.partitions.push_back(cluster_step(result.states[t], opts.cluster));
        result.group_states.push_back(group_state(result.partitions[t], result.states[t]));
    }

    EncodeContext ctx;
    for (const auto& step : exp.steps()) ctx.independent_schedule.push_back(step.independent_values);
    ctx.axis_names = axis_names;

    switch (opts.scheme) {
        case 1: result.diagram = encode_scheme1(result.group_states, ctx); break;
        case 2: result.diagram = encode_scheme2(result.group_states, ctx); break;
        default: result.diagram = encode_scheme3(result.group_states, ctx, opts.scheme3_edges); break;
    }
    return result;
}

}  // namespace cmdviz
