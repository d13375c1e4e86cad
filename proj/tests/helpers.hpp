#pragma once

#include <vector>

#include "cmdviz/model.hpp"
#include "cmdviz/rng.hpp"

namespace cmdviz::testing {

// The three-agent memory experiment: noise exposure vs recall/association.
inline Experiment memory_experiment() {
    std::vector<Step> steps(3);
    steps[0].independent_values = {0.0};
    steps[0].measurements = {{0.20, 0.50}, {0.25, 0.50}, {0.45, 0.70}};
    steps[1].independent_values = {1.0};
    steps[1].measurements = {{0.70, 0.70}, {0.75, 0.70}, {0.70, 0.75}};
    steps[2].independent_values = {2.0};
    steps[2].measurements = {{0.25, 1.00}, {0.50, 0.60}, {0.75, 0.55}};
    return Experiment::make({"A1", "A2", "A3"}, {"recall", "association"}, {"noise_hours"},
                            std::move(steps));
}

inline Matrix random_matrix(SplitMix64& rng, int rows, int cols, double lo = -1.0, double hi = 1.0) {
    Matrix m(rows, Vec(cols));
    for (auto& row : m) {
        for (auto& v : row) v = lo + (hi - lo) * rng.next_double();
    }
    return m;
}

}  // namespace cmdviz::testing
