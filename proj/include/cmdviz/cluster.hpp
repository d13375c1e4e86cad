#pragma once

#include <cstdint>
#include <vector>

#include "cmdviz/model.hpp"

namespace cmdviz {

enum class Method { Agglomerative, KMeans };
enum class Linkage { Single, Complete, Average };
enum class Metric { Euclidean, Manhattan };

struct ClusterConfig {
    Method method = Method::Agglomerative;
    Linkage linkage = Linkage::Complete;
    double threshold = 0.15;
    int k = 1;                       // kmeans only
    Metric metric = Metric::Euclidean;
    std::uint64_t seed = 0;          // kmeans only
    int max_iterations = 100;        // kmeans only
};

struct Cluster {
    std::vector<int> members;  // agent indices, ascending
    Vec centroid;              // component-wise mean of member state vectors
};

// A partition of the agents at one step. Cluster ids are dense and ordered
// by smallest member index; a singleton's centroid equals its state exactly.
struct ClusterPartition {
    int step_index = 0;
    std::vector<int> assignments;  // agent -> cluster id
    std::vector<Cluster> clusters;
};

double distance(const Vec& a, const Vec& b, Metric metric);

double linkage_distance(const Cluster& c1, const Cluster& c2,
                        const std::vector<Vec>& points, Linkage linkage, Metric metric);

ClusterPartition cluster_step(const std::vector<AgentState>& states, const ClusterConfig& cfg);

}  // namespace cmdviz
