#include "cmdviz/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cmdviz/errors.hpp"
#include "cmdviz/rng.hpp"

namespace cmdviz {

double distance(const Vec& a, const Vec& b, Metric metric) {
    if (a.size() != b.size()) {
        throw UsageError("distance: vector lengths differ (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
    }
    double acc = 0.0;
    if (metric == Metric::Euclidean) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            acc += d * d;
        }
        return std::sqrt(acc);
    }
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
    return acc;
}

double linkage_distance(const Cluster& c1, const Cluster& c2,
                        const std::vector<Vec>& points, Linkage linkage, Metric metric) {
    double best = linkage == Linkage::Single ? std::numeric_limits<double>::infinity() : 0.0;
    double sum = 0.0;
    for (int i : c1.members) {
        for (int j : c2.members) {
            const double d = distance(points[i], points[j], metric);
            switch (linkage) {
                case Linkage::Single: best = std::min(best, d); break;
                case Linkage::Complete: best = std::max(best, d); break;
                case Linkage::Average: sum += d; break;
            }
        }
    }
    if (linkage == Linkage::Average) {
        return sum / (static_cast<double>(c1.members.size()) * static_cast<double>(c2.members.size()));
    }
    return best;
}

namespace {

Vec centroid_of(const std::vector<int>& members, const std::vector<Vec>& points) {
    if (members.size() == 1) return points[members.front()];  // exact, no division
    Vec c(points[members.front()].size(), 0.0);
    for (int j : members) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += points[j][i];
    }
    for (double& v : c) v /= static_cast<double>(members.size());
    return c;
}

// Renumbers clusters so ids are dense, ordered by smallest member index,
// and recomputes centroids from the raw member vectors.
ClusterPartition finalize(int step_index, std::vector<std::vector<int>> member_sets,
                          const std::vector<Vec>& points) {
    for (auto& m : member_sets) std::sort(m.begin(), m.end());
    std::sort(member_sets.begin(), member_sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    ClusterPartition part;
    part.step_index = step_index;
    part.assignments.assign(points.size(), -1);
    for (std::size_t id = 0; id < member_sets.size(); ++id) {
        Cluster c;
        c.members = member_sets[id];
        c.centroid = centroid_of(c.members, points);
        for (int j : c.members) part.assignments[j] = static_cast<int>(id);
        part.clusters.push_back(std::move(c));
    }
    return part;
}

ClusterPartition agglomerate(int step_index, const std::vector<Vec>& points, const ClusterConfig& cfg) {
    std::vector<Cluster> active;
    for (std::size_t j = 0; j < points.size(); ++j) {
        active.push_back(Cluster{{static_cast<int>(j)}, points[j]});
    }

    while (active.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                const double d = linkage_distance(active[i], active[j], points, cfg.linkage, cfg.metric);
                // Ties go to the pair with the smallest, then second-smallest,
                // member index. Active clusters are kept ordered by smallest
                // member, so (i, j) scan order realizes that rule.
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best > cfg.threshold) break;
        auto merged = active[bi].members;
        merged.insert(merged.end(), active[bj].members.begin(), active[bj].members.end());
        std::sort(merged.begin(), merged.end());
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
        active[bi].members = merged;
        // Re-sorting keeps the smallest-member ordering the tie rule relies on.
        std::sort(active.begin(), active.end(),
                  [](const Cluster& a, const Cluster& b) { return a.members.front() < b.members.front(); });
    }

    std::vector<std::vector<int>> member_sets;
    member_sets.reserve(active.size());
    for (auto& c : active) member_sets.push_back(std::move(c.members));
    return finalize(step_index, std::move(member_sets), points);
}

int nearest_center(const Vec& p, const std::vector<Vec>& centers, Metric metric) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c) {
        const double d = distance(p, centers[c], metric);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(c);
        }
    }
    return best;
}

ClusterPartition kmeans(int step_index, const std::vector<Vec>& points, const ClusterConfig& cfg) {
    const int m = static_cast<int>(points.size());
    const int k = cfg.k;
    SplitMix64 rng(cfg.seed);

    // k-means++ seeding
    std::vector<Vec> centers;
    centers.push_back(points[rng.next_below(static_cast<std::uint64_t>(m))]);
    while (static_cast<int>(centers.size()) < k) {
        std::vector<double> d2(points.size());
        double total = 0.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            double dmin = std::numeric_limits<double>::infinity();
            for (const auto& c : centers) dmin = std::min(dmin, distance(points[j], c, cfg.metric));
            d2[j] = dmin * dmin;
            total += d2[j];
        }
        if (total <= 0.0) {
            // All points coincide with existing centers; any choice works.
            centers.push_back(points[rng.next_below(static_cast<std::uint64_t>(m))]);
            continue;
        }
        double target = rng.next_double() * total;
        std::size_t pick = 0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            target -= d2[j];
            if (target <= 0.0) {
                pick = j;
                break;
            }
            pick = j;
        }
        centers.push_back(points[pick]);
    }

    std::vector<int> assign(points.size(), -1);
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        std::vector<int> next(points.size());
        for (std::size_t j = 0; j < points.size(); ++j) {
            next[j] = nearest_center(points[j], centers, cfg.metric);
        }

        // Empty-cluster repair: reseed from the point farthest from its center.
        for (int c = 0; c < k; ++c) {
            if (std::find(next.begin(), next.end(), c) != next.end()) continue;
            double worst = -1.0;
            std::size_t far_j = 0;
            for (std::size_t j = 0; j < points.size(); ++j) {
                const double d = distance(points[j], centers[next[j]], cfg.metric);
                if (d > worst) {
                    worst = d;
                    far_j = j;
                }
            }
            centers[c] = points[far_j];
            next[far_j] = c;
        }

        const bool converged = (next == assign);
        assign = std::move(next);
        if (converged) break;

        for (int c = 0; c < k; ++c) {
            std::vector<int> members;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (assign[j] == c) members.push_back(static_cast<int>(j));
            }
            if (!members.empty()) centers[c] = centroid_of(members, points);
        }
    }

    std::vector<std::vector<int>> member_sets;
    for (int c = 0; c < k; ++c) {
        std::vector<int> members;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (assign[j] == c) members.push_back(static_cast<int>(j));
        }
        if (!members.empty()) member_sets.push_back(std::move(members));
    }
    return finalize(step_index, std::move(member_sets), points);
}

}  // namespace

ClusterPartition cluster_step(const std::vector<AgentState>& states, const ClusterConfig& cfg) {
    if (states.empty()) throw UsageError("cluster_step: no agent states given");
    const int step_index = states.front().step_index;
    std::vector<Vec> points;
    points.reserve(states.size());
    for (const auto& s : states) {
        if (s.step_index != step_index) {
            throw UsageError("cluster_step: states mix step indices " + std::to_string(step_index) +
                             " and " + std::to_string(s.step_index));
        }
        points.push_back(s.values);
    }

    if (cfg.method == Method::Agglomerative) {
        if (cfg.threshold < 0.0) throw ConfigError("threshold must be non-negative");
        return agglomerate(step_index, points, cfg);
    }
    if (cfg.k < 1 || cfg.k > static_cast<int>(points.size())) {
        throw ConfigError("k must be in [1, " + std::to_string(points.size()) + "], got " +
                          std::to_string(cfg.k));
    }
    if (cfg.max_iterations < 1) throw ConfigError("max_iterations must be positive");
    return kmeans(step_index, points, cfg);
}

}  // namespace cmdviz
