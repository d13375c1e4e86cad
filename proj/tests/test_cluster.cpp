#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "cmdviz/cluster.hpp"
#include "cmdviz/errors.hpp"
#include "helpers.hpp"

using namespace cmdviz;
using cmdviz::testing::memory_experiment;

namespace {

std::vector<AgentState> states_at(const Experiment& exp, int t) { return agent_states(exp, t); }

std::vector<AgentState> make_states(const std::vector<Vec>& points, int step = 0) {
    std::vector<AgentState> states;
    for (std::size_t j = 0; j < points.size(); ++j) {
        states.push_back(AgentState{static_cast<int>(j), step, points[j]});
    }
    return states;
}

void check_partition_valid(const ClusterPartition& part) {
    std::set<int> seen;
    for (std::size_t id = 0; id < part.clusters.size(); ++id) {
        const auto& c = part.clusters[id];
        REQUIRE(!c.members.empty());
        for (int j : c.members) {
            CHECK(part.assignments[j] == static_cast<int>(id));
            CHECK(seen.insert(j).second);
        }
        if (id > 0) {
            CHECK(part.clusters[id - 1].members.front() < c.members.front());
        }
    }
    CHECK(seen.size() == part.assignments.size());
}

}  // namespace

TEST_CASE("distance metrics") {
    CHECK(distance({0.20, 0.50}, {0.25, 0.50}, Metric::Euclidean) == doctest::Approx(0.05));
    CHECK(distance({1.0, 2.0}, {1.0, 2.0}, Metric::Euclidean) == 0.0);
    CHECK(distance({1.0, 2.0}, {1.0, 2.0}, Metric::Manhattan) == 0.0);
    CHECK(distance({0.0, 0.0}, {3.0, 4.0}, Metric::Euclidean) == doctest::Approx(5.0));
    CHECK(distance({0.0, 0.0}, {3.0, 4.0}, Metric::Manhattan) == doctest::Approx(7.0));
    CHECK_THROWS_AS(distance({1.0}, {1.0, 2.0}, Metric::Euclidean), UsageError);
}

TEST_CASE("linkage_distance") {
    const std::vector<Vec> points = {{0.70, 0.70}, {0.75, 0.70}, {0.70, 0.75}};
    const Cluster pair{{0, 1}, {}};
    const Cluster solo{{2}, {}};

    const double d13 = distance(points[0], points[2], Metric::Euclidean);
    const double d23 = distance(points[1], points[2], Metric::Euclidean);
    CHECK(linkage_distance(pair, solo, points, Linkage::Complete, Metric::Euclidean) ==
          doctest::Approx(std::max(d13, d23)));
    CHECK(linkage_distance(pair, solo, points, Linkage::Complete, Metric::Euclidean) ==
          doctest::Approx(0.070710678).epsilon(1e-6));
    CHECK(linkage_distance(pair, solo, points, Linkage::Single, Metric::Euclidean) ==
          doctest::Approx(std::min(d13, d23)));
    CHECK(linkage_distance(pair, solo, points, Linkage::Average, Metric::Euclidean) ==
          doctest::Approx((d13 + d23) / 2.0));

    SUBCASE("singleton pairs agree with plain distance") {
        const Cluster a{{0}, {}};
        const Cluster b{{2}, {}};
        for (auto lk : {Linkage::Single, Linkage::Complete, Linkage::Average}) {
            CHECK(linkage_distance(a, b, points, lk, Metric::Euclidean) == doctest::Approx(d13));
        }
    }
    SUBCASE("identical member vectors give zero under every linkage") {
        const std::vector<Vec> same = {{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
        const Cluster a{{0, 1}, {}};
        const Cluster b{{2}, {}};
        for (auto lk : {Linkage::Single, Linkage::Complete, Linkage::Average}) {
            CHECK(linkage_distance(a, b, same, lk, Metric::Euclidean) == 0.0);
        }
    }
}

TEST_CASE("memory example clusters at the default config") {
    const auto exp = memory_experiment();
    const ClusterConfig cfg;  // agglomerative, complete, euclidean, 0.15

    const auto p0 = cluster_step(states_at(exp, 0), cfg);
    REQUIRE(p0.clusters.size() == 2);
    CHECK(p0.clusters[0].members == std::vector<int>{0, 1});
    CHECK(p0.clusters[0].centroid[0] == doctest::Approx(0.225).epsilon(1e-12));
    CHECK(p0.clusters[0].centroid[1] == doctest::Approx(0.50).epsilon(1e-12));
    CHECK(p0.clusters[1].members == std::vector<int>{2});
    CHECK(p0.clusters[1].centroid == Vec{0.45, 0.70});

    const auto p1 = cluster_step(states_at(exp, 1), cfg);
    REQUIRE(p1.clusters.size() == 1);
    CHECK(p1.clusters[0].members == std::vector<int>{0, 1, 2});
    // (0.70 + 0.75 + 0.70) / 3 in both coordinates
    CHECK(p1.clusters[0].centroid[0] == doctest::Approx(0.71667).epsilon(1e-5));
    CHECK(p1.clusters[0].centroid[1] == doctest::Approx(0.71667).epsilon(1e-5));

    const auto p2 = cluster_step(states_at(exp, 2), cfg);
    REQUIRE(p2.clusters.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(p2.clusters[j].members == std::vector<int>{j});
        CHECK(p2.clusters[j].centroid == exp.steps()[2].measurements[j]);
    }
}

TEST_CASE("config and usage errors") {
    const auto states = make_states({{0.0}, {1.0}});
    ClusterConfig cfg;
    cfg.method = Method::KMeans;
    cfg.k = 3;
    CHECK_THROWS_AS(cluster_step(states, cfg), ConfigError);

    auto mixed = states;
    mixed[1].step_index = 5;
    CHECK_THROWS_AS(cluster_step(mixed, ClusterConfig{}), UsageError);
}

TEST_CASE("threshold extremes under complete linkage") {
    const auto states = make_states({{0.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}, {2.0, 0.0}});

    ClusterConfig zero;
    zero.threshold = 0.0;
    const auto p = cluster_step(states, zero);
    REQUIRE(p.clusters.size() == 3);
    CHECK(p.clusters[0].members == std::vector<int>{0, 1});
    CHECK(p.clusters[1].members == std::vector<int>{2, 3});
    CHECK(p.clusters[2].members == std::vector<int>{4});

    ClusterConfig huge;
    huge.threshold = 100.0;
    CHECK(cluster_step(states, huge).clusters.size() == 1);
}

TEST_CASE("partition validity on random inputs (property)") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = 1 + static_cast<int>(rng.next_below(12));
        const int n = 1 + static_cast<int>(rng.next_below(3));
        const auto points = cmdviz::testing::random_matrix(rng, m, n);

        ClusterConfig cfg;
        if (trial % 2 == 0) {
            cfg.threshold = rng.next_double();
            cfg.linkage = trial % 4 == 0 ? Linkage::Single : Linkage::Average;
        } else {
            cfg.method = Method::KMeans;
            cfg.k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
            cfg.seed = rng.next();
        }
        check_partition_valid(cluster_step(make_states(points), cfg));
    }
}

TEST_CASE("centroid equals the member mean (property)") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + static_cast<int>(rng.next_below(10));
        const auto points = cmdviz::testing::random_matrix(rng, m, 2);
        ClusterConfig cfg;
        cfg.threshold = 0.8;
        const auto part = cluster_step(make_states(points), cfg);
        for (const auto& c : part.clusters) {
            for (std::size_t i = 0; i < c.centroid.size(); ++i) {
                double mean = 0.0;
                for (int j : c.members) mean += points[j][i];
                mean /= static_cast<double>(c.members.size());
                CHECK(c.centroid[i] == doctest::Approx(mean).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("permutation equivariance") {
    SplitMix64 rng(13);
    const int m = 8;
    const auto points = cmdviz::testing::random_matrix(rng, m, 2);
    ClusterConfig cfg;
    cfg.threshold = 0.5;

    const auto base = cluster_step(make_states(points), cfg);

    // Reverse the agent order and map the member sets back.
    std::vector<Vec> reversed(points.rbegin(), points.rend());
    const auto permuted = cluster_step(make_states(reversed), cfg);

    auto canon = [m](const ClusterPartition& p, bool reverse) {
        std::set<std::set<int>> sets;
        for (const auto& c : p.clusters) {
            std::set<int> s;
            for (int j : c.members) s.insert(reverse ? m - 1 - j : j);
            sets.insert(std::move(s));
        }
        return sets;
    };
    CHECK(canon(base, false) == canon(permuted, true));
}

TEST_CASE("determinism for both methods") {
    SplitMix64 rng(17);
    const auto points = cmdviz::testing::random_matrix(rng, 10, 3);
    const auto states = make_states(points);

    ClusterConfig agg;
    agg.threshold = 0.6;
    const auto a1 = cluster_step(states, agg);
    const auto a2 = cluster_step(states, agg);
    CHECK(a1.assignments == a2.assignments);

    ClusterConfig km;
    km.method = Method::KMeans;
    km.k = 3;
    km.seed = 99;
    const auto k1 = cluster_step(states, km);
    const auto k2 = cluster_step(states, km);
    CHECK(k1.assignments == k2.assignments);
    for (std::size_t c = 0; c < k1.clusters.size(); ++c) {
        CHECK(k1.clusters[c].centroid == k2.clusters[c].centroid);
    }
}

TEST_CASE("kmeans with k = M gives singletons on distinct points") {
    const auto states = make_states({{0.0, 0.0}, {5.0, 0.0}, {0.0, 5.0}});
    ClusterConfig cfg;
    cfg.method = Method::KMeans;
    cfg.k = 3;
    cfg.seed = 1;
    const auto part = cluster_step(states, cfg);
    REQUIRE(part.clusters.size() == 3);
    for (const auto& c : part.clusters) CHECK(c.members.size() == 1);
}

TEST_CASE("singleton centroid is the member vector, bit for bit") {
    const Vec v = {0.1 + 0.2, 1.0 / 3.0};
    const auto part = cluster_step(make_states({v, {5.0, 5.0}}), ClusterConfig{});
    REQUIRE(part.clusters.size() == 2);
    CHECK(part.clusters[0].centroid == v);
}
