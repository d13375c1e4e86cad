#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cmdviz/errors.hpp"
#include "cmdviz/reduce.hpp"
#include "helpers.hpp"
#include "reduce_oracle.hpp"

using namespace cmdviz;
using cmdviz::testing::brute_force_covariance;
using cmdviz::testing::qr_eigenvalues;
using cmdviz::testing::two_by_two_eigenvalues;

TEST_CASE("collinear data has one nonzero component") {
    Matrix data;
    for (int i = 0; i < 6; ++i) {
        const double x = static_cast<double>(i) - 2.5;
        data.push_back({x, 2.0 * x});
    }
    const auto model = fit_pca(data, 2);
    const double inv_norm = 1.0 / std::sqrt(5.0);
    CHECK(model.components[0][0] == doctest::Approx(inv_norm).epsilon(1e-9));
    CHECK(model.components[0][1] == doctest::Approx(2.0 * inv_norm).epsilon(1e-9));
    CHECK(model.explained_variance[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("full-rank projection reconstructs centered data") {
    SplitMix64 rng(31);
    const auto data = cmdviz::testing::random_matrix(rng, 12, 4);
    const auto model = fit_pca(data, 4);
    const auto projected = project(model, data);
    for (std::size_t r = 0; r < data.size(); ++r) {
        for (std::size_t i = 0; i < 4; ++i) {
            double reconstructed = model.mean[i];
            for (std::size_t c = 0; c < 4; ++c) {
                reconstructed += projected[r][c] * model.components[c][i];
            }
            CHECK(reconstructed == doctest::Approx(data[r][i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("memory example pooled covariance matches the quadratic-formula oracle") {
    const auto exp = cmdviz::testing::memory_experiment();
    Matrix pooled;
    for (const auto& step : exp.steps()) {
        for (const auto& row : step.measurements) pooled.push_back(row);
    }
    REQUIRE(pooled.size() == 9);

    const auto cov = brute_force_covariance(pooled);
    const auto expected = two_by_two_eigenvalues(cov);
    const auto model = fit_pca(pooled, 2);
    CHECK(model.explained_variance[0] == doctest::Approx(expected.first).epsilon(1e-9));
    CHECK(model.explained_variance[1] == doctest::Approx(expected.second).epsilon(1e-9));
}

TEST_CASE("model invariants: orthonormal rows, descending variance") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = 3 + static_cast<int>(rng.next_below(20));
        const int n = 2 + static_cast<int>(rng.next_below(5));
        const int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const auto data = cmdviz::testing::random_matrix(rng, p, n);
        if (p < 2 || k > std::min(p, n)) continue;
        const auto model = fit_pca(data, k);

        for (int a = 0; a < k; ++a) {
            double norm = 0.0;
            for (double x : model.components[a]) norm += x * x;
            CHECK(std::abs(norm - 1.0) < 1e-9);
            for (int b = a + 1; b < k; ++b) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += model.components[a][i] * model.components[b][i];
                CHECK(std::abs(dot) < 1e-9);
            }
            if (a > 0) CHECK(model.explained_variance[a] <= model.explained_variance[a - 1]);
            CHECK(model.explained_variance[a] >= 0.0);
        }
    }
}

TEST_CASE("explained variance matches the QR-iteration oracle") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int p = 2 + static_cast<int>(rng.next_below(29));
        const int n = 1 + static_cast<int>(rng.next_below(6));
        const int k = std::min(p, n);
        const auto data = cmdviz::testing::random_matrix(rng, p, n, -3.0, 3.0);
        const auto model = fit_pca(data, k);

        auto oracle = qr_eigenvalues(brute_force_covariance(data));
        std::sort(oracle.begin(), oracle.end(), std::greater<>());
        for (int c = 0; c < k; ++c) {
            CHECK(std::abs(model.explained_variance[c] - oracle[c]) < 1e-8);
        }
    }
}

TEST_CASE("projection centering and isometry") {
    SplitMix64 rng(47);
    const auto data = cmdviz::testing::random_matrix(rng, 15, 3);
    const auto model = fit_pca(data, 3);
    const auto projected = project(model, data);

    for (int c = 0; c < 3; ++c) {
        double mean = 0.0;
        for (const auto& row : projected) mean += row[c];
        mean /= static_cast<double>(projected.size());
        CHECK(std::abs(mean) < 1e-9);
    }

    // Full-basis projection preserves pairwise distances.
    for (std::size_t a = 0; a < data.size(); ++a) {
        for (std::size_t b = a + 1; b < data.size(); ++b) {
            double d_orig = 0.0, d_proj = 0.0;
            for (int i = 0; i < 3; ++i) {
                d_orig += (data[a][i] - data[b][i]) * (data[a][i] - data[b][i]);
                d_proj += (projected[a][i] - projected[b][i]) * (projected[a][i] - projected[b][i]);
            }
            CHECK(std::sqrt(d_orig) == doctest::Approx(std::sqrt(d_proj)).epsilon(1e-9));
        }
    }

    // Variance of projected column i equals the model's explained variance.
    for (int c = 0; c < 3; ++c) {
        double var = 0.0;
        for (const auto& row : projected) var += row[c] * row[c];
        var /= static_cast<double>(projected.size() - 1);
        CHECK(var == doctest::Approx(model.explained_variance[c]).epsilon(1e-9));
    }
}

TEST_CASE("degenerate inputs") {
    SUBCASE("repeated single point projects to zero with zero variance") {
        const Matrix data(5, Vec{1.0, 2.0});
        const auto model = fit_pca(data, 2);
        CHECK(model.zero_variance);
        for (const auto& row : project(model, data)) {
            CHECK(std::abs(row[0]) < 1e-12);
            CHECK(std::abs(row[1]) < 1e-12);
        }
    }
    SUBCASE("k too large is a config error") {
        const Matrix data = {{1.0, 2.0}, {3.0, 4.0}};
        CHECK_THROWS_AS(fit_pca(data, 3), ConfigError);
    }
    SUBCASE("dimension mismatch on project") {
        const Matrix data = {{1.0, 2.0}, {3.0, 4.0}, {5.0, 6.0}};
        const auto model = fit_pca(data, 2);
        CHECK_THROWS_AS(project(model, Matrix{{1.0, 2.0, 3.0}}), UsageError);
    }
}
