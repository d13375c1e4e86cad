#include "cmdviz/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cmdviz/errors.hpp"

namespace cmdviz {

namespace {

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns
// (eigenvalues, eigenvectors as rows), unsorted.
std::pair<Vec, Matrix> jacobi_eigen(Matrix a) {
    const std::size_t n = a.size();
    Matrix v(n, Vec(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        }
        if (off < 1e-30) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i][p];
                    const double aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p][i];
                    const double aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vpi = v[p][i];
                    const double vqi = v[q][i];
                    v[p][i] = c * vpi - s * vqi;
                    v[q][i] = s * vpi + c * vqi;
                }
            }
        }
    }

    Vec eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i][i];
    return {eigenvalues, v};
}

}  // namespace

PcaModel fit_pca(const Matrix& data, int k) {
    const std::size_t p = data.size();
    if (p < 2) throw ConfigError("fit_pca: need at least 2 rows, got " + std::to_string(p));
    const std::size_t n = data.front().size();
    for (const auto& row : data) {
        if (row.size() != n) throw UsageError("fit_pca: ragged data matrix");
    }
    if (k < 1 || static_cast<std::size_t>(k) > std::min(p, n)) {
        throw ConfigError("fit_pca: k must be in [1, " + std::to_string(std::min(p, n)) + "], got " +
                          std::to_string(k));
    }

    PcaModel model;
    model.mean.assign(n, 0.0);
    for (const auto& row : data) {
        for (std::size_t i = 0; i < n; ++i) model.mean[i] += row[i];
    }
    for (double& m : model.mean) m /= static_cast<double>(p);

    Matrix cov(n, Vec(n, 0.0));
    for (const auto& row : data) {
        for (std::size_t i = 0; i < n; ++i) {
            const double di = row[i] - model.mean[i];
            for (std::size_t j = i; j < n; ++j) {
                cov[i][j] += di * (row[j] - model.mean[j]);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cov[i][j] /= static_cast<double>(p - 1);
            cov[j][i] = cov[i][j];
        }
    }

    auto [eigenvalues, eigenvectors] = jacobi_eigen(cov);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });

    for (int c = 0; c < k; ++c) {
        Vec row = eigenvectors[order[c]];
        // Sign convention: largest-magnitude entry positive.
        std::size_t arg = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(row[i]) > std::abs(row[arg])) arg = i;
        }
        if (row[arg] < 0.0) {
            for (double& x : row) x = -x;
        }
        model.components.push_back(std::move(row));
        // Tiny negative eigenvalues are Jacobi round-off on rank-deficient data.
        model.explained_variance.push_back(std::max(0.0, eigenvalues[order[c]]));
    }
    model.zero_variance = model.explained_variance.front() <= 0.0;
    return model;
}

Matrix project(const PcaModel& model, const Matrix& data) {
    const std::size_t n = model.mean.size();
    Matrix out;
    out.reserve(data.size());
    for (const auto& row : data) {
        if (row.size() != n) {
            throw UsageError("project: row has " + std::to_string(row.size()) +
                             " columns, model expects " + std::to_string(n));
        }
        Vec proj(model.components.size(), 0.0);
        for (std::size_t c = 0; c < model.components.size(); ++c) {
            for (std::size_t i = 0; i < n; ++i) {
                proj[c] += (row[i] - model.mean[i]) * model.components[c][i];
            }
        }
        out.push_back(std::move(proj));
    }
    return out;
}

}  // namespace cmdviz
