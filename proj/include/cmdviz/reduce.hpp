#pragma once

#include <vector>

#include "cmdviz/model.hpp"

namespace cmdviz {

// Principal components of a pooled data matrix. Component rows are
// orthonormal, in descending eigenvalue order, with the sign fixed so each
// row's largest-magnitude entry is positive.
struct PcaModel {
    Vec mean;
    Matrix components;        // k x N
    Vec explained_variance;   // descending, length k
    bool zero_variance = false;
};

// Fits the top-k principal components of the sample covariance (divisor P-1)
// via Jacobi rotation.
PcaModel fit_pca(const Matrix& data, int k);

// (data - mean) * components^T
Matrix project(const PcaModel& model, const Matrix& data);

}  // namespace cmdviz
