#pragma once

#include <cstdint>

#include "mlrh/matrix.hpp"

namespace mlrh {

/// Gaussian-kernel feature map against a set of anchor samples:
/// sample x maps to (exp(-||x - a_j||^2 / (2 sigma^2)))_j.
struct RbfMap {
    DenseMatrix anchors;  // d x m, anchor samples as columns
    double sigma = 0.0;

    std::size_t output_dim() const { return anchors.cols(); }
};

/// Picks m distinct training columns as anchors (seeded, without
/// replacement) and sets sigma to the mean Euclidean distance over
/// min(1000, n*m) seeded random (sample, anchor) pairs. A degenerate spread
/// (sigma <= 1e-12) is a NumericalError; m > n is a UsageError.
RbfMap fit_rbf(const DenseMatrix& v, std::size_t m, std::uint64_t seed);

/// Maps d x k samples to m x k kernel features, all values in (0, 1].
DenseMatrix apply_rbf(const RbfMap& map, const DenseMatrix& x);

}  // namespace mlrh
