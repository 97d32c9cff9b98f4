#pragma once

#include <vector>

#include "mlrh/matrix.hpp"

namespace mlrh {

/// Numerical tolerances for the dense solvers, fixed defaults in one place.
struct NumericsConfig {
    double eigen_off_diag_tol = 1e-12;   // relative off-diagonal mass target
    int eigen_max_sweeps = 100;
    double asymmetry_tol = 1e-10;        // relative asymmetry accepted as "symmetric"
    double sylvester_min_denom = 1e-12;  // smallest admissible eigenvalue-pair sum
    double sylvester_residual_tol = 1e-8;
};

/// Symmetric eigendecomposition A = Q diag(values) Q^T with ascending
/// eigenvalues and orthonormal columns in Q.
struct SymEigen {
    std::vector<double> values;
    DenseMatrix vectors;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Rotations run
/// until the off-diagonal Frobenius mass falls below
/// eigen_off_diag_tol * ||A||_F or eigen_max_sweeps sweeps pass (then a
/// NumericalError is thrown). Asymmetric or non-square input is a UsageError.
SymEigen sym_eigen(const DenseMatrix& a, const NumericsConfig& cfg = {});

/// X = (a + lambda*I)^-1 b via Cholesky of (a + lambda*I). a must be square
/// symmetric PSD and lambda > 0; a failed factorization is a NumericalError.
DenseMatrix ridge_solve(const DenseMatrix& a, double lambda, const DenseMatrix& b);

/// Solves a*W + W*b = c for symmetric PSD a (LxL) and symmetric PD b (cxc)
/// by simultaneous diagonalization:
///   a = U Da U^T, b = V Db V^T, W = U [ (U^T c V)_ij / (Da_i + Db_j) ] V^T.
/// Any eigenvalue-pair sum <= sylvester_min_denom is a NumericalError (b not
/// positive definite). The residual ||aW + Wb - c||_F is verified against
/// sylvester_residual_tol * max(1, ||c||_F).
DenseMatrix sylvester_solve(const DenseMatrix& a, const DenseMatrix& b,
                            const DenseMatrix& c, const NumericsConfig& cfg = {});

}  // namespace mlrh
