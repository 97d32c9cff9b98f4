#include "mlrh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mlrh/errors.hpp"

namespace mlrh {
namespace {

double off_diag_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) s += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(s);
}

void check_square_symmetric(const DenseMatrix& a, const char* who, double rel_tol) {
    if (a.rows() != a.cols()) {
        throw UsageError(std::string(who) + ": matrix not square (" +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")");
    }
    double asym = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const double d = a(i, j) - a(j, i);
            asym += 2.0 * d * d;
        }
    }
    const double rel = std::sqrt(asym) / std::max(1.0, frob_norm(a));
    if (rel > rel_tol) {
        throw UsageError(std::string(who) + ": matrix not symmetric (relative asymmetry " +
                         std::to_string(rel) + ")");
    }
}

}  // namespace

SymEigen sym_eigen(const DenseMatrix& a, const NumericsConfig& cfg) {
    check_square_symmetric(a, "sym_eigen", cfg.asymmetry_tol);
    const std::size_t n = a.rows();

    // Work on the symmetrized copy so accumulated updates stay symmetric.
    DenseMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + a(j, i));
    }
    DenseMatrix q = DenseMatrix::identity(n);

    const double target = cfg.eigen_off_diag_tol * frob_norm(w);
    bool converged = off_diag_norm(w) <= target;
    for (int sweep = 0; sweep < cfg.eigen_max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const double apq = w(p, r);
                if (apq == 0.0) continue;
                const double tau = (w(r, r) - w(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double wkp = w(k, p);
                    const double wkq = w(k, r);
                    w(k, p) = c * wkp - s * wkq;
                    w(k, r) = s * wkp + c * wkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double wpk = w(p, k);
                    const double wqk = w(r, k);
                    w(p, k) = c * wpk - s * wqk;
                    w(r, k) = s * wpk + c * wqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double qkp = q(k, p);
                    const double qkq = q(k, r);
                    q(k, p) = c * qkp - s * qkq;
                    q(k, r) = s * qkp + c * qkq;
                }
            }
        }
        converged = off_diag_norm(w) <= target;
    }
    if (!converged) {
        throw NumericalError("sym_eigen: Jacobi did not converge within " +
                             std::to_string(cfg.eigen_max_sweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w(i, i) < w(j, j); });

    SymEigen out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = w(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = q(i, order[j]);
    }
    if (!out.vectors.all_finite()) throw NumericalError("sym_eigen: non-finite result");
    return out;
}

DenseMatrix ridge_solve(const DenseMatrix& a, double lambda, const DenseMatrix& b) {
    if (lambda <= 0.0) throw UsageError("ridge_solve: lambda must be positive");
    check_square_symmetric(a, "ridge_solve", 1e-10);
    if (a.rows() != b.rows()) throw UsageError("ridge_solve: rhs row count mismatch");

    const std::size_t n = a.rows();
    DenseMatrix l = add_scaled_identity(a, lambda);

    // In-place lower Cholesky.
    for (std::size_t j = 0; j < n; ++j) {
        double d = l(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d <= 0.0 || !std::isfinite(d)) {
            throw NumericalError("ridge_solve: factorization failed at pivot " +
                                 std::to_string(j) + " (matrix not positive definite)");
        }
        const double root = std::sqrt(d);
        l(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = l(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / root;
        }
    }

    DenseMatrix x(n, b.cols());
    std::vector<double> y(n);
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = b(i, col);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
            y[i] = s / l(i, i);
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x(k, col);
            x(ii, col) = s / l(ii, ii);
        }
    }
    if (!x.all_finite()) throw NumericalError("ridge_solve: non-finite result");
    return x;
}

DenseMatrix sylvester_solve(const DenseMatrix& a, const DenseMatrix& b,
                            const DenseMatrix& c, const NumericsConfig& cfg) {
    if (c.rows() != a.rows() || c.cols() != b.rows()) {
        throw UsageError("sylvester_solve: rhs shape mismatch");
    }
    const SymEigen ea = sym_eigen(a, cfg);
    const SymEigen eb = sym_eigen(b, cfg);

    DenseMatrix ct = matmul(matmul(transpose(ea.vectors), c), eb.vectors);
    for (std::size_t i = 0; i < ct.rows(); ++i) {
        for (std::size_t j = 0; j < ct.cols(); ++j) {
            const double denom = ea.values[i] + eb.values[j];
            if (denom <= cfg.sylvester_min_denom) {
                throw NumericalError(
                    "sylvester_solve: eigenvalue-pair sum " + std::to_string(denom) +
                    " below tolerance (coefficient matrix not positive definite)");
            }
            ct(i, j) /= denom;
        }
    }
    DenseMatrix w = matmul(matmul(ea.vectors, ct), transpose(eb.vectors));

    const DenseMatrix residual = sub(add(matmul(a, w), matmul(w, b)), c);
    const double bound = cfg.sylvester_residual_tol * std::max(1.0, frob_norm(c));
    if (frob_norm(residual) > bound) {
        throw NumericalError("sylvester_solve: residual " +
                             std::to_string(frob_norm(residual)) + " exceeds bound " +
                             std::to_string(bound));
    }
    return w;
}

}  // namespace mlrh
