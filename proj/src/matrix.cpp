#include "mlrh/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlrh/errors.hpp"
#include "mlrh/kernels.hpp"

namespace mlrh {

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    DenseMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw UsageError("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : entries_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw UsageError("matmul: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ")");
    }
    DenseMatrix c(a.rows(), b.cols());
    kernels().matmul_rm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    if (!c.all_finite()) throw NumericalError("matmul: non-finite result");
    return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    }
    return t;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) throw UsageError("add: shape mismatch");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
    return c;
}

DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) throw UsageError("sub: shape mismatch");
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

DenseMatrix scale(const DenseMatrix& a, double s) {
    DenseMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = s * a.data()[i];
    return c;
}

DenseMatrix add_scaled_identity(const DenseMatrix& a, double s) {
    if (a.rows() != a.cols()) throw UsageError("add_scaled_identity: matrix not square");
    DenseMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, i) += s;
    return c;
}

double frob_norm_sq(const DenseMatrix& a) {
    return kernels().sum_squares(a.data(), a.size());
}

double frob_norm(const DenseMatrix& a) { return std::sqrt(frob_norm_sq(a)); }

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (!a.same_shape(b)) throw UsageError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::fabs(a.data()[i] - b.data()[i]));
    }
    return m;
}

std::vector<double> column(const DenseMatrix& a, std::size_t j) {
    if (j >= a.cols()) throw UsageError("column: index out of range");
    std::vector<double> v(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, j);
    return v;
}

DenseMatrix gather_columns(const DenseMatrix& a, const std::vector<std::size_t>& idx) {
    DenseMatrix out(a.rows(), idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= a.cols()) throw UsageError("gather_columns: index out of range");
        for (std::size_t i = 0; i < a.rows(); ++i) out(i, k) = a(i, idx[k]);
    }
    return out;
}

}  // namespace mlrh
