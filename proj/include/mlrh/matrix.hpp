#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mlrh {

/// Dense real matrix, 64-bit entries, row-major. The workhorse container for
/// features, labels, hash matrices and projections.
class DenseMatrix {
public:
    DenseMatrix() = default;

    /// rows x cols matrix, zero-filled.
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

    /// Build from nested braces: DenseMatrix::from_rows({{1,2},{3,4}}).
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    double* data() { return entries_.data(); }
    const double* data() const { return entries_.data(); }

    bool same_shape(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }
    bool operator==(const DenseMatrix& other) const = default;

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

/// Standard matrix product. Throws UsageError on inner-dimension mismatch.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& a);

/// Elementwise a + b and a - b; shapes must match.
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix scale(const DenseMatrix& a, double s);

/// a + s*I; a must be square.
DenseMatrix add_scaled_identity(const DenseMatrix& a, double s);

/// Sum of squared entries (squared Frobenius norm).
double frob_norm_sq(const DenseMatrix& a);

double frob_norm(const DenseMatrix& a);

/// Largest |a_ij - b_ij|; shapes must match.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Column j of a as a contiguous vector.
std::vector<double> column(const DenseMatrix& a, std::size_t j);

/// Gather the listed columns into a new matrix, in the given order.
DenseMatrix gather_columns(const DenseMatrix& a, const std::vector<std::size_t>& idx);

}  // namespace mlrh
