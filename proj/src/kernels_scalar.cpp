#include "mlrh/kernels.hpp"

#include <bit>

namespace mlrh {
namespace {

// Reference kernels. The SIMD variants replay these loops lane-for-lane;
// any change to an accumulation order here must be mirrored there.

void matmul_rm_scalar(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t idx = 0; idx < m * n; ++idx) c[idx] = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = arow[p];
            const double* brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += aip * brow[j];
            }
        }
    }
}

double sum_squares_scalar(const double* x, std::size_t len) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    const std::size_t len4 = len & ~std::size_t{3};
    for (std::size_t i = 0; i < len4; i += 4) {
        s0 += x[i] * x[i];
        s1 += x[i + 1] * x[i + 1];
        s2 += x[i + 2] * x[i + 2];
        s3 += x[i + 3] * x[i + 3];
    }
    double s = (s0 + s1) + (s2 + s3);
    for (std::size_t i = len4; i < len; ++i) s += x[i] * x[i];
    return s;
}

double squared_distance_scalar(const double* x, const double* y, std::size_t len) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    const std::size_t len4 = len & ~std::size_t{3};
    for (std::size_t i = 0; i < len4; i += 4) {
        const double d0 = x[i] - y[i];
        const double d1 = x[i + 1] - y[i + 1];
        const double d2 = x[i + 2] - y[i + 2];
        const double d3 = x[i + 3] - y[i + 3];
        s0 += d0 * d0;
        s1 += d1 * d1;
        s2 += d2 * d2;
        s3 += d3 * d3;
    }
    double s = (s0 + s1) + (s2 + s3);
    for (std::size_t i = len4; i < len; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

void hamming_scan_scalar(const std::uint64_t* db, std::size_t n, std::size_t wpc,
                         const std::uint64_t* query, std::uint32_t* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* code = db + i * wpc;
        std::uint32_t d = 0;
        for (std::size_t w = 0; w < wpc; ++w) {
            d += static_cast<std::uint32_t>(std::popcount(code[w] ^ query[w]));
        }
        out[i] = d;
    }
}

}  // namespace

const KernelOps kScalarKernels = {
    "scalar",
    matmul_rm_scalar,
    sum_squares_scalar,
    squared_distance_scalar,
    hamming_scan_scalar,
};

}  // namespace mlrh
