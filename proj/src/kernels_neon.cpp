#include "mlrh/kernels.hpp"

#if defined(MLRH_HAVE_NEON)

#include <arm_neon.h>

namespace mlrh {
namespace {

// NEON replay of the scalar reference kernels; two 128-bit registers stand in
// for one 4-lane vector so the reduction tree (s0+s1)+(s2+s3) is preserved
// and results stay bitwise equal to the scalar variant. vmul/vadd are kept
// separate (no fused vmla).

void matmul_rm_neon(const double* a, const double* b, double* c,
                    std::size_t m, std::size_t k, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (std::size_t j = 0; j < n4; j += 4) {
            float64x2_t acc0 = vdupq_n_f64(0.0);
            float64x2_t acc1 = vdupq_n_f64(0.0);
            const double* bp = b + j;
            for (std::size_t p = 0; p < k; ++p, bp += n) {
                const float64x2_t av = vdupq_n_f64(arow[p]);
                acc0 = vaddq_f64(acc0, vmulq_f64(av, vld1q_f64(bp)));
                acc1 = vaddq_f64(acc1, vmulq_f64(av, vld1q_f64(bp + 2)));
            }
            vst1q_f64(crow + j, acc0);
            vst1q_f64(crow + j + 2, acc1);
        }
        for (std::size_t j = n4; j < n; ++j) {
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += arow[p] * b[p * n + j];
            crow[j] = s;
        }
    }
}

double reduce_pair(float64x2_t a, float64x2_t b) {
    return (vgetq_lane_f64(a, 0) + vgetq_lane_f64(a, 1)) +
           (vgetq_lane_f64(b, 0) + vgetq_lane_f64(b, 1));
}

double sum_squares_neon(const double* x, std::size_t len) {
    const std::size_t len4 = len & ~std::size_t{3};
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < len4; i += 4) {
        const float64x2_t v0 = vld1q_f64(x + i);
        const float64x2_t v1 = vld1q_f64(x + i + 2);
        acc0 = vaddq_f64(acc0, vmulq_f64(v0, v0));
        acc1 = vaddq_f64(acc1, vmulq_f64(v1, v1));
    }
    double s = reduce_pair(acc0, acc1);
    for (std::size_t i = len4; i < len; ++i) s += x[i] * x[i];
    return s;
}

double squared_distance_neon(const double* x, const double* y, std::size_t len) {
    const std::size_t len4 = len & ~std::size_t{3};
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < len4; i += 4) {
        const float64x2_t d0 = vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
        const float64x2_t d1 = vsubq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
        acc0 = vaddq_f64(acc0, vmulq_f64(d0, d0));
        acc1 = vaddq_f64(acc1, vmulq_f64(d1, d1));
    }
    double s = reduce_pair(acc0, acc1);
    for (std::size_t i = len4; i < len; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

// Popcount of one 128-bit register as two per-64-bit-lane sums.
uint64x2_t popcount_u64x2(uint64x2_t v) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
}

void hamming_scan_neon(const std::uint64_t* db, std::size_t n, std::size_t wpc,
                       const std::uint64_t* query, std::uint32_t* out) {
    const std::size_t n2 = n & ~std::size_t{1};
    if (wpc == 1) {
        const uint64x2_t q = vdupq_n_u64(query[0]);
        for (std::size_t i = 0; i < n2; i += 2) {
            const uint64x2_t v = veorq_u64(vld1q_u64(db + i), q);
            const uint64x2_t cnt = popcount_u64x2(v);
            out[i] = static_cast<std::uint32_t>(vgetq_lane_u64(cnt, 0));
            out[i + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(cnt, 1));
        }
    } else {
        for (std::size_t i = 0; i < n2; i += 2) {
            uint64x2_t acc = vdupq_n_u64(0);
            const std::uint64_t* c0 = db + i * wpc;
            for (std::size_t w = 0; w < wpc; ++w) {
                std::uint64_t pair[2] = {c0[w], c0[wpc + w]};
                const uint64x2_t v = veorq_u64(vld1q_u64(pair), vdupq_n_u64(query[w]));
                acc = vaddq_u64(acc, popcount_u64x2(v));
            }
            out[i] = static_cast<std::uint32_t>(vgetq_lane_u64(acc, 0));
            out[i + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(acc, 1));
        }
    }
    kScalarKernels.hamming_scan(db + n2 * wpc, n - n2, wpc, query, out + n2);
}

}  // namespace

const KernelOps kNeonKernels = {
    "neon",
    matmul_rm_neon,
    sum_squares_neon,
    squared_distance_neon,
    hamming_scan_neon,
};

}  // namespace mlrh

#endif  // MLRH_HAVE_NEON
