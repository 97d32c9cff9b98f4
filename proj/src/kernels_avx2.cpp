#include "mlrh/kernels.hpp"

#if defined(MLRH_HAVE_AVX2)

#include <immintrin.h>

namespace mlrh {
namespace {

// AVX2 replay of the scalar reference kernels. Accumulation order per output
// element is identical (vector lanes hold independent elements or the fixed
// s0..s3 partial sums), and multiply/add stay separate instructions, so the
// results are bitwise equal to the scalar variant.

void matmul_rm_avx2(const double* a, const double* b, double* c,
                    std::size_t m, std::size_t k, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t{3};
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (std::size_t j = 0; j < n4; j += 4) {
            __m256d acc = _mm256_setzero_pd();
            const double* bp = b + j;
            for (std::size_t p = 0; p < k; ++p, bp += n) {
                const __m256d av = _mm256_set1_pd(arow[p]);
                acc = _mm256_add_pd(acc, _mm256_mul_pd(av, _mm256_loadu_pd(bp)));
            }
            _mm256_storeu_pd(crow + j, acc);
        }
        for (std::size_t j = n4; j < n; ++j) {
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += arow[p] * b[p * n + j];
            crow[j] = s;
        }
    }
}

double reduce_lanes(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_squares_avx2(const double* x, std::size_t len) {
    const std::size_t len4 = len & ~std::size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < len4; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double s = reduce_lanes(acc);
    for (std::size_t i = len4; i < len; ++i) s += x[i] * x[i];
    return s;
}

double squared_distance_avx2(const double* x, const double* y, std::size_t len) {
    const std::size_t len4 = len & ~std::size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < len4; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double s = reduce_lanes(acc);
    for (std::size_t i = len4; i < len; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

// Per-64-bit-lane popcount: nibble table lookup, then byte sums via SAD.
__m256i popcount_epi64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

void hamming_scan_avx2(const std::uint64_t* db, std::size_t n, std::size_t wpc,
                       const std::uint64_t* query, std::uint32_t* out) {
    const std::size_t n4 = n & ~std::size_t{3};
    alignas(32) std::uint64_t lane[4];
    if (wpc == 1) {
        const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[0]));
        for (std::size_t i = 0; i < n4; i += 4) {
            const __m256i v = _mm256_xor_si256(
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(db + i)), q);
            _mm256_store_si256(reinterpret_cast<__m256i*>(lane), popcount_epi64(v));
            out[i] = static_cast<std::uint32_t>(lane[0]);
            out[i + 1] = static_cast<std::uint32_t>(lane[1]);
            out[i + 2] = static_cast<std::uint32_t>(lane[2]);
            out[i + 3] = static_cast<std::uint32_t>(lane[3]);
        }
    } else {
        for (std::size_t i = 0; i < n4; i += 4) {
            __m256i acc = _mm256_setzero_si256();
            const std::uint64_t* c0 = db + i * wpc;
            for (std::size_t w = 0; w < wpc; ++w) {
                const __m256i v = _mm256_set_epi64x(
                    static_cast<long long>(c0[3 * wpc + w]),
                    static_cast<long long>(c0[2 * wpc + w]),
                    static_cast<long long>(c0[wpc + w]),
                    static_cast<long long>(c0[w]));
                const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[w]));
                acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_xor_si256(v, q)));
            }
            _mm256_store_si256(reinterpret_cast<__m256i*>(lane), acc);
            out[i] = static_cast<std::uint32_t>(lane[0]);
            out[i + 1] = static_cast<std::uint32_t>(lane[1]);
            out[i + 2] = static_cast<std::uint32_t>(lane[2]);
            out[i + 3] = static_cast<std::uint32_t>(lane[3]);
        }
    }
    // Scalar tail over the last n % 4 codes.
    kScalarKernels.hamming_scan(db + n4 * wpc, n - n4, wpc, query, out + n4);
}

}  // namespace

const KernelOps kAvx2Kernels = {
    "avx2",
    matmul_rm_avx2,
    sum_squares_avx2,
    squared_distance_avx2,
    hamming_scan_avx2,
};

}  // namespace mlrh

#endif  // MLRH_HAVE_AVX2
