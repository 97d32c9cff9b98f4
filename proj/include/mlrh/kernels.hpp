#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mlrh {

// Data-parallel inner loops behind the matrix and index modules. Every
// variant of a kernel computes the same operation with the same per-element
// accumulation order, so results are bitwise identical across variants:
//
//   matmul_rm      c(m x n) = a(m x k) * b(k x n), row-major, c zeroed first,
//                  each c[i][j] accumulates over k in ascending order,
//                  multiply and add kept as two rounded operations (no FMA).
//   sum_squares    four interleaved partial sums s0..s3 over indices
//                  i % 4 == lane, combined as (s0+s1)+(s2+s3), then the
//                  scalar tail (len % 4 elements) added in order.
//   squared_distance  same reduction tree over (x[i]-y[i])^2.
//   hamming_scan   out[i] = popcount over the wpc-word XOR of query and
//                  code i; exact integer result.
struct KernelOps {
    const char* name;
    void (*matmul_rm)(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n);
    double (*sum_squares)(const double* x, std::size_t len);
    double (*squared_distance)(const double* x, const double* y, std::size_t len);
    void (*hamming_scan)(const std::uint64_t* db, std::size_t n, std::size_t wpc,
                         const std::uint64_t* query, std::uint32_t* out);
};

/// Kernel set active in this process. Selected once: the MLRH_SIMD
/// environment variable ("scalar", "avx2", "neon", "auto"/unset) wins,
/// otherwise the best variant the CPU supports.
const KernelOps& kernels();

/// All variants compiled in and executable on this CPU (scalar first).
/// Used by the equivalence tests.
const std::vector<const KernelOps*>& kernel_variants();

extern const KernelOps kScalarKernels;
#if defined(MLRH_HAVE_AVX2)
extern const KernelOps kAvx2Kernels;
#endif
#if defined(MLRH_HAVE_NEON)
extern const KernelOps kNeonKernels;
#endif

}  // namespace mlrh
