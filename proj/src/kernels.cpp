#include "mlrh/kernels.hpp"

#include <cstdlib>
#include <string>

#include "mlrh/errors.hpp"

namespace mlrh {
namespace {

bool cpu_has_avx2() {
#if defined(MLRH_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelOps* pick_best() {
#if defined(MLRH_HAVE_AVX2)
    if (cpu_has_avx2()) return &kAvx2Kernels;
#endif
#if defined(MLRH_HAVE_NEON)
    return &kNeonKernels;
#endif
    return &kScalarKernels;
}

const KernelOps* select_kernels() {
    const char* env = std::getenv("MLRH_SIMD");
    const std::string want = env ? env : "auto";
    if (want.empty() || want == "auto") return pick_best();
    if (want == "scalar") return &kScalarKernels;
    if (want == "avx2") {
#if defined(MLRH_HAVE_AVX2)
        if (cpu_has_avx2()) return &kAvx2Kernels;
#endif
        throw UsageError("MLRH_SIMD=avx2 requested but AVX2 is not available");
    }
    if (want == "neon") {
#if defined(MLRH_HAVE_NEON)
        return &kNeonKernels;
#else
        throw UsageError("MLRH_SIMD=neon requested but NEON is not available");
#endif
    }
    throw UsageError("unknown MLRH_SIMD value '" + want +
                     "' (expected auto, scalar, avx2 or neon)");
}

}  // namespace

const KernelOps& kernels() {
    static const KernelOps* active = select_kernels();
    return *active;
}

const std::vector<const KernelOps*>& kernel_variants() {
    static const std::vector<const KernelOps*> variants = [] {
        std::vector<const KernelOps*> v{&kScalarKernels};
#if defined(MLRH_HAVE_AVX2)
        if (cpu_has_avx2()) v.push_back(&kAvx2Kernels);
#endif
#if defined(MLRH_HAVE_NEON)
        v.push_back(&kNeonKernels);
#endif
        return v;
    }();
    return variants;
}

}  // namespace mlrh
