#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mlrh {

/// Deterministic random source used everywhere a seed appears in the toolkit.
///
/// The algorithm is pinned so that identical seeds produce identical streams
/// on every platform: the raw 64-bit stream is std::mt19937_64 (fully
/// specified by the C++ standard) and Gaussian variates are drawn with the
/// Marsaglia polar method (std::normal_distribution is implementation-defined
/// and therefore not used).
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    /// Standard normal variate (Marsaglia polar method, one spare cached).
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = next_symmetric();
            v = next_symmetric();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    /// Unbiased uniform integer in [0, n). n must be nonzero.
    uint64_t next_below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mlrh
