#include "mlrh/rbf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mlrh/errors.hpp"
#include "mlrh/kernels.hpp"
#include "mlrh/rng.hpp"

namespace mlrh {

RbfMap fit_rbf(const DenseMatrix& v, std::size_t m, std::uint64_t seed) {
    const std::size_t n = v.cols();
    if (m < 1) throw UsageError("fit_rbf: anchor count must be >= 1");
    if (m > n) {
        throw UsageError("fit_rbf: anchor count " + std::to_string(m) +
                         " exceeds sample count " + std::to_string(n));
    }
    SeededRng rng(seed);

    // Partial Fisher-Yates over the column indices picks m without replacement.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < m; ++i) {
        std::swap(idx[i], idx[i + rng.next_below(n - i)]);
    }
    idx.resize(m);

    RbfMap map;
    map.anchors = gather_columns(v, idx);

    // Sample-major copies so the distance kernel runs on contiguous rows.
    const DenseMatrix samples_t = transpose(v);
    const DenseMatrix anchors_t = transpose(map.anchors);

    const std::size_t pairs = std::min<std::size_t>(1000, n * m);
    double total = 0.0;
    for (std::size_t p = 0; p < pairs; ++p) {
        const std::size_t i = rng.next_below(n);
        const std::size_t j = rng.next_below(m);
        total += std::sqrt(kernels().squared_distance(samples_t.data() + i * v.rows(),
                                                      anchors_t.data() + j * v.rows(),
                                                      v.rows()));
    }
    map.sigma = total / static_cast<double>(pairs);
    if (map.sigma <= 1e-12) {
        throw NumericalError("fit_rbf: degenerate feature spread (sigma " +
                             std::to_string(map.sigma) + ")");
    }
    return map;
}

DenseMatrix apply_rbf(const RbfMap& map, const DenseMatrix& x) {
    const std::size_t d = map.anchors.rows();
    if (x.rows() != d) {
        throw UsageError("apply_rbf: sample dimension " + std::to_string(x.rows()) +
                         " does not match anchor dimension " + std::to_string(d));
    }
    const std::size_t m = map.anchors.cols();
    const std::size_t k = x.cols();
    const DenseMatrix samples_t = transpose(x);
    const DenseMatrix anchors_t = transpose(map.anchors);

    const double inv_two_sigma_sq = 1.0 / (2.0 * map.sigma * map.sigma);
    DenseMatrix out(m, k);
    for (std::size_t j = 0; j < m; ++j) {
        const double* aj = anchors_t.data() + j * d;
        for (std::size_t i = 0; i < k; ++i) {
            const double dist_sq =
                kernels().squared_distance(samples_t.data() + i * d, aj, d);
            out(j, i) = std::exp(-dist_sq * inv_two_sigma_sq);
        }
    }
    return out;
}

}  // namespace mlrh
