#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "mlrh/matrix.hpp"

namespace mlrh {

class ByteReader;
class ByteWriter;

// Binary matrix file ("MLRH"): magic, dtype byte (0 = f32, 1 = i8),
// rows u32 LE, cols u32 LE, row-major payload.
enum class MatrixDtype : std::uint8_t { F32 = 0, I8 = 1 };

/// Serialize one matrix record into a byte stream. dtype i8 requires every
/// entry to be exactly -1 or +1.
void encode_matrix(ByteWriter& w, const DenseMatrix& m, MatrixDtype dtype);

/// Parse one matrix record from the stream, widening entries to f64.
DenseMatrix decode_matrix(ByteReader& r);

void save_matrix(const DenseMatrix& m, MatrixDtype dtype,
                 const std::filesystem::path& path);

/// Loads a matrix file; the file must contain exactly one record.
DenseMatrix load_matrix(const std::filesystem::path& path);

/// Feature matrix d x n (one sample per column) plus label matrix c x n with
/// entries in {-1,+1} and at least one +1 per column. Construction validates
/// the invariants.
struct Dataset {
    DenseMatrix features;
    DenseMatrix labels;

    Dataset() = default;
    Dataset(DenseMatrix features_in, DenseMatrix labels_in);

    std::size_t num_samples() const { return features.cols(); }
    std::size_t dim() const { return features.rows(); }
    std::size_t num_classes() const { return labels.rows(); }
};

/// c x n label matrix: column i carries +1 at row class_ids[i], -1 elsewhere.
DenseMatrix one_hot_pm(const std::vector<std::size_t>& class_ids, std::size_t c);

/// Gaussian cluster generator: class centers ~ N(0, center_scale^2 I),
/// samples = center + N(0, cluster_spread^2 I). Columns are ordered class by
/// class; everything is drawn from SeededRng(seed) in a fixed sequence.
struct SyntheticSpec {
    std::size_t num_classes = 1;
    std::size_t dim = 1;
    std::size_t per_class = 1;
    double cluster_spread = 1.0;
    double center_scale = 1.0;
    std::uint64_t seed = 0;
};

Dataset gen_synthetic(const SyntheticSpec& spec);

/// Disjoint stratified column split: per class (argmax label row), a seeded
/// shuffle sends round(query_fraction * class size) columns to the query set,
/// clamped so the train side keeps at least one sample per class where
/// possible. Column order within each side follows the original dataset.
std::pair<Dataset, Dataset> split(const Dataset& ds, double query_fraction,
                                  std::uint64_t seed);

/// CSV ingestion: one sample per line, comma-separated reals -> d x n matrix
/// (samples as columns).
DenseMatrix load_csv_features(const std::filesystem::path& path);

/// One integer class id per line.
std::vector<std::size_t> load_class_ids(const std::filesystem::path& path);

}  // namespace mlrh
