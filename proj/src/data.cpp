#include "mlrh/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "mlrh/errors.hpp"
#include "mlrh/io.hpp"
#include "mlrh/rng.hpp"

namespace mlrh {

namespace {
constexpr char kMatrixMagic[4] = {'M', 'L', 'R', 'H'};
}

void encode_matrix(ByteWriter& w, const DenseMatrix& m, MatrixDtype dtype) {
    if (m.rows() > UINT32_MAX || m.cols() > UINT32_MAX) {
        throw UsageError("encode_matrix: dimensions exceed u32 range");
    }
    if (dtype == MatrixDtype::I8) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const double v = m.data()[i];
            if (v != 1.0 && v != -1.0) {
                throw UsageError("encode_matrix: i8 dtype requires all entries in {-1,+1}");
            }
        }
    }
    w.magic(kMatrixMagic);
    w.u8(static_cast<std::uint8_t>(dtype));
    w.u32(static_cast<std::uint32_t>(m.rows()));
    w.u32(static_cast<std::uint32_t>(m.cols()));
    if (dtype == MatrixDtype::F32) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const float v = static_cast<float>(m.data()[i]);
            if (!std::isfinite(v)) {
                throw UsageError("encode_matrix: entry not representable as f32");
            }
            w.f32(v);
        }
    } else {
        for (std::size_t i = 0; i < m.size(); ++i) {
            w.u8(static_cast<std::uint8_t>(static_cast<std::int8_t>(m.data()[i])));
        }
    }
}

DenseMatrix decode_matrix(ByteReader& r) {
    r.expect_magic(kMatrixMagic, "matrix");
    const std::uint8_t dtype = r.u8();
    if (dtype > 1) r.fail("unknown dtype " + std::to_string(dtype));
    const std::uint32_t rows = r.u32();
    const std::uint32_t cols = r.u32();
    DenseMatrix m(rows, cols);
    if (dtype == static_cast<std::uint8_t>(MatrixDtype::F32)) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const float v = r.f32();
            if (!std::isfinite(v)) r.fail("non-finite f32 entry");
            m.data()[i] = static_cast<double>(v);
        }
    } else {
        for (std::size_t i = 0; i < m.size(); ++i) {
            m.data()[i] = static_cast<double>(static_cast<std::int8_t>(r.u8()));
        }
    }
    return m;
}

void save_matrix(const DenseMatrix& m, MatrixDtype dtype,
                 const std::filesystem::path& path) {
    ByteWriter w;
    encode_matrix(w, m, dtype);
    write_file_atomic(path, w.buffer());
}

DenseMatrix load_matrix(const std::filesystem::path& path) {
    ByteReader r(read_file(path), path.string());
    DenseMatrix m = decode_matrix(r);
    if (!r.at_end()) {
        r.fail(std::to_string(r.remaining()) + " trailing bytes after payload");
    }
    return m;
}

Dataset::Dataset(DenseMatrix features_in, DenseMatrix labels_in)
    : features(std::move(features_in)), labels(std::move(labels_in)) {
    if (features.cols() != labels.cols()) {
        throw UsageError("Dataset: feature and label column counts differ (" +
                         std::to_string(features.cols()) + " vs " +
                         std::to_string(labels.cols()) + ")");
    }
    for (std::size_t j = 0; j < labels.cols(); ++j) {
        bool has_positive = false;
        for (std::size_t i = 0; i < labels.rows(); ++i) {
            const double v = labels(i, j);
            if (v != 1.0 && v != -1.0) {
                throw UsageError("Dataset: label entry not in {-1,+1} at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
            }
            has_positive = has_positive || v == 1.0;
        }
        if (!has_positive) {
            throw UsageError("Dataset: label column " + std::to_string(j) +
                             " has no positive entry");
        }
    }
}

DenseMatrix one_hot_pm(const std::vector<std::size_t>& class_ids, std::size_t c) {
    DenseMatrix y(c, class_ids.size());
    for (std::size_t j = 0; j < class_ids.size(); ++j) {
        if (class_ids[j] >= c) {
            throw UsageError("one_hot_pm: class id " + std::to_string(class_ids[j]) +
                             " out of range [0," + std::to_string(c) + ")");
        }
        for (std::size_t i = 0; i < c; ++i) y(i, j) = -1.0;
        y(class_ids[j], j) = 1.0;
    }
    return y;
}

Dataset gen_synthetic(const SyntheticSpec& spec) {
    if (spec.num_classes < 1 || spec.dim < 1 || spec.per_class < 1) {
        throw UsageError("gen_synthetic: counts must be >= 1");
    }
    if (spec.cluster_spread <= 0.0 || spec.center_scale <= 0.0) {
        throw UsageError("gen_synthetic: spread and center scale must be positive");
    }
    SeededRng rng(spec.seed);

    DenseMatrix centers(spec.dim, spec.num_classes);
    for (std::size_t k = 0; k < spec.num_classes; ++k) {
        for (std::size_t r = 0; r < spec.dim; ++r) {
            centers(r, k) = spec.center_scale * rng.next_gaussian();
        }
    }

    const std::size_t n = spec.num_classes * spec.per_class;
    DenseMatrix v(spec.dim, n);
    std::vector<std::size_t> ids(n);
    std::size_t col = 0;
    for (std::size_t k = 0; k < spec.num_classes; ++k) {
        for (std::size_t s = 0; s < spec.per_class; ++s, ++col) {
            for (std::size_t r = 0; r < spec.dim; ++r) {
                v(r, col) = centers(r, k) + spec.cluster_spread * rng.next_gaussian();
            }
            ids[col] = k;
        }
    }
    return Dataset(std::move(v), one_hot_pm(ids, spec.num_classes));
}

namespace {

std::size_t argmax_row(const DenseMatrix& labels, std::size_t col) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < labels.rows(); ++i) {
        if (labels(i, col) > labels(best, col)) best = i;
    }
    return best;
}

}  // namespace

std::pair<Dataset, Dataset> split(const Dataset& ds, double query_fraction,
                                  std::uint64_t seed) {
    if (!(query_fraction > 0.0 && query_fraction < 1.0)) {
        throw UsageError("split: query fraction must lie in (0,1)");
    }
    const std::size_t n = ds.num_samples();
    std::vector<std::vector<std::size_t>> by_class(ds.num_classes());
    for (std::size_t j = 0; j < n; ++j) by_class[argmax_row(ds.labels, j)].push_back(j);

    SeededRng rng(seed);
    std::vector<bool> is_query(n, false);
    for (auto& members : by_class) {
        if (members.empty()) continue;
        // Fisher-Yates, then the prefix becomes the query side.
        for (std::size_t i = members.size(); i-- > 1;) {
            std::swap(members[i], members[rng.next_below(i + 1)]);
        }
        std::size_t take = static_cast<std::size_t>(
            std::floor(query_fraction * static_cast<double>(members.size()) + 0.5));
        if (take >= members.size() && members.size() >= 1) take = members.size() - 1;
        for (std::size_t i = 0; i < take; ++i) is_query[members[i]] = true;
    }

    std::vector<std::size_t> train_idx, query_idx;
    for (std::size_t j = 0; j < n; ++j) {
        (is_query[j] ? query_idx : train_idx).push_back(j);
    }
    if (train_idx.empty() || query_idx.empty()) {
        throw UsageError("split: a side of the partition came out empty");
    }
    Dataset train(gather_columns(ds.features, train_idx),
                  gather_columns(ds.labels, train_idx));
    Dataset query(gather_columns(ds.features, query_idx),
                  gather_columns(ds.labels, query_idx));
    return {std::move(train), std::move(query)};
}

DenseMatrix load_csv_features(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::vector<std::vector<double>> samples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(field, &used);
                while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
                if (used != field.size()) throw std::invalid_argument(field);
                row.push_back(v);
            } catch (const std::exception&) {
                throw FormatError(path.string() + ":" + std::to_string(lineno) +
                                  ": cannot parse field '" + field + "'");
            }
        }
        if (!samples.empty() && row.size() != samples.front().size()) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) +
                              ": expected " + std::to_string(samples.front().size()) +
                              " fields, got " + std::to_string(row.size()));
        }
        if (row.empty()) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) + ": empty row");
        }
        samples.push_back(std::move(row));
    }
    if (samples.empty()) throw FormatError(path.string() + ": no samples");
    DenseMatrix v(samples.front().size(), samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j) {
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) = samples[j][i];
    }
    return v;
}

std::vector<std::size_t> load_class_ids(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::vector<std::size_t> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(line, &used);
            while (used < line.size() && std::isspace(static_cast<unsigned char>(line[used]))) ++used;
            if (used != line.size() || v < 0) throw std::invalid_argument(line);
            ids.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw FormatError(path.string() + ":" + std::to_string(lineno) +
                              ": cannot parse class id '" + line + "'");
        }
    }
    if (ids.empty()) throw FormatError(path.string() + ": no class ids");
    return ids;
}

}  // namespace mlrh
