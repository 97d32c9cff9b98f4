#include "mlrh/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "mlrh/errors.hpp"

namespace mlrh {

void ByteWriter::u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }

void ByteWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    buf_.insert(buf_.end(), b, b + n);
}

void ByteReader::need(std::size_t n, const char* what) {
    if (pos_ + n > data_.size()) {
        throw FormatError(context_ + ": truncated " + what + " at byte " +
                          std::to_string(pos_) + " (need " + std::to_string(n) +
                          " bytes, have " + std::to_string(data_.size() - pos_) + ")");
    }
}

std::uint8_t ByteReader::u8() {
    need(1, "byte");
    return data_[pos_++];
}

std::uint32_t ByteReader::u32() {
    need(4, "u32");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
}

std::uint64_t ByteReader::u64() {
    need(8, "u64");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
}

float ByteReader::f32() { return std::bit_cast<float>(u32()); }

double ByteReader::f64() { return std::bit_cast<double>(u64()); }

void ByteReader::expect_magic(const char tag[4], const char* what) {
    need(4, "magic");
    if (std::memcmp(data_.data() + pos_, tag, 4) != 0) {
        throw FormatError(context_ + ": bad " + what + " magic at byte " +
                          std::to_string(pos_) + " (expected \"" + std::string(tag, 4) +
                          "\")");
    }
    pos_ += 4;
}

void ByteReader::fail(const std::string& msg) const {
    throw FormatError(context_ + ": " + msg + " at byte " + std::to_string(pos_));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad()) throw FormatError("read failed for " + path.string());
    return data;
}

namespace {

void write_atomic_impl(const std::filesystem::path& path, const void* data,
                       std::size_t size) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot open " + tmp.string() + " for writing");
        out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw FormatError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw FormatError("rename to " + path.string() + " failed: " + ec.message());
    }
}

}  // namespace

void write_file_atomic(const std::filesystem::path& path,
                       const std::vector<std::uint8_t>& bytes) {
    write_atomic_impl(path, bytes.data(), bytes.size());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
    write_atomic_impl(path, text.data(), text.size());
}

}  // namespace mlrh
