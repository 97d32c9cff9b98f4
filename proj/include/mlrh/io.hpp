#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mlrh {

// Little-endian byte serialization, independent of host byte order.

class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void f32(float v);
    void f64(double v);
    void bytes(const void* p, std::size_t n);
    void magic(const char tag[4]) { bytes(tag, 4); }

    const std::vector<std::uint8_t>& buffer() const { return buf_; }

private:
    std::vector<std::uint8_t> buf_;
};

/// Sequential reader that tracks the byte offset for error reporting.
/// All read methods throw FormatError("<context>: ... at byte N") on
/// truncation.
class ByteReader {
public:
    ByteReader(std::vector<std::uint8_t> data, std::string context)
        : data_(std::move(data)), context_(std::move(context)) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    float f32();
    double f64();
    void expect_magic(const char tag[4], const char* what);
    std::size_t offset() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }
    const std::string& context() const { return context_; }

    [[noreturn]] void fail(const std::string& msg) const;

private:
    void need(std::size_t n, const char* what);

    std::vector<std::uint8_t> data_;
    std::string context_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames into place, so a failed command
/// never leaves a partial artifact behind.
void write_file_atomic(const std::filesystem::path& path,
                       const std::vector<std::uint8_t>& bytes);
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace mlrh
