#include "ledgerlane/canonical.hpp"

#include <bit>
#include <cstring>
#include <limits>

#include "ledgerlane/errors.hpp"

namespace ledgerlane {

void CanonicalWriter::raw_u32(std::uint32_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v >> 24));
    buf_.push_back(static_cast<std::uint8_t>(v >> 16));
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    buf_.push_back(static_cast<std::uint8_t>(v));
}

CanonicalWriter& CanonicalWriter::bytes(ByteView v) {
    if (v.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(ErrorCode::ParseError, "canonical field exceeds 2^32-1 bytes");
    }
    raw_u32(static_cast<std::uint32_t>(v.size()));
    buf_.insert(buf_.end(), v.begin(), v.end());
    return *this;
}

CanonicalWriter& CanonicalWriter::u8(std::uint8_t v) {
    raw_u32(1);
    buf_.push_back(v);
    return *this;
}

CanonicalWriter& CanonicalWriter::u32(std::uint32_t v) {
    raw_u32(4);
    raw_u32(v);
    return *this;
}

CanonicalWriter& CanonicalWriter::u64(std::uint64_t v) {
    raw_u32(8);
    for (int shift = 56; shift >= 0; shift -= 8) {
        buf_.push_back(static_cast<std::uint8_t>(v >> shift));
    }
    return *this;
}

CanonicalWriter& CanonicalWriter::i64(std::int64_t v) { return u64(static_cast<std::uint64_t>(v)); }

CanonicalWriter& CanonicalWriter::f64(double v) { return u64(std::bit_cast<std::uint64_t>(v)); }

CanonicalWriter& CanonicalWriter::boolean(bool v) { return u8(v ? 1 : 0); }

ByteView CanonicalReader::field(std::size_t expected_len) {
    if (pos_ + 4 > in_.size()) {
        throw Error(ErrorCode::ParseError, "canonical record truncated in length prefix");
    }
    std::uint32_t len = (std::uint32_t(in_[pos_]) << 24) | (std::uint32_t(in_[pos_ + 1]) << 16) |
                        (std::uint32_t(in_[pos_ + 2]) << 8) | std::uint32_t(in_[pos_ + 3]);
    pos_ += 4;
    if (expected_len != SIZE_MAX && len != expected_len) {
        throw Error(ErrorCode::ParseError, "canonical field has unexpected width");
    }
    if (pos_ + len > in_.size()) {
        throw Error(ErrorCode::ParseError, "canonical record truncated in field body");
    }
    ByteView out = in_.subspan(pos_, len);
    pos_ += len;
    return out;
}

Bytes CanonicalReader::bytes() {
    ByteView v = field(SIZE_MAX);
    return Bytes(v.begin(), v.end());
}

std::string CanonicalReader::str() {
    ByteView v = field(SIZE_MAX);
    return std::string(reinterpret_cast<const char*>(v.data()), v.size());
}

std::uint8_t CanonicalReader::u8() { return field(1)[0]; }

std::uint32_t CanonicalReader::u32() {
    ByteView v = field(4);
    return (std::uint32_t(v[0]) << 24) | (std::uint32_t(v[1]) << 16) | (std::uint32_t(v[2]) << 8) |
           std::uint32_t(v[3]);
}

std::uint64_t CanonicalReader::u64() {
    ByteView v = field(8);
    std::uint64_t out = 0;
    for (std::uint8_t b : v) out = (out << 8) | b;
    return out;
}

std::int64_t CanonicalReader::i64() { return static_cast<std::int64_t>(u64()); }

double CanonicalReader::f64() { return std::bit_cast<double>(u64()); }

bool CanonicalReader::boolean() {
    std::uint8_t v = u8();
    if (v > 1) throw Error(ErrorCode::ParseError, "canonical boolean out of range");
    return v == 1;
}

void CanonicalReader::expect_end() const {
    if (!at_end()) throw Error(ErrorCode::ParseError, "canonical record has trailing bytes");
}

} // namespace ledgerlane
