#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ledgerlane/crypto.hpp"

namespace ledgerlane {

// Canonical binary encoding used for everything that gets hashed or persisted:
// fields are concatenated in declared order, each as a 4-byte big-endian length
// followed by the field bytes. Strings are UTF-8, integers fixed-width
// big-endian, doubles IEEE-754 bits as u64 big-endian, booleans one byte.
class CanonicalWriter {
  public:
    CanonicalWriter& bytes(ByteView v);
    CanonicalWriter& str(std::string_view s) { return bytes(as_bytes(s)); }
    CanonicalWriter& u8(std::uint8_t v);
    CanonicalWriter& u32(std::uint32_t v);
    CanonicalWriter& u64(std::uint64_t v);
    CanonicalWriter& i64(std::int64_t v);
    CanonicalWriter& f64(double v);
    CanonicalWriter& boolean(bool v);

    ByteView view() const { return {buf_.data(), buf_.size()}; }
    Bytes take() { return std::move(buf_); }

  private:
    void raw_u32(std::uint32_t v);
    Bytes buf_;
};

// Throws Error{ParseError} on truncated or malformed input.
class CanonicalReader {
  public:
    explicit CanonicalReader(ByteView in) : in_(in) {}

    Bytes bytes();
    std::string str();
    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    std::int64_t i64();
    double f64();
    bool boolean();

    bool at_end() const { return pos_ == in_.size(); }
    void expect_end() const;

  private:
    ByteView field(std::size_t expected_len);
    ByteView in_;
    std::size_t pos_ = 0;
};

} // namespace ledgerlane
