#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ledgerlane {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

inline ByteView as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

Digest sha256(ByteView data);
std::string sha256_hex(ByteView data);
inline std::string sha256_hex(std::string_view s) { return sha256_hex(as_bytes(s)); }

std::string to_hex(ByteView data);
// Returns nullopt on odd length or non-hex characters. Uppercase input accepted.
std::optional<Bytes> from_hex(std::string_view hex);

// 64 lowercase hex chars.
bool is_hex_digest(std::string_view s);

inline constexpr std::string_view kZeroDigestHex =
    "0000000000000000000000000000000000000000000000000000000000000000";

} // namespace ledgerlane
