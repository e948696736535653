#pragma once

#include <cstdint>
#include <vector>

namespace camoe {

/// Ordered sequence of bits, one per byte element (values 0 or 1).
using BitStream = std::vector<std::uint8_t>;

/// Debug dump format: u64 little-endian bit count, then the bits packed
/// 8 per byte, most significant bit first. Bit-exact across platforms.
std::vector<std::uint8_t> pack_bitstream(const BitStream& bits);

/// Inverse of pack_bitstream. Throws DecodeError on truncated input.
BitStream unpack_bitstream(const std::vector<std::uint8_t>& bytes);

}  // namespace camoe
