#include "camoe/bitstream.hpp"

#include "camoe/errors.hpp"

namespace camoe {

std::vector<std::uint8_t> pack_bitstream(const BitStream& bits) {
    std::vector<std::uint8_t> out;
    const std::uint64_t n = bits.size();
    out.reserve(8 + (bits.size() + 7) / 8);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((n >> (8 * i)) & 0xFF));
    std::uint8_t cur = 0;
    int filled = 0;
    for (std::uint8_t b : bits) {
        cur = static_cast<std::uint8_t>((cur << 1) | (b & 1));
        if (++filled == 8) {
            out.push_back(cur);
            cur = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - filled)));
    return out;
}

BitStream unpack_bitstream(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 8) throw DecodeError("unpack_bitstream: missing length prefix");
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    if (bytes.size() < 8 + (n + 7) / 8) throw DecodeError("unpack_bitstream: truncated payload");
    BitStream bits;
    bits.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint8_t byte = bytes[8 + i / 8];
        bits.push_back(static_cast<std::uint8_t>((byte >> (7 - i % 8)) & 1));
    }
    return bits;
}

}  // namespace camoe
