#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "camoe/bitstream.hpp"

namespace camoe {

/// Prefix-free variable-length code over byte symbols. Symbols absent from
/// the source histogram have empty codes.
struct HuffmanCodebook {
    std::array<BitStream, 256> codes;

    bool has(std::uint8_t symbol) const { return !codes[symbol].empty(); }
};

/// Optimal prefix code for the given 256-entry histogram. Ties in tree
/// merging break toward the lower symbol value, so codebooks are
/// deterministic. A single-symbol alphabet gets the 1-bit code "0".
/// Throws InvalidArgumentError if every count is zero.
HuffmanCodebook huffman_build(const std::array<std::uint64_t, 256>& byte_counts);

/// Concatenation of the per-symbol codes. Every byte must be covered.
BitStream huffman_encode(const std::vector<std::uint8_t>& bytes, const HuffmanCodebook& book);

/// Strict decode of exactly `count` symbols; throws DecodeError on a
/// truncated stream or a bit pattern outside the code tree.
std::vector<std::uint8_t> huffman_decode(const BitStream& bits, const HuffmanCodebook& book,
                                         std::size_t count);

/// Best-effort decode for payloads that crossed a noisy channel: decodes
/// while the stream follows the tree, then pads with symbol 0 up to
/// `count`. Never throws.
std::vector<std::uint8_t> huffman_decode_lossy(const BitStream& bits, const HuffmanCodebook& book,
                                               std::size_t count);

}  // namespace camoe
