#pragma once

#include "camoe/bitstream.hpp"

namespace camoe {

/// Rate-1/2 convolutional code, constraint length 7, generators 133/171
/// (octal). The register holds the newest bit in its MSB; both generator
/// outputs are interleaved per input bit.
inline constexpr unsigned kConvGenerator1 = 0133;
inline constexpr unsigned kConvGenerator2 = 0171;
inline constexpr int kConvConstraintLength = 7;

/// Encodes `bits` followed by 6 flush zeros; output length 2*(L+6).
BitStream conv_encode(const BitStream& bits);

/// Hard-decision Viterbi decode over the 64-state trellis, terminated at
/// the zero state. Metric ties break toward the 0-branch predecessor.
/// Input length must be even and at least 12.
BitStream viterbi_decode(const BitStream& coded);

}  // namespace camoe
