#pragma once

#include <cstdint>
#include <vector>

#include "camoe/convcode.hpp"
#include "camoe/huffman.hpp"
#include "camoe/qam.hpp"
#include "camoe/rng.hpp"

namespace camoe {

/// Fixed transport chain parameters: 8-bit quantizer, rate-1/2
/// convolutional code (133/171, constraint length 7), Gray 16-QAM, header
/// on an error-free side channel.
struct DigitalLinkConfig {
    enum class HeaderPolicy : std::uint8_t { kErrorFreeSideChannel = 0 };

    int bits = 8;
    unsigned generator1 = kConvGenerator1;
    unsigned generator2 = kConvGenerator2;
    int constraint_length = kConvConstraintLength;
    HeaderPolicy header_policy = HeaderPolicy::kErrorFreeSideChannel;
};

struct QuantizeResult {
    std::vector<std::uint8_t> bytes;
    double z_min = 0.0;
    double z_max = 0.0;
};

/// q_i = round((z_i - z_min)*(2^8-1)/(z_max - z_min)), half away from
/// zero. A degenerate range (z_max == z_min) maps everything to byte 0.
QuantizeResult quantize(const std::vector<double>& z);

/// z_i = q_i*(z_max - z_min)/(2^8-1) + z_min.
std::vector<double> dequantize(const std::vector<std::uint8_t>& bytes, double z_min, double z_max);

/// Metadata delivered out of band alongside a transmitted payload.
struct LinkHeader {
    double z_min = 0.0;
    double z_max = 0.0;
    std::size_t symbol_count = 0;  // quantized byte count
    std::size_t pad_bits = 0;      // zeros appended before modulation
    HuffmanCodebook codebook;
};

struct DigitalTransmitStats {
    std::size_t payload_bits = 0;
    std::size_t coded_bits = 0;
    std::size_t channel_symbols = 0;
    std::size_t payload_bit_errors = 0;  // residual errors after decoding
};

/// Full chain: quantize -> Huffman -> convolutional encode -> 16-QAM ->
/// fading AWGN channel -> demodulate -> Viterbi -> Huffman decode ->
/// dequantize. Channel errors never raise; corrupted bytes flow through
/// reconstruction. Always returns a vector of the original length.
std::vector<double> digital_transmit(const std::vector<double>& z, double h, double snr_db,
                                     const DigitalLinkConfig& cfg, Rng& rng,
                                     DigitalTransmitStats* stats = nullptr);

}  // namespace camoe
