#include "camoe/qam.hpp"

#include <array>
#include <cmath>

#include "camoe/errors.hpp"

namespace camoe {

namespace {

const double kScale = 1.0 / std::sqrt(10.0);

// Gray code per axis: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
constexpr std::array<double, 4> kGrayLevel = {-3.0, -1.0, 3.0, 1.0};  // indexed by (b0<<1)|b1

inline unsigned level_to_gray(double level) {
    // levels are -3, -1, +1, +3
    if (level < -2.0) return 0b00;
    if (level < 0.0) return 0b01;
    if (level < 2.0) return 0b11;
    return 0b10;
}

}  // namespace

std::vector<Symbol> qam16_modulate(const BitStream& bits) {
    if (bits.size() % 4 != 0) {
        throw InvalidArgumentError("qam16_modulate: bit count must be a multiple of 4");
    }
    std::vector<Symbol> out;
    out.reserve(bits.size() / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        const unsigned ib = ((bits[i] & 1u) << 1) | (bits[i + 1] & 1u);
        const unsigned qb = ((bits[i + 2] & 1u) << 1) | (bits[i + 3] & 1u);
        out.emplace_back(kGrayLevel[ib] * kScale, kGrayLevel[qb] * kScale);
    }
    return out;
}

BitStream qam16_demodulate(const std::vector<Symbol>& symbols) {
    BitStream out;
    out.reserve(symbols.size() * 4);
    for (const Symbol& s : symbols) {
        const unsigned ib = level_to_gray(s.real() / kScale);
        const unsigned qb = level_to_gray(s.imag() / kScale);
        out.push_back(static_cast<std::uint8_t>((ib >> 1) & 1));
        out.push_back(static_cast<std::uint8_t>(ib & 1));
        out.push_back(static_cast<std::uint8_t>((qb >> 1) & 1));
        out.push_back(static_cast<std::uint8_t>(qb & 1));
    }
    return out;
}

std::vector<Symbol> symbol_channel(const std::vector<Symbol>& symbols, double h, double snr_db,
                                   Rng& rng) {
    if (!(h > 0.0)) throw InvalidChannelError("symbol_channel: fading gain must be positive");
    std::vector<Symbol> out;
    out.reserve(symbols.size());
    if (std::isinf(snr_db) && snr_db > 0.0) {
        for (const Symbol& s : symbols) out.push_back(h * s / h);
        return out;
    }
    const double n0 = std::pow(10.0, -snr_db / 10.0);  // Es = 1
    const double comp_std = std::sqrt(n0 / 2.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (const Symbol& s : symbols) {
        const Symbol w(comp_std * normal(rng), comp_std * normal(rng));
        out.push_back((h * s + w) / h);
    }
    return out;
}

}  // namespace camoe
