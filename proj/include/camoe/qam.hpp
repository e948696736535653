#pragma once

#include <complex>
#include <vector>

#include "camoe/bitstream.hpp"
#include "camoe/rng.hpp"

namespace camoe {

using Symbol = std::complex<double>;

/// Gray-mapped square 16-QAM on {-3,-1,+1,+3}^2 scaled by 1/sqrt(10) for
/// unit average symbol energy. Four bits per symbol: the first two select
/// the in-phase level, the last two the quadrature level.
std::vector<Symbol> qam16_modulate(const BitStream& bits);

/// Minimum-Euclidean-distance hard decision, the inverse of qam16_modulate
/// on clean symbols.
BitStream qam16_demodulate(const std::vector<Symbol>& symbols);

/// Fading AWGN link at symbol level: r = h*s + w with complex Gaussian w
/// whose total variance gives Es/N0 = 10^(snr_db/10) for unit-energy
/// symbols, followed by perfect-CSI equalization r/h. An infinite snr_db
/// is noiseless.
std::vector<Symbol> symbol_channel(const std::vector<Symbol>& symbols, double h, double snr_db,
                                   Rng& rng);

}  // namespace camoe
