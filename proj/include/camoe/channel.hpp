#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "camoe/matrix.hpp"
#include "camoe/rng.hpp"

namespace camoe {

enum class FadingKind : std::uint8_t { kRayleighUnit = 0, kFixed = 1 };

/// Distribution parameters for drawing per-expert link conditions.
struct ChannelConfig {
    double snr_mean_db = 30.0;
    double snr_var_db2 = 2500.0;
    FadingKind fading = FadingKind::kRayleighUnit;
    double fixed_h = 1.0;     // used when fading == kFixed
    double p = 1.0;           // power scaling factor
    double snr_clamp_lo_db = -40.0;
    double snr_clamp_hi_db = 100.0;
};

/// One realization of a link: fading gain, noise level, power scaling and
/// the derived effective feature-domain noise std sigma_tilde.
/// snr_db is the nominal link SNR (fading not included); sigma is the
/// matching noise std in signal units, so sigma_tilde = sigma / (p*|h|).
struct ChannelDraw {
    double h = 1.0;
    double sigma = 0.0;
    double p = 1.0;
    double sigma_tilde = 0.0;
    double snr_db = 0.0;
};

/// Rayleigh fading gain with unit mean-square: sqrt(u^2+v^2)/sqrt(2),
/// u, v standard normal.
double sample_rayleigh(Rng& rng);

/// Gaussian SNR draw (dB) clamped to the configured range.
double sample_snr_db(const ChannelConfig& cfg, Rng& rng);

/// Effective noise std for a given SNR: sigma_tilde = sqrt(P / 10^(snr/10))
/// where P is the mean squared feature entry.
double snr_to_sigma_tilde(double snr_db, double feature_power);

/// sigma_tilde = sigma / (p * |h|). Throws SingularChannelError for h = 0.
double sigma_tilde_from_csi(double h, double sigma, double p);

/// Builds a draw for a link at the given nominal SNR with the given fading
/// gain: sigma = sqrt(P / 10^(snr/10)), sigma_tilde = sigma / (p*h).
ChannelDraw make_draw(double snr_db, double h, double p, double feature_power);

/// Equalized analog transport: z_tilde = z + sigma_tilde * n, n iid
/// standard normal. sigma_tilde = 0 returns z bit-exactly.
Matrix analog_transmit(const Matrix& z, const ChannelDraw& draw, Rng& rng);

/// A per-expert rule for producing ChannelDraws at evaluation time.
struct ChannelScenario {
    enum class Kind : std::uint8_t { kUniformSnr, kHeterogeneous, kRandomFading, kExpertTable };

    Kind kind = Kind::kUniformSnr;
    std::string name = "uniform-good";
    double uniform_snr_db = 40.0;                 // kUniformSnr
    double bad_snr_db = -10.0;                    // kHeterogeneous, even experts
    double good_snr_db = 40.0;                    // kHeterogeneous, odd experts
    ChannelConfig channel;                        // kRandomFading

    struct ExpertRow {
        bool from_csi = false;
        double snr_db = 0.0;                      // when !from_csi
        double h = 1.0, sigma = 0.0, p = 1.0;     // when from_csi
    };
    std::vector<ExpertRow> table;                 // kExpertTable, indexed by expert

    /// One fresh draw per expert. Table rows must cover every expert.
    std::vector<ChannelDraw> draws(std::size_t num_experts, double feature_power,
                                   Rng& rng) const;
};

ChannelScenario scenario_uniform(double snr_db);
ChannelScenario scenario_uniform_good();
ChannelScenario scenario_heterogeneous(double bad_db = -10.0, double good_db = 40.0);
ChannelScenario scenario_random_fading(const ChannelConfig& cfg);

/// Scenario file: comma/whitespace separated rows, one per expert, either
///   expert_index, snr_db
/// or
///   expert_index, h, sigma, p
/// Lines starting with '#' and an optional header line are skipped.
ChannelScenario load_scenario_file(const std::string& path);

/// Resolves "uniform-good", "heterogeneous", "random-fading",
/// "uniform:<snr_db>" or a scenario file path.
ChannelScenario parse_scenario(const std::string& spec, const ChannelConfig& cfg);

}  // namespace camoe
