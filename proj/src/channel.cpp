#include "camoe/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "camoe/errors.hpp"

namespace camoe {

double sample_rayleigh(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double u = normal(rng);
    const double v = normal(rng);
    return std::sqrt((u * u + v * v) / 2.0);
}

double sample_snr_db(const ChannelConfig& cfg, Rng& rng) {
    if (cfg.snr_var_db2 < 0.0) throw InvalidArgumentError("sample_snr_db: negative variance");
    if (!(cfg.snr_clamp_lo_db <= cfg.snr_clamp_hi_db)) {
        throw InvalidArgumentError("sample_snr_db: empty clamp range");
    }
    double snr = cfg.snr_mean_db;
    if (cfg.snr_var_db2 > 0.0) {
        std::normal_distribution<double> normal(cfg.snr_mean_db, std::sqrt(cfg.snr_var_db2));
        snr = normal(rng);
    }
    return std::clamp(snr, cfg.snr_clamp_lo_db, cfg.snr_clamp_hi_db);
}

double snr_to_sigma_tilde(double snr_db, double feature_power) {
    if (!(feature_power > 0.0)) {
        throw InvalidArgumentError("snr_to_sigma_tilde: feature_power must be positive");
    }
    if (std::isinf(snr_db) && snr_db > 0.0) return 0.0;
    return std::sqrt(feature_power / std::pow(10.0, snr_db / 10.0));
}

double sigma_tilde_from_csi(double h, double sigma, double p) {
    if (h == 0.0) throw SingularChannelError("sigma_tilde_from_csi: zero fading gain");
    if (!(p > 0.0)) throw InvalidArgumentError("sigma_tilde_from_csi: p must be positive");
    if (sigma < 0.0) throw InvalidChannelError("sigma_tilde_from_csi: negative sigma");
    return sigma / (p * std::abs(h));
}

ChannelDraw make_draw(double snr_db, double h, double p, double feature_power) {
    ChannelDraw d;
    d.h = h;
    d.p = p;
    d.snr_db = snr_db;
    d.sigma = snr_to_sigma_tilde(snr_db, feature_power);
    d.sigma_tilde = sigma_tilde_from_csi(h, d.sigma, p);
    return d;
}

Matrix analog_transmit(const Matrix& z, const ChannelDraw& draw, Rng& rng) {
    if (draw.sigma_tilde < 0.0) throw InvalidChannelError("analog_transmit: negative sigma_tilde");
    Matrix out = z;
    std::normal_distribution<double> normal(0.0, 1.0);
    if (draw.sigma_tilde == 0.0) {
        // still consume one normal per entry so streams stay aligned across
        // noise levels when the caller reuses a seed
        for (std::size_t i = 0; i < out.data.size(); ++i) (void)normal(rng);
        return out;
    }
    for (double& v : out.data) v += draw.sigma_tilde * normal(rng);
    require_finite(out, "analog_transmit output");
    return out;
}

std::vector<ChannelDraw> ChannelScenario::draws(std::size_t num_experts, double feature_power,
                                                Rng& rng) const {
    std::vector<ChannelDraw> out;
    out.reserve(num_experts);
    switch (kind) {
        case Kind::kUniformSnr:
            for (std::size_t k = 0; k < num_experts; ++k) {
                out.push_back(make_draw(uniform_snr_db, 1.0, 1.0, feature_power));
            }
            break;
        case Kind::kHeterogeneous:
            for (std::size_t k = 0; k < num_experts; ++k) {
                out.push_back(make_draw(k % 2 == 0 ? bad_snr_db : good_snr_db, 1.0, 1.0,
                                        feature_power));
            }
            break;
        case Kind::kRandomFading:
            for (std::size_t k = 0; k < num_experts; ++k) {
                const double h = channel.fading == FadingKind::kRayleighUnit
                                     ? sample_rayleigh(rng)
                                     : channel.fixed_h;
                const double snr = sample_snr_db(channel, rng);
                out.push_back(make_draw(snr, h, channel.p, feature_power));
            }
            break;
        case Kind::kExpertTable:
            if (table.size() < num_experts) {
                throw ConfigError("scenario '" + name + "' covers " +
                                  std::to_string(table.size()) + " experts, need " +
                                  std::to_string(num_experts));
            }
            for (std::size_t k = 0; k < num_experts; ++k) {
                const ExpertRow& row = table[k];
                if (row.from_csi) {
                    ChannelDraw d;
                    d.h = row.h;
                    d.sigma = row.sigma;
                    d.p = row.p;
                    d.sigma_tilde = sigma_tilde_from_csi(row.h, row.sigma, row.p);
                    d.snr_db = 10.0 * std::log10(feature_power /
                                                 std::max(row.sigma * row.sigma, 1e-300));
                    out.push_back(d);
                } else {
                    out.push_back(make_draw(row.snr_db, 1.0, 1.0, feature_power));
                }
            }
            break;
    }
    return out;
}

ChannelScenario scenario_uniform(double snr_db) {
    ChannelScenario s;
    s.kind = ChannelScenario::Kind::kUniformSnr;
    s.uniform_snr_db = snr_db;
    std::ostringstream name;
    name << "uniform:" << snr_db;
    s.name = name.str();
    return s;
}

ChannelScenario scenario_uniform_good() {
    ChannelScenario s = scenario_uniform(40.0);
    s.name = "uniform-good";
    return s;
}

ChannelScenario scenario_heterogeneous(double bad_db, double good_db) {
    ChannelScenario s;
    s.kind = ChannelScenario::Kind::kHeterogeneous;
    s.bad_snr_db = bad_db;
    s.good_snr_db = good_db;
    s.name = "heterogeneous";
    return s;
}

ChannelScenario scenario_random_fading(const ChannelConfig& cfg) {
    ChannelScenario s;
    s.kind = ChannelScenario::Kind::kRandomFading;
    s.channel = cfg;
    s.name = "random-fading";
    return s;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        std::istringstream trim(field);
        std::string token;
        while (trim >> token) fields.push_back(token);
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

ChannelScenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file '" + path + "'");
    ChannelScenario s;
    s.kind = ChannelScenario::Kind::kExpertTable;
    s.name = path;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) continue;
        double expert_idx = 0.0;
        if (!parse_double(fields[0], expert_idx)) {
            if (line_no == 1) continue;  // header line
            throw ParseError("non-numeric expert index '" + fields[0] + "'", line_no);
        }
        const auto idx = static_cast<std::size_t>(expert_idx);
        ChannelScenario::ExpertRow row;
        if (fields.size() == 2) {
            if (!parse_double(fields[1], row.snr_db)) {
                throw ParseError("non-numeric snr_db field", line_no);
            }
            row.from_csi = false;
        } else if (fields.size() == 4) {
            if (!parse_double(fields[1], row.h) || !parse_double(fields[2], row.sigma) ||
                !parse_double(fields[3], row.p)) {
                throw ParseError("non-numeric h/sigma/p field", line_no);
            }
            row.from_csi = true;
        } else {
            throw ParseError("expected 2 fields (expert, snr_db) or 4 (expert, h, sigma, p), got " +
                                 std::to_string(fields.size()),
                             line_no);
        }
        if (s.table.size() <= idx) s.table.resize(idx + 1);
        s.table[idx] = row;
    }
    if (s.table.empty()) throw ParseError("scenario file '" + path + "' has no expert rows");
    return s;
}

ChannelScenario parse_scenario(const std::string& spec, const ChannelConfig& cfg) {
    if (spec == "uniform-good") return scenario_uniform_good();
    if (spec == "heterogeneous") return scenario_heterogeneous();
    if (spec == "random-fading") return scenario_random_fading(cfg);
    const std::string prefix = "uniform:";
    if (spec.rfind(prefix, 0) == 0) {
        double snr = 0.0;
        if (!parse_double(spec.substr(prefix.size()), snr)) {
            throw ConfigError("bad scenario '" + spec + "': expected uniform:<snr_db>");
        }
        return scenario_uniform(snr);
    }
    return load_scenario_file(spec);
}

}  // namespace camoe
