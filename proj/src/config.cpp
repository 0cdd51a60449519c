#include "pzbridge/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pzbridge/mechanics.hpp"

namespace pzbridge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view text) {
    const std::string buf(trim(text));
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(buf, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + buf + "'");
    }
    if (consumed != buf.size()) {
        throw ConfigError("trailing characters after number: '" + buf + "'");
    }
    return value;
}

std::uint64_t parse_unsigned(std::string_view text) {
    const std::string buf(trim(text));
    std::uint64_t value = 0;
    const auto* first = buf.data();
    const auto* last = buf.data() + buf.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError("not a non-negative integer: '" + buf + "'");
    }
    return value;
}

DeviationMode parse_mode(std::string_view text) {
    const std::string v(trim(text));
    if (v == "independent") return DeviationMode::IndependentAll;
    if (v == "per-proof-mass") return DeviationMode::PerProofMass;
    if (v == "per-orientation") return DeviationMode::PerOrientation;
    throw ConfigError("unknown deviation mode '" + v +
                      "' (expected independent, per-proof-mass, "
                      "per-orientation or all)");
}

std::vector<ConfigId> parse_config_set(std::string_view text) {
    std::vector<ConfigId> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const std::string name(trim(item));
        if (name.empty()) continue;
        const ConfigId id = config_from_name(name);
        if (std::find(out.begin(), out.end(), id) == out.end()) {
            out.push_back(id);
        }
    }
    if (out.empty()) {
        throw ConfigError("configuration set is empty");
    }
    return out;
}

void validate(const RunConfig& cfg) {
    if (cfg.coeffs.pi_l == cfg.coeffs.pi_t) {
        throw ConfigError("pi_l must differ from pi_t (the scale factor is "
                          "singular otherwise)");
    }
    if (!(cfg.v_ex > 0.0)) throw ConfigError("v_ex must be positive");
    if (!(cfg.r0 > 0.0)) throw ConfigError("r0 must be positive");
    if (!(cfg.s_r >= 0.0)) throw ConfigError("s_r must be >= 0");
    if (!(cfg.delta >= 0.0 && cfg.delta <= 0.1)) {
        throw ConfigError("delta must lie in [0, 0.1]");
    }
    if (!(cfg.magnitude_g >= 0.0)) throw ConfigError("magnitude must be >= 0");
    if (cfg.samples < 100) throw ConfigError("samples must be >= 100");
    if (cfg.theta_points < 2) throw ConfigError("theta_points must be >= 2");
    if (cfg.alpha_points < 2) throw ConfigError("alpha_points must be >= 2");
    if (!(cfg.alpha_min < cfg.alpha_max)) {
        throw ConfigError("alpha_min must be below alpha_max");
    }
    // These throw std::invalid_argument with the precise reason.
    [[maybe_unused]] MechanicalParams probe(cfg.h, cfg.alpha);
    [[maybe_unused]] MechanicalParams sweep_lo(cfg.h, cfg.alpha_min);
    [[maybe_unused]] MechanicalParams sweep_hi(cfg.h, cfg.alpha_max);
}

}  // namespace

RunConfig::RunConfig()
    : alpha(std::numbers::pi / 4.0),
      alpha_min(0.05 * std::numbers::pi),
      alpha_max(0.45 * std::numbers::pi) {}

double parse_angle(std::string_view text) {
    std::string_view v = trim(text);
    if (v.size() >= 2 && (v.substr(v.size() - 2) == "pi" || v.substr(v.size() - 2) == "PI")) {
        const std::string_view factor = trim(v.substr(0, v.size() - 2));
        if (factor.empty()) return std::numbers::pi;
        return parse_number(factor) * std::numbers::pi;
    }
    return parse_number(v);
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::size_t line_no = 0;
    std::string line;
    std::istringstream in{std::string(text)};

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) continue;

        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + std::string(view) +
                              "'");
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": empty key or value");
        }

        try {
            if (key == "preset") {
                const std::string v(value);
                if (v == "p-si" || v == "p-Si" || v == "p-silicon") {
                    cfg.coeffs = PiezoCoefficients::p_type_silicon();
                } else {
                    throw ConfigError("unknown preset '" + v + "'");
                }
            } else if (key == "pi_l") {
                cfg.coeffs.pi_l = parse_number(value);
            } else if (key == "pi_t") {
                cfg.coeffs.pi_t = parse_number(value);
            } else if (key == "h") {
                cfg.h = parse_number(value);
            } else if (key == "alpha") {
                cfg.alpha = parse_angle(value);
            } else if (key == "v_ex") {
                cfg.v_ex = parse_number(value);
            } else if (key == "r0") {
                cfg.r0 = parse_number(value);
            } else if (key == "s_r") {
                cfg.s_r = parse_number(value);
            } else if (key == "delta") {
                cfg.delta = parse_number(value);
            } else if (key == "mode") {
                if (trim(value) == "all") {
                    cfg.mode.reset();
                } else {
                    cfg.mode = parse_mode(value);
                }
            } else if (key == "configs") {
                cfg.configs = parse_config_set(value);
            } else if (key == "magnitude") {
                cfg.magnitude_g = parse_number(value);
            } else if (key == "theta_points") {
                cfg.theta_points = static_cast<std::size_t>(parse_unsigned(value));
            } else if (key == "alpha_points") {
                cfg.alpha_points = static_cast<std::size_t>(parse_unsigned(value));
            } else if (key == "alpha_min") {
                cfg.alpha_min = parse_angle(value);
            } else if (key == "alpha_max") {
                cfg.alpha_max = parse_angle(value);
            } else if (key == "samples") {
                cfg.samples = static_cast<std::size_t>(parse_unsigned(value));
            } else if (key == "seed") {
                cfg.seed = parse_unsigned(value);
            } else if (key == "out") {
                cfg.out_path = std::string(value);
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& e) {
            const std::string what = e.what();
            if (what.rfind("config line", 0) == 0) throw;
            throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("config line " + std::to_string(line_no) + ": " +
                              e.what());
        }
    }

    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace pzbridge
