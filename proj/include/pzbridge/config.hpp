#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pzbridge/bridge.hpp"
#include "pzbridge/error_budget.hpp"
#include "pzbridge/piezo.hpp"

namespace pzbridge {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Fully validated run parameters.  Defaults: p-type silicon, h = 1 MPa/g,
/// alpha = pi/4, V_ex = 1 V, R0 = 1 kOhm, N = 1e5 samples, seed = 42.
struct RunConfig {
    PiezoCoefficients coeffs = PiezoCoefficients::p_type_silicon();
    double h = 1e6;       // Pa per g
    double alpha;         // rad, set to pi/4 in the constructor
    double v_ex = 1.0;    // V
    double r0 = 1000.0;   // ohm
    double s_r = 1e-16;   // V^2/Hz
    double delta = 0.01;  // rms relative resistor deviation

    /// Deviation mode filter; empty means "all three modes".
    std::optional<DeviationMode> mode;

    std::vector<ConfigId> configs{ConfigId::A, ConfigId::B, ConfigId::C,
                                  ConfigId::D};

    double magnitude_g = 1.0;  // |a| for nonlinearity sweeps

    std::size_t theta_points = 361;
    std::size_t alpha_points = 201;
    double alpha_min;  // 0.05 pi
    double alpha_max;  // 0.45 pi

    std::size_t samples = 100000;
    std::uint64_t seed = 42;

    std::string out_path;  // empty = stdout

    RunConfig();
};

/// Parses an angle given either in radians ("0.7853981") or as a multiple of
/// pi ("0.25pi").
double parse_angle(std::string_view text);

/// Parses `key = value` lines with '#' comments.  Unknown keys, malformed
/// lines and out-of-range values raise ConfigError with the line number.
RunConfig parse_config(std::string_view text);

/// parse_config applied to a file's contents.
RunConfig load_config_file(const std::string& path);

}  // namespace pzbridge
