#pragma once

#include <array>
#include <string>
#include <vector>

#include "pzbridge/config.hpp"
#include "pzbridge/csv.hpp"
#include "pzbridge/error_budget.hpp"
#include "pzbridge/exec.hpp"

namespace pzbridge {

/// Sweep data behind one of the reference plots:
///   3 - |da| vs theta (nonlinearity, g) per configuration
///   4 - max-over-theta |da| vs alpha (g) per configuration
///   5 - normalized directional noise vs theta at the configured alpha
///   6 - same sweep evaluated at alpha = 0.4 pi
///   7 - normalized worst-case noise vs alpha per configuration
/// Noise columns are in units of S_R / [h V_ex (pi_l - pi_t)]^2.
SweepTable reproduce_figure(int figure, const RunConfig& cfg,
                            Exec exec = Exec::Parallel);

struct OffsetChannel {
    double analytic{0.0};
    double mc{0.0};
    double mc_stderr{0.0};
};

/// Full four-channel error budget of one configuration.
struct ErrorBudgetRow {
    ConfigId config{ConfigId::A};
    double max_nonlinearity_g{0.0};
    std::array<OffsetChannel, 3> offsets{};  // indexed by DeviationMode
    double worst_noise_abs{0.0};             // g^2/Hz
    double worst_noise_norm{0.0};
    double opt_alpha_rad{0.0};
    double opt_noise_norm{0.0};
};

std::vector<ErrorBudgetRow> run_report(const RunConfig& cfg,
                                       Exec exec = Exec::Parallel);

/// CSV form of the budget (one row per configuration).
SweepTable report_to_table(const std::vector<ErrorBudgetRow>& rows);

/// Fixed-width text rendering for terminals.
std::string report_human_table(const std::vector<ErrorBudgetRow>& rows);

}  // namespace pzbridge
