#include "pzbridge/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "pzbridge/sweep.hpp"

namespace pzbridge {

namespace {

constexpr std::array<DeviationMode, 3> all_modes{DeviationMode::IndependentAll,
                                                 DeviationMode::PerProofMass,
                                                 DeviationMode::PerOrientation};

SweepTable theta_nonlinearity_sweep(const RunConfig& cfg, Exec exec) {
    SweepTable table;
    table.columns = {"theta_rad", "nonlin_A_g", "nonlin_B_g", "nonlin_C_g",
                     "nonlin_D_g"};
    const MechanicalParams mech(cfg.h, cfg.alpha);
    const auto grid = linspace(0.0, 2.0 * std::numbers::pi, cfg.theta_points);
    std::array<std::vector<double>, 4> cols;
    for (std::size_t k = 0; k < all_configs.size(); ++k) {
        const ConfigId id = all_configs[k];
        cols[k] = map_grid(
            grid,
            [&](double theta) {
                return nonlinearity_error_analytic(id, mech, cfg.coeffs,
                                                   {cfg.magnitude_g, theta})
                    .norm();
            },
            exec);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table.rows.push_back(
            {grid[i], cols[0][i], cols[1][i], cols[2][i], cols[3][i]});
    }
    return table;
}

SweepTable alpha_nonlinearity_sweep(const RunConfig& cfg, Exec exec) {
    SweepTable table;
    table.columns = {"alpha_rad", "max_nonlin_A_g", "max_nonlin_B_g",
                     "max_nonlin_C_g", "max_nonlin_D_g"};
    const auto grid = linspace(cfg.alpha_min, cfg.alpha_max, cfg.alpha_points);
    std::array<std::vector<double>, 4> cols;
    for (std::size_t k = 0; k < all_configs.size(); ++k) {
        const ConfigId id = all_configs[k];
        cols[k] = map_grid(
            grid,
            [&](double alpha) {
                return max_nonlinearity_over_direction(
                    id, MechanicalParams(cfg.h, alpha), cfg.coeffs,
                    cfg.magnitude_g);
            },
            exec);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table.rows.push_back(
            {grid[i], cols[0][i], cols[1][i], cols[2][i], cols[3][i]});
    }
    return table;
}

SweepTable theta_noise_sweep(const RunConfig& cfg, double alpha, Exec exec) {
    SweepTable table;
    table.columns = {"theta_rad", "noise_A", "noise_B", "noise_C", "noise_D"};
    const MechanicalParams mech(cfg.h, alpha);
    const auto grid = linspace(0.0, 2.0 * std::numbers::pi, cfg.theta_points);
    std::array<Mat2, 4> s_norm;
    for (std::size_t k = 0; k < all_configs.size(); ++k) {
        s_norm[k] =
            normalized_noise_matrix(all_configs[k], mech, cfg.coeffs, cfg.v_ex);
    }
    std::array<std::vector<double>, 4> cols;
    for (std::size_t k = 0; k < all_configs.size(); ++k) {
        cols[k] = map_grid(
            grid, [&](double theta) { return directional_noise(s_norm[k], theta); },
            exec);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table.rows.push_back(
            {grid[i], cols[0][i], cols[1][i], cols[2][i], cols[3][i]});
    }
    return table;
}

SweepTable alpha_noise_sweep(const RunConfig& cfg, Exec exec) {
    SweepTable table;
    table.columns = {"alpha_rad", "max_noise_A", "max_noise_B", "max_noise_C",
                     "max_noise_D"};
    const auto grid = linspace(cfg.alpha_min, cfg.alpha_max, cfg.alpha_points);
    std::array<std::vector<double>, 4> cols;
    for (std::size_t k = 0; k < all_configs.size(); ++k) {
        const ConfigId id = all_configs[k];
        cols[k] = map_grid(
            grid,
            [&](double alpha) {
                return eigenvalues_symmetric(
                           normalized_noise_matrix(
                               id, MechanicalParams(cfg.h, alpha), cfg.coeffs,
                               cfg.v_ex))
                    .hi;
            },
            exec);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        table.rows.push_back(
            {grid[i], cols[0][i], cols[1][i], cols[2][i], cols[3][i]});
    }
    return table;
}

}  // namespace

SweepTable reproduce_figure(int figure, const RunConfig& cfg, Exec exec) {
    switch (figure) {
        case 3: return theta_nonlinearity_sweep(cfg, exec);
        case 4: return alpha_nonlinearity_sweep(cfg, exec);
        case 5: return theta_noise_sweep(cfg, cfg.alpha, exec);
        case 6: return theta_noise_sweep(cfg, 0.4 * std::numbers::pi, exec);
        case 7: return alpha_noise_sweep(cfg, exec);
        default:
            throw std::invalid_argument("figure number must be 3..7, got " +
                                        std::to_string(figure));
    }
}

std::vector<ErrorBudgetRow> run_report(const RunConfig& cfg, Exec exec) {
    const MechanicalParams mech(cfg.h, cfg.alpha);
    const NoiseSpec noise{cfg.s_r, cfg.v_ex};

    std::vector<ErrorBudgetRow> rows;
    for (ConfigId id : cfg.configs) {
        ErrorBudgetRow row;
        row.config = id;
        row.max_nonlinearity_g = max_nonlinearity_over_direction(
            id, mech, cfg.coeffs, cfg.magnitude_g, exec);
        for (std::size_t m = 0; m < all_modes.size(); ++m) {
            const DeviationModel model{all_modes[m], cfg.delta};
            row.offsets[m].analytic =
                offset_variance_analytic(id, mech, cfg.coeffs, model);
            const MonteCarloEstimate est = offset_variance_monte_carlo(
                id, mech, cfg.coeffs, cfg.v_ex, model, cfg.samples, cfg.seed, exec);
            row.offsets[m].mc = est.mean;
            row.offsets[m].mc_stderr = est.std_error;
        }
        row.worst_noise_abs = worst_case_noise(id, mech, cfg.coeffs, noise);
        row.worst_noise_norm =
            eigenvalues_symmetric(
                normalized_noise_matrix(id, mech, cfg.coeffs, cfg.v_ex))
                .hi;
        const AngleOptimum opt =
            optimize_sensitivity_angle(id, cfg.coeffs, noise, cfg.h, exec);
        row.opt_alpha_rad = opt.alpha_star;
        row.opt_noise_norm = opt.worst_noise_norm;
        rows.push_back(row);
    }
    return rows;
}

SweepTable report_to_table(const std::vector<ErrorBudgetRow>& rows) {
    SweepTable table;
    table.label_header = "config";
    table.columns = {"max_nonlin_g",
                     "offset_independent_g2",
                     "offset_independent_mc_g2",
                     "offset_independent_mc_se_g2",
                     "offset_per_proof_mass_g2",
                     "offset_per_proof_mass_mc_g2",
                     "offset_per_proof_mass_mc_se_g2",
                     "offset_per_orientation_g2",
                     "offset_per_orientation_mc_g2",
                     "offset_per_orientation_mc_se_g2",
                     "worst_noise_g2hz",
                     "worst_noise_norm",
                     "opt_alpha_rad",
                     "opt_noise_norm"};
    for (const ErrorBudgetRow& row : rows) {
        table.row_labels.emplace_back(config_name(row.config));
        table.rows.push_back({row.max_nonlinearity_g,
                              row.offsets[0].analytic, row.offsets[0].mc,
                              row.offsets[0].mc_stderr,
                              row.offsets[1].analytic, row.offsets[1].mc,
                              row.offsets[1].mc_stderr,
                              row.offsets[2].analytic, row.offsets[2].mc,
                              row.offsets[2].mc_stderr,
                              row.worst_noise_abs, row.worst_noise_norm,
                              row.opt_alpha_rad, row.opt_noise_norm});
    }
    return table;
}

std::string report_human_table(const std::vector<ErrorBudgetRow>& rows) {
    std::string out;
    char line[256];
    out += "config  max|da| (g)   offset <|da|^2> (g^2)"
           "                                    worst noise      optimum\n";
    out += "                      independent        per-mass           "
           "per-orient         (normalized)     alpha*   S0(norm)\n";
    for (const ErrorBudgetRow& row : rows) {
        std::snprintf(line, sizeof(line),
                      "%-6s  %-12.4g  %-9.4g+-%-7.2g  %-9.4g+-%-7.2g  "
                      "%-9.4g+-%-7.2g  %-15.6g  %-7.4f  %-10.6g\n",
                      config_name(row.config), row.max_nonlinearity_g,
                      row.offsets[0].mc, row.offsets[0].mc_stderr,
                      row.offsets[1].mc, row.offsets[1].mc_stderr,
                      row.offsets[2].mc, row.offsets[2].mc_stderr,
                      row.worst_noise_norm, row.opt_alpha_rad,
                      row.opt_noise_norm);
        out += line;
    }
    out += "(offset rows show the Monte Carlo estimate; the CSV output also "
           "carries the closed forms)\n";
    return out;
}

}  // namespace pzbridge
