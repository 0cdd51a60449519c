// Command-line front end: error-budget analysis of the four Wheatstone-bridge
// configurations of a two-proof-mass piezoresistive two-axis accelerometer.

#include <cstdio>
#include <exception>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "pzbridge/config.hpp"
#include "pzbridge/csv.hpp"
#include "pzbridge/report.hpp"

namespace {

using namespace pzbridge;

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t samples = 0;
    bool samples_set = false;
    bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "parameter file (key = value lines)");
    cmd->add_option("--out", opts.out_path, "output path (default: stdout)");
    cmd->add_option("--seed", opts.seed, "Monte Carlo seed")
        ->each([&](const std::string&) { opts.seed_set = true; });
    cmd->add_option("--samples", opts.samples, "Monte Carlo sample count")
        ->each([&](const std::string&) { opts.samples_set = true; });
    cmd->add_flag("--serial", opts.serial, "run kernels on the serial reference path");
}

RunConfig make_config(const CommonOpts& opts) {
    RunConfig cfg = opts.config_path.empty() ? RunConfig{}
                                             : load_config_file(opts.config_path);
    if (opts.seed_set) cfg.seed = opts.seed;
    if (opts.samples_set) {
        if (opts.samples < 100) throw ConfigError("samples must be >= 100");
        cfg.samples = opts.samples;
    }
    if (!opts.out_path.empty()) cfg.out_path = opts.out_path;
    return cfg;
}

Exec exec_of(const CommonOpts& opts) {
    return opts.serial ? Exec::Serial : Exec::Parallel;
}

void cmd_linearize(const RunConfig& cfg) {
    std::string out;
    char buf[256];
    out += "sensitivity matrices W (V/Pa) and scale factors T0 (V/g)\n";
    for (ConfigId id : cfg.configs) {
        const DualBridge dual = standard_configuration(id, cfg.r0);
        const Mat2 wn = numeric_linearize(dual, cfg.coeffs, cfg.v_ex);
        const Mat2 wa = analytic_sensitivity(id, cfg.coeffs, cfg.v_ex);
        const Mat2 diff = wn - wa;
        const double rel = diff.max_abs() / wa.max_abs();
        const ScaleFactor t = nominal_scale_factor(
            wa, nominal_stress_map(MechanicalParams(cfg.h, cfg.alpha)),
            config_name(id));
        std::snprintf(buf, sizeof(buf),
                      "config %s\n"
                      "  W numeric   [% .6e % .6e; % .6e % .6e]\n"
                      "  W analytic  [% .6e % .6e; % .6e % .6e]\n"
                      "  max |diff| / max |W| = %.3e\n"
                      "  T0          [% .6e % .6e; % .6e % .6e]  det = %.6e\n",
                      config_name(id), wn.m00, wn.m01, wn.m10, wn.m11, wa.m00,
                      wa.m01, wa.m10, wa.m11, rel, t.t0.m00, t.t0.m01, t.t0.m10,
                      t.t0.m11, t.det);
        out += buf;
    }
    write_output(cfg.out_path, out);
}

void cmd_nonlinearity(const RunConfig& cfg, Exec exec) {
    SweepTable table;
    table.label_header = "config";
    table.columns = {"max_nonlin_g", "analytic_at_peak_g", "numeric_at_peak_g"};
    const MechanicalParams mech(cfg.h, cfg.alpha);
    for (ConfigId id : cfg.configs) {
        const double max_nl = max_nonlinearity_over_direction(
            id, mech, cfg.coeffs, cfg.magnitude_g, exec);
        // Locate the grid peak again for the side-by-side oracle column.
        double best_theta = 0.0;
        double best = -1.0;
        for (int i = 0; i < 720; ++i) {
            const double theta = i * (2.0 * std::numbers::pi / 720);
            const double v = nonlinearity_error_analytic(id, mech, cfg.coeffs,
                                                         {cfg.magnitude_g, theta})
                                 .norm();
            if (v > best) {
                best = v;
                best_theta = theta;
            }
        }
        const double ana =
            nonlinearity_error_analytic(id, mech, cfg.coeffs,
                                        {cfg.magnitude_g, best_theta})
                .norm();
        const double num =
            nonlinearity_error_numeric(id, mech, cfg.coeffs, cfg.v_ex,
                                       {cfg.magnitude_g, best_theta})
                .norm();
        table.row_labels.emplace_back(config_name(id));
        table.rows.push_back({max_nl, ana, num});
    }
    write_output(cfg.out_path, to_csv(table));
}

void cmd_offset(const RunConfig& cfg, Exec exec) {
    const MechanicalParams mech(cfg.h, cfg.alpha);
    const std::array<DeviationMode, 3> modes{DeviationMode::IndependentAll,
                                             DeviationMode::PerProofMass,
                                             DeviationMode::PerOrientation};
    SweepTable out;
    out.label_header = "config_mode";
    out.columns = {"analytic_g2", "mc_g2", "mc_se_g2"};
    for (ConfigId id : cfg.configs) {
        for (DeviationMode mode : modes) {
            if (cfg.mode && *cfg.mode != mode) continue;
            const DeviationModel model{mode, cfg.delta};
            const double closed =
                offset_variance_analytic(id, mech, cfg.coeffs, model);
            const MonteCarloEstimate est = offset_variance_monte_carlo(
                id, mech, cfg.coeffs, cfg.v_ex, model, cfg.samples, cfg.seed,
                exec);
            out.row_labels.push_back(std::string(config_name(id)) + ":" +
                                     deviation_mode_name(mode));
            out.rows.push_back({closed, est.mean, est.std_error});
        }
    }
    write_output(cfg.out_path, to_csv(out));
}

void cmd_noise(const RunConfig& cfg) {
    SweepTable out;
    out.label_header = "config";
    out.columns = {"s11_norm", "s12_norm", "s22_norm", "min_dir_norm",
                   "max_dir_norm", "worst_abs_g2hz"};
    const MechanicalParams mech(cfg.h, cfg.alpha);
    const NoiseSpec spec{cfg.s_r, cfg.v_ex};
    for (ConfigId id : cfg.configs) {
        const Mat2 sn = normalized_noise_matrix(id, mech, cfg.coeffs, cfg.v_ex);
        const EigenPair ev = eigenvalues_symmetric(sn);
        out.row_labels.emplace_back(config_name(id));
        out.rows.push_back({sn.m00, sn.m01, sn.m11, ev.lo, ev.hi,
                            worst_case_noise(id, mech, cfg.coeffs, spec)});
    }
    write_output(cfg.out_path, to_csv(out));
}

void cmd_optimize_alpha(const RunConfig& cfg, Exec exec) {
    SweepTable out;
    out.label_header = "config";
    out.columns = {"alpha_star_rad", "alpha_star_over_pi", "s0_norm", "s0_g2hz"};
    const NoiseSpec spec{cfg.s_r, cfg.v_ex};
    for (ConfigId id : cfg.configs) {
        const AngleOptimum opt =
            optimize_sensitivity_angle(id, cfg.coeffs, spec, cfg.h, exec);
        out.row_labels.emplace_back(config_name(id));
        out.rows.push_back({opt.alpha_star, opt.alpha_star / std::numbers::pi,
                            opt.worst_noise_norm, opt.worst_noise});
    }
    write_output(cfg.out_path, to_csv(out));
}

void cmd_figure(int figure, const RunConfig& cfg, Exec exec) {
    write_output(cfg.out_path, to_csv(reproduce_figure(figure, cfg, exec)));
}

void cmd_report(const RunConfig& cfg, Exec exec) {
    const auto rows = run_report(cfg, exec);
    if (cfg.out_path.empty()) {
        std::cout << report_human_table(rows) << '\n'
                  << to_csv(report_to_table(rows));
    } else {
        write_output(cfg.out_path, to_csv(report_to_table(rows)));
        std::cout << report_human_table(rows);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wheatstone-bridge configuration analysis for two-proof-mass "
                 "piezoresistive two-axis accelerometers"};
    app.require_subcommand(1);

    CommonOpts opts;
    int figure_no = 0;

    CLI::App* linearize = app.add_subcommand(
        "linearize", "sensitivity matrices from the exact networks");
    CLI::App* nonlinearity =
        app.add_subcommand("nonlinearity", "second-order error budget");
    CLI::App* offset =
        app.add_subcommand("offset", "offset statistics, closed form and Monte Carlo");
    CLI::App* noise = app.add_subcommand("noise", "noise PSD of the estimated "
                                                  "acceleration");
    CLI::App* optimize =
        app.add_subcommand("optimize-alpha", "minimize worst-case noise over the "
                                             "sensitivity angle");
    CLI::App* figure = app.add_subcommand("figure", "emit sweep data (3..7) as CSV");
    figure->add_option("number", figure_no, "sweep number (3..7)")->required();
    CLI::App* report =
        app.add_subcommand("report", "full error budget for all configurations");

    for (CLI::App* cmd :
         {linearize, nonlinearity, offset, noise, optimize, figure, report}) {
        add_common(cmd, opts);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        const RunConfig cfg = make_config(opts);
        const Exec exec = exec_of(opts);
        if (linearize->parsed()) cmd_linearize(cfg);
        if (nonlinearity->parsed()) cmd_nonlinearity(cfg, exec);
        if (offset->parsed()) cmd_offset(cfg, exec);
        if (noise->parsed()) cmd_noise(cfg);
        if (optimize->parsed()) cmd_optimize_alpha(cfg, exec);
        if (figure->parsed()) cmd_figure(figure_no, cfg, exec);
        if (report->parsed()) cmd_report(cfg, exec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return exit_ok;
}
