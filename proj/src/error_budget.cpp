#include "pzbridge/error_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pzbridge/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pzbridge {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

/// Golden-section search for the minimum of f on [lo, hi].
template <class F>
double golden_minimize(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

/// Neumaier-compensated sum over a buffer in index order; the fixed order
/// keeps the reduction independent of how the buffer was filled.
double ordered_sum(const std::vector<double>& values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

ScaleFactor network_scale_factor(const DualBridge& dual,
                                 const PiezoCoefficients& coeffs, double v_ex,
                                 const MechanicalParams& mech) {
    const Mat2 w = numeric_linearize(dual, coeffs, v_ex);
    return nominal_scale_factor(w, nominal_stress_map(mech), config_name(dual.id));
}

ScaleFactor closed_form_scale_factor(ConfigId id, const PiezoCoefficients& coeffs,
                                     double v_ex, const MechanicalParams& mech) {
    const Mat2 w = analytic_sensitivity(id, coeffs, v_ex);
    return nominal_scale_factor(w, nominal_stress_map(mech), config_name(id));
}

}  // namespace

const char* deviation_mode_name(DeviationMode mode) {
    switch (mode) {
        case DeviationMode::IndependentAll: return "independent";
        case DeviationMode::PerProofMass: return "per-proof-mass";
        case DeviationMode::PerOrientation: return "per-orientation";
    }
    return "?";
}

Vec2 PolarAccel::cartesian() const {
    return {magnitude_g * std::cos(theta), magnitude_g * std::sin(theta)};
}

Vec2 nonlinearity_error_analytic(ConfigId id, const MechanicalParams& mech,
                                 const PiezoCoefficients& coeffs,
                                 const PolarAccel& accel) {
    const double pl = coeffs.pi_l;
    const double pt = coeffs.pi_t;
    const double ca = std::cos(mech.alpha);
    const double sa = std::sin(mech.alpha);
    const double cm = std::cos(accel.theta - mech.alpha);
    const double cp = std::cos(accel.theta + mech.alpha);
    const double cm2 = cm * cm;
    const double cp2 = cp * cp;
    const double lead = -0.25 * mech.h * accel.magnitude_g * accel.magnitude_g;

    switch (id) {
        case ConfigId::A:
        case ConfigId::B:
        case ConfigId::D:
            return {lead * (pl + pt) * (cm2 - cp2) / ca,
                    lead * (pl + pt) * (cm2 + cp2) / sa};
        case ConfigId::C:
            return {lead * pl * (cm2 - cp2) / ca,
                    lead * (pl * cm2 + (pl + 2.0 * pt) * cp2) / sa};
    }
    return {};
}

Vec2 nonlinearity_error_numeric(ConfigId id, const MechanicalParams& mech,
                                const PiezoCoefficients& coeffs, double v_ex,
                                const PolarAccel& accel) {
    const DualBridge dual = standard_configuration(id);
    const ScaleFactor t = network_scale_factor(dual, coeffs, v_ex, mech);
    const StressMap h0 = nominal_stress_map(mech);
    const DeviationAssignment none{};
    const Vec2 a = accel.cartesian();

    const auto pipeline_error = [&](const Vec2& accel_vec) {
        const StressPair sigma = stress_from_acceleration(h0, accel_vec);
        const Vec2 v = dual_bridge_outputs(dual, coeffs, sigma, none, v_ex);
        return estimate_acceleration(t, v) - accel_vec;
    };

    // The even part in a isolates the second-order (plus higher even) error.
    return (pipeline_error(a) + pipeline_error(-a)) * 0.5;
}

double max_nonlinearity_over_direction(ConfigId id, const MechanicalParams& mech,
                                       const PiezoCoefficients& coeffs,
                                       double magnitude_g, Exec exec) {
    if (magnitude_g < 0.0) {
        throw std::invalid_argument("acceleration magnitude must be >= 0");
    }
    const auto objective = [&](double theta) {
        return nonlinearity_error_analytic(id, mech, coeffs, {magnitude_g, theta})
            .norm();
    };

    constexpr int n = 720;
    std::vector<double> values(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (int i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = objective(i * (two_pi / n));
    }
    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    const double step = two_pi / n;
    const double theta_star = golden_minimize(
        [&](double th) { return -objective(th); }, (best - 1) * step,
        (best + 1) * step, 1e-10);
    return objective(theta_star);
}

double offset_variance_analytic(ConfigId id, const MechanicalParams& mech,
                                const PiezoCoefficients& coeffs,
                                const DeviationModel& model) {
    if (!(model.delta_rms >= 0.0)) {
        throw std::invalid_argument("deviation rms must be >= 0");
    }
    const double pl = coeffs.pi_l;
    const double pt = coeffs.pi_t;
    const double d2 = model.delta_rms * model.delta_rms;
    const double sin2a = std::sin(2.0 * mech.alpha);
    const double sina = std::sin(mech.alpha);

    switch (model.mode) {
        case DeviationMode::IndependentAll: {
            const double base = mech.h * (pl - pt) * sin2a;
            const double var_a = 2.0 * d2 / (base * base);
            switch (id) {
                case ConfigId::A: return var_a;
                case ConfigId::B:
                case ConfigId::D: return 2.0 * var_a;
                case ConfigId::C: {
                    const double cos2a = std::cos(2.0 * mech.alpha);
                    const double ratio =
                        (3.0 * pl * pl + pt * pt + 2.0 * pl * (pl + pt) * cos2a) /
                        (4.0 * pl * pl);
                    return ratio * 2.0 * var_a;
                }
            }
            return 0.0;
        }
        case DeviationMode::PerProofMass: {
            if (id != ConfigId::C) return 0.0;
            // Direct propagation of the common per-mass deviations through the
            // exact configuration-C offsets.  Both bridges see the same offset
            // (V_ex/2)(d1 - d2) to first order, and <(d1 - d2)^2> = 2 Delta^2.
            const double base = mech.h * pl * sin2a;
            return 2.0 * d2 / (base * base);
        }
        case DeviationMode::PerOrientation: {
            const double base = mech.h * (pl - pt) * sina;
            return 2.0 * d2 / (base * base);
        }
    }
    return 0.0;
}

MonteCarloEstimate offset_variance_monte_carlo(ConfigId id,
                                               const MechanicalParams& mech,
                                               const PiezoCoefficients& coeffs,
                                               double v_ex,
                                               const DeviationModel& model,
                                               std::size_t n_samples,
                                               std::uint64_t seed, Exec exec) {
    if (n_samples < 100) {
        throw std::invalid_argument("Monte Carlo needs at least 100 samples");
    }
    if (!(model.delta_rms >= 0.0)) {
        throw std::invalid_argument("deviation rms must be >= 0");
    }

    const DualBridge dual = standard_configuration(id);
    const ScaleFactor t = network_scale_factor(dual, coeffs, v_ex, mech);
    const std::array<ResistorSpec, 8> resistors = dual.resistors();
    const StressPair zero_stress{};
    const double delta = model.delta_rms;
    const DeviationMode mode = model.mode;

    std::vector<double> sq(n_samples);
    const auto run_sample = [&](std::size_t i) {
        SampleStream stream(seed, i);
        DeviationAssignment dev;
        switch (mode) {
            case DeviationMode::IndependentAll:
                for (double& d : dev.delta) d = delta * stream.gaussian();
                break;
            case DeviationMode::PerProofMass: {
                const double d1 = delta * stream.gaussian();
                const double d2 = delta * stream.gaussian();
                for (const ResistorSpec& r : resistors) {
                    dev.delta[static_cast<std::size_t>(r.deviation_slot)] =
                        r.proof_mass == 1 ? d1 : d2;
                }
                break;
            }
            case DeviationMode::PerOrientation: {
                const double dl = delta * stream.gaussian();
                const double dt = delta * stream.gaussian();
                for (const ResistorSpec& r : resistors) {
                    dev.delta[static_cast<std::size_t>(r.deviation_slot)] =
                        r.orientation == Orientation::Longitudinal ? dl : dt;
                }
                break;
            }
        }
        const Vec2 v0 = dual_bridge_outputs(dual, coeffs, zero_stress, dev, v_ex);
        sq[i] = estimate_acceleration(t, v0).norm2();
    };

    const auto n = static_cast<std::int64_t>(n_samples);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        run_sample(static_cast<std::size_t>(i));
    }
#ifndef _OPENMP
    (void)exec;
#endif

    const double mean = ordered_sum(sq) / static_cast<double>(n_samples);
    std::vector<double> centered_sq(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double c = sq[i] - mean;
        centered_sq[i] = c * c;
    }
    const double var =
        ordered_sum(centered_sq) / static_cast<double>(n_samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(n_samples))};
}

Mat2 noise_psd_matrix(ConfigId id, const MechanicalParams& mech,
                      const PiezoCoefficients& coeffs, const NoiseSpec& spec) {
    if (!(spec.s_r >= 0.0)) {
        throw std::invalid_argument("noise PSD must be >= 0");
    }
    const ScaleFactor t = closed_form_scale_factor(id, coeffs, spec.v_ex, mech);
    return spec.s_r * (t.t0_inverse * t.t0_inverse.transpose());
}

Mat2 normalized_noise_matrix(ConfigId id, const MechanicalParams& mech,
                             const PiezoCoefficients& coeffs, double v_ex) {
    const ScaleFactor t = closed_form_scale_factor(id, coeffs, v_ex, mech);
    return noise_normalization(coeffs, mech.h, v_ex) *
           (t.t0_inverse * t.t0_inverse.transpose());
}

double directional_noise(const Mat2& s_a, double theta) {
    const Vec2 n{std::cos(theta), std::sin(theta)};
    return n.dot(s_a * n);
}

double worst_case_noise(ConfigId id, const MechanicalParams& mech,
                        const PiezoCoefficients& coeffs, const NoiseSpec& spec) {
    return eigenvalues_symmetric(noise_psd_matrix(id, mech, coeffs, spec)).hi;
}

AngleOptimum optimize_sensitivity_angle(ConfigId id, const PiezoCoefficients& coeffs,
                                        const NoiseSpec& spec, double h,
                                        Exec exec) {
    // Normalized worst-case noise; a positive multiple of the absolute
    // objective, hence the same argmin.
    const auto objective = [&](double alpha) {
        return eigenvalues_symmetric(
                   normalized_noise_matrix(id, MechanicalParams(h, alpha), coeffs,
                                           spec.v_ex))
            .hi;
    };

    constexpr int n = 2048;
    const double lo = 2.0 * alpha_guard;
    const double hi = std::numbers::pi / 2.0 - 2.0 * alpha_guard;
    const double step = (hi - lo) / (n - 1);
    std::vector<double> values(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
#endif
    for (int i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = objective(lo + i * step);
    }
#ifndef _OPENMP
    (void)exec;
#endif
    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (values[static_cast<std::size_t>(i)] < values[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    const double bracket_lo = std::max(lo, lo + (best - 1) * step);
    const double bracket_hi = std::min(hi, lo + (best + 1) * step);
    const double alpha_star = golden_minimize(objective, bracket_lo, bracket_hi, 1e-10);
    const double norm_min = objective(alpha_star);
    const double abs_min =
        spec.s_r * norm_min / noise_normalization(coeffs, h, spec.v_ex);
    return {alpha_star, abs_min, norm_min};
}

double noise_normalization(const PiezoCoefficients& coeffs, double h, double v_ex) {
    const double d = h * v_ex * (coeffs.pi_l - coeffs.pi_t);
    return d * d;
}

}  // namespace pzbridge
