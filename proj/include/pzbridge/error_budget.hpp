#pragma once

#include <cstddef>
#include <cstdint>

#include "pzbridge/bridge.hpp"
#include "pzbridge/exec.hpp"
#include "pzbridge/linearize.hpp"
#include "pzbridge/mat2.hpp"
#include "pzbridge/mechanics.hpp"

namespace pzbridge {

/// Correlation structure of the relative resistor deviations.
enum class DeviationMode {
    IndependentAll,  // every resistor draws its own deviation
    PerProofMass,    // one deviation per proof mass
    PerOrientation,  // one deviation per orientation group
};

const char* deviation_mode_name(DeviationMode mode);

struct DeviationModel {
    DeviationMode mode{DeviationMode::IndependentAll};
    double delta_rms{0.0};  // standard deviation of the relative deviation
};

/// Per-resistor noise PSD at the evaluation frequency (V^2/Hz) plus the
/// excitation voltage the bridges run at.
struct NoiseSpec {
    double s_r{0.0};
    double v_ex{1.0};
};

/// Acceleration in polar form: a = magnitude * (cos theta, sin theta), in g.
struct PolarAccel {
    double magnitude_g{1.0};
    double theta{0.0};

    Vec2 cartesian() const;
};

/// Closed-form second-order error in the estimated acceleration (g).
Vec2 nonlinearity_error_analytic(ConfigId id, const MechanicalParams& mech,
                                 const PiezoCoefficients& coeffs,
                                 const PolarAccel& accel);

/// Exact-network oracle for the same quantity: evaluates the full pipeline at
/// +/-a and keeps the even part, which isolates the quadratic error.
Vec2 nonlinearity_error_numeric(ConfigId id, const MechanicalParams& mech,
                                const PiezoCoefficients& coeffs, double v_ex,
                                const PolarAccel& accel);

/// max over theta in [0, 2pi) of |nonlinearity_error_analytic|, by dense grid
/// plus golden-section refinement.
double max_nonlinearity_over_direction(ConfigId id, const MechanicalParams& mech,
                                       const PiezoCoefficients& coeffs,
                                       double magnitude_g, Exec exec = Exec::Serial);

/// Closed-form expected squared offset error <|da|^2> in g^2.
double offset_variance_analytic(ConfigId id, const MechanicalParams& mech,
                                const PiezoCoefficients& coeffs,
                                const DeviationModel& model);

struct MonteCarloEstimate {
    double mean{0.0};
    double std_error{0.0};
};

/// Sampled <|da|^2>: draws deviation assignments per the correlation mode,
/// evaluates the exact networks at zero stress and maps the offsets through
/// T0^-1.  Deterministic for a fixed seed; sample i always draws from
/// substream (seed, i), so the result is independent of Exec and of how
/// worker threads partition the index range.
MonteCarloEstimate offset_variance_monte_carlo(ConfigId id,
                                               const MechanicalParams& mech,
                                               const PiezoCoefficients& coeffs,
                                               double v_ex,
                                               const DeviationModel& model,
                                               std::size_t n_samples,
                                               std::uint64_t seed,
                                               Exec exec = Exec::Parallel);

/// Noise PSD of the estimated acceleration: S_a = S_R * T0^-1 * T0^-T,
/// in g^2/Hz.  Symmetric positive semidefinite.
Mat2 noise_psd_matrix(ConfigId id, const MechanicalParams& mech,
                      const PiezoCoefficients& coeffs, const NoiseSpec& spec);

/// Dimensionless counterpart [h V_ex (pi_l - pi_t)]^2 * T0^-1 * T0^-T; equals
/// noise_psd_matrix / (S_R / [h V_ex (pi_l - pi_t)]^2) and stays finite at
/// S_R = 0.
Mat2 normalized_noise_matrix(ConfigId id, const MechanicalParams& mech,
                             const PiezoCoefficients& coeffs, double v_ex);

/// PSD of the noise in direction theta: n^T S_a n.
double directional_noise(const Mat2& s_a, double theta);

/// max over theta of directional_noise = largest eigenvalue of S_a.
double worst_case_noise(ConfigId id, const MechanicalParams& mech,
                        const PiezoCoefficients& coeffs, const NoiseSpec& spec);

struct AngleOptimum {
    double alpha_star{0.0};
    double worst_noise{0.0};       // worst_case_noise at alpha_star, g^2/Hz
    double worst_noise_norm{0.0};  // the same in units of S_R / [h V_ex (pi_l - pi_t)]^2
};

/// Minimizes worst_case_noise over the admissible sensitivity angles by a
/// dense grid plus golden-section refinement.  The search runs on the
/// normalized objective, which is independent of S_R, h and V_ex, so the
/// minimizer stays well defined even at S_R = 0.
AngleOptimum optimize_sensitivity_angle(ConfigId id, const PiezoCoefficients& coeffs,
                                        const NoiseSpec& spec, double h,
                                        Exec exec = Exec::Serial);

/// Normalization constant [h V_ex (pi_l - pi_t)]^2; noise PSDs divided by
/// S_R / this value are dimensionless.
double noise_normalization(const PiezoCoefficients& coeffs, double h, double v_ex);

}  // namespace pzbridge
