#pragma once

#include "pzbridge/bridge.hpp"
#include "pzbridge/mat2.hpp"

namespace pzbridge {

/// Guard band keeping the sensitivity angle away from the singular in-plane
/// and out-of-plane orientations.
inline constexpr double alpha_guard = 1e-6;

/// Stress gain h (Pa per g) and sensitivity angle alpha (rad) of the
/// symmetric two-beam structure.
struct MechanicalParams {
    double h;
    double alpha;

    MechanicalParams(double h_pa_per_g, double alpha_rad);
};

/// Linear map from acceleration (g) to beam-base stress (Pa): sigma = H a.
struct StressMap {
    Mat2 h_matrix;
};

/// Additive perturbation of the stress map.
struct StressPerturbation {
    Mat2 dh;
};

/// Nominal stress map h * [[cos a, sin a], [-cos a, sin a]].
StressMap nominal_stress_map(const MechanicalParams& params);

StressPair stress_from_acceleration(const StressMap& map, const Vec2& accel_g);

/// Acceleration error H0^-1 * dH * a caused by a perturbed stress map.
/// Identical for every bridge configuration.
Vec2 stress_deviation_error(const StressMap& h0, const StressPerturbation& dh,
                            const Vec2& accel_g);

}  // namespace pzbridge
