#include "pzbridge/mechanics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pzbridge {

MechanicalParams::MechanicalParams(double h_pa_per_g, double alpha_rad)
    : h(h_pa_per_g), alpha(alpha_rad) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("stress gain h must be positive and finite");
    }
    const double hi = std::numbers::pi / 2.0 - alpha_guard;
    if (!(alpha > alpha_guard) || !(alpha < hi)) {
        throw std::invalid_argument(
            "sensitivity angle " + std::to_string(alpha_rad) +
            " rad is outside the admissible open interval (" +
            std::to_string(alpha_guard) + ", pi/2 - " + std::to_string(alpha_guard) +
            "); the stress map is singular at the endpoints");
    }
}

StressMap nominal_stress_map(const MechanicalParams& params) {
    const double c = std::cos(params.alpha);
    const double s = std::sin(params.alpha);
    return {Mat2{params.h * c, params.h * s, -params.h * c, params.h * s}};
}

StressPair stress_from_acceleration(const StressMap& map, const Vec2& accel_g) {
    const Vec2 sigma = map.h_matrix * accel_g;
    return {sigma.x, sigma.y};
}

Vec2 stress_deviation_error(const StressMap& h0, const StressPerturbation& dh,
                            const Vec2& accel_g) {
    Mat2 h0_inv;
    try {
        h0_inv = inverse(h0.h_matrix);
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("stress map H0 is singular; cannot propagate "
                                  "stress-map deviations");
    }
    return h0_inv * (dh.dh * accel_g);
}

}  // namespace pzbridge
