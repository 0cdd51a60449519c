#pragma once

#include <array>
#include <string>

#include "pzbridge/bridge.hpp"
#include "pzbridge/mat2.hpp"
#include "pzbridge/mechanics.hpp"

namespace pzbridge {

/// Finite-difference stress step, Pa.  Roughly 1e-7 of full scale in piezo
/// signal, which balances truncation against round-off for silicon-sized
/// coefficients.
inline constexpr double fd_stress_step = 1e4;

class SingularScaleFactorError : public std::runtime_error {
  public:
    explicit SingularScaleFactorError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Nominal scale factor T0 = W * H0 together with its cached inverse.
struct ScaleFactor {
    Mat2 t0;
    Mat2 t0_inverse;
    double det{0.0};
};

/// Closed-form first-order sensitivity matrix W (V/Pa) for a standard
/// configuration.  Rows are bridges, columns are the two beam stresses.
Mat2 analytic_sensitivity(ConfigId id, const PiezoCoefficients& coeffs, double v_ex);

/// W recovered from the exact networks by central differences about zero
/// stress.
Mat2 numeric_linearize(const DualBridge& dual, const PiezoCoefficients& coeffs,
                       double v_ex);

/// T0 = W * H0.  Throws SingularScaleFactorError when |det| falls below the
/// scale-free threshold 1e-18 * ||T0||_F^2; `label` names the offending
/// configuration in the message.
ScaleFactor nominal_scale_factor(const Mat2& w, const StressMap& h0,
                                 const std::string& label = {});

/// Acceleration estimate T0^-1 * v.
Vec2 estimate_acceleration(const ScaleFactor& t, const Vec2& bridge_volts);

/// Symmetric second-order response coefficients: per bridge k,
/// v_k = (W sigma)_k + sigma^T Q_k sigma + O(sigma^3).
struct QuadraticResponse {
    std::array<Mat2, 2> q;
};

/// Q_k from 3-point (diagonal) and 4-point (cross) central stencils at zero
/// stress.
QuadraticResponse quadratic_response_fit(const DualBridge& dual,
                                         const PiezoCoefficients& coeffs,
                                         double v_ex);

}  // namespace pzbridge
