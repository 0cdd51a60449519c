#include "pzbridge/linearize.hpp"

namespace pzbridge {

Mat2 analytic_sensitivity(ConfigId id, const PiezoCoefficients& coeffs, double v_ex) {
    const double pl = coeffs.pi_l;
    const double pt = coeffs.pi_t;
    switch (id) {
        case ConfigId::A: {
            const double g = 0.5 * v_ex * (pl - pt);
            return {g, 0.0, 0.0, g};
        }
        case ConfigId::B:
        case ConfigId::D: {
            const double g = 0.25 * v_ex * (pl - pt);
            return {g, -g, g, g};
        }
        case ConfigId::C: {
            const double half = 0.5 * v_ex;
            return {half * pl, -half * pl, half * pl, -half * pt};
        }
    }
    return {};
}

Mat2 numeric_linearize(const DualBridge& dual, const PiezoCoefficients& coeffs,
                       double v_ex) {
    const DeviationAssignment none{};
    const double d = fd_stress_step;
    Mat2 w;
    for (int j = 0; j < 2; ++j) {
        StressPair plus{};
        StressPair minus{};
        (j == 0 ? plus.sigma_1 : plus.sigma_2) = d;
        (j == 0 ? minus.sigma_1 : minus.sigma_2) = -d;
        const Vec2 vp = dual_bridge_outputs(dual, coeffs, plus, none, v_ex);
        const Vec2 vm = dual_bridge_outputs(dual, coeffs, minus, none, v_ex);
        const Vec2 col = (vp - vm) / (2.0 * d);
        if (j == 0) {
            w.m00 = col.x;
            w.m10 = col.y;
        } else {
            w.m01 = col.x;
            w.m11 = col.y;
        }
    }
    return w;
}

ScaleFactor nominal_scale_factor(const Mat2& w, const StressMap& h0,
                                 const std::string& label) {
    ScaleFactor out;
    out.t0 = w * h0.h_matrix;
    out.det = out.t0.det();
    const double scale = out.t0.frobenius2();
    if (!(std::fabs(out.det) >= 1e-18 * scale) || scale == 0.0) {
        const std::string who = label.empty() ? "scale factor"
                                              : "configuration " + label +
                                                    " scale factor";
        throw SingularScaleFactorError(
            who + " T0 is singular (det = " + std::to_string(out.det) +
            ", ||T0||_F^2 = " + std::to_string(scale) + ")");
    }
    const double inv_det = 1.0 / out.det;
    out.t0_inverse = {out.t0.m11 * inv_det, -out.t0.m01 * inv_det,
                      -out.t0.m10 * inv_det, out.t0.m00 * inv_det};
    return out;
}

Vec2 estimate_acceleration(const ScaleFactor& t, const Vec2& bridge_volts) {
    return t.t0_inverse * bridge_volts;
}

QuadraticResponse quadratic_response_fit(const DualBridge& dual,
                                         const PiezoCoefficients& coeffs,
                                         double v_ex) {
    const DeviationAssignment none{};
    const double d = fd_stress_step;
    const auto eval = [&](double s1, double s2) {
        return dual_bridge_outputs(dual, coeffs, {s1, s2}, none, v_ex);
    };

    const Vec2 v0 = eval(0.0, 0.0);
    const Vec2 vp1 = eval(d, 0.0), vm1 = eval(-d, 0.0);
    const Vec2 vp2 = eval(0.0, d), vm2 = eval(0.0, -d);
    const Vec2 vpp = eval(d, d), vpm = eval(d, -d);
    const Vec2 vmp = eval(-d, d), vmm = eval(-d, -d);

    // v = W sigma + sigma^T Q sigma, so the pure second partials equal 2*Q_jj
    // and the mixed partial equals 2*Q_12.
    const Vec2 q11 = (vp1 - 2.0 * v0 + vm1) / (2.0 * d * d);
    const Vec2 q22 = (vp2 - 2.0 * v0 + vm2) / (2.0 * d * d);
    const Vec2 q12 = (vpp - vpm - vmp + vmm) / (8.0 * d * d);

    QuadraticResponse out;
    out.q[0] = {q11.x, q12.x, q12.x, q22.x};
    out.q[1] = {q11.y, q12.y, q12.y, q22.y};
    return out;
}

}  // namespace pzbridge
