#pragma once

namespace pzbridge {

/// Piezoresistance coefficients of the sensing material, in 1/Pa.
///
/// pi_l applies to resistors whose current flows along the stress axis,
/// pi_t to resistors perpendicular to it.  A useful sensor needs
/// pi_l != pi_t; the degenerate case is allowed here and surfaces later as
/// a singular scale factor.
struct PiezoCoefficients {
    double pi_l{0.0};
    double pi_t{0.0};

    static constexpr PiezoCoefficients p_type_silicon() {
        return {71.8e-11, -66.3e-11};
    }
};

}  // namespace pzbridge
