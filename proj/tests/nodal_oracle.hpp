#pragma once

// Test-only oracle: a general MNA solve of a bridge network.  Builds the full
// conductance system for the three circuit nodes (excitation, two divider
// taps) plus the source branch current and solves it by Gaussian elimination
// with partial pivoting.  Shares no code with the divider closed form it
// checks.

#include <array>
#include <cmath>
#include <stdexcept>

#include "pzbridge/bridge.hpp"

namespace pzbridge::testing {

inline double mna_bridge_output(const BridgeNetwork& net,
                                const PiezoCoefficients& coeffs,
                                const StressPair& stresses,
                                const DeviationAssignment& deviations,
                                double v_ex) {
    // Unknowns: x0 = V(excitation node), x1 = V(tap 1), x2 = V(tap 2),
    // x3 = source branch current.  Ground is eliminated.
    constexpr int n = 4;
    std::array<std::array<double, n + 1>, n> m{};

    const auto stamp_resistor = [&](int node_a, int node_b, double r) {
        const double g = 1.0 / r;
        if (node_a >= 0) m[node_a][node_a] += g;
        if (node_b >= 0) m[node_b][node_b] += g;
        if (node_a >= 0 && node_b >= 0) {
            m[node_a][node_b] -= g;
            m[node_b][node_a] -= g;
        }
    };

    const double r_t1 = resistance_of(net.divider_1.top, coeffs, stresses, deviations);
    const double r_b1 = resistance_of(net.divider_1.bottom, coeffs, stresses, deviations);
    const double r_t2 = resistance_of(net.divider_2.top, coeffs, stresses, deviations);
    const double r_b2 = resistance_of(net.divider_2.bottom, coeffs, stresses, deviations);

    stamp_resistor(0, 1, r_t1);
    stamp_resistor(1, -1, r_b1);
    stamp_resistor(0, 2, r_t2);
    stamp_resistor(2, -1, r_b2);

    // Voltage source between the excitation node and ground.
    m[0][3] += 1.0;
    m[3][0] += 1.0;
    m[3][n] = v_ex;

    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
        }
        if (m[pivot][col] == 0.0) {
            throw std::runtime_error("singular MNA system");
        }
        std::swap(m[col], m[pivot]);
        for (int row = col + 1; row < n; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    std::array<double, n> x{};
    for (int row = n - 1; row >= 0; --row) {
        double acc = m[row][n];
        for (int k = row + 1; k < n; ++k) acc -= m[row][k] * x[k];
        x[row] = acc / m[row][row];
    }
    return x[1] - x[2];
}

}  // namespace pzbridge::testing
