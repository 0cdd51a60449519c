#include "pzbridge/bridge.hpp"

#include <stdexcept>

namespace pzbridge {

const char* config_name(ConfigId id) {
    switch (id) {
        case ConfigId::A: return "A";
        case ConfigId::B: return "B";
        case ConfigId::C: return "C";
        case ConfigId::D: return "D";
    }
    return "?";
}

ConfigId config_from_name(const std::string& name) {
    if (name == "A" || name == "a") return ConfigId::A;
    if (name == "B" || name == "b") return ConfigId::B;
    if (name == "C" || name == "c") return ConfigId::C;
    if (name == "D" || name == "d") return ConfigId::D;
    throw std::invalid_argument("unknown bridge configuration '" + name +
                                "' (expected A, B, C or D)");
}

DeviationAssignment DeviationAssignment::checked(
    const std::array<double, slot_count>& values) {
    for (std::size_t i = 0; i < slot_count; ++i) {
        if (!(values[i] > -1.0)) {
            throw std::invalid_argument(
                "relative deviation in slot " + std::to_string(i) +
                " must be > -1, got " + std::to_string(values[i]));
        }
    }
    DeviationAssignment out;
    out.delta = values;
    return out;
}

ResistorSpec::ResistorSpec(int mass, Orientation orient, double r0_ohm, int slot)
    : proof_mass(mass), orientation(orient), r0(r0_ohm), deviation_slot(slot) {
    if (mass != 1 && mass != 2) {
        throw std::invalid_argument("proof mass index must be 1 or 2");
    }
    if (!(r0_ohm > 0.0)) {
        throw std::invalid_argument("nominal resistance must be positive");
    }
    if (slot < 0 || slot >= static_cast<int>(DeviationAssignment::slot_count)) {
        throw std::invalid_argument("deviation slot out of range");
    }
}

std::array<ResistorSpec, 8> DualBridge::resistors() const {
    std::array<ResistorSpec, 8> out{};
    for (const BridgeNetwork& net : bridges) {
        for (const ResistorSpec* r :
             {&net.divider_1.top, &net.divider_1.bottom, &net.divider_2.top,
              &net.divider_2.bottom}) {
            out[static_cast<std::size_t>(r->deviation_slot)] = *r;
        }
    }
    return out;
}

double resistance_of(const ResistorSpec& spec, const PiezoCoefficients& coeffs,
                     const StressPair& stresses,
                     const DeviationAssignment& deviations) {
    const double sigma = spec.proof_mass == 1 ? stresses.sigma_1 : stresses.sigma_2;
    const double pi =
        spec.orientation == Orientation::Longitudinal ? coeffs.pi_l : coeffs.pi_t;
    const double delta = deviations.delta[static_cast<std::size_t>(spec.deviation_slot)];
    return spec.r0 * (1.0 + delta) * (1.0 + pi * sigma);
}

double divider_node_voltage(const Divider& divider, const PiezoCoefficients& coeffs,
                            const StressPair& stresses,
                            const DeviationAssignment& deviations, double v_ex) {
    const double r_top = resistance_of(divider.top, coeffs, stresses, deviations);
    const double r_bottom = resistance_of(divider.bottom, coeffs, stresses, deviations);
    return v_ex * (r_bottom / (r_top + r_bottom));
}

double bridge_output_exact(const BridgeNetwork& net, const PiezoCoefficients& coeffs,
                           const StressPair& stresses,
                           const DeviationAssignment& deviations, double v_ex) {
    const double node1 = divider_node_voltage(net.divider_1, coeffs, stresses,
                                              deviations, v_ex);
    const double node2 = divider_node_voltage(net.divider_2, coeffs, stresses,
                                              deviations, v_ex);
    return node1 - node2;
}

double common_mode_voltage(const BridgeNetwork& net, const PiezoCoefficients& coeffs,
                           const StressPair& stresses,
                           const DeviationAssignment& deviations, double v_ex) {
    const double node1 = divider_node_voltage(net.divider_1, coeffs, stresses,
                                              deviations, v_ex);
    const double node2 = divider_node_voltage(net.divider_2, coeffs, stresses,
                                              deviations, v_ex);
    return 0.5 * (node1 + node2) - 0.5 * v_ex;
}

Vec2 dual_bridge_outputs(const DualBridge& dual, const PiezoCoefficients& coeffs,
                         const StressPair& stresses,
                         const DeviationAssignment& deviations, double v_ex) {
    return {bridge_output_exact(dual.bridges[0], coeffs, stresses, deviations, v_ex),
            bridge_output_exact(dual.bridges[1], coeffs, stresses, deviations, v_ex)};
}

namespace {

// Deviation-slot layout.  Configurations A, B and D use two longitudinal and
// two transversal resistors per proof mass; configuration C replaces the two
// transversal resistors of proof mass 1 with longitudinal ones.
//
//   A/B/D slots:  0,1 = l1a,l1b   2,3 = t1a,t1b   4,5 = l2a,l2b   6,7 = t2a,t2b
//   C slots:      0..3 = l1a..l1d               4,5 = l2a,l2b   6,7 = t2a,t2b

constexpr int kL1a = 0, kL1b = 1, kT1a = 2, kT1b = 3;
constexpr int kL1c = 2, kL1d = 3;  // configuration C only
constexpr int kL2a = 4, kL2b = 5, kT2a = 6, kT2b = 7;

ResistorSpec longitudinal(int mass, double r0, int slot) {
    return {mass, Orientation::Longitudinal, r0, slot};
}

ResistorSpec transversal(int mass, double r0, int slot) {
    return {mass, Orientation::Transversal, r0, slot};
}

}  // namespace

DualBridge standard_configuration(ConfigId id, double r0) {
    if (!(r0 > 0.0)) {
        throw std::invalid_argument("nominal resistance must be positive");
    }
    const auto l1a = longitudinal(1, r0, kL1a);
    const auto l1b = longitudinal(1, r0, kL1b);
    const auto l2a = longitudinal(2, r0, kL2a);
    const auto l2b = longitudinal(2, r0, kL2b);
    const auto t2a = transversal(2, r0, kT2a);
    const auto t2b = transversal(2, r0, kT2b);

    DualBridge dual;
    dual.id = id;
    switch (id) {
        case ConfigId::A: {
            const auto t1a = transversal(1, r0, kT1a);
            const auto t1b = transversal(1, r0, kT1b);
            dual.bridges[0] = {{t1a, l1a}, {l1b, t1b}};
            dual.bridges[1] = {{t2a, l2a}, {l2b, t2b}};
            break;
        }
        case ConfigId::B: {
            const auto t1a = transversal(1, r0, kT1a);
            const auto t1b = transversal(1, r0, kT1b);
            // Bridge 1 senses the stress difference, bridge 2 the sum.
            dual.bridges[0] = {{l2a, l1a}, {t2a, t1a}};
            dual.bridges[1] = {{t2b, l1b}, {l2b, t1b}};
            break;
        }
        case ConfigId::C: {
            const auto l1c = longitudinal(1, r0, kL1c);
            const auto l1d = longitudinal(1, r0, kL1d);
            dual.bridges[0] = {{l2a, l1a}, {l1b, l2b}};
            dual.bridges[1] = {{t2a, l1c}, {l1d, t2b}};
            break;
        }
        case ConfigId::D: {
            const auto t1a = transversal(1, r0, kT1a);
            const auto t1b = transversal(1, r0, kT1b);
            // Each divider stays on one proof mass; the bridges mix masses.
            dual.bridges[0] = {{t1a, l1a}, {t2a, l2a}};
            dual.bridges[1] = {{t1b, l1b}, {l2b, t2b}};
            break;
        }
    }
    return dual;
}

}  // namespace pzbridge
