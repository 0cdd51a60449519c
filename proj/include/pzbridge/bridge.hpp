#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "pzbridge/mat2.hpp"
#include "pzbridge/piezo.hpp"

namespace pzbridge {

/// The four standard dual-bridge configurations.
enum class ConfigId { A, B, C, D };

constexpr std::array<ConfigId, 4> all_configs{ConfigId::A, ConfigId::B,
                                              ConfigId::C, ConfigId::D};

const char* config_name(ConfigId id);
ConfigId config_from_name(const std::string& name);  // "A".."D", throws otherwise

enum class Orientation { Longitudinal, Transversal };

/// Principal stress at the base of beam 1 and beam 2, in Pa.
struct StressPair {
    double sigma_1{0.0};
    double sigma_2{0.0};
};

/// Relative resistance deviations, one slot per physical resistor.
/// Every entry must stay above -1 so resistances remain positive.
struct DeviationAssignment {
    static constexpr std::size_t slot_count = 8;
    std::array<double, slot_count> delta{};

    /// Validating factory for externally supplied deviations.
    static DeviationAssignment checked(const std::array<double, slot_count>& values);
};

/// One physical piezoresistor: where it sits, how it is oriented, its
/// zero-stress resistance and which deviation slot perturbs it.
struct ResistorSpec {
    int proof_mass{1};  // 1 or 2
    Orientation orientation{Orientation::Longitudinal};
    double r0{1000.0};      // ohm
    int deviation_slot{0};  // [0, 8)

    ResistorSpec() = default;
    ResistorSpec(int mass, Orientation orient, double r0_ohm, int slot);
};

/// A voltage divider spanning excitation to ground; the output tap sits
/// between `top` (excitation side) and `bottom` (ground side).
struct Divider {
    ResistorSpec top;
    ResistorSpec bottom;
};

/// Full Wheatstone bridge: output = tap(divider_1) - tap(divider_2).
struct BridgeNetwork {
    Divider divider_1;
    Divider divider_2;
};

/// Two bridges covering all eight physical resistors.
struct DualBridge {
    ConfigId id{ConfigId::A};
    std::array<BridgeNetwork, 2> bridges;

    /// The eight resistors in deviation-slot order.
    std::array<ResistorSpec, 8> resistors() const;
};

/// Stressed, deviated resistance: r0 * (1 + delta) * (1 + pi * sigma_mass).
double resistance_of(const ResistorSpec& spec, const PiezoCoefficients& coeffs,
                     const StressPair& stresses, const DeviationAssignment& deviations);

/// Tap potential of one divider under excitation v_ex.
double divider_node_voltage(const Divider& divider, const PiezoCoefficients& coeffs,
                            const StressPair& stresses,
                            const DeviationAssignment& deviations, double v_ex);

/// Exact bridge output voltage; no series truncation anywhere.
double bridge_output_exact(const BridgeNetwork& net, const PiezoCoefficients& coeffs,
                           const StressPair& stresses,
                           const DeviationAssignment& deviations, double v_ex);

/// Mean tap potential relative to the mid-supply point v_ex / 2.
double common_mode_voltage(const BridgeNetwork& net, const PiezoCoefficients& coeffs,
                           const StressPair& stresses,
                           const DeviationAssignment& deviations, double v_ex);

/// Outputs of both bridges of a dual as a column vector.
Vec2 dual_bridge_outputs(const DualBridge& dual, const PiezoCoefficients& coeffs,
                         const StressPair& stresses,
                         const DeviationAssignment& deviations, double v_ex);

/// Canonical wiring of configuration A, B, C or D with all nominal
/// resistances equal to r0.
DualBridge standard_configuration(ConfigId id, double r0 = 1000.0);

}  // namespace pzbridge
