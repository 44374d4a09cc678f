#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "objbell/gates.hpp"
#include "objbell/statevector.hpp"

namespace objbell {

// Measurement settings: binary choices (a, b) select the rotation angles.
struct Settings {
    int a = 0;
    int b = 0;
    std::array<double, 2> alpha{};  // filled with the default table by make_settings
    std::array<double, 2> beta{};

    double alpha_angle() const { return alpha[static_cast<std::size_t>(a)]; }
    double beta_angle() const { return beta[static_cast<std::size_t>(b)]; }
};

Settings make_settings(int a, int b);  // default angle table a: {0, pi/2}, b: {-pi/4, +pi/4}

enum class NativeGates { kIdeal, kEcr, kCz, kZz };
std::string to_string(NativeGates g);

enum class OpRole { kPrep, kEntangle, kSwap, kSetting, kCopy, kCrosstalk };

struct CircuitOp {
    gates::Gate gate;
    std::vector<int> wires;
    OpRole role = OpRole::kPrep;
    bool noisy = true;  // physical pulse; virtual Z rotations are noise-free
};

// Readout labels in counts order; outcome bit k of a counts index is label k.
inline constexpr std::array<const char*, 6> kOutcomeLabels{"A0", "A1", "A2", "B0", "B1", "B2"};

struct Circuit {
    int n_wires = 0;
    std::vector<CircuitOp> ops;
    std::array<int, 6> readout_wires{};  // wire carrying each label, counts order
    std::optional<int> m_wire;           // auxiliary source qubit, unmeasured
    Settings settings;
    std::string variant;

    int a0_wire() const { return readout_wires[0]; }
    int b0_wire() const { return readout_wires[3]; }
};

// Seven-wire circuit of the transmon experiment (fig layout q0..q6,
// labels A2 A1 A0 M B0 B1 B2). native selects how each CX is realized:
// kIdeal keeps the bare CX, kEcr/kCz expand it through the native set.
Circuit build_ibm_circuit(const Settings& s, NativeGates native);

// Six-wire all-to-all variant with the ZZ_{pi/4} entangler
// (labels A2 A1 A0 B0 B1 B2); native is kIdeal or kZz.
Circuit build_ionq_circuit(const Settings& s, NativeGates native = NativeGates::kZz);

// Closed-form four-term final state on six labeled qubits (A0..B2 = bits 0..5).
StateVector analytic_final_state(double alpha, double beta);

// Exact outcome distribution: (1 -+ sin(alpha+beta))/4 on the four unanimous
// outcomes, 0 on the other 60. Indexed like counts (label bitstrings).
std::array<double, 64> analytic_probabilities(double alpha, double beta);

std::string circuit_to_json(const Circuit& c);

}  // namespace objbell
