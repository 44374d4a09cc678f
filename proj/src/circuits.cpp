#include "objbell/circuits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace objbell {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

void push_1q(Circuit& c, std::string name, Mat m, int wire, OpRole role, bool noisy = true) {
    c.ops.push_back(CircuitOp{gates::Gate{std::move(name), 1, std::move(m)}, {wire}, role, noisy});
}

void push_2q(Circuit& c, std::string name, Mat m, int w0, int w1, OpRole role) {
    c.ops.push_back(CircuitOp{gates::Gate{std::move(name), 2, std::move(m)}, {w0, w1}, role, true});
}

// Emits CX(control -> target) through the chosen native set.
void push_cx(Circuit& c, int control, int target, OpRole role, NativeGates native) {
    switch (native) {
        case NativeGates::kIdeal:
            push_2q(c, "cx", gates::cx_down(), control, target, role);
            return;
        case NativeGates::kEcr:
            push_1q(c, "x", gates::pauli_x(), control, role);
            push_1q(c, "sx", gates::x_plus(), target, role);
            push_2q(c, "ecr", gates::ecr_down(), control, target, role);
            push_1q(c, "z_plus", gates::z_plus(), control, role, /*noisy=*/false);
            return;
        case NativeGates::kCz:
            push_1q(c, "h", gates::hadamard(), target, role);
            push_2q(c, "cz", gates::cz(), control, target, role);
            push_1q(c, "h", gates::hadamard(), target, role);
            return;
        case NativeGates::kZz:
            push_1q(c, "y_plus", gates::y_plus(), target, role);
            push_2q(c, "zz", gates::zz_quarter(), control, target, role);
            push_1q(c, "sx", gates::x_plus(), target, role);
            push_1q(c, "z_minus", gates::z_minus(), target, role, /*noisy=*/false);
            push_1q(c, "z_plus", gates::z_plus(), control, role, /*noisy=*/false);
            return;
    }
    throw std::invalid_argument("push_cx: unknown native gate set");
}

void validate_settings(const Settings& s) {
    if (s.a != 0 && s.a != 1) throw std::invalid_argument("Settings: a must be 0 or 1");
    if (s.b != 0 && s.b != 1) throw std::invalid_argument("Settings: b must be 0 or 1");
    for (double ang : {s.alpha[0], s.alpha[1], s.beta[0], s.beta[1]}) {
        if (!std::isfinite(ang)) throw std::invalid_argument("Settings: angles must be finite");
    }
}

}  // namespace

Settings make_settings(int a, int b) {
    Settings s;
    s.a = a;
    s.b = b;
    s.alpha = {0.0, kPi / 2};
    s.beta = {-kPi / 4, kPi / 4};
    validate_settings(s);
    return s;
}

std::string to_string(NativeGates g) {
    switch (g) {
        case NativeGates::kIdeal: return "ideal";
        case NativeGates::kEcr: return "ecr";
        case NativeGates::kCz: return "cz";
        case NativeGates::kZz: return "zz";
    }
    return "?";
}

Circuit build_ibm_circuit(const Settings& s, NativeGates native) {
    validate_settings(s);
    if (native == NativeGates::kZz) {
        throw std::invalid_argument("build_ibm_circuit: zz is not in the transmon native set");
    }
    // Wires: 0:A2 1:A1 2:A0 3:M 4:B0 5:B1 6:B2
    Circuit c;
    c.n_wires = 7;
    c.readout_wires = {2, 1, 0, 4, 5, 6};
    c.m_wire = 3;
    c.settings = s;
    c.variant = "ibm-" + to_string(native);

    push_1q(c, "s0", gates::s_gate(0.0), 3, OpRole::kPrep);
    push_cx(c, 3, 4, OpRole::kEntangle, native);  // entangle M with B0
    push_cx(c, 3, 2, OpRole::kSwap, native);      // swap M into A0 against |0>
    push_cx(c, 2, 3, OpRole::kSwap, native);
    push_1q(c, "s_alpha", gates::s_gate(s.alpha_angle()), 2, OpRole::kSetting);
    push_1q(c, "s_beta", gates::s_gate(s.beta_angle()), 4, OpRole::kSetting);
    push_cx(c, 2, 1, OpRole::kCopy, native);
    push_cx(c, 2, 0, OpRole::kCopy, native);
    push_cx(c, 4, 5, OpRole::kCopy, native);
    push_cx(c, 4, 6, OpRole::kCopy, native);
    return c;
}

Circuit build_ionq_circuit(const Settings& s, NativeGates native) {
    validate_settings(s);
    if (native != NativeGates::kIdeal && native != NativeGates::kZz) {
        throw std::invalid_argument("build_ionq_circuit: native must be ideal or zz");
    }
    // Wires: 0:A2 1:A1 2:A0 3:B0 4:B1 5:B2
    Circuit c;
    c.n_wires = 6;
    c.readout_wires = {2, 1, 0, 3, 4, 5};
    c.settings = s;
    c.variant = "ionq";

    push_1q(c, "sx", gates::x_plus(), 2, OpRole::kEntangle);
    push_1q(c, "sx", gates::x_plus(), 3, OpRole::kEntangle);
    push_2q(c, "zz", gates::zz_quarter(), 2, 3, OpRole::kEntangle);
    push_1q(c, "sx", gates::x_plus(), 2, OpRole::kEntangle);
    push_1q(c, "sx", gates::x_plus(), 3, OpRole::kEntangle);
    push_1q(c, "s_alpha", gates::s_gate(s.alpha_angle()), 2, OpRole::kSetting);
    push_1q(c, "s_beta", gates::s_gate(s.beta_angle()), 3, OpRole::kSetting);
    push_cx(c, 2, 1, OpRole::kCopy, native);
    push_cx(c, 2, 0, OpRole::kCopy, native);
    push_cx(c, 3, 4, OpRole::kCopy, native);
    push_cx(c, 3, 5, OpRole::kCopy, native);
    return c;
}

StateVector analytic_final_state(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::invalid_argument("analytic_final_state: angles must be finite");
    }
    const double inv = 1.0 / std::sqrt(8.0);
    std::vector<cplx> amps(64, cplx{});
    const cplx eab = std::exp(kI * (alpha + beta));
    amps[0] = (1.0 + kI * eab) * inv;                                          // |000,000>
    amps[63] = -(kI + std::exp(-kI * (alpha + beta))) * inv;                   // |111,111>
    amps[7] = -(kI * std::exp(-kI * alpha) + std::exp(kI * beta)) * inv;       // |111,000>
    amps[56] = -(kI * std::exp(-kI * beta) + std::exp(kI * alpha)) * inv;      // |000,111>
    return StateVector::from_amplitudes(std::move(amps));
}

std::array<double, 64> analytic_probabilities(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::invalid_argument("analytic_probabilities: angles must be finite");
    }
    const double s = std::sin(alpha + beta);
    std::array<double, 64> p{};
    p[0] = (1.0 - s) / 4.0;
    p[63] = (1.0 - s) / 4.0;
    p[7] = (1.0 + s) / 4.0;
    p[56] = (1.0 + s) / 4.0;
    return p;
}

std::string circuit_to_json(const Circuit& c) {
    nlohmann::json j;
    j["variant"] = c.variant;
    j["n_wires"] = c.n_wires;
    j["settings"] = {{"a", c.settings.a},
                     {"b", c.settings.b},
                     {"alpha", c.settings.alpha},
                     {"beta", c.settings.beta}};
    nlohmann::json readout = nlohmann::json::object();
    for (std::size_t k = 0; k < kOutcomeLabels.size(); ++k) {
        readout[kOutcomeLabels[k]] = c.readout_wires[k];
    }
    if (c.m_wire) readout["M"] = *c.m_wire;
    j["readout_map"] = readout;
    j["bit_order"] = "A0A1A2B0B1B2";
    nlohmann::json ops = nlohmann::json::array();
    for (const CircuitOp& op : c.ops) {
        nlohmann::json entry;
        entry["gate"] = op.gate.name;
        entry["wires"] = op.wires;
        entry["noisy"] = op.noisy;
        if (op.gate.name == "s_alpha") entry["angle"] = c.settings.alpha_angle();
        if (op.gate.name == "s_beta") entry["angle"] = c.settings.beta_angle();
        if (op.gate.name == "s0") entry["angle"] = 0.0;
        ops.push_back(std::move(entry));
    }
    j["ops"] = std::move(ops);
    return j.dump(2);
}

}  // namespace objbell
