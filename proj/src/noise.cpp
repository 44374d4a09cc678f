#include "objbell/noise.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "objbell/gates.hpp"

namespace objbell {

void NoiseModel::validate() const {
    for (double p : {p1, p2, readout_flip}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("NoiseModel: probabilities must be in [0, 1]");
        }
    }
    if (!std::isfinite(crosstalk_zz)) {
        throw std::invalid_argument("NoiseModel: crosstalk_zz must be finite");
    }
}

std::string noise_to_json(const NoiseModel& m) {
    nlohmann::json j{{"p1", m.p1},
                     {"p2", m.p2},
                     {"readout_flip", m.readout_flip},
                     {"crosstalk_zz", m.crosstalk_zz}};
    return j.dump();
}

NoiseModel noise_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    NoiseModel m;
    m.p1 = j.value("p1", 0.0);
    m.p2 = j.value("p2", 0.0);
    m.readout_flip = j.value("readout_flip", 0.0);
    m.crosstalk_zz = j.value("crosstalk_zz", 0.0);
    m.validate();
    return m;
}

void apply_channel(StateVector& state, const NoiseModel& model, std::span<const int> site_qubits,
                   Rng& rng) {
    model.validate();
    if (site_qubits.size() != 1 && site_qubits.size() != 2) {
        throw std::invalid_argument("apply_channel: a gate event touches 1 or 2 qubits");
    }
    const double p = site_qubits.size() == 1 ? model.p1 : model.p2;
    if (p <= 0.0) return;
    if (rng.next_double() >= p) return;

    static const Mat paulis[3] = {gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
    if (site_qubits.size() == 1) {
        state.apply_1q(paulis[rng.next_below(3)], site_qubits[0]);
    } else {
        // uniform over the 15 non-identity two-qubit Paulis
        const std::uint64_t code = 1 + rng.next_below(15);
        const int a = static_cast<int>(code >> 2), b = static_cast<int>(code & 3);
        if (a > 0) state.apply_1q(paulis[a - 1], site_qubits[0]);
        if (b > 0) state.apply_1q(paulis[b - 1], site_qubits[1]);
    }
}

std::uint64_t apply_readout_flips(std::uint64_t outcome, int n_bits, const NoiseModel& model,
                                  Rng& rng) {
    if (model.readout_flip <= 0.0) return outcome;
    if (model.readout_flip >= 1.0) {
        return outcome ^ ((std::uint64_t{1} << n_bits) - 1);
    }
    for (int k = 0; k < n_bits; ++k) {
        if (rng.next_double() < model.readout_flip) outcome ^= std::uint64_t{1} << k;
    }
    return outcome;
}

std::string apply_readout_flips(std::string_view bits, const NoiseModel& model, Rng& rng) {
    const std::uint64_t flipped =
        apply_readout_flips(outcome_index(bits), static_cast<int>(bits.size()), model, rng);
    return outcome_bits(flipped, static_cast<int>(bits.size()));
}

}  // namespace objbell
