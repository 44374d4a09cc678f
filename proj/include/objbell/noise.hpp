#pragma once

#include <span>
#include <string>

#include "objbell/rng.hpp"
#include "objbell/statevector.hpp"

namespace objbell {

// Stochastic error channels for trajectory simulation. A model is fully
// determined by these four numbers plus the RNG seed.
struct NoiseModel {
    double p1 = 0.0;            // depolarizing probability per 1-qubit pulse
    double p2 = 0.0;            // depolarizing probability per 2-qubit gate
    double readout_flip = 0.0;  // per-qubit classical flip at measurement
    double crosstalk_zz = 0.0;  // ZZ_{theta} between A0 and B0 at every setting pulse

    bool enabled() const {
        return p1 > 0 || p2 > 0 || readout_flip > 0 || crosstalk_zz != 0.0;
    }
    void validate() const;  // probabilities in [0,1], finite angle
};

std::string noise_to_json(const NoiseModel& m);
NoiseModel noise_from_json(const std::string& text);

// One gate-event channel application: with probability p1 (p2 for a pair)
// insert a uniformly random non-identity Pauli on the touched qubit(s).
// The trajectory stays normalized.
void apply_channel(StateVector& state, const NoiseModel& model, std::span<const int> site_qubits,
                   Rng& rng);

// Flips each bit of a measured outcome independently with probability
// readout_flip.
std::uint64_t apply_readout_flips(std::uint64_t outcome, int n_bits, const NoiseModel& model,
                                  Rng& rng);
std::string apply_readout_flips(std::string_view bits, const NoiseModel& model, Rng& rng);

}  // namespace objbell
