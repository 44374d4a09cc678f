#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "objbell/circuits.hpp"
#include "objbell/noise.hpp"

namespace objbell {

// Counts (or probability weights) over the 64 labeled outcomes A0A1A2B0B1B2;
// outcome bit k of the array index is label k.
using Counts64 = std::array<double, 64>;

// Exact noiseless outcome distribution of a circuit: full statevector run,
// unmeasured wires marginalized, coherent crosstalk included when requested.
Counts64 ideal_distribution(const Circuit& c, double crosstalk_zz = 0.0);

// One Monte Carlo Kraus trajectory per shot. Shots sharing an identical
// Pauli-insertion pattern are grouped and drawn from that trajectory's exact
// measurement distribution, which is equal in law to per-shot simulation but
// keeps large sweeps tractable. Readout flips compose at distribution level.
// Deterministic for a given (circuit, model, shots, rng state).
Counts64 sample_counts(const Circuit& c, const NoiseModel& model, std::uint64_t shots, Rng& rng);

// Reference path: simulates every shot as its own trajectory through
// apply_channel and per-shot readout flips. Slow; used to cross-check the
// grouped sampler.
Counts64 sample_counts_per_shot(const Circuit& c, const NoiseModel& model, std::uint64_t shots,
                                Rng& rng);

// Applies the independent per-bit flip channel to a 64-outcome distribution.
void flip_distribution(Counts64& dist, double flip);

}  // namespace objbell
