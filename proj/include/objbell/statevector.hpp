#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "objbell/complexmat.hpp"

namespace objbell {

// Dense statevector over n qubits, 1 <= n <= 24.
//
// Index convention: qubit k is bit k of the amplitude index (qubit 0 = LSB).
// Bitstring I/O prints qubit 0 leftmost, so outcome_bits(5, 4) == "1010".
// Two-qubit gates use the matrix convention row/col = 2*first + second, i.e.
// the first wire is the high bit of the 4x4 index (matches the gate library).
class StateVector {
public:
    explicit StateVector(int n_qubits);  // |0...0>
    static StateVector from_amplitudes(std::vector<cplx> amplitudes);

    int num_qubits() const noexcept { return n_qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    cplx amplitude(std::uint64_t index) const { return amps_.at(index); }
    void set_amplitude(std::uint64_t index, cplx value) { amps_.at(index) = value; }

    // Advisory unitarity check (1e-10) on gate entry; post-application norm
    // check (1e-12). On by default, can be switched off for hot loops once the
    // gate set has been validated.
    void set_validation(bool on) noexcept { validate_ = on; }
    bool validation() const noexcept { return validate_; }

    void apply_1q(const Mat& gate, int target);
    void apply_2q(const Mat& gate, int first, int second);
    void apply_gate(const Mat& gate, std::span<const int> targets);  // arity 1..3

    double norm_squared() const;
    std::vector<double> probabilities() const;
    double marginal_one_probability(int qubit) const;  // P(qubit reads 1)

private:
    void check_norm() const;

    int n_qubits_ = 0;
    bool validate_ = true;
    std::vector<cplx> amps_;
};

// Measurement sampling in the computational basis: counts over full-width
// outcome indices, summing to shots. Deterministic for a given (state, shots,
// seed); empirical frequencies converge to probabilities().
std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                              std::uint64_t seed);

std::string outcome_bits(std::uint64_t index, int n_qubits);   // qubit 0 leftmost
std::uint64_t outcome_index(std::string_view bits);            // inverse

}  // namespace objbell
