#include "objbell/runner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace objbell {

namespace {

// (op index, pauli code) insertion after the indexed op; codes are 1..3 for
// one-qubit sites and 1..15 (high 2 bits first wire) for two-qubit sites.
struct Insertion {
    std::uint32_t op_index;
    std::uint32_t pauli;
    bool operator<(const Insertion& o) const {
        return op_index != o.op_index ? op_index < o.op_index : pauli < o.pauli;
    }
    bool operator==(const Insertion& o) const {
        return op_index == o.op_index && pauli == o.pauli;
    }
};

const Mat& pauli(int code) {
    static const Mat p[3] = {gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
    return p[code - 1];
}

void apply_insertion(StateVector& st, const CircuitOp& op, std::uint32_t code) {
    if (op.wires.size() == 1) {
        st.apply_1q(pauli(static_cast<int>(code)), op.wires[0]);
    } else {
        const int a = static_cast<int>(code >> 2), b = static_cast<int>(code & 3);
        if (a > 0) st.apply_1q(pauli(a), op.wires[0]);
        if (b > 0) st.apply_1q(pauli(b), op.wires[1]);
    }
}

// Runs the circuit (with coherent crosstalk ops and the trajectory's Pauli
// insertions) and returns the exact labeled-outcome distribution.
Counts64 trajectory_distribution(const Circuit& c, double crosstalk_zz,
                                 std::span<const Insertion> insertions) {
    StateVector st(c.n_wires);
    st.set_validation(false);  // gates are validated once at entry of the samplers
    const Mat xt = gates::zz_rot(crosstalk_zz);

    std::size_t next = 0;
    for (std::uint32_t i = 0; i < c.ops.size(); ++i) {
        const CircuitOp& op = c.ops[i];
        if (op.wires.size() == 1) st.apply_1q(op.gate.matrix, op.wires[0]);
        else st.apply_2q(op.gate.matrix, op.wires[0], op.wires[1]);
        while (next < insertions.size() && insertions[next].op_index == i) {
            apply_insertion(st, op, insertions[next].pauli);
            ++next;
        }
        if (crosstalk_zz != 0.0 && op.role == OpRole::kSetting) {
            st.apply_2q(xt, c.a0_wire(), c.b0_wire());
        }
    }

    const std::vector<double> full = st.probabilities();
    Counts64 out{};
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
        if (full[idx] == 0.0) continue;
        std::size_t key = 0;
        for (std::size_t k = 0; k < 6; ++k) {
            key |= ((idx >> c.readout_wires[k]) & 1) << k;
        }
        out[key] += full[idx];
    }
    return out;
}

void validate_ops(const Circuit& c) {
    for (const CircuitOp& op : c.ops) {
        if (!op.gate.matrix.is_unitary(1e-10)) {
            throw std::invalid_argument("circuit op '" + op.gate.name + "' is not unitary");
        }
    }
}

// Draws `count` shots from `dist` into `acc` by inverse-CDF over outcomes
// sorted by descending probability (short walks for peaked distributions).
void draw_shots(const Counts64& dist, std::uint64_t count, Rng& rng, Counts64& acc) {
    std::array<int, 64> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] > dist[b]; });
    std::array<double, 64> cdf;
    double total = 0.0;
    for (int k = 0; k < 64; ++k) {
        total += std::max(0.0, dist[order[k]]);
        cdf[k] = total;
    }
    for (std::uint64_t s = 0; s < count; ++s) {
        const double u = rng.next_double() * total;
        int k = 0;
        while (k < 63 && u >= cdf[k]) ++k;
        acc[order[k]] += 1.0;
    }
}

}  // namespace

Counts64 ideal_distribution(const Circuit& c, double crosstalk_zz) {
    validate_ops(c);
    return trajectory_distribution(c, crosstalk_zz, {});
}

void flip_distribution(Counts64& dist, double flip) {
    if (flip <= 0.0) return;
    for (int bit = 0; bit < 6; ++bit) {
        const int mask = 1 << bit;
        for (int v = 0; v < 64; ++v) {
            if (v & mask) continue;
            const double a = dist[v], b = dist[v | mask];
            dist[v] = (1.0 - flip) * a + flip * b;
            dist[v | mask] = flip * a + (1.0 - flip) * b;
        }
    }
}

Counts64 sample_counts(const Circuit& c, const NoiseModel& model, std::uint64_t shots, Rng& rng) {
    model.validate();
    validate_ops(c);
    if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");

    // Per-shot error patterns, sampled site by site with geometric skips.
    std::map<std::uint64_t, std::vector<Insertion>> shot_errors;
    for (std::uint32_t i = 0; i < c.ops.size(); ++i) {
        const CircuitOp& op = c.ops[i];
        if (!op.noisy) continue;
        const double p = op.wires.size() == 1 ? model.p1 : model.p2;
        if (p <= 0.0) continue;
        const std::uint64_t n_paulis = op.wires.size() == 1 ? 3 : 15;
        if (p >= 1.0) {
            for (std::uint64_t s = 0; s < shots; ++s) {
                shot_errors[s].push_back({i, 1 + static_cast<std::uint32_t>(rng.next_below(n_paulis))});
            }
            continue;
        }
        const double denom = std::log1p(-p);
        double pos = 0.0;
        while (true) {
            const double u = rng.next_double();
            pos += std::floor(std::log1p(-u) / denom) + 1.0;
            if (pos > static_cast<double>(shots)) break;
            const std::uint64_t shot = static_cast<std::uint64_t>(pos) - 1;
            shot_errors[shot].push_back({i, 1 + static_cast<std::uint32_t>(rng.next_below(n_paulis))});
        }
    }

    // Group identical patterns; insertions are already in op order per shot.
    std::map<std::vector<Insertion>, std::uint64_t> groups;
    for (const auto& [shot, pattern] : shot_errors) groups[pattern] += 1;
    std::uint64_t error_shots = 0;
    for (const auto& [pattern, n] : groups) error_shots += n;

    Counts64 acc{};
    const std::uint64_t clean = shots - error_shots;
    if (clean > 0) {
        Counts64 dist = trajectory_distribution(c, model.crosstalk_zz, {});
        flip_distribution(dist, model.readout_flip);
        draw_shots(dist, clean, rng, acc);
    }
    for (const auto& [pattern, n] : groups) {
        Counts64 dist = trajectory_distribution(c, model.crosstalk_zz, pattern);
        flip_distribution(dist, model.readout_flip);
        draw_shots(dist, n, rng, acc);
    }
    return acc;
}

Counts64 sample_counts_per_shot(const Circuit& c, const NoiseModel& model, std::uint64_t shots,
                                Rng& rng) {
    model.validate();
    validate_ops(c);
    const Mat xt = gates::zz_rot(model.crosstalk_zz);

    Counts64 acc{};
    for (std::uint64_t s = 0; s < shots; ++s) {
        StateVector st(c.n_wires);
        st.set_validation(false);
        for (const CircuitOp& op : c.ops) {
            if (op.wires.size() == 1) st.apply_1q(op.gate.matrix, op.wires[0]);
            else st.apply_2q(op.gate.matrix, op.wires[0], op.wires[1]);
            if (op.noisy) apply_channel(st, model, op.wires, rng);
            if (model.crosstalk_zz != 0.0 && op.role == OpRole::kSetting) {
                st.apply_2q(xt, c.a0_wire(), c.b0_wire());
            }
        }
        const std::vector<double> probs = st.probabilities();
        const double u = rng.next_double();
        double cum = 0.0;
        std::size_t picked = probs.size() - 1;
        for (std::size_t idx = 0; idx < probs.size(); ++idx) {
            cum += probs[idx];
            if (u < cum) { picked = idx; break; }
        }
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < 6; ++k) key |= ((picked >> c.readout_wires[k]) & 1) << k;
        key = apply_readout_flips(key, 6, model, rng);
        acc[key] += 1.0;
    }
    return acc;
}

}  // namespace objbell
