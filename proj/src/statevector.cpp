#include "objbell/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "objbell/rng.hpp"

namespace objbell {

namespace {
constexpr double kUnitaryTol = 1e-10;
constexpr double kNormTol = 1e-12;
constexpr int kMaxQubits = 24;
}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::out_of_range("StateVector: n_qubits must be in [1, 24]");
    }
    amps_.assign(std::size_t{1} << n_qubits, cplx{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("from_amplitudes: length must be a power of two >= 2");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    StateVector st(n);
    st.amps_ = std::move(amplitudes);
    return st;
}

void StateVector::apply_1q(const Mat& gate, int target) {
    if (gate.dim() != 2) throw std::invalid_argument("apply_1q: gate must be 2x2");
    if (target < 0 || target >= n_qubits_) throw std::out_of_range("apply_1q: bad target");
    if (validate_ && !gate.is_unitary(kUnitaryTol)) {
        throw std::invalid_argument("apply_1q: matrix is not unitary");
    }
    const std::size_t n = amps_.size();
    const std::size_t step = std::size_t{1} << target;
    const std::size_t block = step << 1;
    const cplx m00 = gate.at(0, 0), m01 = gate.at(0, 1), m10 = gate.at(1, 0), m11 = gate.at(1, 1);
    for (std::size_t base = 0; base < n; base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const cplx a = amps_[i0], b = amps_[i1];
            amps_[i0] = m00 * a + m01 * b;
            amps_[i1] = m10 * a + m11 * b;
        }
    }
    if (validate_) check_norm();
}

void StateVector::apply_2q(const Mat& gate, int first, int second) {
    if (gate.dim() != 4) throw std::invalid_argument("apply_2q: gate must be 4x4");
    if (first == second) throw std::invalid_argument("apply_2q: indices must be distinct");
    if (first < 0 || first >= n_qubits_ || second < 0 || second >= n_qubits_) {
        throw std::out_of_range("apply_2q: bad qubit index");
    }
    if (validate_ && !gate.is_unitary(kUnitaryTol)) {
        throw std::invalid_argument("apply_2q: matrix is not unitary");
    }
    const std::size_t bf = std::size_t{1} << first;   // matrix high bit
    const std::size_t bs = std::size_t{1} << second;  // matrix low bit
    const std::size_t lo = std::min(bf, bs), hi = std::max(bf, bs);
    const std::size_t n = amps_.size();
    cplx m[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = gate.at(r, c);

    for (std::size_t base = 0; base < n; base += (hi << 1)) {
        for (std::size_t mid = base; mid < base + hi; mid += (lo << 1)) {
            for (std::size_t idx = mid; idx < mid + lo; ++idx) {
                const cplx v0 = amps_[idx];            // first=0 second=0
                const cplx v1 = amps_[idx + bs];       // first=0 second=1
                const cplx v2 = amps_[idx + bf];       // first=1 second=0
                const cplx v3 = amps_[idx + bf + bs];  // first=1 second=1
                amps_[idx] = m[0][0] * v0 + m[0][1] * v1 + m[0][2] * v2 + m[0][3] * v3;
                amps_[idx + bs] = m[1][0] * v0 + m[1][1] * v1 + m[1][2] * v2 + m[1][3] * v3;
                amps_[idx + bf] = m[2][0] * v0 + m[2][1] * v1 + m[2][2] * v2 + m[2][3] * v3;
                amps_[idx + bf + bs] = m[3][0] * v0 + m[3][1] * v1 + m[3][2] * v2 + m[3][3] * v3;
            }
        }
    }
    if (validate_) check_norm();
}

void StateVector::apply_gate(const Mat& gate, std::span<const int> targets) {
    if (targets.size() == 1) { apply_1q(gate, targets[0]); return; }
    if (targets.size() == 2) { apply_2q(gate, targets[0], targets[1]); return; }
    if (targets.size() != 3 || gate.dim() != 8) {
        throw std::invalid_argument("apply_gate: supports arity 1..3 with matching matrix size");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (targets[i] < 0 || targets[i] >= n_qubits_) throw std::out_of_range("apply_gate: bad target");
        for (std::size_t j = i + 1; j < 3; ++j)
            if (targets[i] == targets[j]) throw std::invalid_argument("apply_gate: duplicate target");
    }
    if (validate_ && !gate.is_unitary(kUnitaryTol)) {
        throw std::invalid_argument("apply_gate: matrix is not unitary");
    }
    // targets[0] is the high bit of the 8x8 index.
    const std::size_t b0 = std::size_t{1} << targets[0];
    const std::size_t b1 = std::size_t{1} << targets[1];
    const std::size_t b2 = std::size_t{1} << targets[2];
    const std::size_t mask = b0 | b1 | b2;
    const std::size_t n = amps_.size();
    for (std::size_t idx = 0; idx < n; ++idx) {
        if (idx & mask) continue;
        std::size_t sub[8];
        cplx in[8];
        for (int k = 0; k < 8; ++k) {
            sub[k] = idx | ((k & 4) ? b0 : 0) | ((k & 2) ? b1 : 0) | ((k & 1) ? b2 : 0);
            in[k] = amps_[sub[k]];
        }
        for (int r = 0; r < 8; ++r) {
            cplx acc{};
            for (int c = 0; c < 8; ++c) acc += gate.at(r, c) * in[c];
            amps_[sub[r]] = acc;
        }
    }
    if (validate_) check_norm();
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const cplx& a : amps_) acc += std::norm(a);
    return acc;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

double StateVector::marginal_one_probability(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) throw std::out_of_range("marginal_one_probability");
    const std::size_t bit = std::size_t{1} << qubit;
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & bit) acc += std::norm(amps_[i]);
    return acc;
}

void StateVector::check_norm() const {
    if (std::abs(norm_squared() - 1.0) >= kNormTol) {
        throw std::runtime_error("StateVector: norm drifted beyond 1e-12");
    }
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                              std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
    const std::vector<double> probs = state.probabilities();
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    const double total = acc;
    Rng rng(seed);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min<std::size_t>(cdf.size() - 1, it - cdf.begin());
        ++counts[idx];
    }
    return counts;
}

std::string outcome_bits(std::uint64_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int k = 0; k < n_qubits; ++k)
        if ((index >> k) & 1) s[static_cast<std::size_t>(k)] = '1';
    return s;
}

std::uint64_t outcome_index(std::string_view bits) {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') idx |= std::uint64_t{1} << k;
        else if (bits[k] != '0') throw std::invalid_argument("outcome_index: bits must be 0/1");
    }
    return idx;
}

}  // namespace objbell
