#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace objbell {

// Majority-with-unanimity readout of one party's observer triple:
// 000 -> +1, 111 -> -1, anything mixed -> 0.
int unanimity_value(std::string_view triple);
int unanimity_of_index(int triple_index);  // triple_index in [0, 8)

// Aggregated counts for the four setting pairs. Counts are stored as doubles:
// sampled runs carry integer shot counts; an analytic table carries exact
// probability weights with shots == 0 standing for the infinite-shot limit.
class CountsTable {
public:
    void add_run(int a, int b, double shots, const std::array<double, 64>& counts);

    bool has(int a, int b) const;
    const std::array<double, 64>& counts(int a, int b) const;
    double shots(int a, int b) const;
    bool analytic() const { return analytic_; }
    bool complete() const;  // all four settings present

private:
    std::array<std::array<double, 64>, 4> counts_{};
    std::array<double, 4> shots_{};
    std::array<bool, 4> present_{};
    bool analytic_ = false;
    bool any_ = false;
};

struct Correlation {
    double value = 0.0;                 // <unan(A) unan(B)>
    double single_shot_variance = 0.0;  // <(AB)^2> - <AB>^2, 1/2 in the ideal case
};

// Throws std::invalid_argument on zero total weight.
Correlation correlation(const std::array<double, 64>& counts, double total_weight);

struct BellReport {
    double b_value = 0.0;
    double sigma_b = 0.0;  // 0 for analytic tables
    std::array<Correlation, 4> correlations{};  // index 2a + b
    std::array<double, 4> shots{};
    bool analytic = false;

    static constexpr double kClassicalBound = 2.0;
    static constexpr double kQuantumIdeal = 2.8284271247461903;  // 2 sqrt 2
};

// B = <A0B0> - <A1B0> - <A0B1> - <A1B1>, with independent-setting error
// propagation sigma_B = sqrt(sum variance_ab / shots_ab).
BellReport chsh(const CountsTable& table);

enum class Party { kA, kB };
enum class SignalDirection { kNone, kAToB, kBToA, kBoth };
std::string to_string(SignalDirection d);  // "", "->", "<-", "<->"

struct SignalingEntry {
    Party party;            // whose marginal is scanned
    int own_setting;        // a for party A, b for party B
    int outcome;            // triple index 0..7
    double p_other0 = 0.0;  // marginal with the other party's setting = 0
    double p_other1 = 0.0;
    double delta = 0.0;     // p_other0 - p_other1
    double sigma = 0.0;
    double z = 0.0;
    bool significant = false;
};

struct SignalingReport {
    std::vector<SignalingEntry> entries;  // A then B, own setting 0/1, outcome order
    SignalDirection direction = SignalDirection::kNone;
    double threshold = 5.0;
    bool analytic = false;
};

// No-signaling scan: dP_{a*}(A) = P(A*|a0) - P(A*|a1) over all 8 outcomes and
// both own settings, likewise for B. Bernoulli errors combine across the two
// subtracted settings; zero-count outcomes get the max(P(1-P), 1/N)/N guard.
SignalingReport signaling_scan(const CountsTable& table, double threshold = 5.0);

std::string outcome_triple(int triple_index);  // "000".."111", bit 0 leftmost

// Table emission (layout of the results tables: group, B, dB, direction).
struct BellRow {
    std::string group;
    BellReport bell;
    SignalDirection direction = SignalDirection::kNone;
};
std::string bell_table_text(const std::vector<BellRow>& rows);
std::string bell_table_csv(const std::vector<BellRow>& rows);
std::string signaling_csv(const SignalingReport& report);
std::string signaling_text(const SignalingReport& report);

}  // namespace objbell
