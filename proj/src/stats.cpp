#include "objbell/stats.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace objbell {

namespace {

constexpr double kAnalyticWeightTol = 1e-9;

int setting_slot(int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
        throw std::invalid_argument("setting labels must be 0 or 1");
    }
    return 2 * a + b;
}

std::string format_double(double v, const char* fmt = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

// RFC 4180: CRLF records, quote fields containing comma, quote or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

}  // namespace

int unanimity_value(std::string_view triple) {
    if (triple.size() != 3) throw std::invalid_argument("unanimity_value: need exactly 3 bits");
    for (char ch : triple) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("unanimity_value: bits must be 0/1");
    }
    if (triple == "000") return +1;
    if (triple == "111") return -1;
    return 0;
}

int unanimity_of_index(int triple_index) {
    if (triple_index == 0) return +1;
    if (triple_index == 7) return -1;
    return 0;
}

void CountsTable::add_run(int a, int b, double shots, const std::array<double, 64>& counts) {
    const int slot = setting_slot(a, b);
    double total = 0.0;
    for (double v : counts) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw std::invalid_argument("CountsTable: counts must be finite and non-negative");
        }
        total += v;
    }
    if (shots > 0.0) {
        if (std::abs(total - shots) > 1e-6 * std::max(1.0, shots)) {
            throw std::invalid_argument("CountsTable: counts do not sum to shots");
        }
        if (any_ && analytic_) {
            throw std::invalid_argument("CountsTable: cannot mix analytic and sampled runs");
        }
    } else if (shots == 0.0) {
        if (std::abs(total - 1.0) > kAnalyticWeightTol) {
            throw std::invalid_argument("CountsTable: analytic weights must sum to 1");
        }
        if (any_ && !analytic_) {
            throw std::invalid_argument("CountsTable: cannot mix analytic and sampled runs");
        }
        if (present_[static_cast<std::size_t>(slot)]) {
            throw std::invalid_argument("CountsTable: duplicate analytic setting");
        }
        analytic_ = true;
    } else {
        throw std::invalid_argument("CountsTable: shots must be >= 0");
    }
    any_ = true;
    auto& acc = counts_[static_cast<std::size_t>(slot)];
    for (std::size_t i = 0; i < 64; ++i) acc[i] += counts[i];
    shots_[static_cast<std::size_t>(slot)] += shots;
    present_[static_cast<std::size_t>(slot)] = true;
}

bool CountsTable::has(int a, int b) const {
    return present_[static_cast<std::size_t>(setting_slot(a, b))];
}

const std::array<double, 64>& CountsTable::counts(int a, int b) const {
    const int slot = setting_slot(a, b);
    if (!present_[static_cast<std::size_t>(slot)]) {
        throw std::invalid_argument("CountsTable: setting pair missing");
    }
    return counts_[static_cast<std::size_t>(slot)];
}

double CountsTable::shots(int a, int b) const {
    const int slot = setting_slot(a, b);
    if (!present_[static_cast<std::size_t>(slot)]) {
        throw std::invalid_argument("CountsTable: setting pair missing");
    }
    return shots_[static_cast<std::size_t>(slot)];
}

bool CountsTable::complete() const {
    return present_[0] && present_[1] && present_[2] && present_[3];
}

Correlation correlation(const std::array<double, 64>& counts, double total_weight) {
    if (!(total_weight > 0.0)) {
        throw std::invalid_argument("correlation: total weight must be positive");
    }
    double ab = 0.0, ab2 = 0.0;
    for (int v = 0; v < 64; ++v) {
        const int prod = unanimity_of_index(v & 7) * unanimity_of_index(v >> 3);
        ab += counts[static_cast<std::size_t>(v)] * prod;
        ab2 += counts[static_cast<std::size_t>(v)] * (prod != 0 ? 1.0 : 0.0);
    }
    Correlation out;
    out.value = ab / total_weight;
    out.single_shot_variance = ab2 / total_weight - out.value * out.value;
    return out;
}

BellReport chsh(const CountsTable& table) {
    if (!table.complete()) throw std::invalid_argument("chsh: all four settings required");
    BellReport rep;
    rep.analytic = table.analytic();
    double var_sum = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double weight = table.analytic() ? 1.0 : table.shots(a, b);
            const Correlation corr = correlation(table.counts(a, b), weight);
            rep.correlations[static_cast<std::size_t>(2 * a + b)] = corr;
            rep.shots[static_cast<std::size_t>(2 * a + b)] = table.shots(a, b);
            const double sign = (a == 0 && b == 0) ? +1.0 : -1.0;
            rep.b_value += sign * corr.value;
            if (!table.analytic()) var_sum += corr.single_shot_variance / table.shots(a, b);
        }
    }
    rep.sigma_b = table.analytic() ? 0.0 : std::sqrt(var_sum);
    return rep;
}

std::string to_string(SignalDirection d) {
    switch (d) {
        case SignalDirection::kNone: return "";
        case SignalDirection::kAToB: return "->";
        case SignalDirection::kBToA: return "<-";
        case SignalDirection::kBoth: return "<->";
    }
    return "";
}

std::string outcome_triple(int triple_index) {
    std::string s = "000";
    for (int k = 0; k < 3; ++k)
        if ((triple_index >> k) & 1) s[static_cast<std::size_t>(k)] = '1';
    return s;
}

namespace {

std::array<double, 8> party_marginal(const std::array<double, 64>& counts, double total,
                                     Party party) {
    std::array<double, 8> out{};
    for (int v = 0; v < 64; ++v) {
        const int t = party == Party::kA ? (v & 7) : (v >> 3);
        out[static_cast<std::size_t>(t)] += counts[static_cast<std::size_t>(v)] / total;
    }
    return out;
}

double bernoulli_var(double p, double n) {
    // per-setting estimator variance with the small-count guard
    return std::max(p * (1.0 - p), 1.0 / n) / n;
}

}  // namespace

SignalingReport signaling_scan(const CountsTable& table, double threshold) {
    if (!table.complete()) throw std::invalid_argument("signaling_scan: all four settings required");
    SignalingReport rep;
    rep.threshold = threshold;
    rep.analytic = table.analytic();

    bool a_side = false, b_side = false;
    for (const Party party : {Party::kA, Party::kB}) {
        for (int own = 0; own < 2; ++own) {
            // settings (a, b) with the *other* party's choice = 0 and 1
            const int a0 = party == Party::kA ? own : 0;
            const int b0 = party == Party::kA ? 0 : own;
            const int a1 = party == Party::kA ? own : 1;
            const int b1 = party == Party::kA ? 1 : own;
            const double n0 = table.analytic() ? 1.0 : table.shots(a0, b0);
            const double n1 = table.analytic() ? 1.0 : table.shots(a1, b1);
            const auto m0 = party_marginal(table.counts(a0, b0), n0, party);
            const auto m1 = party_marginal(table.counts(a1, b1), n1, party);
            for (int t = 0; t < 8; ++t) {
                SignalingEntry e;
                e.party = party;
                e.own_setting = own;
                e.outcome = t;
                e.p_other0 = m0[static_cast<std::size_t>(t)];
                e.p_other1 = m1[static_cast<std::size_t>(t)];
                e.delta = e.p_other0 - e.p_other1;
                if (table.analytic()) {
                    e.sigma = 0.0;
                    e.z = 0.0;
                    e.significant = std::abs(e.delta) > kAnalyticWeightTol;
                } else {
                    e.sigma = std::sqrt(bernoulli_var(e.p_other0, n0) +
                                        bernoulli_var(e.p_other1, n1));
                    e.z = e.delta / e.sigma;
                    e.significant = std::abs(e.z) > threshold;
                }
                if (e.significant) ((party == Party::kA) ? b_side : a_side) = true;
                rep.entries.push_back(e);
            }
        }
    }
    // A-side signaling means B's marginal moved with a: A -> B.
    if (a_side && b_side) rep.direction = SignalDirection::kBoth;
    else if (a_side) rep.direction = SignalDirection::kAToB;
    else if (b_side) rep.direction = SignalDirection::kBToA;
    return rep;
}

std::string bell_table_text(const std::vector<BellRow>& rows) {
    std::ostringstream out;
    out << "G                B        dB[1e-4]  A-B\n";
    for (const BellRow& row : rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%-16s %-8.4f %-9.2f %s\n", row.group.c_str(),
                      row.bell.b_value, row.bell.sigma_b * 1e4,
                      to_string(row.direction).c_str());
        out << line;
    }
    return out.str();
}

std::string bell_table_csv(const std::vector<BellRow>& rows) {
    std::string out = csv_row({"group", "B", "dB", "direction"});
    for (const BellRow& row : rows) {
        out += csv_row({row.group, format_double(row.bell.b_value, "%.9f"),
                        format_double(row.bell.sigma_b, "%.9g"), to_string(row.direction)});
    }
    return out;
}

std::string signaling_csv(const SignalingReport& report) {
    std::string out = csv_row(
        {"party", "own_setting", "outcome", "p_other0", "p_other1", "delta_p", "sigma", "z",
         "significant"});
    for (const SignalingEntry& e : report.entries) {
        out += csv_row({e.party == Party::kA ? "A" : "B", std::to_string(e.own_setting),
                        outcome_triple(e.outcome), format_double(e.p_other0, "%.9g"),
                        format_double(e.p_other1, "%.9g"), format_double(e.delta, "%.9g"),
                        format_double(e.sigma, "%.9g"), format_double(e.z, "%.4f"),
                        e.significant ? "1" : "0"});
    }
    return out;
}

std::string signaling_text(const SignalingReport& report) {
    std::ostringstream out;
    std::size_t flagged = 0;
    for (const SignalingEntry& e : report.entries)
        if (e.significant) ++flagged;
    out << "signaling scan: " << flagged << " significant entr" << (flagged == 1 ? "y" : "ies")
        << " at " << report.threshold << " sigma, direction \""
        << to_string(report.direction) << "\"\n";
    auto print_entry = [&](const SignalingEntry& e) {
        char line[160];
        std::snprintf(line, sizeof line, "  %c a%s=%d outcome %s  dP=%+.6f sigma=%.6f z=%+.2f%s\n",
                      e.party == Party::kA ? 'A' : 'B', e.party == Party::kA ? "" : "(own b)",
                      e.own_setting, outcome_triple(e.outcome).c_str(), e.delta, e.sigma, e.z,
                      e.significant ? "  ***" : "");
        out << line;
    };
    if (flagged > 0) {
        out << "flagged first:\n";
        for (const SignalingEntry& e : report.entries)
            if (e.significant) print_entry(e);
    }
    for (const SignalingEntry& e : report.entries)
        if (!e.significant) print_entry(e);
    return out.str();
}

}  // namespace objbell
