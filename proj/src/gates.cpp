#include "objbell/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace objbell::gates {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTol = 1e-12;
const cplx kI{0.0, 1.0};

Mat mat2(cplx a, cplx b, cplx c, cplx d) {
    Mat m(2);
    m.at(0, 0) = a; m.at(0, 1) = b;
    m.at(1, 0) = c; m.at(1, 1) = d;
    return m;
}

Mat rot(const Mat& v, double theta) {
    // exp(-i theta V / 2) for V with V^2 = I
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    Mat out = Mat::identity(v.dim()).scaled(c);
    for (int r = 0; r < v.dim(); ++r)
        for (int col = 0; col < v.dim(); ++col) out.at(r, col) -= kI * s * v.at(r, col);
    return out;
}

}  // namespace

Mat identity1() { return Mat::identity(2); }
Mat pauli_x() { return mat2(0, 1, 1, 0); }
Mat pauli_y() { return mat2(0, -kI, kI, 0); }
Mat pauli_z() { return mat2(1, 0, 0, -1); }

Mat x_rot(double theta) { return rot(pauli_x(), theta); }
Mat y_rot(double theta) { return rot(pauli_y(), theta); }
Mat z_rot(double theta) { return rot(pauli_z(), theta); }
Mat x_plus() { return x_rot(kPi / 2); }
Mat x_minus() { return x_rot(-kPi / 2); }
Mat y_plus() { return y_rot(kPi / 2); }
Mat y_minus() { return y_rot(-kPi / 2); }
Mat z_plus() { return z_rot(kPi / 2); }
Mat z_minus() { return z_rot(-kPi / 2); }

Mat hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return mat2(s, s, s, -s);
}

Mat s_phase() { return mat2(1, 0, 0, kI); }

Mat s_gate(double angle) {
    if (!std::isfinite(angle)) throw std::invalid_argument("s_gate: angle must be finite");
    const double s = 1.0 / std::sqrt(2.0);
    return mat2(s, -kI * std::exp(kI * angle) * s, -kI * std::exp(-kI * angle) * s, s);
}

Mat zz_rot(double theta) { return rot(pauli_z().kron(pauli_z()), theta); }

Mat cr_plus() { return rot(pauli_z().kron(pauli_x()), kPi / 4); }
Mat cr_minus() { return rot(pauli_z().kron(pauli_x()), -kPi / 4); }

Mat ecr_down() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat xi = pauli_x().kron(identity1());
    Mat yx = pauli_y().kron(pauli_x());
    Mat out(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.at(r, c) = s * (xi.at(r, c) - yx.at(r, c));
    return out;
}

Mat ecr_up() { return reverse2(ecr_down()); }

Mat cx_down() {
    Mat m = Mat::identity(4);
    m.at(2, 2) = 0; m.at(3, 3) = 0;
    m.at(2, 3) = 1; m.at(3, 2) = 1;
    return m;
}

Mat cx_up() { return reverse2(cx_down()); }

Mat cz() {
    Mat m = Mat::identity(4);
    m.at(3, 3) = -1;
    return m;
}

Mat zz_quarter() {
    Mat m = Mat::identity(4);
    m.at(1, 1) = kI;
    m.at(2, 2) = kI;
    return m;
}

Mat cxx_gate() {
    Mat m(8);
    for (int col = 0; col < 8; ++col) {
        const int f = (col >> 2) & 1;
        const int g1 = (col >> 1) & 1;
        const int g2 = col & 1;
        const int row = (f << 2) | ((g1 ^ f) << 1) | (g2 ^ f);
        m.at(row, col) = 1;
    }
    return m;
}

Mat reverse2(const Mat& u) {
    if (u.dim() != 4) throw std::invalid_argument("reverse2: needs a 4x4 matrix");
    Mat out(4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const int rs = ((r & 1) << 1) | (r >> 1);
            const int cs = ((c & 1) << 1) | (c >> 1);
            out.at(rs, cs) = u.at(r, c);
        }
    }
    return out;
}

Mat compose_two_wire(const GateSequence& seq) {
    Mat acc = Mat::identity(4);
    for (const SeqOp& op : seq) {
        Mat step(4);
        if (op.n_wires == 2) {
            step = (op.wires[0] == 0) ? op.gate.matrix : reverse2(op.gate.matrix);
        } else {
            step = (op.wires[0] == 0) ? op.gate.matrix.kron(Mat::identity(2))
                                      : Mat::identity(2).kron(op.gate.matrix);
        }
        acc = step * acc;  // time order: later ops act from the left
    }
    return acc;
}

namespace {

SeqOp op1(std::string name, Mat m, int wire) {
    return SeqOp{Gate{std::move(name), 1, std::move(m)}, {wire, 0}, 1};
}

SeqOp op2(std::string name, Mat m, int w0, int w1) {
    return SeqOp{Gate{std::move(name), 2, std::move(m)}, {w0, w1}, 2};
}

}  // namespace

GateSequence cx_from_ecr_seq() {
    return {
        op1("x", pauli_x(), 0),
        op1("sx", x_plus(), 1),
        op2("ecr", ecr_down(), 0, 1),
        op1("z_plus", z_plus(), 0),
    };
}

GateSequence cx_from_cz_seq() {
    return {
        op1("h", hadamard(), 1),
        op2("cz", cz(), 0, 1),
        op1("h", hadamard(), 1),
    };
}

GateSequence cx_from_zz_seq() {
    // Exact ZZ_{pi/4}-based construction: time order Y+(t), ZZ, X+(t), then
    // virtual Z-(t) and Z+(c). The published variant dresses the target with
    // X pulses only, which cannot reproduce CX from diag(1,i,i,1); one pulse
    // must change rotation axis, hence the Y+ here.
    return {
        op1("y_plus", y_plus(), 1),
        op2("zz", zz_quarter(), 0, 1),
        op1("sx", x_plus(), 1),
        op1("z_minus", z_minus(), 1),
        op1("z_plus", z_plus(), 0),
    };
}

namespace {

IdentityCheck check(std::string name, const Mat& lhs, const Mat& rhs, std::string note = {}) {
    const double res = global_phase_distance(lhs, rhs);
    return IdentityCheck{std::move(name), res < kIdentityTol, res, std::move(note)};
}

}  // namespace

std::vector<IdentityCheck> verify_appendix_identities() {
    std::vector<IdentityCheck> out;
    const Mat id2 = identity1();

    // (a) echoed cross-resonance construction
    out.push_back(check("ecr-echo-construction", ecr_down(),
                        compose_two_wire({op2("cr+", cr_plus(), 0, 1), op1("x", pauli_x(), 0),
                                          op2("cr-", cr_minus(), 0, 1)})));
    // (b) ECR is its own inverse
    out.push_back(check("ecr-involution", ecr_down() * ecr_down(), Mat::identity(4)));
    // (c) reversed ECR from ECR
    out.push_back(check("ecr-reversal", ecr_up(),
                        compose_two_wire({op1("y+", y_plus(), 0), op1("y-", y_minus(), 1),
                                          op2("ecr", ecr_down(), 0, 1), op1("h", hadamard(), 0),
                                          op1("h", hadamard(), 1)})));
    // (d) CX from ECR; the S slot is ambiguous in print, so try candidates
    {
        const struct { const char* label; Mat m; } cands[] = {
            {"diag(1,i)", s_phase()}, {"Z+", z_plus()}, {"X+", x_plus()}};
        IdentityCheck best{"cx-from-ecr", false, 1e300, ""};
        std::string note = "S candidates:";
        for (const auto& cand : cands) {
            const Mat lhs = compose_two_wire({op1("x", pauli_x(), 0), op1("s", cand.m, 1),
                                              op2("ecr", ecr_down(), 0, 1),
                                              op1("z+", z_plus(), 0)});
            const double res = global_phase_distance(cx_down(), lhs);
            note += std::string(" ") + cand.label + (res < kIdentityTol ? "=pass" : "=fail");
            if (res < best.residual) {
                best.residual = res;
                best.pass = res < kIdentityTol;
                if (best.pass) note += std::string(" (resolved S=") + cand.label + ")";
            }
        }
        best.note = note;
        out.push_back(best);
    }
    // (e) reversed CX by Hadamard conjugation
    out.push_back(check("cx-reversal-hadamard", cx_up(),
                        hadamard().kron(hadamard()) * cx_down() * hadamard().kron(hadamard())));
    // (f) Hadamard from native pulses
    out.push_back(check("hadamard-from-natives", hadamard(), z_plus() * x_plus() * z_plus()));
    // (g) Y-rotation identities (four sub-checks, worst residual reported)
    {
        double res = global_phase_distance(y_plus(), z_plus() * x_plus() * z_minus());
        res = std::max(res, global_phase_distance(y_minus(), z_minus() * x_plus() * z_plus()));
        res = std::max(res, global_phase_distance(y_plus(), hadamard() * pauli_z()));
        res = std::max(res, global_phase_distance(y_minus(), pauli_z() * hadamard()));
        out.push_back(IdentityCheck{"y-rotation-identities", res < kIdentityTol, res,
                                    "Y± = Z±X+Z∓, Y+ = HZ, Y- = ZH"});
    }
    // (h) CX from CZ
    out.push_back(check("cx-from-cz", cx_down(), compose_two_wire(cx_from_cz_seq())));
    // (i) CX from the ZZ entangler
    out.push_back(check("cx-from-zz", cx_down(), compose_two_wire(cx_from_zz_seq()),
                        "corrected sequence; published target dressing is axis-inconsistent"));
    // (j) Pauli expansion of CX
    {
        Mat sum(4);
        const Mat terms[] = {id2.kron(id2), pauli_z().kron(id2), id2.kron(pauli_x()),
                             pauli_z().kron(pauli_x()).scaled(-1.0)};
        for (const Mat& t : terms)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) sum.at(r, c) += 0.5 * t.at(r, c);
        out.push_back(check("cx-pauli-expansion", cx_down(), sum));
    }
    return out;
}

}  // namespace objbell::gates
