#pragma once

#include <string>
#include <vector>

#include "objbell/complexmat.hpp"

namespace objbell::gates {

// Rotation convention V_theta = exp(-i theta V / 2); V_± = V_{±pi/2}.
// Two-qubit matrices are written in the |FG> basis with F (the first wire)
// as the high bit, so "UV" juxtapositions in identities mean U.kron(V).

Mat identity1();
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

Mat x_rot(double theta);
Mat y_rot(double theta);
Mat z_rot(double theta);
Mat x_plus();
Mat x_minus();
Mat y_plus();
Mat y_minus();
Mat z_plus();
Mat z_minus();
Mat hadamard();
Mat s_phase();  // diag(1, i)

// Setting rotation (1/sqrt2) [[1, -i e^{i a}], [-i e^{-i a}, 1]].
// Throws std::invalid_argument for non-finite angles.
Mat s_gate(double angle);

Mat zz_rot(double theta);  // exp(-i theta (Z kron Z) / 2)
Mat cr_plus();   // (ZX)_{+pi/4}
Mat cr_minus();  // (ZX)_{-pi/4}
Mat ecr_down();  // (XI - YX)/sqrt2, self-inverse
Mat ecr_up();
Mat cx_down();
Mat cx_up();
Mat cz();
Mat zz_quarter();  // diag(1, i, i, 1)
Mat cxx_gate();    // 8x8: |F G1 G2> -> |F (G1^F) (G2^F)>, F the high bit

// Reversed two-qubit gate: <F'G'|U_up|FG> = <G'F'|U_down|GF>.
Mat reverse2(const Mat& u);

struct Gate {
    std::string name;
    int arity = 1;
    Mat matrix;
};

// One step of a two-wire decomposition; wires[0]/wires[1] are the control-side
// and target-side rails of the identity figures.
struct SeqOp {
    Gate gate;
    int wires[2] = {0, 0};
    int n_wires = 1;
};
using GateSequence = std::vector<SeqOp>;

// Composes a sequence listed in circuit (time) order into one 4x4 matrix:
// later ops multiply from the left.
Mat compose_two_wire(const GateSequence& seq);

// Native decompositions of CX(control=wire0 -> target=wire1), time order.
GateSequence cx_from_ecr_seq();
GateSequence cx_from_cz_seq();
GateSequence cx_from_zz_seq();

struct IdentityCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string note;
};

// Verifies the native-gate identity suite, each up to global phase at 1e-12.
// Failures are reported, never thrown.
std::vector<IdentityCheck> verify_appendix_identities();

}  // namespace objbell::gates
