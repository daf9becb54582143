#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spinlogic/spin_poly.hpp"
#include "spinlogic/symmetry.hpp"

namespace spinlogic {
namespace gates {

/// Couplings of the three-parameter NAND-orbit family. All three must be
/// strictly positive for the gate's truth table to span the ground space.
struct NandParams {
  double c1 = 1.0;
  double c2 = 1.0;
  double c12 = 1.0;
};

/// Couplings of the four-spin parity family. All three must be strictly
/// greater than 1/2; below that bound excited states cross into the
/// ground space.
struct XorParams {
  double c1 = 1.0;
  double c2 = 1.0;
  double c12 = 1.0;
};

/// Coefficients [r_z, r_zz, r_4, r_z4] of the general swap-symmetric
/// Hamiltonian over four spins with two-spin couplings:
///   r_z*(s1+s2+s3) + r_zz*(s1s2+s1s3+s2s3) + s4*(r_4 + r_z4*(s1+s2+s3)).
struct SwapSymmetricCoeffs {
  double r_z = 0.0;
  double r_zz = 0.0;
  double r_4 = 0.0;
  double r_z4 = 0.0;
};

/// Indicator bits selecting a point on the NAND orbit: negate the first
/// input, the second input, and/or the output.
struct OrbitPoint {
  bool negate_in1 = false;
  bool negate_in2 = false;
  bool negate_out = false;
};

/// Three-spin NAND with a genuine three-spin term:
///   2 + (1 + s1 + s2 - s1*s2) * s3.
SpinPolynomial nand3local();

/// The two-local three-parameter NAND family on spins (in1, in2, out):
///   (c1*s1 + c2*s2)(1 + s3) + (c1 + c2)*s3 + c12*(s1s2 + s1s3 + s2s3).
/// Ground space is {001, 011, 101, 110} at energy -(c1+c2+c12) for every
/// valid parameter choice. Throws ParameterError on non-positive inputs.
SpinPolynomial nand_family(const NandParams& p);

/// Sign-decorated NAND family covering the whole orbit: each indicator
/// bit negates the corresponding spin's variable. At (0,0,0) this is
/// nand_family(p). The ground energy is -(c1+c2+c12) at every orbit
/// point (spin negation permutes the spectrum without changing it).
SpinPolynomial nand_orbit(const NandParams& p, const OrbitPoint& o);

/// Closed-form ground energy shared by every nand_orbit point.
double nand_orbit_ground_energy(const NandParams& p);

/// Three-spin XOR, -s1*s2*s3: ground space is the even-parity class,
/// i.e. exactly the rows with out = in1 XOR in2.
SpinPolynomial xor3local();

/// General swap-symmetric four-spin Hamiltonian (see SwapSymmetricCoeffs).
SpinPolynomial swap_symmetric(const SwapSymmetricCoeffs& r);

/// The swap-symmetric coefficient vectors whose ground space embeds XOR
/// at unit couplings. The two are exchanged by negating the ancilla.
SwapSymmetricCoeffs xor_decomposition_coeffs(bool ancilla_flipped);

/// Two-local four-spin XOR family on spins (in1, in2, out, anc): a
/// negated-input AND block targeting the ancilla plus the output tail
///   -s3 + s1s3 + s2s3 + 2*s3s4.
/// Ground space has exactly four states realizing out = in1 XOR in2,
/// with anc = NOR(in1, in2). Throws ParameterError when any coupling is
/// <= 1/2.
SpinPolynomial xor_family(const XorParams& p);

/// Ground energy of xor_family: -(c1+c2+c12) - 1.
double xor_family_ground_energy(const XorParams& p);

/// Ferromagnetic equality gadget over k >= 2 spins:
///   -(1/2) * sum_{i != j} s_i s_j = -sum_{i<j} s_i s_j.
/// Ground space is {all zeros, all ones} at energy -k(k-1)/2.
SpinPolynomial k_copy(int k);

/// Single-spin input pin: (1/2)(1 + (-1)^(1-x) * s). Zero energy exactly
/// when the spin's bit equals bit_value, one otherwise.
SpinPolynomial clamp(bool bit_value);

enum class GateKind {
  Zero,
  One,
  Copy,
  Not,
  And,
  Or,
  Nand,
  Nor,
  AndN1,  // !a & b
  AndN2,  // a & !b
  OrN1,   // !a | b
  OrN2,   // a | !b
  Xor,
  Equiv,
};

/// Canonical upper-case name, e.g. "NAND".
std::string_view gate_kind_name(GateKind k);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Number of input legs (0 for constants, 1 for copy-type, 2 otherwise).
int gate_arity(GateKind k);
/// True for the two-input families that carry (c1, c2, c12).
bool gate_parameterized(GateKind k);
/// True for Xor/Equiv, which need an ancilla leg.
bool gate_needs_ancilla(GateKind k);

/// The gate's two-input truth table ("row" order 00,01,10,11). Copy-type
/// and constant gates are reported as tables in the first input.
TruthTable gate_table(GateKind k);

/// Truth table over the gate's own arity (1 row for constants, 2 rows
/// for copy-type, 4 rows otherwise).
TruthTable gate_function(GateKind k);

/// Constructs the gate Hamiltonian on its minimal spin layout: inputs
/// first, then the output, then the ancilla if any. Constants use one
/// spin, copy-type two, the AND/OR orbit three, parity gates four.
/// Two-input family members are produced by transporting nand_family or
/// xor_family along the symmetry group. `c1,c2,c12` apply only to
/// parameterized gates and default to 1.
SpinPolynomial gate_by_name(GateKind k, double c1 = 1.0, double c2 = 1.0,
                            double c12 = 1.0);

/// Closed-form ground energy of gate_by_name with the same arguments.
double gate_ground_energy(GateKind k, double c1 = 1.0, double c2 = 1.0,
                          double c12 = 1.0);

/// Size of the gate's table stabilizer inside the order-16 group (used
/// for circuit symmetry lower bounds). Two-input gates use the table
/// stabilizer; other kinds contribute the trivial factor 1.
std::uint64_t gate_stabilizer_size(GateKind k);

}  // namespace gates
}  // namespace spinlogic
