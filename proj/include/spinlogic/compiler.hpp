#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spinlogic/netlist.hpp"
#include "spinlogic/spin_poly.hpp"

namespace spinlogic {

enum class WireRole { Input, Output, Ancilla };

std::string_view wire_role_name(WireRole r);

/// One placed gate: which spins its legs landed on, the couplings used,
/// and the size of its table stabilizer (the factor it contributes to
/// the circuit symmetry lower bound).
struct Placement {
  gates::GateKind kind;
  std::vector<int> spins;  // inputs..., output, then ancilla if any
  std::vector<double> params;  // (c1, c2, c12) for parameterized kinds
  std::uint64_t stabilizer_size = 1;
};

/// A netlist lowered to a diagonal Hamiltonian with bookkeeping.
struct CompiledCircuit {
  SpinPolynomial hamiltonian;
  std::vector<std::string> wires;  // spin index -> wire name
  std::vector<WireRole> roles;     // parallel to wires
  std::vector<Placement> placements;
  std::vector<std::pair<int, bool>> clamps;  // (spin, pinned bit)
  double ground_energy_expected = 0.0;  // sum of gate ground energies

  int wire_index(std::string_view name) const;  // LookupError if unknown
  std::optional<int> find_wire(std::string_view name) const;
};

enum class AdderVariant { AllNand, Standard };

std::string_view adder_variant_name(AdderVariant v);
std::optional<AdderVariant> adder_variant_from_name(std::string_view name);

/// Lowers a netlist: each gate's Hamiltonian is constructed, placed on
/// its wires' spins (legs may share a wire), and summed together with
/// the clamp pins. Spin numbering is deterministic: inputs in
/// declaration order, internal wires in first-use order, outputs last.
/// Throws RoleError when a parity gate lacks its ancilla wire.
CompiledCircuit compile(const Netlist& n,
                        const gates::NandParams& defaults = {1, 1, 1});

/// Exhaustive verification report. `rows` lists, per free input
/// pattern, the output and ancilla bits found in the ground space.
struct VerifyReport {
  bool pass = false;
  bool energy_matches = false;
  bool table_matches = false;
  bool clamps_satisfiable = true;
  double ground_energy = 0.0;
  double expected_energy = 0.0;

  struct Row {
    std::string input_bits;    // input wires, spin order
    std::string output_bits;   // output wires, declaration order
    std::string ancilla_bits;  // remaining wires, spin order
  };
  std::vector<Row> rows;

  // First offending assignment when the ground space disagrees with the
  // Boolean oracle.
  std::optional<std::string> counterexample_bits;
  std::optional<double> counterexample_energy;
  std::string message;
};

/// Checks a compiled circuit against the pure-Boolean oracle: the ground
/// energy must equal the gate-energy sum and the ground space must be
/// exactly one state per clamp-consistent input pattern, whose wires
/// carry the oracle's values. Throws CapacityError beyond the
/// enumeration cap.
VerifyReport verify(const CompiledCircuit& c, const Netlist& source,
                    const SpectrumOptions& opt = {});

/// Half adder netlists. AllNand is the five-gate decomposition
///   t=NAND(A,B); u=NAND(A,t); v=NAND(B,t); S=NAND(u,v); C=NAND(t,t)
/// over seven wires; Standard is XOR(A,B->S) + AND(A,B->C) over five.
Netlist half_adder(AdderVariant v);

/// Full adder netlists. AllNand chains two all-NAND half adders and
/// takes C_out = NAND(t1, t2), keeping both per-half carry wires: 11
/// gates, 14 wires, 9 ancillas. Standard uses 2 XOR + 2 AND + 1 OR
/// over 10 wires.
Netlist full_adder(AdderVariant v);

/// n-bit ripple-carry adder: one half adder plus n-1 full adders, the
/// carry-out of each stage feeding the next stage's carry-in.
/// ripple_adder(1, v) is exactly half_adder(v).
Netlist ripple_adder(int n_bits, AdderVariant v);

/// 3 x (number of parameterized gate instances).
int free_parameter_count(const CompiledCircuit& c);

/// Product of the per-gate stabilizer sizes: a lower bound on the order
/// of the compiled Hamiltonian's symmetry group. Throws CapacityError
/// if the product overflows 64 bits (see circuit_symmetry_log2).
std::uint64_t circuit_symmetry_bound(const CompiledCircuit& c);

/// log2 of the same product; exact for power-of-two stabilizers.
double circuit_symmetry_log2(const CompiledCircuit& c);

/// The circuit Hamiltonian with the named ancilla's variable negated in
/// every term. The ground space projected onto all other wires is
/// unchanged. Throws RoleError unless the wire is an ancilla.
SpinPolynomial ancilla_flip(const CompiledCircuit& c,
                            std::string_view ancilla_wire);

/// Distinct spin pairs with nonzero net two-spin coefficient. This is
/// the link count reported for interaction networks.
int link_count(const CompiledCircuit& c);

/// Rebuilds a netlist from a compiled circuit's placements, roles and
/// clamps (gate parameters become explicit). Reconstructing and
/// recompiling yields the same Hamiltonian, which lets verification run
/// from a serialized circuit alone.
Netlist netlist_from_placements(const CompiledCircuit& c);

}  // namespace spinlogic
