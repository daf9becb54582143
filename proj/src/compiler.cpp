#include "spinlogic/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "spinlogic/errors.hpp"
#include "spinlogic/symmetry.hpp"

namespace spinlogic {

std::string_view wire_role_name(WireRole r) {
  switch (r) {
    case WireRole::Input:
      return "input";
    case WireRole::Output:
      return "output";
    default:
      return "ancilla";
  }
}

int CompiledCircuit::wire_index(std::string_view name) const {
  if (auto idx = find_wire(name)) return *idx;
  throw LookupError("unknown wire '" + std::string(name) + "'");
}

std::optional<int> CompiledCircuit::find_wire(std::string_view name) const {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string_view adder_variant_name(AdderVariant v) {
  return v == AdderVariant::AllNand ? "all-nand" : "standard";
}

std::optional<AdderVariant> adder_variant_from_name(std::string_view name) {
  if (name == "all-nand") return AdderVariant::AllNand;
  if (name == "standard") return AdderVariant::Standard;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// compile

CompiledCircuit compile(const Netlist& n, const gates::NandParams& defaults) {
  CompiledCircuit c;
  c.wires = wire_order(n);
  const int n_spins = static_cast<int>(c.wires.size());

  std::map<std::string, int> index;
  for (int i = 0; i < n_spins; ++i) index[c.wires[static_cast<std::size_t>(i)]] = i;

  const std::set<std::string> inputs(n.inputs.begin(), n.inputs.end());
  const std::set<std::string> outputs(n.outputs.begin(), n.outputs.end());
  c.roles.reserve(c.wires.size());
  for (const std::string& w : c.wires) {
    const bool in = inputs.count(w) != 0;
    const bool out = outputs.count(w) != 0;
    if (in && out) {
      throw RoleError("wire '" + w + "' declared both INPUT and OUTPUT");
    }
    c.roles.push_back(in ? WireRole::Input
                         : out ? WireRole::Output : WireRole::Ancilla);
  }

  c.hamiltonian = SpinPolynomial(n_spins);
  for (const GateInstance& g : n.gates) {
    Placement pl;
    pl.kind = g.kind;
    SpinPolynomial base;
    if (g.kind == gates::GateKind::Copy && g.output.empty()) {
      base = gates::k_copy(static_cast<int>(g.inputs.size()));
      for (const std::string& w : g.inputs) pl.spins.push_back(index.at(w));
      const double k = static_cast<double>(g.inputs.size());
      c.ground_energy_expected -= k * (k - 1.0) / 2.0;
      pl.stabilizer_size = 1;
    } else {
      const gates::NandParams p = g.params.value_or(defaults);
      if (gates::gate_needs_ancilla(g.kind) && g.ancilla.empty()) {
        throw RoleError(std::string(gates::gate_kind_name(g.kind)) +
                        " at line " + std::to_string(g.line) +
                        " needs an ancilla wire (two-local parity gates "
                        "use four spins)");
      }
      base = gates::gate_by_name(g.kind, p.c1, p.c2, p.c12);
      for (const std::string& w : g.inputs) pl.spins.push_back(index.at(w));
      pl.spins.push_back(index.at(g.output));
      if (!g.ancilla.empty()) pl.spins.push_back(index.at(g.ancilla));
      if (gates::gate_parameterized(g.kind)) {
        pl.params = {p.c1, p.c2, p.c12};
      }
      c.ground_energy_expected +=
          gates::gate_ground_energy(g.kind, p.c1, p.c2, p.c12);
      pl.stabilizer_size = gates::gate_stabilizer_size(g.kind);
    }
    c.hamiltonian += base.remap(pl.spins, n_spins);
    c.placements.push_back(std::move(pl));
  }

  for (const ClampDirective& cl : n.clamps) {
    const int spin = index.at(cl.wire);
    c.hamiltonian += gates::clamp(cl.value).embed({spin}, n_spins);
    c.clamps.emplace_back(spin, cl.value);
  }
  return c;
}

// ---------------------------------------------------------------------------
// verify

namespace {

// Rebuilds the Boolean-oracle ground set: one full assignment per
// clamp-consistent input pattern.
std::vector<Assignment> oracle_ground_set(const CompiledCircuit& c,
                                          const Netlist& source,
                                          std::vector<int>* free_inputs_out) {
  std::map<std::string, bool> clamp_by_wire;
  for (const auto& [spin, bit] : c.clamps) {
    clamp_by_wire[c.wires[static_cast<std::size_t>(spin)]] = bit;
  }

  std::vector<std::string> free_inputs;
  for (const std::string& w : source.inputs) {
    if (!clamp_by_wire.count(w)) free_inputs.push_back(w);
  }
  if (free_inputs_out) {
    free_inputs_out->clear();
    for (const std::string& w : free_inputs) {
      free_inputs_out->push_back(c.wire_index(w));
    }
  }

  std::vector<Assignment> expected;
  const std::uint64_t patterns = 1ull << free_inputs.size();
  for (std::uint64_t pat = 0; pat < patterns; ++pat) {
    std::map<std::string, bool> in_values;
    for (const std::string& w : source.inputs) {
      if (auto it = clamp_by_wire.find(w); it != clamp_by_wire.end()) {
        in_values[w] = it->second;
      }
    }
    for (std::size_t k = 0; k < free_inputs.size(); ++k) {
      in_values[free_inputs[k]] = (pat >> k) & 1;
    }
    const auto valuation = evaluate_netlist(source, in_values);
    bool clamps_ok = true;
    for (const auto& [wire, bit] : clamp_by_wire) {
      if (auto it = valuation.find(wire);
          it != valuation.end() && it->second != bit) {
        clamps_ok = false;
        break;
      }
    }
    if (!clamps_ok) continue;
    Assignment a(static_cast<int>(c.wires.size()));
    for (std::size_t i = 0; i < c.wires.size(); ++i) {
      a.set_bit(static_cast<int>(i), valuation.at(c.wires[i]));
    }
    expected.push_back(std::move(a));
  }
  std::sort(expected.begin(), expected.end());
  return expected;
}

std::string project_bits(const Assignment& a, const std::vector<int>& spins) {
  std::string s;
  s.reserve(spins.size());
  for (int i : spins) s += a.bit(i) ? '1' : '0';
  return s;
}

}  // namespace

VerifyReport verify(const CompiledCircuit& c, const Netlist& source,
                    const SpectrumOptions& opt) {
  VerifyReport report;
  report.expected_energy = c.ground_energy_expected;

  const Spectrum sp = spectrum(c.hamiltonian, opt);
  report.ground_energy = sp.ground_energy;

  const std::vector<Assignment> expected =
      oracle_ground_set(c, source, nullptr);
  report.clamps_satisfiable = !expected.empty();

  const double tol = c.hamiltonian.integer_coefficients() ? 0.0 : opt.tol;
  report.energy_matches =
      report.clamps_satisfiable &&
      std::abs(sp.ground_energy - c.ground_energy_expected) <= tol;
  report.table_matches = sp.ground_states == expected;

  if (!report.table_matches) {
    // Surface the first state the two routes disagree on.
    std::set<Assignment> want(expected.begin(), expected.end());
    for (const Assignment& a : sp.ground_states) {
      if (!want.count(a)) {
        report.counterexample_bits = a.bits();
        report.counterexample_energy = c.hamiltonian.evaluate(a);
        break;
      }
    }
    if (!report.counterexample_bits) {
      std::set<Assignment> got(sp.ground_states.begin(),
                               sp.ground_states.end());
      for (const Assignment& a : expected) {
        if (!got.count(a)) {
          report.counterexample_bits = a.bits();
          report.counterexample_energy = c.hamiltonian.evaluate(a);
          break;
        }
      }
    }
  }

  std::vector<int> input_spins, output_spins, ancilla_spins;
  for (std::size_t i = 0; i < c.roles.size(); ++i) {
    if (c.roles[i] == WireRole::Input) input_spins.push_back(static_cast<int>(i));
    if (c.roles[i] == WireRole::Ancilla)
      ancilla_spins.push_back(static_cast<int>(i));
  }
  for (const std::string& w : source.outputs) {
    output_spins.push_back(c.wire_index(w));
  }
  for (const Assignment& a : expected) {
    report.rows.push_back({project_bits(a, input_spins),
                           project_bits(a, output_spins),
                           project_bits(a, ancilla_spins)});
  }

  report.pass = report.energy_matches && report.table_matches &&
                report.clamps_satisfiable;
  if (!report.clamps_satisfiable) {
    report.message = "no input pattern satisfies the clamps";
  } else if (!report.energy_matches) {
    report.message = "ground energy differs from the gate-energy sum";
  } else if (!report.table_matches) {
    report.message = "ground space differs from the Boolean oracle";
  } else {
    report.message = "ground space matches the Boolean oracle";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Adder generators

namespace {

void nand_gate(Netlist& n, const std::string& a, const std::string& b,
               const std::string& y) {
  GateInstance g;
  g.kind = gates::GateKind::Nand;
  g.inputs = {a, b};
  g.output = y;
  n.gates.push_back(std::move(g));
}

void gate2(Netlist& n, gates::GateKind kind, const std::string& a,
           const std::string& b, const std::string& y,
           const std::string& anc = {}) {
  GateInstance g;
  g.kind = kind;
  g.inputs = {a, b};
  g.output = y;
  g.ancilla = anc;
  n.gates.push_back(std::move(g));
}

// Five-NAND half-adder block writing sum and carry wires; interior wire
// names take the given prefix.
void all_nand_half_block(Netlist& n, const std::string& a,
                         const std::string& b, const std::string& sum,
                         const std::string& carry,
                         const std::string& prefix) {
  const std::string t = prefix + "t";
  const std::string u = prefix + "u";
  const std::string v = prefix + "v";
  nand_gate(n, a, b, t);
  nand_gate(n, a, t, u);
  nand_gate(n, b, t, v);
  nand_gate(n, u, v, sum);
  nand_gate(n, t, t, carry);
}

void standard_half_block(Netlist& n, const std::string& a,
                         const std::string& b, const std::string& sum,
                         const std::string& carry,
                         const std::string& prefix) {
  gate2(n, gates::GateKind::Xor, a, b, sum, prefix + "a");
  gate2(n, gates::GateKind::And, a, b, carry);
}

void all_nand_full_block(Netlist& n, const std::string& a,
                         const std::string& b, const std::string& cin,
                         const std::string& sum, const std::string& carry,
                         const std::string& prefix) {
  const std::string s1 = prefix + "s";
  all_nand_half_block(n, a, b, s1, prefix + "d1", prefix + "h1");
  all_nand_half_block(n, s1, cin, sum, prefix + "d2", prefix + "h2");
  // Both half-carries stay in place; the carry-out reads the two interior
  // NAND wires directly (t = NOT carry for each half).
  nand_gate(n, prefix + "h1t", prefix + "h2t", carry);
}

void standard_full_block(Netlist& n, const std::string& a,
                         const std::string& b, const std::string& cin,
                         const std::string& sum, const std::string& carry,
                         const std::string& prefix) {
  const std::string s1 = prefix + "s";
  const std::string c1 = prefix + "d1";
  const std::string c2 = prefix + "d2";
  gate2(n, gates::GateKind::Xor, a, b, s1, prefix + "a1");
  gate2(n, gates::GateKind::And, a, b, c1);
  gate2(n, gates::GateKind::Xor, s1, cin, sum, prefix + "a2");
  gate2(n, gates::GateKind::And, s1, cin, c2);
  gate2(n, gates::GateKind::Or, c1, c2, carry);
}

}  // namespace

Netlist half_adder(AdderVariant v) {
  Netlist n;
  n.inputs = {"A", "B"};
  n.outputs = {"S", "C"};
  if (v == AdderVariant::AllNand) {
    all_nand_half_block(n, "A", "B", "S", "C", "");
  } else {
    standard_half_block(n, "A", "B", "S", "C", "");
  }
  return n;
}

Netlist full_adder(AdderVariant v) {
  Netlist n;
  n.inputs = {"A", "B", "Cin"};
  n.outputs = {"S", "Cout"};
  if (v == AdderVariant::AllNand) {
    all_nand_full_block(n, "A", "B", "Cin", "S", "Cout", "");
  } else {
    standard_full_block(n, "A", "B", "Cin", "S", "Cout", "");
  }
  return n;
}

Netlist ripple_adder(int n_bits, AdderVariant v) {
  if (n_bits < 1) throw ParameterError("adder needs at least one bit");
  if (n_bits == 1) return half_adder(v);
  Netlist n;
  for (int k = 1; k <= n_bits; ++k) n.inputs.push_back("A" + std::to_string(k));
  for (int k = 1; k <= n_bits; ++k) n.inputs.push_back("B" + std::to_string(k));
  for (int k = 1; k <= n_bits; ++k) {
    n.outputs.push_back("S" + std::to_string(k));
  }
  n.outputs.push_back("Cout");

  std::string carry = "c1";
  if (v == AdderVariant::AllNand) {
    all_nand_half_block(n, "A1", "B1", "S1", carry, "ha_");
  } else {
    standard_half_block(n, "A1", "B1", "S1", carry, "ha_");
  }
  for (int k = 2; k <= n_bits; ++k) {
    const std::string next =
        k == n_bits ? std::string("Cout") : "c" + std::to_string(k);
    const std::string prefix = "fa" + std::to_string(k) + "_";
    const std::string a = "A" + std::to_string(k);
    const std::string b = "B" + std::to_string(k);
    const std::string s = "S" + std::to_string(k);
    if (v == AdderVariant::AllNand) {
      all_nand_full_block(n, a, b, carry, s, next, prefix);
    } else {
      standard_full_block(n, a, b, carry, s, next, prefix);
    }
    carry = next;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Circuit-level measures

int free_parameter_count(const CompiledCircuit& c) {
  int parameterized = 0;
  for (const Placement& p : c.placements) {
    if (!p.params.empty()) ++parameterized;
  }
  return 3 * parameterized;
}

std::uint64_t circuit_symmetry_bound(const CompiledCircuit& c) {
  unsigned __int128 product = 1;
  for (const Placement& p : c.placements) {
    product *= p.stabilizer_size;
    if (product > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError(
          "symmetry bound exceeds 64 bits; use circuit_symmetry_log2");
    }
  }
  return static_cast<std::uint64_t>(product);
}

double circuit_symmetry_log2(const CompiledCircuit& c) {
  double bits = 0.0;
  for (const Placement& p : c.placements) {
    bits += std::log2(static_cast<double>(p.stabilizer_size));
  }
  return bits;
}

SpinPolynomial ancilla_flip(const CompiledCircuit& c,
                            std::string_view ancilla_wire) {
  const int spin = c.wire_index(ancilla_wire);
  if (c.roles[static_cast<std::size_t>(spin)] != WireRole::Ancilla) {
    throw RoleError("wire '" + std::string(ancilla_wire) +
                    "' is not an ancilla (role: " +
                    std::string(wire_role_name(
                        c.roles[static_cast<std::size_t>(spin)])) +
                    ")");
  }
  return SymmetryOp::flip(c.hamiltonian.n_spins(), spin)
      .apply(c.hamiltonian);
}

int link_count(const CompiledCircuit& c) {
  int links = 0;
  for (const auto& [subset, coeff] : c.hamiltonian.terms()) {
    if (subset.size() == 2) ++links;
  }
  return links;
}

Netlist netlist_from_placements(const CompiledCircuit& c) {
  Netlist n;
  for (std::size_t i = 0; i < c.wires.size(); ++i) {
    if (c.roles[i] == WireRole::Input) n.inputs.push_back(c.wires[i]);
    if (c.roles[i] == WireRole::Output) n.outputs.push_back(c.wires[i]);
  }
  for (const Placement& p : c.placements) {
    GateInstance g;
    g.kind = p.kind;
    auto wire = [&](std::size_t k) {
      return c.wires[static_cast<std::size_t>(p.spins[k])];
    };
    if (p.kind == gates::GateKind::Copy) {
      for (std::size_t k = 0; k < p.spins.size(); ++k) {
        g.inputs.push_back(wire(k));
      }
    } else {
      const std::size_t arity =
          static_cast<std::size_t>(gates::gate_arity(p.kind));
      for (std::size_t k = 0; k < arity; ++k) g.inputs.push_back(wire(k));
      g.output = wire(arity);
      if (p.spins.size() > arity + 1) g.ancilla = wire(arity + 1);
    }
    if (p.params.size() == 3) {
      g.params = gates::NandParams{p.params[0], p.params[1], p.params[2]};
    } else if (!p.params.empty()) {
      throw DomainError("placement carries " +
                        std::to_string(p.params.size()) +
                        " couplings; expected 3");
    }
    n.gates.push_back(std::move(g));
  }
  for (const auto& [spin, bit] : c.clamps) {
    n.clamps.push_back({c.wires[static_cast<std::size_t>(spin)], bit, 0});
  }
  return n;
}

}  // namespace spinlogic
