#include "spinlogic/compiler.hpp"

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "spinlogic/errors.hpp"
#include "spinlogic/serialize.hpp"
#include "spinlogic/symmetry.hpp"

using namespace spinlogic;

namespace {

// Reads an unsigned value off named wires, least significant first.
std::uint64_t read_bits(const Assignment& a, const CompiledCircuit& c,
                        const std::vector<std::string>& wires) {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < wires.size(); ++k) {
    v |= static_cast<std::uint64_t>(a.bit(c.wire_index(wires[k]))) << k;
  }
  return v;
}

// Checks an n-bit ripple adder exhaustively against integer addition:
// every ground state's sum wires must read A+B, and every (A, B) pair
// must appear exactly once.
void check_adder_against_addition(const Netlist& net, int n_bits) {
  const CompiledCircuit c = compile(net);
  const Spectrum s = spectrum(c.hamiltonian);
  CHECK(s.ground_energy == c.ground_energy_expected);
  REQUIRE(s.ground_states.size() == (1ull << (2 * n_bits)));

  std::vector<std::string> a_wires, b_wires, s_wires;
  if (n_bits == 1) {
    a_wires = {"A"};
    b_wires = {"B"};
    s_wires = {"S", "C"};
  } else {
    for (int k = 1; k <= n_bits; ++k) {
      a_wires.push_back("A" + std::to_string(k));
      b_wires.push_back("B" + std::to_string(k));
      s_wires.push_back("S" + std::to_string(k));
    }
    s_wires.push_back("Cout");
  }

  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const Assignment& g : s.ground_states) {
    const std::uint64_t a = read_bits(g, c, a_wires);
    const std::uint64_t b = read_bits(g, c, b_wires);
    const std::uint64_t sum = read_bits(g, c, s_wires);
    CHECK(sum == a + b);
    CHECK(seen.emplace(a, b).second);  // one ground state per input pair
  }
}

}  // namespace

TEST_CASE("compile places gates deterministically") {
  const Netlist net = parse_netlist(
      "INPUT a b\n"
      "NAND a b -> c\n"
      "OUTPUT c\n");
  const CompiledCircuit c = compile(net);
  CHECK(c.wires == std::vector<std::string>{"a", "b", "c"});
  CHECK(c.roles[0] == WireRole::Input);
  CHECK(c.roles[2] == WireRole::Output);
  CHECK(c.hamiltonian == gates::nand_family({1, 1, 1}));
  CHECK(c.ground_energy_expected == -3.0);
  REQUIRE(c.placements.size() == 1);
  CHECK(c.placements[0].spins == std::vector<int>{0, 1, 2});
  CHECK(c.placements[0].stabilizer_size == 2);

  // Identical netlists compile to byte-identical serializations.
  CHECK(to_json(compile(net)) == to_json(c));
}

TEST_CASE("default parameters can be overridden per instance") {
  const Netlist net = parse_netlist(
      "INPUT a b\n"
      "NAND a b -> c c1=2 c2=1 c12=1\n"
      "OUTPUT c\n");
  const CompiledCircuit c = compile(net);
  CHECK(c.hamiltonian == gates::nand_family({2, 1, 1}));
  CHECK(c.ground_energy_expected == -4.0);

  const CompiledCircuit with_defaults =
      compile(parse_netlist("INPUT a b\nNAND a b -> c\nOUTPUT c\n"),
              {3, 3, 3});
  CHECK(with_defaults.hamiltonian == gates::nand_family({3, 3, 3}));
}

TEST_CASE("parity gates demand an ancilla wire") {
  const Netlist net = parse_netlist(
      "INPUT a b\n"
      "XOR a b -> y\n"
      "OUTPUT y\n");
  CHECK_THROWS_AS(compile(net), RoleError);
}

TEST_CASE("half adder variants") {
  const CompiledCircuit nand_ha = compile(half_adder(AdderVariant::AllNand));
  CHECK(nand_ha.wires.size() == 7);
  CHECK(nand_ha.placements.size() == 5);
  const CompiledCircuit std_ha = compile(half_adder(AdderVariant::Standard));
  CHECK(std_ha.wires.size() == 5);
  CHECK(std_ha.placements.size() == 2);
  CHECK(free_parameter_count(std_ha) == 6);

  for (const CompiledCircuit* c : {&nand_ha, &std_ha}) {
    const Netlist net = c->wires.size() == 7
                            ? half_adder(AdderVariant::AllNand)
                            : half_adder(AdderVariant::Standard);
    const VerifyReport report = verify(*c, net);
    CHECK(report.pass);
    CHECK(report.energy_matches);
    CHECK(report.table_matches);
    // Truth table: AB -> SC is 00->00, 01->10, 10->10, 11->01.
    REQUIRE(report.rows.size() == 4);
    std::map<std::string, std::string> table;
    for (const auto& row : report.rows) {
      table[row.input_bits] = row.output_bits;
    }
    CHECK(table.at("00") == "00");
    CHECK(table.at("01") == "10");
    CHECK(table.at("10") == "10");
    CHECK(table.at("11") == "01");
  }
}

TEST_CASE("clamped NAND has the single forced ground state") {
  const Netlist net = parse_netlist(
      "INPUT a b\n"
      "NAND a b -> c\n"
      "CLAMP a 1\n"
      "CLAMP b 1\n"
      "OUTPUT c\n");
  const CompiledCircuit c = compile(net);
  const Spectrum s = spectrum(c.hamiltonian);
  REQUIRE(s.ground_states.size() == 1);
  CHECK(s.ground_states[0].bits() == "110");
  CHECK(s.ground_energy == -3.0);  // pins add zero on satisfied states
  CHECK(verify(c, net).pass);
}

TEST_CASE("full adder variants") {
  const CompiledCircuit nand_fa = compile(full_adder(AdderVariant::AllNand));
  CHECK(nand_fa.wires.size() == 14);
  CHECK(nand_fa.placements.size() == 11);
  int nand_ancillas = 0;
  for (WireRole r : nand_fa.roles) {
    if (r == WireRole::Ancilla) ++nand_ancillas;
  }
  CHECK(nand_ancillas == 9);

  const CompiledCircuit std_fa = compile(full_adder(AdderVariant::Standard));
  CHECK(std_fa.wires.size() == 10);
  CHECK(std_fa.placements.size() == 5);
  int std_ancillas = 0;
  for (WireRole r : std_fa.roles) {
    if (r == WireRole::Ancilla) ++std_ancillas;
  }
  CHECK(std_ancillas == 5);

  for (AdderVariant v : {AdderVariant::AllNand, AdderVariant::Standard}) {
    const Netlist net = full_adder(v);
    const VerifyReport report = verify(compile(net), net);
    CHECK(report.pass);
    REQUIRE(report.rows.size() == 8);
    for (const auto& row : report.rows) {
      const int a = row.input_bits[0] - '0';
      const int b = row.input_bits[1] - '0';
      const int cin = row.input_bits[2] - '0';
      const int s = row.output_bits[0] - '0';
      const int cout = row.output_bits[1] - '0';
      CHECK(a + b + cin == s + 2 * cout);
    }
  }
}

TEST_CASE("ripple adder structure reproduces the reference counts") {
  const CompiledCircuit nand4 =
      compile(ripple_adder(4, AdderVariant::AllNand));
  CHECK(nand4.wires.size() == 46);
  CHECK(link_count(nand4) == 86);
  CHECK(nand4.placements.size() == 38);
  CHECK(free_parameter_count(nand4) == 114);
  CHECK(circuit_symmetry_bound(nand4) == (1ull << 38));

  const CompiledCircuit std4 =
      compile(ripple_adder(4, AdderVariant::Standard));
  CHECK(std4.wires.size() == 32);
  CHECK(link_count(std4) == 65);
  CHECK(std4.placements.size() == 17);
  CHECK(free_parameter_count(std4) == 51);
  CHECK(circuit_symmetry_bound(std4) == (1ull << 31));
  CHECK(circuit_symmetry_log2(std4) == 31.0);

  CHECK(ripple_adder(1, AdderVariant::AllNand) ==
        half_adder(AdderVariant::AllNand));
  CHECK_THROWS_AS(ripple_adder(0, AdderVariant::Standard), ParameterError);
}

TEST_CASE("single-gate bounds") {
  const CompiledCircuit c =
      compile(parse_netlist("INPUT a b\nNAND a b -> y\nOUTPUT y\n"));
  CHECK(circuit_symmetry_bound(c) == 2);
  const CompiledCircuit copy =
      compile(parse_netlist("INPUT a\nCOPY a y\nOUTPUT y\n"));
  CHECK(free_parameter_count(copy) == 0);
  CHECK(circuit_symmetry_bound(copy) == 1);
}

TEST_CASE("adders verify against integer addition") {
  check_adder_against_addition(ripple_adder(1, AdderVariant::AllNand), 1);
  check_adder_against_addition(ripple_adder(1, AdderVariant::Standard), 1);
  check_adder_against_addition(ripple_adder(2, AdderVariant::Standard), 2);
}

TEST_CASE("verification reconstructs its oracle from placements alone") {
  const Netlist net = parse_netlist(
      "INPUT a\n"
      "COPY a b c\n"
      "CONST1 -> k\n"
      "NAND b k -> y c1=2 c2=1 c12=1\n"
      "OUTPUT y\n");
  const CompiledCircuit c = compile(net);
  const Netlist rebuilt = netlist_from_placements(c);
  CHECK(verify(c, rebuilt).pass);
  CHECK(verify(c, net).pass);
  // Recompiling the reconstruction reproduces the Hamiltonian.
  CHECK(compile(rebuilt).hamiltonian == c.hamiltonian);
}

TEST_CASE("output wires may fan out into later gates") {
  const Netlist net = parse_netlist(
      "INPUT a b\n"
      "NAND a b -> y\n"
      "NOT y -> z\n"
      "OUTPUT y z\n");
  const CompiledCircuit c = compile(net);
  CHECK(c.wires == std::vector<std::string>{"a", "b", "y", "z"});
  const VerifyReport r = verify(c, net);
  CHECK(r.pass);
  for (const auto& row : r.rows) {
    CHECK(row.output_bits[1] == (row.output_bits[0] == '0' ? '1' : '0'));
  }
}

TEST_CASE("all-NAND compilations keep couplings positive") {
  for (int bits : {1, 2}) {
    const CompiledCircuit c =
        compile(ripple_adder(bits, AdderVariant::AllNand));
    for (const auto& [subset, coeff] : c.hamiltonian.terms()) {
      if (subset.size() == 2) CHECK(coeff > 0.0);
      if (subset.size() == 1) CHECK(coeff >= 0.0);
    }
  }
}

TEST_CASE("clamps cut the ground space down to matching states") {
  std::mt19937_64 rng(53);
  const Netlist base = half_adder(AdderVariant::Standard);
  const CompiledCircuit open = compile(base);
  const Spectrum open_spectrum = spectrum(open.hamiltonian);
  for (int trial = 0; trial < 8; ++trial) {
    Netlist clamped = base;
    const bool bit_a = rng() & 1;
    const bool bit_b = rng() & 1;
    clamped.clamps.push_back({"A", bit_a, 0});
    if (trial % 2 == 0) clamped.clamps.push_back({"B", bit_b, 0});
    const CompiledCircuit c = compile(clamped);
    const Spectrum s = spectrum(c.hamiltonian);

    std::set<Assignment> expect;
    for (const Assignment& g : open_spectrum.ground_states) {
      if (g.bit(open.wire_index("A")) != bit_a) continue;
      if (trial % 2 == 0 && g.bit(open.wire_index("B")) != bit_b) continue;
      expect.insert(g);
    }
    CHECK(std::set<Assignment>(s.ground_states.begin(),
                               s.ground_states.end()) == expect);
    CHECK(verify(c, clamped).pass);
  }
}

TEST_CASE("verify surfaces mismatches with a counterexample") {
  // A netlist whose Hamiltonian is deliberately broken: flip the carry
  // gate's output coupling by overriding compile output.
  const Netlist net = half_adder(AdderVariant::Standard);
  CompiledCircuit c = compile(net);
  c.ground_energy_expected -= 1.0;  // now the energy check must fail
  const VerifyReport r = verify(c, net);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.energy_matches);

  CompiledCircuit c2 = compile(net);
  c2.hamiltonian += gates::clamp(true).embed(
      {c2.wire_index("S")}, c2.hamiltonian.n_spins());
  const VerifyReport r2 = verify(c2, net);
  CHECK_FALSE(r2.pass);
  CHECK(r2.counterexample_bits.has_value());
}

TEST_CASE("unsatisfiable clamps are reported") {
  // The carry of a half adder cannot be 1 while an input is pinned to 0.
  Netlist net = half_adder(AdderVariant::Standard);
  net.clamps.push_back({"A", false, 0});
  net.clamps.push_back({"C", true, 0});
  const CompiledCircuit c = compile(net);
  const VerifyReport r = verify(c, net);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.clamps_satisfiable);
}

TEST_CASE("ancilla flips preserve the projected ground table") {
  for (AdderVariant v : {AdderVariant::Standard, AdderVariant::AllNand}) {
    const Netlist net = half_adder(v);
    const CompiledCircuit c = compile(net);
    std::vector<int> io_spins;
    std::vector<std::string> ancillas;
    for (std::size_t i = 0; i < c.roles.size(); ++i) {
      if (c.roles[i] == WireRole::Ancilla) {
        ancillas.push_back(c.wires[i]);
      } else {
        io_spins.push_back(static_cast<int>(i));
      }
    }
    auto projected = [&](const SpinPolynomial& h) {
      std::set<std::string> table;
      for (const Assignment& g : spectrum(h).ground_states) {
        std::string bits;
        for (int i : io_spins) bits += g.bit(i) ? '1' : '0';
        table.insert(bits);
      }
      return table;
    };
    const std::set<std::string> reference = projected(c.hamiltonian);
    for (const std::string& wire : ancillas) {
      const SpinPolynomial flipped = ancilla_flip(c, wire);
      CHECK(projected(flipped) == reference);
      // Flipping twice restores the original polynomial.
      CompiledCircuit once = c;
      once.hamiltonian = flipped;
      CHECK(ancilla_flip(once, wire) == c.hamiltonian);
    }
    CHECK_THROWS_AS(ancilla_flip(c, "A"), RoleError);
    CHECK_THROWS_AS(ancilla_flip(c, "nope"), LookupError);
  }
}

TEST_CASE("summand permutations are global symmetries of the full adder") {
  const Netlist net = full_adder(AdderVariant::Standard);
  const CompiledCircuit c = compile(net);
  const int n = c.hamiltonian.n_spins();
  std::vector<int> io_spins;
  for (std::size_t i = 0; i < c.roles.size(); ++i) {
    if (c.roles[i] != WireRole::Ancilla) io_spins.push_back(static_cast<int>(i));
  }
  auto projected = [&](const SpinPolynomial& h) {
    std::set<std::string> table;
    for (const Assignment& g : spectrum(h).ground_states) {
      std::string bits;
      for (int i : io_spins) bits += g.bit(i) ? '1' : '0';
      table.insert(bits);
    }
    return table;
  };
  const std::set<std::string> reference = projected(c.hamiltonian);
  const int a = c.wire_index("A");
  const int b = c.wire_index("B");
  const int cin = c.wire_index("Cin");
  const std::vector<SymmetryOp> perms = {
      SymmetryOp::swap(n, a, b),
      SymmetryOp::swap(n, a, cin),
      SymmetryOp::swap(n, b, cin),
      SymmetryOp::swap(n, a, b) * SymmetryOp::swap(n, b, cin),
      SymmetryOp::swap(n, b, cin) * SymmetryOp::swap(n, a, b),
  };
  for (const SymmetryOp& g : perms) {
    // Not gate-local: the transformed Hamiltonian differs...
    const SpinPolynomial transformed = g.apply(c.hamiltonian);
    // ...but the embedded Boolean function is unchanged.
    CHECK(projected(transformed) == reference);
  }
  CHECK(SymmetryOp::swap(n, a, cin).apply(c.hamiltonian) != c.hamiltonian);
}
