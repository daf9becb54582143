#include "spinlogic/gates.hpp"

#include <array>
#include <cmath>

#include "spinlogic/errors.hpp"

namespace spinlogic {
namespace gates {

namespace {

void require_positive(const NandParams& p) {
  if (!(p.c1 > 0.0) || !(p.c2 > 0.0) || !(p.c12 > 0.0)) {
    throw ParameterError("NAND-family couplings must be strictly positive");
  }
  if (!std::isfinite(p.c1) || !std::isfinite(p.c2) || !std::isfinite(p.c12)) {
    throw ParameterError("NAND-family couplings must be finite");
  }
}

void require_above_half(const XorParams& p) {
  if (!(p.c1 > 0.5) || !(p.c2 > 0.5) || !(p.c12 > 0.5)) {
    throw ParameterError(
        "XOR-family couplings must be strictly greater than 1/2");
  }
  if (!std::isfinite(p.c1) || !std::isfinite(p.c2) || !std::isfinite(p.c12)) {
    throw ParameterError("XOR-family couplings must be finite");
  }
}

}  // namespace

SpinPolynomial nand3local() {
  SpinPolynomial h(3);
  h.add_term({}, 2.0);
  h.add_term({2}, 1.0);
  h.add_term({0, 2}, 1.0);
  h.add_term({1, 2}, 1.0);
  h.add_term({0, 1, 2}, -1.0);
  return h;
}

SpinPolynomial nand_family(const NandParams& p) {
  require_positive(p);
  SpinPolynomial h(3);
  h.add_term({0}, p.c1);
  h.add_term({1}, p.c2);
  h.add_term({2}, p.c1 + p.c2);
  h.add_term({0, 1}, p.c12);
  h.add_term({0, 2}, p.c12 + p.c1);
  h.add_term({1, 2}, p.c12 + p.c2);
  return h;
}

SpinPolynomial nand_orbit(const NandParams& p, const OrbitPoint& o) {
  require_positive(p);
  const double sx = o.negate_in1 ? -1.0 : 1.0;
  const double sy = o.negate_in2 ? -1.0 : 1.0;
  const double sz = o.negate_out ? -1.0 : 1.0;
  SpinPolynomial h(3);
  h.add_term({0}, sx * p.c1);
  h.add_term({1}, sy * p.c2);
  h.add_term({2}, sz * (p.c1 + p.c2));
  h.add_term({0, 1}, sx * sy * p.c12);
  h.add_term({0, 2}, sx * sz * (p.c12 + p.c1));
  h.add_term({1, 2}, sy * sz * (p.c12 + p.c2));
  return h;
}

double nand_orbit_ground_energy(const NandParams& p) {
  // Spin negation is a spectrum-preserving bijection, so every orbit
  // point shares the base family's ground energy.
  return -(p.c1 + p.c2 + p.c12);
}

SpinPolynomial xor3local() {
  SpinPolynomial h(3);
  h.add_term({0, 1, 2}, -1.0);
  return h;
}

SpinPolynomial swap_symmetric(const SwapSymmetricCoeffs& r) {
  SpinPolynomial h(4);
  for (int i = 0; i < 3; ++i) h.add_term({i}, r.r_z);
  h.add_term({0, 1}, r.r_zz);
  h.add_term({0, 2}, r.r_zz);
  h.add_term({1, 2}, r.r_zz);
  h.add_term({3}, r.r_4);
  for (int i = 0; i < 3; ++i) h.add_term({i, 3}, r.r_z4);
  return h;
}

SwapSymmetricCoeffs xor_decomposition_coeffs(bool ancilla_flipped) {
  // Under the x = (1-s)/2 bit convention used here, the two unit-coupling
  // XOR decompositions carry these coefficient vectors; negating the
  // ancilla (F4) exchanges them by flipping the last two entries.
  if (ancilla_flipped) return {-1.0, 1.0, 2.0, -2.0};
  return {-1.0, 1.0, -2.0, 2.0};
}

SpinPolynomial xor_family(const XorParams& p) {
  require_above_half(p);
  // Negated-input AND block on (in1, in2, anc): flip both inputs and the
  // target of the NAND family placed on spins (0, 1, 3).
  SpinPolynomial block =
      nand_family({p.c1, p.c2, p.c12}).embed({0, 1, 3}, 4);
  SymmetryOp flips = SymmetryOp::flip(4, 0) * SymmetryOp::flip(4, 1) *
                     SymmetryOp::flip(4, 3);
  SpinPolynomial h = flips.apply(block);
  // Output tail tying spin 2 to the parity of the inputs via the ancilla.
  h.add_term({2}, -1.0);
  h.add_term({0, 2}, 1.0);
  h.add_term({1, 2}, 1.0);
  h.add_term({2, 3}, 2.0);
  return h;
}

double xor_family_ground_energy(const XorParams& p) {
  return -(p.c1 + p.c2 + p.c12) - 1.0;
}

SpinPolynomial k_copy(int k) {
  if (k < 2) {
    throw ParameterError("k-COPY needs at least two spins");
  }
  SpinPolynomial h(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) h.add_term({i, j}, -1.0);
  }
  return h;
}

SpinPolynomial clamp(bool bit_value) {
  SpinPolynomial h(1);
  h.add_term({}, 0.5);
  h.add_term({0}, bit_value ? 0.5 : -0.5);
  return h;
}

// ---------------------------------------------------------------------------
// Named gates

namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool parameterized;
  bool ancilla;
  std::string_view table;  // two-input rows 00,01,10,11
};

constexpr std::array<GateInfo, 14> kGates = {{
    {GateKind::Zero, "ZERO", 0, false, false, "0000"},
    {GateKind::One, "ONE", 0, false, false, "1111"},
    {GateKind::Copy, "COPY", 1, false, false, "0011"},
    {GateKind::Not, "NOT", 1, false, false, "1100"},
    {GateKind::And, "AND", 2, true, false, "0001"},
    {GateKind::Or, "OR", 2, true, false, "0111"},
    {GateKind::Nand, "NAND", 2, true, false, "1110"},
    {GateKind::Nor, "NOR", 2, true, false, "1000"},
    {GateKind::AndN1, "ANDN1", 2, true, false, "0100"},
    {GateKind::AndN2, "ANDN2", 2, true, false, "0010"},
    {GateKind::OrN1, "ORN1", 2, true, false, "1101"},
    {GateKind::OrN2, "ORN2", 2, true, false, "1011"},
    {GateKind::Xor, "XOR", 2, true, true, "0110"},
    {GateKind::Equiv, "EQUIV", 2, true, true, "1001"},
}};

const GateInfo& info(GateKind k) {
  return kGates[static_cast<std::size_t>(k)];
}

// First group element carrying the NAND table onto `target`, in the
// canonical element order. The orbit has two such elements per target;
// picking the first keeps construction deterministic.
const SymmetryOp& nand_transport(const TruthTable& target) {
  static const TruthTable nand_table = TruthTable::from_bits("1110");
  for (const SymmetryOp& g : group_elements()) {
    if (apply_to_table(g, nand_table) == target) return g;
  }
  throw LookupError("table is not on the NAND orbit: " + target.bits());
}

}  // namespace

std::string_view gate_kind_name(GateKind k) { return info(k).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const GateInfo& g : kGates) {
    if (g.name == name) return g.kind;
  }
  return std::nullopt;
}

int gate_arity(GateKind k) { return info(k).arity; }
bool gate_parameterized(GateKind k) { return info(k).parameterized; }
bool gate_needs_ancilla(GateKind k) { return info(k).ancilla; }

TruthTable gate_table(GateKind k) {
  return TruthTable::from_bits(info(k).table);
}

TruthTable gate_function(GateKind k) {
  switch (info(k).arity) {
    case 0:
      return TruthTable(0, {info(k).table[0] == '1'
                                ? std::uint8_t{1}
                                : std::uint8_t{0}});
    case 1: {
      // Rows 0,1 in the first input; the second input of the two-input
      // table is extraneous.
      const std::string_view t = info(k).table;
      return TruthTable(1, {static_cast<std::uint8_t>(t[0] - '0'),
                            static_cast<std::uint8_t>(t[2] - '0')});
    }
    default:
      return gate_table(k);
  }
}

SpinPolynomial gate_by_name(GateKind k, double c1, double c2, double c12) {
  switch (k) {
    case GateKind::Zero: {
      SpinPolynomial h(1);
      h.add_term({}, 1.0);
      h.add_term({0}, -1.0);
      return h;
    }
    case GateKind::One: {
      SpinPolynomial h(1);
      h.add_term({}, 1.0);
      h.add_term({0}, 1.0);
      return h;
    }
    case GateKind::Copy: {
      SpinPolynomial h(2);
      h.add_term({}, 1.0);
      h.add_term({0, 1}, -1.0);
      return h;
    }
    case GateKind::Not: {
      SpinPolynomial h(2);
      h.add_term({}, 1.0);
      h.add_term({0, 1}, 1.0);
      return h;
    }
    case GateKind::Xor:
      return xor_family({c1, c2, c12});
    case GateKind::Equiv:
      return SymmetryOp::flip(4, 2).apply(xor_family({c1, c2, c12}));
    default:
      return nand_transport(gate_table(k))
          .apply(nand_family({c1, c2, c12}));
  }
}

double gate_ground_energy(GateKind k, double c1, double c2, double c12) {
  switch (k) {
    case GateKind::Zero:
    case GateKind::One:
    case GateKind::Copy:
    case GateKind::Not:
      return 0.0;
    case GateKind::Xor:
    case GateKind::Equiv:
      return -(c1 + c2 + c12) - 1.0;
    default:
      return -(c1 + c2 + c12);
  }
}

std::uint64_t gate_stabilizer_size(GateKind k) {
  if (!gate_parameterized(k)) return 1;
  return stabilizer(gate_table(k)).size();
}

}  // namespace gates
}  // namespace spinlogic
