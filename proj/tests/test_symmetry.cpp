#include "spinlogic/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "spinlogic/errors.hpp"
#include "spinlogic/gates.hpp"

using namespace spinlogic;

namespace {

const SymmetryOp R12 = SymmetryOp::swap(3, 0, 1);
const SymmetryOp F1 = SymmetryOp::flip(3, 0);
const SymmetryOp F2 = SymmetryOp::flip(3, 1);
const SymmetryOp F3 = SymmetryOp::flip(3, 2);

SpinPolynomial random_poly(std::mt19937_64& rng, int n_spins) {
  SpinPolynomial h(n_spins);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> spin(0, n_spins - 1);
  for (int t = 0; t < 2 * n_spins; ++t) {
    std::vector<int> subset;
    const int k =
        1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(3, n_spins)));
    while (static_cast<int>(subset.size()) < k) {
      const int s = spin(rng);
      if (std::find(subset.begin(), subset.end(), s) == subset.end()) {
        subset.push_back(s);
      }
    }
    h.add_term(subset, coeff(rng));
  }
  return h;
}

SymmetryOp random_op(std::mt19937_64& rng, int n_spins) {
  std::vector<int> perm(static_cast<std::size_t>(n_spins));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::uint8_t> flip(static_cast<std::size_t>(n_spins));
  for (auto& f : flip) f = rng() & 1;
  return SymmetryOp(std::move(perm), std::move(flip));
}

}  // namespace

TEST_CASE("generator actions on single terms") {
  // F1 negates only the first variable.
  SpinPolynomial h(3);
  h.add_term({0}, 1.0);
  h.add_term({1}, 1.0);
  const SpinPolynomial flipped = F1.apply(h);
  CHECK(flipped.coeff({0}) == -1.0);
  CHECK(flipped.coeff({1}) == 1.0);

  // R12 relabels spin 1 <-> spin 2 (1-based), so s1*s3 -> s2*s3.
  SpinPolynomial pair(3);
  pair.add_term({0, 2}, 1.0);
  const SpinPolynomial swapped = R12.apply(pair);
  CHECK(swapped.coeff({1, 2}) == 1.0);
  CHECK(swapped.coeff({0, 2}) == 0.0);
}

TEST_CASE("defining relations of the group") {
  const SymmetryOp e = SymmetryOp::identity(3);
  CHECK(R12 * R12 == e);
  CHECK(F1 * F1 == e);
  CHECK(F3 * F3 == e);
  CHECK(R12 * F1 == F2 * R12);
  CHECK(F1 * F3 == F3 * F1);
  CHECK(R12 * F3 == F3 * R12);
}

TEST_CASE("group closure has order 16 with element orders dividing 8") {
  const auto& g = group_elements();
  CHECK(g.size() == 16);
  std::set<SymmetryOp> set(g.begin(), g.end());
  CHECK(set.size() == 16);
  for (const SymmetryOp& a : g) {
    CHECK(8 % a.order() == 0);
    CHECK(set.count(a.inverse()) == 1);
    for (const SymmetryOp& b : g) {
      CHECK(set.count(a * b) == 1);  // closure
    }
  }
  // Associativity on every triple of generators and a few arbitrary ones.
  for (const SymmetryOp& a : {R12, F1, F3}) {
    for (const SymmetryOp& b : g) {
      for (const SymmetryOp& c : {F2, R12 * F1}) {
        CHECK((a * b) * c == a * (b * c));
      }
    }
  }
}

TEST_CASE("generator words parse right-to-left") {
  CHECK(SymmetryOp::parse("F1.F2.R12", 3) == F1 * F2 * R12);
  CHECK(SymmetryOp::parse("e", 3) == SymmetryOp::identity(3));
  CHECK(SymmetryOp::parse("R12.F1", 3) == R12 * F1);
  CHECK(SymmetryOp::parse("R12.F1", 3) == SymmetryOp::parse("F2.R12", 3));
  CHECK_THROWS_AS(SymmetryOp::parse("F9", 3), LookupError);
  CHECK_THROWS_AS(SymmetryOp::parse("Q1", 3), LookupError);
  CHECK_THROWS_AS(SymmetryOp::parse("F1..R12", 3), LookupError);
}

TEST_CASE("table action: flips and swaps") {
  const TruthTable zero = TruthTable::from_bits("0000");
  const TruthTable one = TruthTable::from_bits("1111");
  CHECK(apply_to_table(F3, zero) == one);

  // Negating the input of a copy gate yields the negated-copy table.
  const TruthTable copy_x = TruthTable::from_bits("0011");
  const TruthTable not_x = TruthTable::from_bits("1100");
  CHECK(apply_to_table(F1, copy_x) == not_x);

  const TruthTable nand = TruthTable::from_bits("1110");
  CHECK(apply_to_table(R12, nand) == nand);

  // Swapping for an asymmetric table exchanges rows 01 and 10.
  const TruthTable andn1 = TruthTable::from_bits("0100");
  CHECK(apply_to_table(R12, andn1) == TruthTable::from_bits("0010"));

  // Permutations may not move the output spin.
  CHECK_THROWS_AS(apply_to_table(SymmetryOp::swap(3, 1, 2), nand),
                  PartitionError);
}

TEST_CASE("orbit partition of the 16 tables") {
  const auto parts = orbits();
  REQUIRE(parts.size() == 4);
  std::multiset<std::size_t> sizes;
  for (const Orbit& o : parts) sizes.insert(o.members.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 2, 4, 8});

  std::uint64_t total = 0;
  for (const Orbit& o : parts) total += o.members.size();
  CHECK(total == 16);

  auto orbit_of = [&](const TruthTable& t) -> const Orbit& {
    for (const Orbit& o : parts) {
      if (std::find(o.members.begin(), o.members.end(), t) !=
          o.members.end()) {
        return o;
      }
    }
    FAIL("table not found in any orbit");
    return parts.front();
  };
  const Orbit& nand_orbit = orbit_of(TruthTable::from_bits("1110"));
  CHECK(nand_orbit.members.size() == 8);
  CHECK(std::find(nand_orbit.members.begin(), nand_orbit.members.end(),
                  TruthTable::from_bits("1000")) != nand_orbit.members.end());

  const Orbit& xor_orbit = orbit_of(TruthTable::from_bits("0110"));
  CHECK(xor_orbit.members.size() == 2);
  CHECK(xor_orbit.members ==
        std::vector<TruthTable>{TruthTable::from_bits("0110"),
                                TruthTable::from_bits("1001")});
}

TEST_CASE("stabilizers") {
  const auto stab_nand = stabilizer(TruthTable::from_bits("1110"));
  REQUIRE(stab_nand.size() == 2);
  CHECK(std::find(stab_nand.begin(), stab_nand.end(),
                  SymmetryOp::identity(3)) != stab_nand.end());
  CHECK(std::find(stab_nand.begin(), stab_nand.end(), R12) !=
        stab_nand.end());

  CHECK(stabilizer(TruthTable::from_bits("0110")).size() == 8);

  // The constant tables are fixed by everything generated by input flips
  // and the swap; cross-check against an explicit closure.
  const auto stab_zero = stabilizer(TruthTable::from_bits("0000"));
  const auto closure = generate_group({F1, F2, R12});
  CHECK(stab_zero.size() == closure.size());
  CHECK(std::set<SymmetryOp>(stab_zero.begin(), stab_zero.end()) ==
        std::set<SymmetryOp>(closure.begin(), closure.end()));

  // Orbit-stabilizer identity across all 16 tables.
  for (const TruthTable& t : TruthTable::all(2)) {
    std::set<TruthTable> orbit;
    for (const SymmetryOp& g : group_elements()) {
      orbit.insert(apply_to_table(g, t));
    }
    CHECK(orbit.size() * stabilizer(t).size() == 16);
  }
}

TEST_CASE("spectrum invariance under random symmetries") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const SpinPolynomial h = random_poly(rng, n);
    const SymmetryOp g = random_op(rng, n);
    const SpinPolynomial gh = g.apply(h);

    const Spectrum sh = spectrum(h);
    const Spectrum sgh = spectrum(gh);
    REQUIRE(sh.levels.size() == sgh.levels.size());
    for (std::size_t i = 0; i < sh.levels.size(); ++i) {
      CHECK(sh.levels[i].energy == sgh.levels[i].energy);
      CHECK(sh.levels[i].multiplicity == sgh.levels[i].multiplicity);
    }

    // Ground sets map by (permute, flip).
    std::set<Assignment> mapped;
    for (const Assignment& a : sh.ground_states) mapped.insert(g.apply(a));
    CHECK(mapped == std::set<Assignment>(sgh.ground_states.begin(),
                                         sgh.ground_states.end()));
  }
}

TEST_CASE("gate and table transforms stay consistent") {
  using gates::GateKind;
  // For every constructed two-input gate H and every group element g,
  // the ground table of g(H) is the transformed table.
  auto ground_table = [](const SpinPolynomial& h) -> TruthTable {
    std::vector<std::uint8_t> out(4, 2);
    for (const Assignment& a : spectrum(h).ground_states) {
      const int row = (a.bit(0) << 1) | static_cast<int>(a.bit(1));
      out[static_cast<std::size_t>(row)] = a.bit(2);
    }
    return TruthTable(2, out);
  };
  for (GateKind k : {GateKind::And, GateKind::Or, GateKind::Nand,
                     GateKind::Nor, GateKind::AndN1, GateKind::AndN2,
                     GateKind::OrN1, GateKind::OrN2, GateKind::Xor,
                     GateKind::Equiv}) {
    const bool anc = gates::gate_needs_ancilla(k);
    const SpinPolynomial h = gates::gate_by_name(k);
    const TruthTable table = gates::gate_table(k);
    for (const SymmetryOp& g : group_elements()) {
      SymmetryOp lifted = g;
      if (anc) {
        // Extend to the four-spin gate, fixing the ancilla slot.
        std::vector<int> perm = g.perm();
        perm.push_back(3);
        std::vector<std::uint8_t> flip = g.flip_mask();
        flip.push_back(0);
        lifted = SymmetryOp(std::move(perm), std::move(flip));
      }
      CHECK(ground_table(lifted.apply(h)) == apply_to_table(g, table));
    }
  }
}

TEST_CASE("assignment action composes like the operator action") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const SymmetryOp a = random_op(rng, 5);
    const SymmetryOp b = random_op(rng, 5);
    const Assignment x = Assignment::from_index(5, rng() & 31);
    CHECK((a * b).apply(x) == a.apply(b.apply(x)));
    CHECK(a.inverse().apply(a.apply(x)) == x);
  }
}

TEST_CASE("hamiltonian action composes and respects dimension") {
  std::mt19937_64 rng(37);
  const SpinPolynomial h = random_poly(rng, 4);
  const SymmetryOp a = random_op(rng, 4);
  const SymmetryOp b = random_op(rng, 4);
  CHECK((a * b).apply(h) == a.apply(b.apply(h)));
  CHECK_THROWS_AS(random_op(rng, 3).apply(h), DimensionError);
}
