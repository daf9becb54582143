#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinlogic/spin_poly.hpp"

namespace spinlogic {

/// A spin permutation combined with a per-spin negation mask. Acting on a
/// Hamiltonian, the operation substitutes
///     sigma_k  ->  (-1)^flip[k] * sigma_perm[k]
/// so single flips negate one variable and swaps exchange two labels.
/// Elements compose associatively in normal form, which makes group
/// checks mechanical.
class SymmetryOp {
 public:
  SymmetryOp() = default;
  SymmetryOp(std::vector<int> perm, std::vector<std::uint8_t> flip);

  static SymmetryOp identity(int n_spins);
  /// Negates spin i.
  static SymmetryOp flip(int n_spins, int i);
  /// Swaps spins i and j.
  static SymmetryOp swap(int n_spins, int i, int j);

  /// Parses a generator word over {R12, F1, F2, F3, ...} separated by
  /// '.', e.g. "F1.F2.R12". Labels are 1-based; Fk negates spin k-1 and
  /// Rij swaps spins i-1 and j-1 (single-digit indices). The word is
  /// applied right-to-left, matching operator composition.
  static SymmetryOp parse(std::string_view word, int n_spins);

  int n_spins() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<std::uint8_t>& flip_mask() const { return flip_; }
  bool is_identity() const;

  /// Composition: (a * b) acts as a after b.
  friend SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b);
  SymmetryOp inverse() const;
  /// Smallest k >= 1 with op^k = identity.
  int order() const;

  /// Pushes an assignment forward: the bit at perm[k] of the result is
  /// bit k of the input XOR flip[k]. This is the bijection that carries
  /// the ground space of H onto the ground space of the transformed H.
  Assignment apply(const Assignment& a) const;

  /// Transforms a Hamiltonian: each term's subset is permuted and its
  /// coefficient picks up (-1)^(flipped spins in the subset).
  SpinPolynomial apply(const SpinPolynomial& h) const;

  bool operator==(const SymmetryOp& other) const = default;
  bool operator<(const SymmetryOp& other) const;

  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<std::uint8_t> flip_;
};

/// Truth table of an n-input, one-output Boolean function. Row index
/// packs the inputs with input 0 as the most significant bit, so for two
/// inputs the rows run 00, 01, 10, 11.
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(int n_inputs, std::vector<std::uint8_t> outputs);

  /// Builds from a row string, e.g. "1110" for two inputs.
  static TruthTable from_bits(std::string_view bits);

  int n_inputs() const { return n_inputs_; }
  const std::vector<std::uint8_t>& outputs() const { return out_; }
  std::uint8_t output(int row) const {
    return out_[static_cast<std::size_t>(row)];
  }
  std::string bits() const;

  /// All 2^(2^n) tables for n inputs, ascending by row string.
  static std::vector<TruthTable> all(int n_inputs);

  bool operator==(const TruthTable& other) const = default;
  bool operator<(const TruthTable& other) const;

 private:
  int n_inputs_ = 0;
  std::vector<std::uint8_t> out_;
};

/// Transforms a truth table by a symmetry on n_inputs+1 spins whose
/// permutation keeps the output spin (index n_inputs) in place. Input
/// flips and permutations reindex rows; an output flip negates the
/// output column. Throws PartitionError when the permutation mixes the
/// output spin with an input.
TruthTable apply_to_table(const SymmetryOp& g, const TruthTable& t);

/// The group generated by {input swap, first-input flip, output flip} on
/// three spins, enumerated by closure. Sixteen elements in a fixed
/// canonical order.
const std::vector<SymmetryOp>& group_elements();

/// Closure of an arbitrary generator set under composition.
std::vector<SymmetryOp> generate_group(std::vector<SymmetryOp> generators);

/// One equivalence class of truth tables under the group action.
struct Orbit {
  TruthTable representative;        // lexicographically smallest member
  std::vector<TruthTable> members;  // sorted
};

/// Partitions the 16 two-input tables into orbits, sorted by
/// representative.
std::vector<Orbit> orbits();

/// The subgroup of group_elements() fixing table t.
std::vector<SymmetryOp> stabilizer(const TruthTable& t);

}  // namespace spinlogic
