#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spinlogic {

/// A joint configuration of N two-level spins.
///
/// Bit k set means spin k is in logical state 1 (sigma eigenvalue -1);
/// bit k clear means logical 0 (eigenvalue +1). The bit/eigenvalue map is
/// x = (1 - s) / 2 throughout the library.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int n_spins);

  /// Builds from a string of '0'/'1', character k giving spin k's bit.
  static Assignment from_bits(std::string_view bits);

  /// Builds from a packed index: bit k of `index` is spin k's bit.
  /// Only valid for n_spins <= 64.
  static Assignment from_index(int n_spins, std::uint64_t index);

  int n_spins() const { return n_spins_; }

  bool bit(int k) const {
    return (words_[static_cast<std::size_t>(k) >> 6] >> (k & 63)) & 1u;
  }

  /// Sigma eigenvalue of spin k: +1 for bit 0, -1 for bit 1.
  int spin(int k) const { return bit(k) ? -1 : +1; }

  void set_bit(int k, bool value);
  void flip_bit(int k);

  /// Spin-0-first rendering, e.g. "001" for a 3-spin state with only
  /// spin 2 in logical 1.
  std::string bits() const;

  /// Packed index (inverse of from_index); requires n_spins <= 64.
  std::uint64_t index() const;

  bool operator==(const Assignment& other) const = default;
  /// Orders lexicographically by bit string, spin 0 first.
  bool operator<(const Assignment& other) const;

 private:
  int n_spins_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A sparse multilinear polynomial in sigma variables: a diagonal
/// Hamiltonian over n_spins spins. Terms map duplicate-free, ascending
/// index subsets to real coefficients; the empty subset is the identity
/// multiple. Canonical form never stores a zero coefficient, and the term
/// map is ordered lexicographically by subset, which fixes the
/// serialization byte-for-byte.
class SpinPolynomial {
 public:
  using TermMap = std::map<std::vector<int>, double>;

  SpinPolynomial() = default;
  explicit SpinPolynomial(int n_spins);

  static SpinPolynomial zero(int n_spins) { return SpinPolynomial(n_spins); }
  static SpinPolynomial constant(int n_spins, double value);
  /// The single-variable polynomial sigma_i.
  static SpinPolynomial sigma(int n_spins, int i);

  int n_spins() const { return n_spins_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Largest subset size present (0 for a constant or empty polynomial).
  int max_weight() const;

  /// True when every coefficient is an exact integer; such polynomials
  /// evaluate without rounding error and spectra use exact comparison.
  bool integer_coefficients() const;

  /// Coefficient of the given subset (0 if absent). Indices may be given
  /// in any order but must be duplicate-free.
  double coeff(std::span<const int> subset) const;
  double coeff(std::initializer_list<int> subset) const;

  /// Accumulates `value` onto the subset's coefficient, canonicalizing.
  /// Throws MappingError on out-of-range or duplicate indices.
  void add_term(std::span<const int> subset, double value);
  void add_term(std::initializer_list<int> subset, double value);

  double evaluate(const Assignment& a) const;

  SpinPolynomial& operator+=(const SpinPolynomial& other);
  SpinPolynomial& operator*=(double factor);
  friend SpinPolynomial operator+(SpinPolynomial lhs,
                                  const SpinPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend SpinPolynomial operator*(SpinPolynomial h, double factor) {
    h *= factor;
    return h;
  }
  friend SpinPolynomial operator*(double factor, SpinPolynomial h) {
    h *= factor;
    return h;
  }

  /// Relabels spins through an injective map into a larger spin space:
  /// spin k of this polynomial becomes spin mapping[k]. Throws
  /// MappingError unless the map is injective, complete and in range.
  SpinPolynomial embed(std::span<const int> mapping, int target_n) const;
  SpinPolynomial embed(std::initializer_list<int> mapping,
                       int target_n) const;

  /// Like embed but the map may repeat targets; repeated spins within one
  /// term cancel pairwise (sigma squared is the identity). Used when a
  /// gate is placed with two of its legs on the same wire.
  SpinPolynomial remap(std::span<const int> mapping, int target_n) const;
  SpinPolynomial remap(std::initializer_list<int> mapping,
                       int target_n) const;

  bool operator==(const SpinPolynomial& other) const = default;

 private:
  void check_subset(std::span<const int> subset) const;

  int n_spins_ = 0;
  TermMap terms_;
};

/// Exhaustive-enumeration controls.
struct SpectrumOptions {
  int cap = 24;        // refuse enumeration beyond 2^cap states
  int threads = 1;     // workers for the assignment sweep
  double tol = 1e-9;   // level-grouping tolerance for non-integer inputs
};

/// The exact level structure of a diagonal Hamiltonian.
struct Spectrum {
  struct Level {
    double energy;
    std::uint64_t multiplicity;
  };
  std::vector<Level> levels;  // ascending energy
  double ground_energy = 0.0;
  std::vector<Assignment> ground_states;  // ascending packed index

  std::uint64_t total_states() const;
};

/// Evaluates all 2^n assignments and groups them into levels. Ties are
/// resolved exactly for integer-coefficient inputs and within `tol`
/// otherwise. Deterministic for any thread count. Throws CapacityError
/// when n_spins exceeds the cap.
Spectrum spectrum(const SpinPolynomial& h, const SpectrumOptions& opt = {});

/// The minimum-energy assignments rendered as bit strings.
std::set<std::string> ground_space_bits(const SpinPolynomial& h,
                                        const SpectrumOptions& opt = {});

}  // namespace spinlogic
