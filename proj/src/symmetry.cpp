#include "spinlogic/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "spinlogic/errors.hpp"

namespace spinlogic {

// ---------------------------------------------------------------------------
// SymmetryOp

SymmetryOp::SymmetryOp(std::vector<int> perm, std::vector<std::uint8_t> flip)
    : perm_(std::move(perm)), flip_(std::move(flip)) {
  if (perm_.size() != flip_.size()) {
    throw DimensionError("permutation and flip mask sizes differ");
  }
  std::vector<char> seen(perm_.size(), 0);
  for (int p : perm_) {
    if (p < 0 || p >= static_cast<int>(perm_.size()) ||
        seen[static_cast<std::size_t>(p)]++) {
      throw MappingError("not a valid permutation");
    }
  }
}

SymmetryOp SymmetryOp::identity(int n_spins) {
  std::vector<int> perm(static_cast<std::size_t>(n_spins));
  std::iota(perm.begin(), perm.end(), 0);
  return SymmetryOp(std::move(perm),
                    std::vector<std::uint8_t>(
                        static_cast<std::size_t>(n_spins), 0));
}

SymmetryOp SymmetryOp::flip(int n_spins, int i) {
  SymmetryOp g = identity(n_spins);
  if (i < 0 || i >= n_spins) throw MappingError("flip index out of range");
  g.flip_[static_cast<std::size_t>(i)] = 1;
  return g;
}

SymmetryOp SymmetryOp::swap(int n_spins, int i, int j) {
  SymmetryOp g = identity(n_spins);
  if (i < 0 || i >= n_spins || j < 0 || j >= n_spins || i == j) {
    throw MappingError("swap indices out of range or equal");
  }
  std::swap(g.perm_[static_cast<std::size_t>(i)],
            g.perm_[static_cast<std::size_t>(j)]);
  return g;
}

SymmetryOp SymmetryOp::parse(std::string_view word, int n_spins) {
  SymmetryOp result = identity(n_spins);
  if (word.empty()) return result;
  std::vector<SymmetryOp> factors;
  std::size_t start = 0;
  while (start <= word.size()) {
    std::size_t dot = word.find('.', start);
    if (dot == std::string_view::npos) dot = word.size();
    std::string_view tok = word.substr(start, dot - start);
    if (tok.empty()) throw LookupError("empty generator label");
    if ((tok[0] == 'F' || tok[0] == 'f') && tok.size() == 2 &&
        std::isdigit(static_cast<unsigned char>(tok[1]))) {
      int i = tok[1] - '1';
      if (i < 0 || i >= n_spins) {
        throw LookupError("flip label out of range: " + std::string(tok));
      }
      factors.push_back(flip(n_spins, i));
    } else if ((tok[0] == 'R' || tok[0] == 'r') && tok.size() == 3 &&
               std::isdigit(static_cast<unsigned char>(tok[1])) &&
               std::isdigit(static_cast<unsigned char>(tok[2]))) {
      int i = tok[1] - '1';
      int j = tok[2] - '1';
      if (i < 0 || i >= n_spins || j < 0 || j >= n_spins || i == j) {
        throw LookupError("swap label out of range: " + std::string(tok));
      }
      factors.push_back(swap(n_spins, i, j));
    } else if (tok == "e" || tok == "E") {
      factors.push_back(identity(n_spins));
    } else {
      throw LookupError("unknown generator label: " + std::string(tok));
    }
    if (dot == word.size()) break;
    start = dot + 1;
  }
  for (const SymmetryOp& f : factors) result = result * f;
  return result;
}

bool SymmetryOp::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != static_cast<int>(k) || flip_[k]) return false;
  }
  return true;
}

SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b) {
  if (a.n_spins() != b.n_spins()) {
    throw DimensionError("composing symmetries of different sizes");
  }
  const std::size_t n = a.perm_.size();
  std::vector<int> perm(n);
  std::vector<std::uint8_t> flip(n);
  // b acts first: sigma_k -> (-1)^{b.flip[k]} sigma_{b.perm[k]}, then a
  // rewrites that variable, so the net flip of slot k is
  // b.flip[k] ^ a.flip[b.perm[k]].
  for (std::size_t k = 0; k < n; ++k) {
    const int bp = b.perm_[k];
    perm[k] = a.perm_[static_cast<std::size_t>(bp)];
    flip[k] = b.flip_[k] ^ a.flip_[static_cast<std::size_t>(bp)];
  }
  return SymmetryOp(std::move(perm), std::move(flip));
}

SymmetryOp SymmetryOp::inverse() const {
  const std::size_t n = perm_.size();
  std::vector<int> perm(n);
  std::vector<std::uint8_t> flip(n);
  for (std::size_t k = 0; k < n; ++k) {
    perm[static_cast<std::size_t>(perm_[k])] = static_cast<int>(k);
    flip[static_cast<std::size_t>(perm_[k])] = flip_[k];
  }
  return SymmetryOp(std::move(perm), std::move(flip));
}

int SymmetryOp::order() const {
  SymmetryOp acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++k;
    if (k > 1 << (n_spins() + 2)) {
      throw DomainError("element order runaway");  // unreachable for valid ops
    }
  }
  return k;
}

Assignment SymmetryOp::apply(const Assignment& a) const {
  if (a.n_spins() != n_spins()) {
    throw DimensionError("assignment size does not match symmetry");
  }
  Assignment out(a.n_spins());
  for (int k = 0; k < a.n_spins(); ++k) {
    out.set_bit(perm_[static_cast<std::size_t>(k)],
                a.bit(k) ^ static_cast<bool>(flip_[static_cast<std::size_t>(k)]));
  }
  return out;
}

SpinPolynomial SymmetryOp::apply(const SpinPolynomial& h) const {
  if (h.n_spins() != n_spins()) {
    throw DimensionError("polynomial size does not match symmetry");
  }
  SpinPolynomial out(h.n_spins());
  std::vector<int> image;
  for (const auto& [subset, coeff] : h.terms()) {
    image.clear();
    int sign = 0;
    for (int i : subset) {
      image.push_back(perm_[static_cast<std::size_t>(i)]);
      sign ^= flip_[static_cast<std::size_t>(i)];
    }
    out.add_term(image, sign ? -coeff : coeff);
  }
  return out;
}

bool SymmetryOp::operator<(const SymmetryOp& other) const {
  if (perm_ != other.perm_) return perm_ < other.perm_;
  return flip_ < other.flip_;
}

std::string SymmetryOp::to_string() const {
  std::string s;
  bool trivial = true;
  // Report swaps as disjoint transpositions, flips as F labels (1-based).
  std::vector<char> visited(perm_.size(), 0);
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (visited[k] || perm_[k] == static_cast<int>(k)) continue;
    std::size_t a = k;
    std::string cycle = "R";
    while (!visited[a]) {
      visited[a] = 1;
      cycle += std::to_string(a + 1);
      a = static_cast<std::size_t>(perm_[a]);
    }
    if (!s.empty()) s += '.';
    s += cycle;
    trivial = false;
  }
  for (std::size_t k = 0; k < flip_.size(); ++k) {
    if (flip_[k]) {
      if (!s.empty()) s += '.';
      s += "F" + std::to_string(k + 1);
      trivial = false;
    }
  }
  return trivial ? "e" : s;
}

// ---------------------------------------------------------------------------
// TruthTable

TruthTable::TruthTable(int n_inputs, std::vector<std::uint8_t> outputs)
    : n_inputs_(n_inputs), out_(std::move(outputs)) {
  if (out_.size() != (1u << n_inputs)) {
    throw DimensionError("truth table must have 2^n_inputs rows");
  }
  for (std::uint8_t b : out_) {
    if (b > 1) throw DomainError("truth table entries must be bits");
  }
}

TruthTable TruthTable::from_bits(std::string_view bits) {
  int n = 0;
  while ((1u << n) < bits.size()) ++n;
  if ((1u << n) != bits.size()) {
    throw DimensionError("truth table length must be a power of two");
  }
  std::vector<std::uint8_t> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw DomainError("truth table string must contain only '0'/'1'");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TruthTable(n, std::move(out));
}

std::string TruthTable::bits() const {
  std::string s;
  s.reserve(out_.size());
  for (std::uint8_t b : out_) s += static_cast<char>('0' + b);
  return s;
}

std::vector<TruthTable> TruthTable::all(int n_inputs) {
  const std::size_t rows = 1u << n_inputs;
  std::vector<TruthTable> tables;
  tables.reserve(1u << rows);
  for (std::uint64_t code = 0; code < (1ull << rows); ++code) {
    std::vector<std::uint8_t> out(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      out[r] = static_cast<std::uint8_t>((code >> (rows - 1 - r)) & 1);
    }
    tables.emplace_back(n_inputs, std::move(out));
  }
  std::sort(tables.begin(), tables.end());
  return tables;
}

bool TruthTable::operator<(const TruthTable& other) const {
  if (n_inputs_ != other.n_inputs_) return n_inputs_ < other.n_inputs_;
  return out_ < other.out_;
}

TruthTable apply_to_table(const SymmetryOp& g, const TruthTable& t) {
  const int n_in = t.n_inputs();
  if (g.n_spins() != n_in + 1) {
    throw DimensionError("symmetry must act on n_inputs+1 spins");
  }
  if (g.perm()[static_cast<std::size_t>(n_in)] != n_in) {
    throw PartitionError(
        "permutation moves the output spin; tables keep the output slot "
        "fixed");
  }
  const std::uint8_t out_flip = g.flip_mask()[static_cast<std::size_t>(n_in)];
  std::vector<std::uint8_t> out(t.outputs().size(), 0);
  for (std::size_t row = 0; row < t.outputs().size(); ++row) {
    int new_row = 0;
    for (int k = 0; k < n_in; ++k) {
      const int bit =
          static_cast<int>((row >> (n_in - 1 - k)) & 1) ^
          g.flip_mask()[static_cast<std::size_t>(k)];
      const int pos = g.perm()[static_cast<std::size_t>(k)];
      new_row |= bit << (n_in - 1 - pos);
    }
    out[static_cast<std::size_t>(new_row)] =
        static_cast<std::uint8_t>(t.outputs()[row] ^ out_flip);
  }
  return TruthTable(n_in, std::move(out));
}

// ---------------------------------------------------------------------------
// Group machinery

std::vector<SymmetryOp> generate_group(std::vector<SymmetryOp> generators) {
  std::set<SymmetryOp> closed;
  if (generators.empty()) return {};
  closed.insert(SymmetryOp::identity(generators.front().n_spins()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SymmetryOp> frontier(closed.begin(), closed.end());
    for (const SymmetryOp& a : frontier) {
      for (const SymmetryOp& g : generators) {
        if (closed.insert(g * a).second) grew = true;
      }
    }
  }
  return {closed.begin(), closed.end()};
}

const std::vector<SymmetryOp>& group_elements() {
  static const std::vector<SymmetryOp> elements = generate_group(
      {SymmetryOp::swap(3, 0, 1), SymmetryOp::flip(3, 0),
       SymmetryOp::flip(3, 2)});
  return elements;
}

std::vector<Orbit> orbits() {
  const std::vector<TruthTable> tables = TruthTable::all(2);
  const std::vector<SymmetryOp>& group = group_elements();
  std::set<TruthTable> unassigned(tables.begin(), tables.end());
  std::vector<Orbit> result;
  while (!unassigned.empty()) {
    const TruthTable seed = *unassigned.begin();
    std::set<TruthTable> members;
    for (const SymmetryOp& g : group) members.insert(apply_to_table(g, seed));
    Orbit orbit;
    orbit.representative = *members.begin();
    orbit.members.assign(members.begin(), members.end());
    for (const TruthTable& m : orbit.members) unassigned.erase(m);
    result.push_back(std::move(orbit));
  }
  std::sort(result.begin(), result.end(),
            [](const Orbit& a, const Orbit& b) {
              return a.representative < b.representative;
            });
  return result;
}

std::vector<SymmetryOp> stabilizer(const TruthTable& t) {
  std::vector<SymmetryOp> stab;
  for (const SymmetryOp& g : group_elements()) {
    if (apply_to_table(g, t) == t) stab.push_back(g);
  }
  return stab;
}

}  // namespace spinlogic
