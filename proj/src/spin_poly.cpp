#include "spinlogic/spin_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "spinlogic/errors.hpp"

namespace spinlogic {

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(int n_spins)
    : n_spins_(n_spins),
      words_(static_cast<std::size_t>(n_spins + 63) / 64, 0) {
  if (n_spins < 0) throw DimensionError("negative spin count");
  if (n_spins == 0) words_.assign(1, 0);
}

Assignment Assignment::from_bits(std::string_view bits) {
  Assignment a(static_cast<int>(bits.size()));
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      a.set_bit(static_cast<int>(k), true);
    } else if (bits[k] != '0') {
      throw MappingError("bit string must contain only '0' and '1'");
    }
  }
  return a;
}

Assignment Assignment::from_index(int n_spins, std::uint64_t index) {
  if (n_spins > 64) throw CapacityError("packed index limited to 64 spins");
  Assignment a(n_spins);
  if (n_spins > 0) {
    const std::uint64_t mask =
        n_spins == 64 ? ~0ull : ((1ull << n_spins) - 1);
    a.words_[0] = index & mask;
  }
  return a;
}

void Assignment::set_bit(int k, bool value) {
  if (k < 0 || k >= n_spins_) {
    throw MappingError("spin index " + std::to_string(k) + " out of range");
  }
  const std::uint64_t mask = 1ull << (k & 63);
  if (value) {
    words_[static_cast<std::size_t>(k) >> 6] |= mask;
  } else {
    words_[static_cast<std::size_t>(k) >> 6] &= ~mask;
  }
}

void Assignment::flip_bit(int k) {
  words_[static_cast<std::size_t>(k) >> 6] ^= 1ull << (k & 63);
}

std::string Assignment::bits() const {
  std::string s(static_cast<std::size_t>(n_spins_), '0');
  for (int k = 0; k < n_spins_; ++k) {
    if (bit(k)) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

std::uint64_t Assignment::index() const {
  if (n_spins_ > 64) throw CapacityError("packed index limited to 64 spins");
  return words_.empty() ? 0 : words_[0];
}

bool Assignment::operator<(const Assignment& other) const {
  if (n_spins_ != other.n_spins_) return n_spins_ < other.n_spins_;
  // Lexicographic on the bit string, spin 0 first; ground-state listings
  // then read in the usual truth-table order.
  for (int k = 0; k < n_spins_; ++k) {
    if (bit(k) != other.bit(k)) return other.bit(k);
  }
  return false;
}

// ---------------------------------------------------------------------------
// SpinPolynomial

SpinPolynomial::SpinPolynomial(int n_spins) : n_spins_(n_spins) {
  if (n_spins < 0) throw DimensionError("negative spin count");
}

SpinPolynomial SpinPolynomial::constant(int n_spins, double value) {
  SpinPolynomial h(n_spins);
  h.add_term(std::initializer_list<int>{}, value);
  return h;
}

SpinPolynomial SpinPolynomial::sigma(int n_spins, int i) {
  SpinPolynomial h(n_spins);
  h.add_term({i}, 1.0);
  return h;
}

int SpinPolynomial::max_weight() const {
  std::size_t w = 0;
  for (const auto& [subset, coeff] : terms_) w = std::max(w, subset.size());
  return static_cast<int>(w);
}

bool SpinPolynomial::integer_coefficients() const {
  for (const auto& [subset, coeff] : terms_) {
    if (coeff != std::nearbyint(coeff)) return false;
  }
  return true;
}

void SpinPolynomial::check_subset(std::span<const int> subset) const {
  for (int i : subset) {
    if (i < 0 || i >= n_spins_) {
      throw MappingError("spin index " + std::to_string(i) +
                         " out of range for " + std::to_string(n_spins_) +
                         " spins");
    }
  }
}

double SpinPolynomial::coeff(std::span<const int> subset) const {
  std::vector<int> key(subset.begin(), subset.end());
  std::sort(key.begin(), key.end());
  auto it = terms_.find(key);
  return it == terms_.end() ? 0.0 : it->second;
}

double SpinPolynomial::coeff(std::initializer_list<int> subset) const {
  return coeff(std::span<const int>(subset.begin(), subset.size()));
}

void SpinPolynomial::add_term(std::span<const int> subset, double value) {
  check_subset(subset);
  std::vector<int> key(subset.begin(), subset.end());
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
    throw MappingError("duplicate spin index in term");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(key), value);
  if (!inserted) it->second += value;
  if (it->second == 0.0) terms_.erase(it);
}

void SpinPolynomial::add_term(std::initializer_list<int> subset,
                              double value) {
  add_term(std::span<const int>(subset.begin(), subset.size()), value);
}

double SpinPolynomial::evaluate(const Assignment& a) const {
  if (a.n_spins() != n_spins_) {
    throw DimensionError("assignment has " + std::to_string(a.n_spins()) +
                         " spins, polynomial has " +
                         std::to_string(n_spins_));
  }
  double total = 0.0;
  for (const auto& [subset, coeff] : terms_) {
    int parity = 0;
    for (int i : subset) parity ^= static_cast<int>(a.bit(i));
    total += parity ? -coeff : coeff;
  }
  return total;
}

SpinPolynomial& SpinPolynomial::operator+=(const SpinPolynomial& other) {
  if (other.n_spins_ != n_spins_) {
    throw DimensionError("cannot add polynomials over " +
                         std::to_string(n_spins_) + " and " +
                         std::to_string(other.n_spins_) + " spins");
  }
  for (const auto& [subset, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(subset, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0.0) terms_.erase(it);
    }
  }
  return *this;
}

SpinPolynomial& SpinPolynomial::operator*=(double factor) {
  if (factor == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [subset, coeff] : terms_) coeff *= factor;
  return *this;
}

SpinPolynomial SpinPolynomial::embed(std::span<const int> mapping,
                                     int target_n) const {
  if (static_cast<int>(mapping.size()) != n_spins_) {
    throw MappingError("mapping covers " + std::to_string(mapping.size()) +
                       " spins, polynomial has " + std::to_string(n_spins_));
  }
  std::vector<char> seen(static_cast<std::size_t>(std::max(target_n, 0)), 0);
  for (int t : mapping) {
    if (t < 0 || t >= target_n) {
      throw MappingError("target index " + std::to_string(t) +
                         " out of range");
    }
    if (seen[static_cast<std::size_t>(t)]++) {
      throw MappingError("mapping is not injective at target " +
                         std::to_string(t));
    }
  }
  SpinPolynomial out(target_n);
  for (const auto& [subset, coeff] : terms_) {
    std::vector<int> image;
    image.reserve(subset.size());
    for (int i : subset) image.push_back(mapping[static_cast<std::size_t>(i)]);
    std::sort(image.begin(), image.end());
    out.terms_.emplace(std::move(image), coeff);
  }
  return out;
}

SpinPolynomial SpinPolynomial::embed(std::initializer_list<int> mapping,
                                     int target_n) const {
  return embed(std::span<const int>(mapping.begin(), mapping.size()),
               target_n);
}

SpinPolynomial SpinPolynomial::remap(std::initializer_list<int> mapping,
                                     int target_n) const {
  return remap(std::span<const int>(mapping.begin(), mapping.size()),
               target_n);
}

SpinPolynomial SpinPolynomial::remap(std::span<const int> mapping,
                                     int target_n) const {
  if (static_cast<int>(mapping.size()) != n_spins_) {
    throw MappingError("mapping covers " + std::to_string(mapping.size()) +
                       " spins, polynomial has " + std::to_string(n_spins_));
  }
  for (int t : mapping) {
    if (t < 0 || t >= target_n) {
      throw MappingError("target index " + std::to_string(t) +
                         " out of range");
    }
  }
  SpinPolynomial out(target_n);
  std::vector<int> image;
  for (const auto& [subset, coeff] : terms_) {
    image.clear();
    for (int i : subset) image.push_back(mapping[static_cast<std::size_t>(i)]);
    std::sort(image.begin(), image.end());
    // Pairs of equal indices cancel: sigma_k * sigma_k = 1.
    std::vector<int> reduced;
    for (std::size_t j = 0; j < image.size();) {
      if (j + 1 < image.size() && image[j] == image[j + 1]) {
        j += 2;
      } else {
        reduced.push_back(image[j]);
        ++j;
      }
    }
    out.add_term(reduced, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum

std::uint64_t Spectrum::total_states() const {
  std::uint64_t total = 0;
  for (const auto& level : levels) total += level.multiplicity;
  return total;
}

namespace {

struct SweepResult {
  std::map<double, std::uint64_t> counts;  // exact-keyed energy histogram
  double min_energy = 0.0;
  std::vector<std::uint64_t> near_min;  // indices within tol of local min
};

SweepResult sweep_range(const SpinPolynomial& h, std::uint64_t begin,
                        std::uint64_t end, double tol) {
  SweepResult r;
  r.min_energy = std::numeric_limits<double>::infinity();
  const int n = h.n_spins();
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const double e = h.evaluate(Assignment::from_index(n, idx));
    ++r.counts[e];
    if (e < r.min_energy) {
      r.min_energy = e;
      // Drop candidates that are no longer within reach of the new min.
      std::erase_if(r.near_min, [&](std::uint64_t cand) {
        return h.evaluate(Assignment::from_index(n, cand)) > e + tol;
      });
    }
    if (e <= r.min_energy + tol) r.near_min.push_back(idx);
  }
  return r;
}

}  // namespace

Spectrum spectrum(const SpinPolynomial& h, const SpectrumOptions& opt) {
  const int n = h.n_spins();
  if (n > opt.cap) {
    throw CapacityError(
        "exhaustive enumeration over " + std::to_string(n) +
        " spins exceeds the cap of " + std::to_string(opt.cap) +
        "; use the annealing solver for larger systems");
  }
  const bool exact = h.integer_coefficients();
  const double tol = exact ? 0.0 : opt.tol;
  const std::uint64_t total = 1ull << n;

  int workers = std::max(1, opt.threads);
  if (static_cast<std::uint64_t>(workers) > total)
    workers = static_cast<int>(total);

  std::vector<SweepResult> parts(static_cast<std::size_t>(workers));
  if (workers == 1) {
    parts[0] = sweep_range(h, 0, total, tol);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        parts[static_cast<std::size_t>(w)] = sweep_range(h, begin, end, tol);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Merge in worker order so the result is independent of scheduling.
  std::map<double, std::uint64_t> counts;
  double min_energy = std::numeric_limits<double>::infinity();
  for (const auto& part : parts) {
    for (const auto& [e, c] : part.counts) counts[e] += c;
    min_energy = std::min(min_energy, part.min_energy);
  }

  Spectrum s;
  s.ground_energy = min_energy;
  for (const auto& part : parts) {
    for (std::uint64_t idx : part.near_min) {
      Assignment a = Assignment::from_index(n, idx);
      if (h.evaluate(a) <= min_energy + tol) {
        s.ground_states.push_back(std::move(a));
      }
    }
  }
  std::sort(s.ground_states.begin(), s.ground_states.end());

  // Group exact-keyed energies into levels.
  for (const auto& [e, c] : counts) {
    if (!s.levels.empty() && e - s.levels.back().energy <= tol) {
      s.levels.back().multiplicity += c;
    } else {
      s.levels.push_back({e, c});
    }
  }
  return s;
}

std::set<std::string> ground_space_bits(const SpinPolynomial& h,
                                        const SpectrumOptions& opt) {
  std::set<std::string> out;
  for (const Assignment& a : spectrum(h, opt).ground_states) {
    out.insert(a.bits());
  }
  return out;
}

}  // namespace spinlogic
