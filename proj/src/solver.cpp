#include "spinlogic/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "spinlogic/errors.hpp"

namespace spinlogic {

void AnnealConfig::validate() const {
  if (sweeps < 1) throw ParameterError("sweeps must be at least 1");
  if (restarts < 1) throw ParameterError("restarts must be at least 1");
  if (!(t_lo > 0.0)) throw ParameterError("t_lo must be positive");
  if (t_hi != 0.0 && !(t_hi > t_lo)) {
    throw ParameterError("t_hi must exceed t_lo");
  }
  if (threads < 1) throw ParameterError("threads must be at least 1");
}

namespace {

// Flattened polynomial with a per-spin index of incident terms, sized
// for O(degree) single-flip energy deltas.
struct CompiledEnergy {
  int n_spins = 0;
  std::vector<double> coeffs;
  std::vector<std::vector<int>> term_spins;
  std::vector<std::vector<int>> incident;  // spin -> term ids
  double constant = 0.0;

  explicit CompiledEnergy(const SpinPolynomial& h) : n_spins(h.n_spins()) {
    incident.resize(static_cast<std::size_t>(n_spins));
    for (const auto& [subset, coeff] : h.terms()) {
      if (subset.empty()) {
        constant += coeff;
        continue;
      }
      const int id = static_cast<int>(coeffs.size());
      coeffs.push_back(coeff);
      term_spins.push_back(subset);
      for (int i : subset) incident[static_cast<std::size_t>(i)].push_back(id);
    }
  }

  double energy(const std::vector<std::int8_t>& s) const {
    double total = constant;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      int prod = 1;
      for (int i : term_spins[t]) prod *= s[static_cast<std::size_t>(i)];
      total += coeffs[t] * prod;
    }
    return total;
  }

  // Energy change from flipping spin k: every incident term negates.
  double flip_delta(const std::vector<std::int8_t>& s, int k) const {
    double delta = 0.0;
    for (int t : incident[static_cast<std::size_t>(k)]) {
      int prod = 1;
      for (int i : term_spins[static_cast<std::size_t>(t)]) {
        prod *= s[static_cast<std::size_t>(i)];
      }
      delta -= 2.0 * coeffs[static_cast<std::size_t>(t)] * prod;
    }
    return delta;
  }

  double auto_t_hi() const {
    double max_coeff = 0.0;
    for (double c : coeffs) max_coeff = std::max(max_coeff, std::abs(c));
    std::size_t max_deg = 0;
    for (const auto& terms : incident) {
      max_deg = std::max(max_deg, terms.size());
    }
    const double scale = 2.0 * max_coeff * static_cast<double>(max_deg);
    return scale > 0.0 ? scale : 1.0;
  }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over the pair, so restart streams never collide.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct RestartOutcome {
  std::vector<std::int8_t> best_state;
  double best_energy = 0.0;
};

RestartOutcome run_restart(const CompiledEnergy& ce, const AnnealConfig& cfg,
                           double t_hi, int restart,
                           std::optional<double> target, double tol) {
  std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
  std::uniform_int_distribution<int> pick(0, ce.n_spins - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::int8_t> state(static_cast<std::size_t>(ce.n_spins));
  for (auto& s : state) s = (rng() & 1) ? -1 : 1;

  RestartOutcome out;
  out.best_state = state;
  double energy = ce.energy(state);
  out.best_energy = energy;

  const double cooling =
      cfg.sweeps > 1
          ? std::pow(cfg.t_lo / t_hi, 1.0 / static_cast<double>(cfg.sweeps - 1))
          : 1.0;
  double temperature = t_hi;
  for (int sweep = 0; sweep < cfg.sweeps; ++sweep) {
    for (int step = 0; step < ce.n_spins; ++step) {
      const int k = pick(rng);
      const double delta = ce.flip_delta(state, k);
      if (delta <= 0.0 || unit(rng) < std::exp(-delta / temperature)) {
        state[static_cast<std::size_t>(k)] =
            static_cast<std::int8_t>(-state[static_cast<std::size_t>(k)]);
        energy += delta;
        if (energy < out.best_energy) {
          out.best_energy = energy;
          out.best_state = state;
          if (target && out.best_energy <= *target + tol) return out;
        }
      }
    }
    temperature *= cooling;
  }
  return out;
}

}  // namespace

SolveResult anneal(const SpinPolynomial& h,
                   std::optional<double> expected_ground,
                   const AnnealConfig& cfg) {
  cfg.validate();
  if (h.n_spins() == 0) {
    SolveResult r;
    r.best = Assignment(0);
    r.best_energy = h.evaluate(r.best);
    r.restart_best.assign(static_cast<std::size_t>(cfg.restarts),
                          r.best_energy);
    r.success = !expected_ground ||
                std::abs(r.best_energy - *expected_ground) <= 1e-9;
    return r;
  }

  const CompiledEnergy ce(h);
  const double t_hi = cfg.t_hi > 0.0 ? cfg.t_hi : ce.auto_t_hi();
  const double tol = h.integer_coefficients() ? 0.0 : 1e-9;

  std::vector<RestartOutcome> outcomes(
      static_cast<std::size_t>(cfg.restarts));
  const int workers = std::min(cfg.threads, cfg.restarts);
  if (workers <= 1) {
    for (int r = 0; r < cfg.restarts; ++r) {
      outcomes[static_cast<std::size_t>(r)] =
          run_restart(ce, cfg, t_hi, r, expected_ground, tol);
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next.fetch_add(1); r < cfg.restarts;
             r = next.fetch_add(1)) {
          outcomes[static_cast<std::size_t>(r)] =
              run_restart(ce, cfg, t_hi, r, expected_ground, tol);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SolveResult result;
  result.restart_best.reserve(outcomes.size());
  int best_restart = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    result.restart_best.push_back(outcomes[r].best_energy);
    if (outcomes[r].best_energy <
        outcomes[static_cast<std::size_t>(best_restart)].best_energy) {
      best_restart = static_cast<int>(r);
    }
  }
  const RestartOutcome& winner =
      outcomes[static_cast<std::size_t>(best_restart)];
  result.best_energy = winner.best_energy;
  result.best = Assignment(h.n_spins());
  for (int k = 0; k < h.n_spins(); ++k) {
    result.best.set_bit(k, winner.best_state[static_cast<std::size_t>(k)] < 0);
  }
  result.success =
      expected_ground &&
      std::abs(result.best_energy - *expected_ground) <= tol;
  return result;
}

std::vector<bool> read_wires(const SolveResult& r, const CompiledCircuit& c,
                             const std::vector<std::string>& wires) {
  std::vector<bool> bits;
  bits.reserve(wires.size());
  for (const std::string& w : wires) {
    bits.push_back(r.best.bit(c.wire_index(w)));
  }
  return bits;
}

}  // namespace spinlogic
