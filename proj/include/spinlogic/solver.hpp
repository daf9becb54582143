#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinlogic/compiler.hpp"
#include "spinlogic/spin_poly.hpp"

namespace spinlogic {

/// Metropolis annealing controls. A zero t_hi is replaced by an
/// automatic scale: twice the largest |coefficient| times the largest
/// number of terms touching any one spin.
struct AnnealConfig {
  int sweeps = 5000;
  double t_hi = 0.0;  // 0 = auto
  double t_lo = 0.05;
  int restarts = 20;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;  // throws ParameterError
};

struct SolveResult {
  Assignment best;
  double best_energy = 0.0;
  std::vector<double> restart_best;  // best energy per restart
  bool success = false;  // best reached the expected ground energy
};

/// Stochastic ground-state search: single-spin-flip Metropolis over a
/// geometric temperature schedule, restarted from fresh random states.
/// Each restart owns an RNG stream derived from (seed, restart index),
/// so results are identical for any thread count. When expected_ground
/// is given, restarts stop early on reaching it and the success flag is
/// set by exact (integer inputs) or 1e-9 comparison.
SolveResult anneal(const SpinPolynomial& h,
                   std::optional<double> expected_ground,
                   const AnnealConfig& cfg = {});

/// Projects the best assignment onto named wires. Throws LookupError on
/// an unknown wire.
std::vector<bool> read_wires(const SolveResult& r, const CompiledCircuit& c,
                             const std::vector<std::string>& wires);

}  // namespace spinlogic
