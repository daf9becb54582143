#pragma once

#include <string>
#include <vector>

#include "spinlogic/compiler.hpp"
#include "spinlogic/solver.hpp"
#include "spinlogic/spin_poly.hpp"

namespace spinlogic {

/// Hamiltonian JSON:
///   {"n_spins": N, "wires": [...], "terms": [{"spins": [...], "coeff": c}]}
/// Terms appear in canonical order (lexicographic by subset) and numbers
/// round-trip bit-exactly, so serialization is byte-stable. When `wires`
/// is empty, names default to s0, s1, ...
std::string to_json(const SpinPolynomial& h,
                    const std::vector<std::string>& wires = {});

struct ParsedHamiltonian {
  SpinPolynomial poly;
  std::vector<std::string> wires;
};
ParsedHamiltonian hamiltonian_from_json(const std::string& text);

/// Compiled-circuit JSON: the Hamiltonian schema plus "roles",
/// "placements", "clamps" and "ground_energy_expected" sections.
std::string to_json(const CompiledCircuit& c);
CompiledCircuit circuit_from_json(const std::string& text);

/// AnnealConfig JSON mirror ({"sweeps":..., "t_hi":..., "t_lo":...,
/// "restarts":..., "seed":..., "threads":...}); absent keys keep their
/// defaults.
AnnealConfig anneal_config_from_json(const std::string& text);
std::string to_json(const AnnealConfig& cfg);

}  // namespace spinlogic
