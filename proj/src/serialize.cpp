#include "spinlogic/serialize.hpp"

#include "json.hpp"

#include "spinlogic/errors.hpp"

namespace spinlogic {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered terms_to_json(const SpinPolynomial& h) {
  ordered terms = ordered::array();
  for (const auto& [subset, coeff] : h.terms()) {
    ordered t;
    t["spins"] = subset;
    t["coeff"] = coeff;
    terms.push_back(std::move(t));
  }
  return terms;
}

SpinPolynomial terms_from_json(int n_spins, const json& terms) {
  SpinPolynomial h(n_spins);
  for (const auto& t : terms) {
    h.add_term(t.at("spins").get<std::vector<int>>(),
               t.at("coeff").get<double>());
  }
  return h;
}

std::vector<std::string> default_wires(int n) {
  std::vector<std::string> wires;
  wires.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) wires.push_back("s" + std::to_string(i));
  return wires;
}

}  // namespace

std::string to_json(const SpinPolynomial& h,
                    const std::vector<std::string>& wires) {
  if (!wires.empty() && static_cast<int>(wires.size()) != h.n_spins()) {
    throw DimensionError("wire-name list does not match spin count");
  }
  ordered j;
  j["n_spins"] = h.n_spins();
  j["wires"] = wires.empty() ? default_wires(h.n_spins()) : wires;
  j["terms"] = terms_to_json(h);
  return j.dump(2) + "\n";
}

ParsedHamiltonian hamiltonian_from_json(const std::string& text) {
  const json j = json::parse(text);
  ParsedHamiltonian out;
  const int n = j.at("n_spins").get<int>();
  out.poly = terms_from_json(n, j.at("terms"));
  out.wires = j.at("wires").get<std::vector<std::string>>();
  if (static_cast<int>(out.wires.size()) != n) {
    throw DimensionError("wire-name list does not match spin count");
  }
  return out;
}

std::string to_json(const CompiledCircuit& c) {
  ordered j;
  j["n_spins"] = c.hamiltonian.n_spins();
  j["wires"] = c.wires;
  ordered roles = ordered::object();
  for (std::size_t i = 0; i < c.wires.size(); ++i) {
    roles[c.wires[i]] = std::string(wire_role_name(c.roles[i]));
  }
  j["roles"] = std::move(roles);
  j["terms"] = terms_to_json(c.hamiltonian);
  ordered placements = ordered::array();
  for (const Placement& p : c.placements) {
    ordered pj;
    pj["gate"] = std::string(gates::gate_kind_name(p.kind));
    pj["spins"] = p.spins;
    if (!p.params.empty()) pj["params"] = p.params;
    pj["stabilizer"] = p.stabilizer_size;
    placements.push_back(std::move(pj));
  }
  j["placements"] = std::move(placements);
  ordered clamps = ordered::array();
  for (const auto& [spin, bit] : c.clamps) {
    clamps.push_back(ordered{{"spin", spin}, {"bit", bit ? 1 : 0}});
  }
  j["clamps"] = std::move(clamps);
  j["ground_energy_expected"] = c.ground_energy_expected;
  return j.dump(2) + "\n";
}

CompiledCircuit circuit_from_json(const std::string& text) {
  const json j = json::parse(text);
  CompiledCircuit c;
  const int n = j.at("n_spins").get<int>();
  c.wires = j.at("wires").get<std::vector<std::string>>();
  if (static_cast<int>(c.wires.size()) != n) {
    throw DimensionError("wire-name list does not match spin count");
  }
  c.hamiltonian = terms_from_json(n, j.at("terms"));
  const json& roles = j.at("roles");
  c.roles.reserve(c.wires.size());
  for (const std::string& w : c.wires) {
    const std::string role = roles.at(w).get<std::string>();
    c.roles.push_back(role == "input" ? WireRole::Input
                      : role == "output" ? WireRole::Output
                                         : WireRole::Ancilla);
  }
  for (const auto& pj : j.at("placements")) {
    Placement p;
    const std::string name = pj.at("gate").get<std::string>();
    const auto kind = gates::gate_kind_from_name(name);
    if (!kind) throw LookupError("unknown gate in placements: " + name);
    p.kind = *kind;
    p.spins = pj.at("spins").get<std::vector<int>>();
    if (pj.contains("params")) {
      p.params = pj.at("params").get<std::vector<double>>();
    }
    p.stabilizer_size = pj.at("stabilizer").get<std::uint64_t>();
    c.placements.push_back(std::move(p));
  }
  for (const auto& cj : j.at("clamps")) {
    c.clamps.emplace_back(cj.at("spin").get<int>(),
                          cj.at("bit").get<int>() != 0);
  }
  c.ground_energy_expected = j.at("ground_energy_expected").get<double>();
  return c;
}

AnnealConfig anneal_config_from_json(const std::string& text) {
  const json j = json::parse(text);
  AnnealConfig cfg;
  if (j.contains("sweeps")) cfg.sweeps = j.at("sweeps").get<int>();
  if (j.contains("t_hi")) cfg.t_hi = j.at("t_hi").get<double>();
  if (j.contains("t_lo")) cfg.t_lo = j.at("t_lo").get<double>();
  if (j.contains("restarts")) cfg.restarts = j.at("restarts").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
  cfg.validate();
  return cfg;
}

std::string to_json(const AnnealConfig& cfg) {
  ordered j;
  j["sweeps"] = cfg.sweeps;
  j["t_hi"] = cfg.t_hi;
  j["t_lo"] = cfg.t_lo;
  j["restarts"] = cfg.restarts;
  j["seed"] = cfg.seed;
  j["threads"] = cfg.threads;
  return j.dump(2) + "\n";
}

}  // namespace spinlogic
