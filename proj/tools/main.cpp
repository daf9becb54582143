// Command-line front end: gate inspection, netlist compilation,
// exhaustive verification, annealing, symmetry queries and network
// analysis, composing through files or pipes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinlogic/analysis.hpp"
#include "spinlogic/compiler.hpp"
#include "spinlogic/errors.hpp"
#include "spinlogic/gates.hpp"
#include "spinlogic/netlist.hpp"
#include "spinlogic/serialize.hpp"
#include "spinlogic/solver.hpp"
#include "spinlogic/symmetry.hpp"

using namespace spinlogic;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("io", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("io", "cannot write '" + path + "'");
  file << text;
}

std::string fmt(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

// The 16 two-input tables by readable name, for orbit/stab output.
std::string table_name(const TruthTable& t) {
  static const std::vector<std::pair<std::string, std::string>> names = {
      {"0000", "ZERO"},  {"1111", "ONE"},   {"0011", "x"},
      {"1100", "NOT_x"}, {"0101", "y"},     {"1010", "NOT_y"},
      {"0001", "AND"},   {"0111", "OR"},    {"1110", "NAND"},
      {"1000", "NOR"},   {"0100", "ANDN1"}, {"0010", "ANDN2"},
      {"1101", "ORN1"},  {"1011", "ORN2"},  {"0110", "XOR"},
      {"1001", "EQUIV"},
  };
  for (const auto& [bits, name] : names) {
    if (t.bits() == bits) return name;
  }
  return t.bits();
}

TruthTable table_from_arg(const std::string& arg) {
  if (auto kind = gates::gate_kind_from_name(arg)) {
    return gates::gate_table(*kind);
  }
  if (arg.size() == 4 &&
      arg.find_first_not_of("01") == std::string::npos) {
    return TruthTable::from_bits(arg);
  }
  throw LookupError("unknown table '" + arg +
                    "' (use a gate name or 4 bits b1b2b3b4)");
}

std::string spectrum_report(const SpinPolynomial& h,
                            const SpectrumOptions& opt) {
  const Spectrum s = spectrum(h, opt);
  std::ostringstream out;
  out << "energy\tmultiplicity\n";
  for (const auto& level : s.levels) {
    out << fmt(level.energy) << '\t' << level.multiplicity << '\n';
  }
  out << "ground energy: " << fmt(s.ground_energy) << '\n';
  out << "ground states:";
  for (const Assignment& a : s.ground_states) out << ' ' << a.bits();
  out << '\n';
  return out.str();
}

struct ClampArg {
  std::string wire;
  bool value;
};

ClampArg parse_clamp(const std::string& arg) {
  const std::size_t eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 2 != arg.size() ||
      (arg.back() != '0' && arg.back() != '1')) {
    throw ParameterError("clamp must be wire=0 or wire=1, got '" + arg +
                         "'");
  }
  return {arg.substr(0, eq), arg.back() == '1'};
}

int cmd_gate(const std::string& name, double c1, double c2, double c12,
             const std::string& apply_word, const std::string& json_path,
             const SpectrumOptions& opt) {
  const auto kind = gates::gate_kind_from_name(name);
  if (!kind) throw LookupError("unknown gate '" + name + "'");
  SpinPolynomial h = gates::gate_by_name(*kind, c1, c2, c12);
  if (!apply_word.empty()) {
    h = SymmetryOp::parse(apply_word, h.n_spins()).apply(h);
  }
  std::vector<std::string> wires;
  const int arity = gates::gate_arity(*kind);
  if (arity >= 1) wires.push_back("x");
  if (arity >= 2) wires.push_back("y");
  wires.push_back("z");
  if (gates::gate_needs_ancilla(*kind)) wires.push_back("a");
  write_output(json_path, to_json(h, wires));
  std::cout << spectrum_report(h, opt);
  return 0;
}

int cmd_adder(int bits, const std::string& variant,
              const std::string& out_path) {
  const auto v = adder_variant_from_name(variant);
  if (!v) {
    throw LookupError("unknown variant '" + variant +
                      "' (all-nand or standard)");
  }
  write_output(out_path, to_text(ripple_adder(bits, *v)));
  return 0;
}

int cmd_compile(const std::string& in_path, double c1, double c2, double c12,
                const std::string& out_path) {
  const Netlist net = parse_netlist(read_input(in_path));
  const CompiledCircuit c = compile(net, {c1, c2, c12});
  write_output(out_path, to_json(c));
  return 0;
}

int cmd_verify(const std::string& in_path, bool report,
               const SpectrumOptions& opt) {
  const CompiledCircuit c = circuit_from_json(read_input(in_path));
  const Netlist net = netlist_from_placements(c);
  const VerifyReport r = verify(c, net, opt);
  std::cout << (r.pass ? "PASS" : "FAIL") << ": " << r.message << '\n';
  std::cout << "ground energy: " << fmt(r.ground_energy)
            << " (expected " << fmt(r.expected_energy) << ")\n";
  if (report) {
    std::cout << "inputs\toutputs\tancillas\n";
    for (const auto& row : r.rows) {
      std::cout << row.input_bits << '\t' << row.output_bits << '\t'
                << row.ancilla_bits << '\n';
    }
  }
  if (r.counterexample_bits) {
    std::cout << "counterexample: " << *r.counterexample_bits
              << " at energy " << fmt(*r.counterexample_energy) << '\n';
  }
  return r.pass ? 0 : 1;
}

int cmd_solve(const std::string& in_path,
              const std::vector<std::string>& clamp_args,
              AnnealConfig cfg, const std::string& config_path) {
  if (!config_path.empty()) {
    const AnnealConfig file_cfg =
        anneal_config_from_json(read_input(config_path));
    const AnnealConfig defaults{};
    // Command-line values win over the config file where given.
    if (cfg.sweeps == defaults.sweeps) cfg.sweeps = file_cfg.sweeps;
    if (cfg.t_hi == defaults.t_hi) cfg.t_hi = file_cfg.t_hi;
    if (cfg.t_lo == defaults.t_lo) cfg.t_lo = file_cfg.t_lo;
    if (cfg.restarts == defaults.restarts) cfg.restarts = file_cfg.restarts;
    if (cfg.seed == defaults.seed) cfg.seed = file_cfg.seed;
    if (cfg.threads == defaults.threads) cfg.threads = file_cfg.threads;
  }
  CompiledCircuit c = circuit_from_json(read_input(in_path));
  const int n = c.hamiltonian.n_spins();
  std::vector<std::pair<std::string, bool>> pins;
  for (const std::string& arg : clamp_args) {
    const ClampArg pin = parse_clamp(arg);
    const int spin = c.wire_index(pin.wire);
    c.hamiltonian += gates::clamp(pin.value).embed({spin}, n);
    c.clamps.emplace_back(spin, pin.value);
    pins.emplace_back(pin.wire, pin.value);
  }
  const SolveResult r =
      anneal(c.hamiltonian, c.ground_energy_expected, cfg);
  std::cout << "best energy: " << fmt(r.best_energy) << " (expected "
            << fmt(c.ground_energy_expected) << ")\n";
  std::cout << "success: " << (r.success ? "yes" : "no") << '\n';
  std::vector<std::string> outputs;
  for (std::size_t i = 0; i < c.wires.size(); ++i) {
    if (c.roles[i] == WireRole::Output) outputs.push_back(c.wires[i]);
  }
  const auto bits = read_wires(r, c, outputs);
  std::cout << "outputs:";
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    std::cout << ' ' << outputs[k] << '=' << (bits[k] ? 1 : 0);
  }
  std::cout << '\n';
  if (!pins.empty()) {
    std::cout << "clamps:";
    for (const auto& [wire, value] : pins) {
      std::cout << ' ' << wire << '=' << (value ? 1 : 0);
    }
    std::cout << '\n';
  }
  return r.success ? 0 : 1;
}

int cmd_orbit() {
  for (const Orbit& orbit : orbits()) {
    std::cout << "orbit of " << table_name(orbit.representative)
              << ": size " << orbit.members.size() << ", stabilizer "
              << stabilizer(orbit.representative).size() << ", members:";
    for (const TruthTable& t : orbit.members) {
      std::cout << ' ' << table_name(t);
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_stab(const std::string& table_arg) {
  const TruthTable t = table_from_arg(table_arg);
  const auto stab = stabilizer(t);
  std::cout << "stabilizer of " << table_name(t) << ": order "
            << stab.size() << '\n';
  for (const SymmetryOp& g : stab) {
    std::cout << "  " << g.to_string() << '\n';
  }
  return 0;
}

int cmd_graph(const std::string& in_path, bool metrics,
              const std::string& dot_path, const std::string& json_path) {
  const CompiledCircuit c = circuit_from_json(read_input(in_path));
  const InteractionGraph g = to_graph(c);
  const auto [mean_d, var_d] = mean_and_variance(degree_centrality(g));
  std::cout << "nodes: " << g.nodes.size() << ", edges: " << g.edges.size()
            << '\n';
  std::cout << "degree centrality: mean " << fmt(mean_d) << ", variance "
            << fmt(var_d) << '\n';
  if (metrics) std::cout << metrics_table(g);
  if (!dot_path.empty()) write_output(dot_path, to_dot(g));
  if (!json_path.empty()) write_output(json_path, to_json_graph(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ground-state spin-logic toolkit"};
  app.require_subcommand(1);

  SpectrumOptions opt;
  app.add_option("--cap", opt.cap, "exhaustive enumeration cap (spins)");
  app.add_option("--threads", opt.threads, "worker threads");

  double c1 = 1.0, c2 = 1.0, c12 = 1.0;

  auto* gate = app.add_subcommand("gate", "build a named gate Hamiltonian");
  std::string gate_name;
  std::string gate_json = "-";
  gate->add_option("name", gate_name, "gate name (ZERO..EQUIV)")->required();
  gate->add_option("--c1", c1, "first coupling");
  gate->add_option("--c2", c2, "second coupling");
  gate->add_option("--c12", c12, "pair coupling");
  std::string gate_apply;
  gate->add_option("--apply", gate_apply,
                   "symmetry word to apply, e.g. F1.F2.R12");
  gate->add_option("--json", gate_json, "write Hamiltonian JSON here");

  auto* adder = app.add_subcommand("adder", "emit a ripple-carry netlist");
  int bits = 4;
  std::string variant = "all-nand";
  std::string adder_out = "-";
  adder->add_option("--bits", bits, "summand width");
  adder->add_option("--variant", variant, "all-nand or standard");
  adder->add_option("--out", adder_out, "output path");

  auto* compile_cmd =
      app.add_subcommand("compile", "lower a netlist to a Hamiltonian");
  std::string compile_in = "-";
  std::string compile_out = "-";
  compile_cmd->add_option("netlist", compile_in, "netlist file or - for stdin");
  compile_cmd->add_option("--c1", c1, "default first coupling");
  compile_cmd->add_option("--c2", c2, "default second coupling");
  compile_cmd->add_option("--c12", c12, "default pair coupling");
  compile_cmd->add_option("--out", compile_out, "output path");

  auto* verify_cmd =
      app.add_subcommand("verify", "check a compiled circuit exhaustively");
  std::string verify_in = "-";
  bool verify_report = false;
  verify_cmd->add_option("circuit", verify_in, "compiled JSON or - for stdin");
  verify_cmd->add_flag("--report", verify_report, "print the ground table");

  auto* solve_cmd =
      app.add_subcommand("solve", "anneal a compiled circuit");
  std::string solve_in = "-";
  std::vector<std::string> clamp_args;
  std::string config_path;
  AnnealConfig cfg;
  solve_cmd->add_option("circuit", solve_in, "compiled JSON or - for stdin");
  solve_cmd->add_option("--clamp", clamp_args, "pin wire=bit (repeatable)");
  solve_cmd->add_option("--seed", cfg.seed, "RNG seed");
  solve_cmd->add_option("--sweeps", cfg.sweeps, "sweeps per restart");
  solve_cmd->add_option("--restarts", cfg.restarts, "independent restarts");
  solve_cmd->add_option("--t-hi", cfg.t_hi, "start temperature (0 = auto)");
  solve_cmd->add_option("--t-lo", cfg.t_lo, "final temperature");
  solve_cmd->add_option("--config", config_path, "AnnealConfig JSON file");

  auto* orbit_cmd =
      app.add_subcommand("orbit", "orbits of the 16 two-input tables");
  auto* stab_cmd = app.add_subcommand("stab", "stabilizer of a table");
  std::string stab_table;
  stab_cmd->add_option("table", stab_table, "gate name or 4-bit table")
      ->required();

  auto* graph_cmd =
      app.add_subcommand("graph", "interaction network of a circuit");
  std::string graph_in = "-";
  bool metrics = false;
  std::string dot_path, graph_json;
  graph_cmd->add_option("circuit", graph_in, "compiled JSON or - for stdin");
  graph_cmd->add_flag("--metrics", metrics, "print the per-node metrics");
  graph_cmd->add_option("--dot", dot_path, "write Graphviz here");
  graph_cmd->add_option("--json", graph_json, "write graph JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gate->parsed()) {
      return cmd_gate(gate_name, c1, c2, c12, gate_apply, gate_json, opt);
    }
    if (adder->parsed()) return cmd_adder(bits, variant, adder_out);
    if (compile_cmd->parsed()) {
      return cmd_compile(compile_in, c1, c2, c12, compile_out);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_in, verify_report, opt);
    if (solve_cmd->parsed()) {
      cfg.threads = opt.threads;
      return cmd_solve(solve_in, clamp_args, cfg, config_path);
    }
    if (orbit_cmd->parsed()) return cmd_orbit();
    if (stab_cmd->parsed()) return cmd_stab(stab_table);
    if (graph_cmd->parsed()) {
      return cmd_graph(graph_in, metrics, dot_path, graph_json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.category() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: io: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
