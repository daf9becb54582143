#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "spinlogic/gates.hpp"

namespace spinlogic {

/// One gate instance in a netlist. Copy groups store every member wire
/// in `inputs` and leave `output` empty; constants have no inputs.
struct GateInstance {
  gates::GateKind kind = gates::GateKind::Nand;
  std::vector<std::string> inputs;
  std::string output;
  std::string ancilla;  // empty unless the gate needs one
  std::optional<gates::NandParams> params;  // instance override of (c1,c2,c12)
  int line = 0;  // source position, ignored by equality

  bool operator==(const GateInstance& o) const {
    const auto key = [](const GateInstance& g) {
      return std::tie(g.kind, g.inputs, g.output, g.ancilla);
    };
    if (key(*this) != key(o)) return false;
    if (params.has_value() != o.params.has_value()) return false;
    return !params || (params->c1 == o.params->c1 &&
                       params->c2 == o.params->c2 &&
                       params->c12 == o.params->c12);
  }
};

struct ClampDirective {
  std::string wire;
  bool value = false;
  int line = 0;

  bool operator==(const ClampDirective& o) const {
    return wire == o.wire && value == o.value;
  }
};

/// Wire-named gate list: the compiler's source language.
struct Netlist {
  std::vector<std::string> inputs;   // declaration order
  std::vector<std::string> outputs;  // declaration order
  std::vector<GateInstance> gates;   // file order
  std::vector<ClampDirective> clamps;

  bool operator==(const Netlist& other) const = default;
};

/// Parses the line-oriented netlist format:
///
///   # comment
///   INPUT a b ...
///   OUTPUT s c ...
///   CLAMP w 0|1
///   NAND a b -> y [c1=<f> c2=<f> c12=<f>]     (any AND/OR-orbit gate)
///   XOR a b -> y ANC t [c1= c2= c12=]         (same for EQUIV)
///   COPY w1 w2 ... wk
///   NOT a -> y
///   CONST0 -> y
///   CONST1 -> y
///
/// Throws ParseError with the offending line on malformed input, arity
/// mismatches, duplicate clamps, or an OUTPUT wire nothing drives.
Netlist parse_netlist(std::string_view source);

/// Renders a netlist back to the text format (stable formatting, so
/// parse(to_text(n)) == n).
std::string to_text(const Netlist& n);

/// Pure Boolean evaluation of a netlist for one input pattern: wire
/// values derived by constraint propagation over the gate list, with
/// parity-gate ancillas taking their ground-space value NOR(in1, in2).
/// This is the independent oracle the Hamiltonian route is checked
/// against. Returns the full wire valuation keyed by name. Throws
/// DomainError if some wire never becomes determined or two rules
/// disagree.
std::map<std::string, bool> evaluate_netlist(
    const Netlist& n, const std::map<std::string, bool>& input_values);

/// Wire names in the netlist's deterministic spin order: inputs in
/// declaration order, then internal wires in first-use order, then
/// outputs in declaration order.
std::vector<std::string> wire_order(const Netlist& n);

}  // namespace spinlogic
