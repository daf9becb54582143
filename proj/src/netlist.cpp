#include "spinlogic/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <sstream>

#include "spinlogic/errors.hpp"

namespace spinlogic {

namespace {

bool valid_wire_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      return false;
    }
  }
  return true;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

double parse_double(const std::string& text, int line) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError(line, "syntax error: bad number '" + text + "'");
  }
  return v;
}

// Parses trailing c1=/c2=/c12= tokens; returns nullopt when none appear.
std::optional<gates::NandParams> parse_params(
    const std::vector<std::string>& tokens, std::size_t from, int line) {
  if (from >= tokens.size()) return std::nullopt;
  gates::NandParams p;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line, "syntax error: expected key=value, got '" +
                                 tok + "'");
    }
    const std::string key = tok.substr(0, eq);
    const double value = parse_double(tok.substr(eq + 1), line);
    if (key == "c1") {
      p.c1 = value;
    } else if (key == "c2") {
      p.c2 = value;
    } else if (key == "c12") {
      p.c12 = value;
    } else {
      throw ParseError(line, "syntax error: unknown parameter '" + key + "'");
    }
  }
  return p;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Trim to the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char probe[64];
    std::snprintf(probe, sizeof probe, "%.*g", prec, v);
    if (std::strtod(probe, nullptr) == v) return probe;
  }
  return buf;
}

}  // namespace

Netlist parse_netlist(std::string_view source) {
  Netlist n;
  std::set<std::string> clamped;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t eol = source.find('\n', pos);
    if (eol == std::string_view::npos) eol = source.size();
    std::string_view line = source.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) {
      if (eol == source.size()) break;
      continue;
    }
    const std::string& head = tok[0];

    if (head == "INPUT" || head == "OUTPUT") {
      if (tok.size() < 2) {
        throw ParseError(line_no, "arity mismatch: " + head +
                                      " needs at least one wire");
      }
      auto& list = head == "INPUT" ? n.inputs : n.outputs;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!valid_wire_name(tok[i])) {
          throw ParseError(line_no, "syntax error: bad wire name '" +
                                        tok[i] + "'");
        }
        if (std::find(list.begin(), list.end(), tok[i]) != list.end()) {
          throw ParseError(line_no,
                           "syntax error: wire '" + tok[i] +
                               "' declared twice in " + head);
        }
        list.push_back(tok[i]);
      }
      continue;
    }

    if (head == "CLAMP") {
      if (tok.size() != 3 || (tok[2] != "0" && tok[2] != "1")) {
        throw ParseError(line_no, "arity mismatch: CLAMP takes a wire and "
                                  "a bit");
      }
      if (!valid_wire_name(tok[1])) {
        throw ParseError(line_no,
                         "syntax error: bad wire name '" + tok[1] + "'");
      }
      if (!clamped.insert(tok[1]).second) {
        throw ParseError(line_no,
                         "duplicate clamp: wire '" + tok[1] + "'");
      }
      n.clamps.push_back({tok[1], tok[2] == "1", line_no});
      continue;
    }

    // Gate line.
    GateInstance g;
    g.line = line_no;
    std::string kind_name = head;
    if (head == "CONST0") kind_name = "ZERO";
    if (head == "CONST1") kind_name = "ONE";
    const auto kind = gates::gate_kind_from_name(kind_name);
    if (!kind) {
      throw ParseError(line_no, "syntax error: unknown gate '" + head + "'");
    }
    g.kind = *kind;

    if (g.kind == gates::GateKind::Copy) {
      // COPY w1 w2 ... wk: a k-wire equality group, no arrow form.
      if (tok.size() < 3) {
        throw ParseError(line_no,
                         "arity mismatch: COPY groups at least two wires");
      }
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!valid_wire_name(tok[i])) {
          throw ParseError(line_no, "syntax error: bad wire name '" +
                                        tok[i] + "'");
        }
        g.inputs.push_back(tok[i]);
      }
      n.gates.push_back(std::move(g));
      continue;
    }

    const int arity = gates::gate_arity(g.kind);
    std::size_t at = 1;
    for (int k = 0; k < arity; ++k, ++at) {
      if (at >= tok.size() || !valid_wire_name(tok[at])) {
        throw ParseError(line_no, "arity mismatch: " + head + " takes " +
                                      std::to_string(arity) + " inputs");
      }
      g.inputs.push_back(tok[at]);
    }
    if (at >= tok.size() || tok[at] != "->") {
      throw ParseError(line_no, "syntax error: expected '->' after " +
                                    head + " inputs");
    }
    ++at;
    if (at >= tok.size() || !valid_wire_name(tok[at])) {
      throw ParseError(line_no, "syntax error: missing output wire");
    }
    g.output = tok[at++];
    if (at < tok.size() && tok[at] == "ANC") {
      if (!gates::gate_needs_ancilla(g.kind)) {
        throw ParseError(line_no, "syntax error: " + head +
                                      " takes no ancilla wire");
      }
      ++at;
      if (at >= tok.size() || !valid_wire_name(tok[at])) {
        throw ParseError(line_no, "syntax error: missing ancilla wire");
      }
      g.ancilla = tok[at++];
    }
    if (!gates::gate_parameterized(g.kind) && at < tok.size()) {
      throw ParseError(line_no,
                       "syntax error: " + head + " takes no parameters");
    }
    g.params = parse_params(tok, at, line_no);
    n.gates.push_back(std::move(g));
  }

  // Every declared output must be driven by something.
  std::set<std::string> driven(n.inputs.begin(), n.inputs.end());
  for (const GateInstance& g : n.gates) {
    if (!g.output.empty()) driven.insert(g.output);
    if (g.kind == gates::GateKind::Copy && g.output.empty()) {
      driven.insert(g.inputs.begin(), g.inputs.end());
    }
  }
  for (const std::string& w : n.outputs) {
    if (!driven.count(w)) {
      throw ParseError(0, "undeclared output: no gate drives wire '" + w +
                              "'");
    }
  }
  return n;
}

std::string to_text(const Netlist& n) {
  std::ostringstream out;
  if (!n.inputs.empty()) {
    out << "INPUT";
    for (const auto& w : n.inputs) out << ' ' << w;
    out << '\n';
  }
  for (const GateInstance& g : n.gates) {
    if (g.kind == gates::GateKind::Zero) {
      out << "CONST0 -> " << g.output;
    } else if (g.kind == gates::GateKind::One) {
      out << "CONST1 -> " << g.output;
    } else if (g.kind == gates::GateKind::Copy && g.output.empty()) {
      out << "COPY";
      for (const auto& w : g.inputs) out << ' ' << w;
    } else {
      out << gates::gate_kind_name(g.kind);
      for (const auto& w : g.inputs) out << ' ' << w;
      out << " -> " << g.output;
      if (!g.ancilla.empty()) out << " ANC " << g.ancilla;
    }
    if (g.params) {
      out << " c1=" << format_double(g.params->c1)
          << " c2=" << format_double(g.params->c2)
          << " c12=" << format_double(g.params->c12);
    }
    out << '\n';
  }
  for (const ClampDirective& c : n.clamps) {
    out << "CLAMP " << c.wire << ' ' << (c.value ? 1 : 0) << '\n';
  }
  if (!n.outputs.empty()) {
    out << "OUTPUT";
    for (const auto& w : n.outputs) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> wire_order(const Netlist& n) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  const std::set<std::string> is_output(n.outputs.begin(), n.outputs.end());
  auto push = [&](const std::string& w) {
    if (w.empty() || is_output.count(w) || seen.count(w)) return;
    seen.insert(w);
    order.push_back(w);
  };
  for (const std::string& w : n.inputs) push(w);
  for (const GateInstance& g : n.gates) {
    for (const std::string& w : g.inputs) push(w);
    push(g.output);
    push(g.ancilla);
  }
  for (const ClampDirective& c : n.clamps) push(c.wire);
  for (const std::string& w : n.outputs) {
    if (seen.insert(w).second) order.push_back(w);
  }
  return order;
}

std::map<std::string, bool> evaluate_netlist(
    const Netlist& n, const std::map<std::string, bool>& input_values) {
  std::map<std::string, bool> value;
  for (const std::string& w : n.inputs) {
    auto it = input_values.find(w);
    if (it == input_values.end()) {
      throw DomainError("missing value for input wire '" + w + "'");
    }
    value[w] = it->second;
  }

  auto assign = [&](const std::string& w, bool v) {
    auto [it, inserted] = value.try_emplace(w, v);
    if (!inserted && it->second != v) {
      throw DomainError("conflicting drivers for wire '" + w + "'");
    }
    return inserted;
  };

  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const GateInstance& g : n.gates) {
      using gates::GateKind;
      if (g.kind == GateKind::Zero || g.kind == GateKind::One) {
        progressed |= assign(g.output, g.kind == GateKind::One);
        continue;
      }
      if (g.kind == GateKind::Copy && g.output.empty()) {
        // Equality group: propagate from any determined member.
        std::optional<bool> v;
        for (const std::string& w : g.inputs) {
          auto it = value.find(w);
          if (it != value.end()) {
            if (v && *v != it->second) {
              throw DomainError("conflicting drivers for wire '" + w + "'");
            }
            v = it->second;
          }
        }
        if (v) {
          for (const std::string& w : g.inputs) progressed |= assign(w, *v);
        }
        continue;
      }
      std::vector<bool> in;
      in.reserve(g.inputs.size());
      bool ready = true;
      for (const std::string& w : g.inputs) {
        auto it = value.find(w);
        if (it == value.end()) {
          ready = false;
          break;
        }
        in.push_back(it->second);
      }
      if (!ready) continue;
      const TruthTable f = gates::gate_function(g.kind);
      int row = 0;
      for (std::size_t k = 0; k < in.size(); ++k) {
        row |= static_cast<int>(in[k]) << (static_cast<int>(in.size()) - 1 -
                                           static_cast<int>(k));
      }
      progressed |= assign(g.output, f.output(row) != 0);
      if (!g.ancilla.empty()) {
        // Parity-gate ancilla settles to NOR of the inputs in the ground
        // space.
        progressed |= assign(g.ancilla, !in[0] && !in[1]);
      }
    }
  }

  for (const std::string& w : wire_order(n)) {
    if (!value.count(w)) {
      throw DomainError("wire '" + w +
                        "' is not determined by the inputs; the netlist "
                        "is underdetermined");
    }
  }
  return value;
}

}  // namespace spinlogic
