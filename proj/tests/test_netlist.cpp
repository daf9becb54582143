#include "spinlogic/netlist.hpp"

#include "doctest.h"
#include "spinlogic/compiler.hpp"
#include "spinlogic/errors.hpp"

using namespace spinlogic;

TEST_CASE("minimal netlist parses") {
  const Netlist n = parse_netlist(
      "INPUT a b\n"
      "NAND a b -> c\n"
      "OUTPUT c\n");
  CHECK(n.inputs == std::vector<std::string>{"a", "b"});
  CHECK(n.outputs == std::vector<std::string>{"c"});
  REQUIRE(n.gates.size() == 1);
  CHECK(n.gates[0].kind == gates::GateKind::Nand);
  CHECK(n.gates[0].inputs == std::vector<std::string>{"a", "b"});
  CHECK(n.gates[0].output == "c");
  CHECK_FALSE(n.gates[0].params.has_value());
  CHECK(wire_order(n) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("comments, params, clamps and ancilla wires") {
  const Netlist n = parse_netlist(
      "# half adder with overrides\n"
      "INPUT A B\n"
      "XOR A B -> S ANC t c1=2 c2=1.5 c12=1\n"
      "AND A B -> C   # carry\n"
      "CLAMP A 1\n"
      "OUTPUT S C\n");
  REQUIRE(n.gates.size() == 2);
  CHECK(n.gates[0].ancilla == "t");
  REQUIRE(n.gates[0].params.has_value());
  CHECK(n.gates[0].params->c1 == 2.0);
  CHECK(n.gates[0].params->c2 == 1.5);
  CHECK(n.gates[0].params->c12 == 1.0);
  REQUIRE(n.clamps.size() == 1);
  CHECK(n.clamps[0].wire == "A");
  CHECK(n.clamps[0].value == true);
  // Internal wires come after inputs, in first-use order; outputs last.
  CHECK(wire_order(n) ==
        std::vector<std::string>{"A", "B", "t", "S", "C"});
}

TEST_CASE("half adder source matches the generated netlist") {
  const Netlist parsed = parse_netlist(
      "INPUT A B\n"
      "NAND A B -> t\n"
      "NAND A t -> u\n"
      "NAND B t -> v\n"
      "NAND u v -> S\n"
      "NAND t t -> C\n"
      "OUTPUT S C\n");
  CHECK(parsed == half_adder(AdderVariant::AllNand));
  CHECK(wire_order(parsed).size() == 7);
  CHECK(parsed.gates.size() == 5);
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_WITH_AS(parse_netlist("INPUT a\nFROB a -> b\n"),
                       "line 2: syntax error: unknown gate 'FROB'",
                       ParseError);
  CHECK_THROWS_AS(parse_netlist("INPUT a\nNAND a -> b\n"), ParseError);
  CHECK_THROWS_AS(parse_netlist("INPUT a b\nNAND a b c\n"), ParseError);
  CHECK_THROWS_AS(
      parse_netlist("INPUT a\nCLAMP a 0\nCLAMP a 1\n"), ParseError);
  CHECK_THROWS_AS(
      parse_netlist("INPUT a\nCLAMP a 0\nCLAMP a 0\n"), ParseError);
  CHECK_THROWS_AS(parse_netlist("INPUT a b\nOUTPUT q\n"), ParseError);
  CHECK_THROWS_AS(parse_netlist("INPUT a\nNOT a -> y c1=2\n"), ParseError);
  CHECK_THROWS_AS(parse_netlist("INPUT a b\nAND a b -> y ANC t\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_netlist("CLAMP w two\n"), ParseError);

  try {
    parse_netlist("INPUT a b\n\nNAND a b ->\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("copy groups and constants") {
  const Netlist n = parse_netlist(
      "INPUT a\n"
      "COPY a b c\n"
      "CONST1 -> k\n"
      "NAND b k -> y\n"
      "OUTPUT y\n");
  REQUIRE(n.gates.size() == 3);
  CHECK(n.gates[0].kind == gates::GateKind::Copy);
  CHECK(n.gates[0].inputs.size() == 3);
  CHECK(n.gates[0].output.empty());
  CHECK(n.gates[1].kind == gates::GateKind::One);

  const auto values = evaluate_netlist(n, {{"a", true}});
  CHECK(values.at("b") == true);
  CHECK(values.at("c") == true);
  CHECK(values.at("k") == true);
  CHECK(values.at("y") == false);
}

TEST_CASE("text round trip is stable") {
  for (AdderVariant v : {AdderVariant::AllNand, AdderVariant::Standard}) {
    const Netlist n = ripple_adder(3, v);
    const std::string text = to_text(n);
    CHECK(parse_netlist(text) == n);
    CHECK(to_text(parse_netlist(text)) == text);
  }
  // Parameter overrides survive the round trip.
  Netlist n = half_adder(AdderVariant::Standard);
  n.gates[0].params = gates::NandParams{0.75, 2.0, 1.25};
  CHECK(parse_netlist(to_text(n)) == n);
}

TEST_CASE("boolean oracle evaluation") {
  const Netlist ha = half_adder(AdderVariant::AllNand);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const auto v = evaluate_netlist(ha, {{"A", a != 0}, {"B", b != 0}});
      CHECK(static_cast<int>(v.at("S")) == (a ^ b));
      CHECK(static_cast<int>(v.at("C")) == (a & b));
    }
  }
  // Parity-gate ancillas settle to NOR of the gate inputs.
  const Netlist std_ha = half_adder(AdderVariant::Standard);
  const auto v = evaluate_netlist(std_ha, {{"A", false}, {"B", false}});
  CHECK(v.at("a") == true);
  const auto w = evaluate_netlist(std_ha, {{"A", true}, {"B", false}});
  CHECK(w.at("a") == false);

  CHECK_THROWS_AS(evaluate_netlist(ha, {{"A", true}}), DomainError);

  // Undriven wires are rejected.
  const Netlist dangling = parse_netlist("INPUT a\nNAND a q -> y\nOUTPUT y\n");
  CHECK_THROWS_AS(evaluate_netlist(dangling, {{"a", true}}), DomainError);
}
