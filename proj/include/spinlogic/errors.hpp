#pragma once

#include <stdexcept>
#include <string>

namespace spinlogic {

// Base class for all library errors. `category()` is a stable,
// machine-parsable tag used by the CLI for exit diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

// Mismatched spin counts between operands.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& m) : Error("dimension", m) {}
};

// Bad index map in embed/remap.
class MappingError : public Error {
 public:
  explicit MappingError(const std::string& m) : Error("mapping", m) {}
};

// Parameter outside its validity domain (e.g. a coupling that must stay
// positive, or greater than 1/2 for the four-spin parity gate).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& m) : Error("parameter", m) {}
};

// Problem too large for exhaustive enumeration.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& m) : Error("capacity", m) {}
};

// Netlist text that does not conform to the grammar.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& m)
      : Error("syntax", "line " + std::to_string(line) + ": " + m),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Wire used in a role it does not have (e.g. flipping a non-ancilla).
class RoleError : public Error {
 public:
  explicit RoleError(const std::string& m) : Error("role", m) {}
};

// Unknown gate or wire name.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& m) : Error("lookup", m) {}
};

// Symmetry operation that mixes input and output spins by permutation.
class PartitionError : public Error {
 public:
  explicit PartitionError(const std::string& m) : Error("partition", m) {}
};

// Structural property violated (e.g. interaction graph from a Hamiltonian
// with three-spin terms, or metrics on a single-node graph).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& m) : Error("domain", m) {}
};

}  // namespace spinlogic
