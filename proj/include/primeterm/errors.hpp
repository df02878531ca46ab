#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace primeterm {

// Every library error derives from Error so callers (and the CLI) can map
// them to exit codes without enumerating each type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. byte_offset points at the offending byte.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " (byte " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

// Input outside an operation's domain (negative exponent, zero divisor,
// argument below a validity bound, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A free variable of the evaluated expression is not bound.
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), variable(name) {}
  std::string variable;
};

// An intermediate value would exceed the configured bit budget.
// required_bits is a lower estimate of what the refused step needs; it is
// reported so feasibility cliffs are visible facts, not silent failures.
class BitLimitExceeded : public Error {
 public:
  BitLimitExceeded(const std::string& required, std::uint64_t budget)
      : Error("bit budget exceeded: needs ~" + required + " bits (budget " +
              std::to_string(budget) + ")"),
        required_bits(required),
        max_bits(budget) {}
  std::string required_bits;  // decimal; may not fit any machine integer
  std::uint64_t max_bits;
};

// A division asserted exact left a remainder. Signals a construction bug,
// never user error.
class ExactDivisionViolated : public Error {
 public:
  using Error::Error;
};

// Relation is false for the given inputs, so no witness exists.
class NoWitness : public Error {
 public:
  using Error::Error;
};

// Quantified-variable block overlaps an input or output slot.
class SlotCollision : public Error {
 public:
  using Error::Error;
};

// A substitution or product would put something non-affine into an
// exponent of 2.
class NonLinearExponent : public Error {
 public:
  using Error::Error;
};

// Brute-force oracle asked to operate beyond its supported range.
class RangeExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace primeterm
