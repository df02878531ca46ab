#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primeterm/expoly.hpp"
#include "primeterm/term.hpp"

namespace primeterm {

// Registry of single-fold relations: each is a sum of squares over input
// slots, a block of quantified variables, and (usually) an output slot, such
// that the quantified tuple satisfying it is unique given the inputs. The
// registry carries three faces per relation: the symbolic builder, the
// witness constructor, and per-variable strict upper bounds on the witness.

enum class RelId {
  Div,         // z = floor(x / y)            [2]
  Mod,         // z = x mod y                 [2]
  Divides,     // y | x                       [1]
  NotDivides,  // y does not divide x         [3]
  Nu2,         // z = nu2(x)                  [4]
  Exp,         // z = x^y                     [4]
  Binom12,     // z = C(x, y), power form     [12]
  Binom7,      // z = C(x, y), quotient form  [7]
  Factorial,   // z = x!                      [13]
  HammingWeight,  // z = HW(x)                [12]
  M4Zero,      // m = M(4 f1), one square     [0]
  M4Nine,      // m = M(4 f1), split form     [9]
};

struct RelationInfo {
  RelId id;
  const char* name;
  int input_arity;
  int quantified;
  bool has_output;
};

const std::vector<RelationInfo>& relation_registry();
const RelationInfo& relation_info(RelId id);

// Sum-of-squares polynomial for the relation. Quantified variables occupy
// indices base+1 .. base+quantified; SlotCollision if that block intersects
// a variable used by an input or the output.
ExpoPoly build_relation(RelId id, std::span<const ExpoPoly> inputs, int base,
                        const ExpoPoly& output);

struct Witness {
  std::vector<Bigint> quantified;  // ordered as allocated by the builder
  Bigint output;                   // meaningful iff the relation has one
};

// The unique satisfying assignment; NoWitness when the relation is false for
// the inputs.
Witness witness(RelId id, std::span<const Bigint> inputs,
                const EvalConfig& cfg = {});

// Strict upper bounds for the quantified variables (in order) followed by
// one for the output slot when present. For the relations whose bounds the
// source material derives, these are those expressions; for the two power
// relations they are derived here the same way.
std::vector<Bigint> bounds(RelId id, std::span<const Bigint> inputs,
                           const EvalConfig& cfg = {});

// The global solution-magnitude bound for the 42-variable prime equation as
// a symbolic tower 2^2^2^(2n^4+16); never materialized.
TermPtr solution_bound_tower();

}  // namespace primeterm
