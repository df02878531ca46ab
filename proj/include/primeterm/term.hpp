#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "primeterm/bigint.hpp"

namespace primeterm {

// Expression trees over {+, -, monus, *, floor-div, mod, pow} with integer
// constants and named variables. Trees are immutable after construction and
// freely shareable across threads.
//
// Text grammar (canonical formatting round-trips through it):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/"|"%") factor)*
//   factor := atom ("^" factor)?            -- "^" right-associative
//   atom   := INT | VAR | "(" expr ")" | "monus(" expr "," expr ")"
//   INT    := [0-9]+          VAR := [a-z][a-z0-9_]*
// "/" is floor division, "%" reduces into [0, divisor).

enum class TermKind {
  Const,
  Var,
  Add,
  Sub,
  Monus,
  Mul,
  FloorDiv,
  Mod,
  Pow,
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  static TermPtr constant(Bigint v);
  static TermPtr variable(std::string name);
  static TermPtr make(TermKind op, TermPtr lhs, TermPtr rhs);

  TermKind kind() const { return kind_; }
  const Bigint& value() const { return value_; }       // Const only
  const std::string& name() const { return name_; }    // Var only
  const TermPtr& lhs() const { return lhs_; }
  const TermPtr& rhs() const { return rhs_; }

 private:
  Term() = default;
  TermKind kind_ = TermKind::Const;
  Bigint value_;
  std::string name_;
  TermPtr lhs_, rhs_;
};

// Convenience builders.
TermPtr t_const(Bigint v);
TermPtr t_const(long v);
TermPtr t_var(std::string name);
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_sub(TermPtr a, TermPtr b);
TermPtr t_monus(TermPtr a, TermPtr b);
TermPtr t_mul(TermPtr a, TermPtr b);
TermPtr t_div(TermPtr a, TermPtr b);
TermPtr t_mod(TermPtr a, TermPtr b);
TermPtr t_pow(TermPtr a, TermPtr b);
// 2^e as a term.
TermPtr t_pow2(TermPtr e);

using Env = std::map<std::string, Bigint>;

struct EvalConfig {
  std::uint64_t max_bits = kDefaultMaxBits;
  // Allows higher layers to evaluate popcount / 2-adic valuation / gcd of an
  // already-evaluated integer natively instead of expanding their defining
  // expressions literally. Plain eval_term ignores it; the number-theoretic
  // wrappers consult it for their default mode.
  bool semantic_shortcuts = true;
};

// Exact evaluation. Intermediates are signed; "%" and "/" demand a positive
// divisor, "^" a non-negative exponent, monus clamps at zero. Throws
// UnboundVariable / DomainError / BitLimitExceeded.
Bigint eval_term(const Term& t, const Env& env, const EvalConfig& cfg = {});
Bigint eval_term(const TermPtr& t, const Env& env, const EvalConfig& cfg = {});

enum class TermStyle { Canonical, Latex };

// Canonical style re-parses to a structurally identical tree (for trees
// whose constants are non-negative, which is all the grammar can spell).
std::string format_term(const Term& t, TermStyle style = TermStyle::Canonical);
std::string format_term(const TermPtr& t,
                        TermStyle style = TermStyle::Canonical);

TermPtr parse_term(std::string_view text);

bool structurally_equal(const Term& a, const Term& b);

}  // namespace primeterm
