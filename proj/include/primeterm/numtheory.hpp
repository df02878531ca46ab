#pragma once

#include <cstdint>
#include <vector>

#include "primeterm/bigint.hpp"
#include "primeterm/term.hpp"

namespace primeterm {

// Closed-form expressions for number-theoretic functions. Every operation
// comes in two forms: an expression-tree builder (so the formula can be
// printed, parsed and evaluated literally) and a direct evaluator that
// computes the same formula straight on Bigints under the bit budget.
//
// Literal evaluation of some of these has brutal feasibility cliffs (the
// gcd-based valuation plugs 2^n into an exponent, so bits grow doubly
// exponentially). The direct evaluators hit the same cliffs; the Semantic
// mode instead computes the function natively on the evaluated integer.

enum class GcdVariant { Mazzanti, PrunescuShunia };
enum class BinomVariant { Robinson, ModMod, DivMod };
enum class FactorialVariant { PrunescuSauras, NewTerm };
enum class EvalMode { Literal, Semantic };

// gcd(a, b) for a, b >= 1.
TermPtr gcd_term_ast(GcdVariant v, TermPtr a, TermPtr b);
Bigint gcd_term(GcdVariant v, const Bigint& a, const Bigint& b,
                const EvalConfig& cfg = {});

// nu2(n): exponent of 2 in n, n >= 1. Literal mode expands the gcd-based
// formula (feasible only for small n); Semantic counts trailing zeros.
TermPtr nu2_term_ast(TermPtr n);
Bigint nu2_term(const Bigint& n, EvalMode mode, const EvalConfig& cfg = {});

// Hamming weight via HW(n) = nu2(C(2n, n)).
TermPtr hw_term_ast(TermPtr n);
Bigint hw_term(const Bigint& n, EvalMode mode, const EvalConfig& cfg = {});

// x^y through powers of 2 only: 2^((xy+x+1)y) mod (2^(xy+x+1) - x).
// The formula yields 0^0 = 1.
TermPtr pow_term_ast(TermPtr x, TermPtr y);
Bigint pow_term(const Bigint& x, const Bigint& y, const EvalConfig& cfg = {});

// C(a, b) for 0 <= b <= a (DomainError when b > a).
TermPtr binom_term_ast(BinomVariant v, TermPtr a, TermPtr b);
Bigint binom_term(BinomVariant v, const Bigint& a, const Bigint& b,
                  const EvalConfig& cfg = {});

// Generalized Padovan sequence s_d; count values starting at s_d(0).
std::vector<Bigint> padovan_seq(std::uint64_t d, std::uint64_t count);

// n! closed forms. PrunescuSauras is feasible to n = 3 under the default
// budget, NewTerm only to n = 1 (at n = 2 it needs a ~1.4e11-bit
// intermediate; the refusal names that number).
TermPtr factorial_term_ast(FactorialVariant v, TermPtr n);
Bigint factorial_term(FactorialVariant v, std::uint64_t n,
                      const EvalConfig& cfg = {});

// n! = floor(a^n / C(a, n)), valid once a >= (n+1)^(n+2); DomainError below
// that bound. The binomial is evaluated by the multiplicative oracle.
Bigint factorial_identity(std::uint64_t n, const Bigint& a,
                          const EvalConfig& cfg = {});

// f(n) = 2 + ((2 n!) mod (n+1)): n+1 when n+1 is prime, else 2.
// Literal mode computes n! from its closed form (n <= 3); Semantic uses the
// product.
Bigint prime_or_two(std::uint64_t n, EvalMode mode, const EvalConfig& cfg = {});

}  // namespace primeterm
