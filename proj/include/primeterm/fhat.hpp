#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primeterm/expoly.hpp"
#include "primeterm/term.hpp"

namespace primeterm {

// Construction of the two exponential Diophantine equations whose
// natural-number solution count equals the n-th prime: the 32-variable form
// F (single-square M relation over its normal form) and the reduced
// 42-variable form F-hat (split M relation, 498 monomials).
//
// F-hat is reproduced exactly as published, byte-for-byte against its
// reference monomial listing, including the places where that listing
// departs from the cleaner relation forms in relations.hpp (a remainder
// bound written against the quotient rather than the divisor, an exponent
// base of 2^(3 f1) in the factorial block, shifted q2 powers in the split M
// block, and an f1+5 multiplier in the final inequality square). F is built
// from the registry relations and this library's own normal form of M, so
// its monomial count is reported rather than pinned.

enum class FEquation { F32, Fhat42 };

ExpoPoly build_f(FEquation which);

// The constituent sum-of-squares blocks of F-hat, in construction order;
// build_f(Fhat42) is their canonical sum.
std::vector<ExpoPoly> fhat_blocks();

// Common-denominator normal form M = L / D with exponents affine over the
// given variable indices standing for f1, f1^2, f1^3. Deterministic, no
// cancellation.
struct MNormalForm {
  ExpoPoly numerator;
  ExpoPoly denominator;
};
MNormalForm m_normal_form(int f1, int f2, int f3);

// One packed-word contribution descriptor of the solution-count plan for
// F-hat: either the single block-constant term or a product of 42
// geometric-progression factors.
struct PlanDescriptor {
  bool is_c = false;
  Bigint c0;                             // integer coefficient
  std::uint64_t e_const = 0;             // coefficient exponent: c0 * 2^(e_const + e_n n)
  std::uint64_t e_n = 0;
  std::vector<unsigned> g_degrees;       // r_i per variable (42 entries)
  std::vector<std::uint64_t> base_shift; // v_i = 2^shift per variable (42 entries)
};

struct HypercubePlan {
  unsigned k = 42;
  TermPtr t_expr;  // 2^2^2^(2n^4+16)
  TermPtr u_expr;  // 2^(2^(9t+8)+9)
  std::vector<PlanDescriptor> descriptors;
};

HypercubePlan fhat_plan();

}  // namespace primeterm
