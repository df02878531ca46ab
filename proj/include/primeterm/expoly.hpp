#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primeterm/bigint.hpp"

namespace primeterm {

// Exponential polynomials simple in x: integer-coefficient sums of
//   c0 * 2^(e_const + e_n * n + sum e2_i x_i) * prod x_i^(deg_i)
// with all exponent coefficients natural. The representation is canonical:
// like terms always combine, no zero coefficients survive, and integer
// exponent constants fold into the coefficient (the key holds only the
// symbolic exponent part), so structural equality is value equality and
// emission is stable.

// Affine exponent of 2 over the parameter n and the variables.
struct LinForm {
  std::uint64_t c_const = 0;
  std::uint64_t c_n = 0;
  std::map<int, std::uint64_t> vars;  // var index -> coefficient, no zeros

  static LinForm constant(std::uint64_t c);
  static LinForm param_n(std::uint64_t c);
  static LinForm var(int index, std::uint64_t c = 1);

  LinForm& operator+=(const LinForm& o);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  bool operator==(const LinForm&) const = default;
  bool zero() const { return c_const == 0 && c_n == 0 && vars.empty(); }
};

// Canonical monomial key: sorted (variable, degree) pairs plus the symbolic
// exponent (c_const is always zero inside keys).
struct ExpoKey {
  std::vector<std::pair<int, unsigned>> degrees;  // sorted, no zero degrees
  LinForm exp2;
  bool operator==(const ExpoKey&) const = default;
};

// Fixed total order on keys so iteration, emission, and counting are
// deterministic: degree vector first, then exponent variable coefficients,
// then the n coefficient, then the constant. The order itself is arbitrary;
// being pinned is what matters.
struct ExpoKeyLess {
  bool operator()(const ExpoKey& a, const ExpoKey& b) const;
};

struct ExpandStats {
  std::size_t monomials = 0;
  std::size_t variables = 0;
  unsigned max_degree = 0;            // largest single-variable degree
  std::uint64_t max_exp_coeff = 0;    // largest variable coefficient in any exponent
};

class ExpoPoly {
 public:
  ExpoPoly() = default;

  static ExpoPoly constant(Bigint c);
  static ExpoPoly variable(int index);
  static ExpoPoly pow2(LinForm e);
  // One full monomial.
  static ExpoPoly monomial(Bigint c, LinForm e,
                           std::vector<std::pair<int, unsigned>> degrees);

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<ExpoKey, Bigint, ExpoKeyLess>& terms() const { return terms_; }

  ExpoPoly& operator+=(const ExpoPoly& o);
  ExpoPoly& operator-=(const ExpoPoly& o);
  friend ExpoPoly operator+(ExpoPoly a, const ExpoPoly& b) { return a += b; }
  friend ExpoPoly operator-(ExpoPoly a, const ExpoPoly& b) { return a -= b; }
  friend ExpoPoly operator*(const ExpoPoly& a, const ExpoPoly& b);
  friend ExpoPoly operator-(const ExpoPoly& a);
  bool operator==(const ExpoPoly& o) const { return terms_ == o.terms_; }

  ExpoPoly square() const { return *this * *this; }

  // Rename variables; two sources mapping onto one target merge like terms.
  ExpoPoly relabel(const std::map<int, int>& mapping) const;

  // Replace a variable inside exponents only (degrees untouched) by an
  // affine form; this is how squared and cubed quantities get their own
  // stand-in variables so exponents stay linear.
  ExpoPoly substitute_exponent_var(int var, const LinForm& replacement) const;

  // The coefficient of the given key (zero if absent).
  Bigint coefficient(const ExpoKey& key) const;

  // Exact evaluation; values is 1-indexed by variable.
  Bigint evaluate(const std::vector<Bigint>& values, const Bigint& n_value,
                  std::uint64_t max_bits = kDefaultMaxBits) const;

  // Interpret an affine polynomial (natural coefficients, no products, plain
  // integer or 2^0 terms only) as a LinForm; NonLinearExponent otherwise.
  LinForm to_linform() const;

 private:
  std::map<ExpoKey, Bigint, ExpoKeyLess> terms_;
  void add_term(const ExpoKey& k, const Bigint& c);
};

inline ExpoPoly ep_var(int i) { return ExpoPoly::variable(i); }
inline ExpoPoly ep_const(long c) { return ExpoPoly::constant(Bigint(c)); }
inline ExpoPoly ep_const(Bigint c) { return ExpoPoly::constant(std::move(c)); }
inline ExpoPoly ep_pow2(LinForm e) { return ExpoPoly::pow2(std::move(e)); }
// 2^e for a symbolic affine e; throws NonLinearExponent if e is not affine.
ExpoPoly ep_pow2_of(const ExpoPoly& e);

ExpandStats expand_stats(const ExpoPoly& p);

enum class EmitFormat { Json, Latex, Text };
std::string emit(const ExpoPoly& p, EmitFormat format);
ExpoPoly parse_expoly_json(std::string_view text);

}  // namespace primeterm
