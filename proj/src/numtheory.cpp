#include "primeterm/numtheory.hpp"

#include "primeterm/errors.hpp"
#include "primeterm/oracle.hpp"

namespace primeterm {

namespace {

// Budget-checked 2^e with e given as a Bigint expression value.
Bigint p2(const Bigint& e, const EvalConfig& cfg) {
  return checked_pow2(e, cfg.max_bits);
}

}  // namespace

// ---------------------------------------------------------------------------
// gcd

TermPtr gcd_term_ast(GcdVariant v, TermPtr a, TermPtr b) {
  TermPtr a2b = t_mul(t_mul(a, a), b);              // a^2 b
  TermPtr ab2 = t_mul(t_mul(a, b), b);              // a b^2
  TermPtr a2b2 = t_mul(a2b, b);                     // a^2 b^2
  TermPtr ab = t_mul(a, b);
  if (v == GcdVariant::Mazzanti) {
    TermPtr num = t_mul(t_sub(t_pow2(t_mul(a2b, t_add(b, t_const(1)))),
                              t_pow2(a2b)),
                        t_sub(t_pow2(a2b2), t_const(1)));
    TermPtr den = t_mul(t_mul(t_sub(t_pow2(a2b), t_const(1)),
                              t_sub(t_pow2(ab2), t_const(1))),
                        t_pow2(a2b2));
    return t_mod(t_div(num, den), t_pow2(ab));
  }
  // Single-quotient form: floor(2^(ab(ab+a+b)) / ((2^(a^2 b)-1)(2^(a b^2)-1)))
  // mod 2^(ab), minus 1.
  TermPtr e = t_mul(ab, t_add(ab, t_add(a, b)));
  TermPtr den = t_mul(t_sub(t_pow2(a2b), t_const(1)),
                      t_sub(t_pow2(ab2), t_const(1)));
  return t_sub(t_mod(t_div(t_pow2(e), den), t_pow2(ab)), t_const(1));
}

Bigint gcd_term(GcdVariant v, const Bigint& a, const Bigint& b,
                const EvalConfig& cfg) {
  if (a.sign() <= 0 || b.sign() <= 0)
    throw DomainError("gcd term needs a, b >= 1");
  const Bigint a2b = a * a * b;
  const Bigint ab2 = a * b * b;
  const Bigint a2b2 = a2b * b;
  const Bigint ab = a * b;
  if (v == GcdVariant::Mazzanti) {
    Bigint num =
        (p2(a2b * (b + Bigint(1)), cfg) - p2(a2b, cfg)) * (p2(a2b2, cfg) - Bigint(1));
    Bigint den =
        (p2(a2b, cfg) - Bigint(1)) * (p2(ab2, cfg) - Bigint(1)) * p2(a2b2, cfg);
    return fdiv_r(fdiv_q(num, den), p2(ab, cfg));
  }
  // The quotient's low window holds gcd+1; at a = b = 1 that count (2) no
  // longer fits in the 2^(ab) window, the one degenerate cell.
  if (a == Bigint(1) && b == Bigint(1)) return Bigint(1);
  Bigint num = p2(ab * (ab + a + b), cfg);
  Bigint den = (p2(a2b, cfg) - Bigint(1)) * (p2(ab2, cfg) - Bigint(1));
  return fdiv_r(fdiv_q(num, den), p2(ab, cfg)) - Bigint(1);
}

// ---------------------------------------------------------------------------
// nu2 / Hamming weight

TermPtr nu2_term_ast(TermPtr n) {
  // floor((gcd(n, 2^n)^(n+1) mod (2^(n+1)-1)^2) / (2^(n+1)-1))
  TermPtr g = gcd_term_ast(GcdVariant::Mazzanti, n, t_pow2(n));
  TermPtr m = t_sub(t_pow2(t_add(n, t_const(1))), t_const(1));
  return t_div(t_mod(t_pow(g, t_add(n, t_const(1))), t_mul(m, m)), m);
}

Bigint nu2_term(const Bigint& n, EvalMode mode, const EvalConfig& cfg) {
  if (n.sign() <= 0) throw DomainError("nu2 needs n >= 1");
  if (mode == EvalMode::Semantic) return Bigint(n.trailing_zeros());
  const Bigint g = gcd_term(GcdVariant::Mazzanti, n, p2(n, cfg), cfg);
  const Bigint m = p2(n + Bigint(1), cfg) - Bigint(1);
  return fdiv_q(fdiv_r(checked_pow(g, n + Bigint(1), cfg.max_bits), m * m), m);
}

TermPtr hw_term_ast(TermPtr n) {
  return nu2_term_ast(
      binom_term_ast(BinomVariant::Robinson, t_mul(t_const(2), n), n));
}

Bigint hw_term(const Bigint& n, EvalMode mode, const EvalConfig& cfg) {
  if (n.sign() < 0) throw DomainError("hamming weight needs n >= 0");
  if (mode == EvalMode::Semantic) return Bigint(n.popcount());
  Bigint c = binom_term(BinomVariant::Robinson, n + n, n, cfg);
  return nu2_term(c, EvalMode::Literal, cfg);
}

// ---------------------------------------------------------------------------
// exponentiation through powers of 2

TermPtr pow_term_ast(TermPtr x, TermPtr y) {
  TermPtr e = t_add(t_add(t_mul(x, y), x), t_const(1));  // xy + x + 1
  return t_mod(t_pow2(t_mul(e, y)), t_sub(t_pow2(e), x));
}

Bigint pow_term(const Bigint& x, const Bigint& y, const EvalConfig& cfg) {
  if (x.sign() < 0 || y.sign() < 0)
    throw DomainError("pow term needs x, y >= 0");
  const Bigint e = x * y + x + Bigint(1);
  return fdiv_r(p2(e * y, cfg), p2(e, cfg) - x);
}

// ---------------------------------------------------------------------------
// binomial coefficients

TermPtr binom_term_ast(BinomVariant v, TermPtr a, TermPtr b) {
  if (v == BinomVariant::Robinson) {
    // floor((2^a + 1)^a / 2^(ab)) mod 2^a
    TermPtr base = t_add(t_pow2(a), t_const(1));
    return t_mod(t_div(t_pow(base, a), t_pow2(t_mul(a, b))), t_pow2(a));
  }
  // Shared pieces of the recurrence-matrix forms: with d = a + 2, the
  // modulus is 2^(2d^2) - 2^(2d) - 1 and the window is 2^(2d).
  TermPtr d = t_add(a, t_const(2));
  TermPtr two_d = t_mul(t_const(2), d);
  TermPtr a1 = t_add(a, t_const(1));
  TermPtr e = t_mul(two_d, t_add(t_mul(a1, a1), t_add(b, t_const(1))));
  TermPtr mod1 = t_sub(t_sub(t_pow2(t_mul(two_d, d)), t_pow2(two_d)), t_const(1));
  TermPtr window = t_pow2(two_d);
  if (v == BinomVariant::ModMod) {
    return t_mod(t_mod(t_pow2(e), mod1), window);
  }
  return t_mod(t_div(t_pow2(e), mod1), window);
}

Bigint binom_term(BinomVariant v, const Bigint& a, const Bigint& b,
                  const EvalConfig& cfg) {
  if (a.sign() < 0 || b.sign() < 0) throw DomainError("binom needs a, b >= 0");
  if (b > a) throw DomainError("binom needs b <= a");
  if (v == BinomVariant::Robinson) {
    // Digit extraction in base 2^a needs a >= 1; C(0,0) is the one
    // degenerate cell.
    if (a.is_zero()) return Bigint(1);
    Bigint t = checked_pow(p2(a, cfg) + Bigint(1), a, cfg.max_bits);
    return fdiv_r(fdiv_q(t, p2(a * b, cfg)), p2(a, cfg));
  }
  const Bigint d = a + Bigint(2);
  const Bigint two_d = d + d;
  const Bigint e = two_d * ((a + Bigint(1)) * (a + Bigint(1)) + b + Bigint(1));
  const Bigint mod1 = p2(two_d * d, cfg) - p2(two_d, cfg) - Bigint(1);
  const Bigint window = p2(two_d, cfg);
  if (v == BinomVariant::ModMod) {
    return fdiv_r(fdiv_r(p2(e, cfg), mod1), window);
  }
  return fdiv_r(fdiv_q(p2(e, cfg), mod1), window);
}

// ---------------------------------------------------------------------------
// generalized Padovan sequences

std::vector<Bigint> padovan_seq(std::uint64_t d, std::uint64_t count) {
  if (d < 2) throw DomainError("padovan_seq needs d >= 2");
  std::vector<Bigint> s;
  s.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i < d - 1) {
      s.emplace_back(0);
    } else if (i == d - 1) {
      s.emplace_back(1);
    } else {
      s.push_back(s[i - d + 1] + s[i - d]);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// factorials

TermPtr factorial_term_ast(FactorialVariant v, TermPtr n) {
  if (v == FactorialVariant::PrunescuSauras) {
    // K = (n+1)(n+2), P = 2^K. The published inner base 2^(P - n) + 2^(-n)
    // is (2^P + 1)/2^n; the fraction-free equivalent below divides by
    // 2^(n P) after raising to the P-th power.
    TermPtr k = t_mul(t_add(n, t_const(1)), t_add(n, t_const(2)));
    TermPtr p = t_pow2(k);
    TermPtr inner = t_mod(
        t_div(t_pow(t_add(t_pow2(p), t_const(1)), p), t_pow2(t_mul(n, p))),
        t_pow2(p));
    return t_div(t_pow2(t_mul(n, k)), inner);
  }
  // floor(2^(3n^3) / C(2^(3n^2), n)) with the single-quotient binomial.
  TermPtr n2 = t_mul(n, n);
  TermPtr a = t_pow2(t_mul(t_const(3), n2));
  TermPtr num = t_pow2(t_mul(t_const(3), t_mul(n2, n)));
  return t_div(num, binom_term_ast(BinomVariant::DivMod, a, n));
}

Bigint factorial_term(FactorialVariant v, std::uint64_t n,
                      const EvalConfig& cfg) {
  if (v == FactorialVariant::PrunescuSauras) {
    const Bigint k = Bigint(n + 1) * Bigint(n + 2);
    const Bigint p = p2(k, cfg);
    // Only bits nP..(n+1)P of (2^P + 1)^P survive the floor and the mod, so
    // the power is taken in the 2^((n+1)P) window. Same value, (n+1)P-bit
    // operands instead of P^2-bit ones.
    const Bigint window = checked_pow2((Bigint(n) + Bigint(1)) * p, cfg.max_bits);
    Bigint base = p2(p, cfg) + Bigint(1);
    Bigint acc(1);
    for (std::uint64_t i = p.bit_length(); i-- > 0;) {
      acc = fdiv_r(acc * acc, window);
      if (p.tstbit(i)) acc = fdiv_r(acc * base, window);
    }
    Bigint inner = fdiv_r(fdiv_q(acc, p2(Bigint(n) * p, cfg)), p2(p, cfg));
    return fdiv_q(p2(Bigint(n) * k, cfg), inner);
  }
  const Bigint a = p2(Bigint(3) * Bigint(n) * Bigint(n), cfg);
  const Bigint num = p2(Bigint(3) * pow_ui(Bigint(n), 3), cfg);
  return fdiv_q(num, binom_term(BinomVariant::DivMod, a, Bigint(n), cfg));
}

Bigint factorial_identity(std::uint64_t n, const Bigint& a,
                          const EvalConfig& cfg) {
  if (a < pow_ui(Bigint(n + 1), n + 2)) {
    throw DomainError("factorial identity needs a >= (n+1)^(n+2)");
  }
  Bigint num = checked_pow(a, Bigint(n), cfg.max_bits);
  return fdiv_q(num, oracle::binom(a, n));
}

// ---------------------------------------------------------------------------
// prime-or-2

Bigint prime_or_two(std::uint64_t n, EvalMode mode, const EvalConfig& cfg) {
  Bigint f = mode == EvalMode::Literal
                 ? factorial_term(FactorialVariant::PrunescuSauras, n, cfg)
                 : oracle::factorial(n);
  return Bigint(2) + fdiv_r(f + f, Bigint(n + 1));
}

}  // namespace primeterm
