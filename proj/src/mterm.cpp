#include "primeterm/mterm.hpp"

#include "primeterm/errors.hpp"
#include "primeterm/geom.hpp"

namespace primeterm {

HypercubeInstance unity_instance(std::uint64_t n) {
  // (x1^2 - n x2 - 1)^2 = x1^4 - 2 x1^2 - 2n x1^2 x2 + n^2 x2^2 + 2n x2 + 1
  const Bigint nn(n);
  auto mono = [](Bigint c, unsigned r1, unsigned r2) {
    return SimpleMonomial{std::move(c), {Bigint(1), Bigint(1)}, {r1, r2}};
  };
  HypercubeInstance inst;
  inst.k = 2;
  inst.t = m_side(n);
  inst.u = m_width(n);
  inst.poly = {
      mono(Bigint(1), 4, 0),          mono(Bigint(-2), 2, 0),
      mono(Bigint(-2) * nn, 2, 1),    mono(nn * nn, 0, 2),
      mono(Bigint(2) * nn, 0, 1),     mono(Bigint(1), 0, 0),
  };
  return inst;
}

Bigint m_required_bits(const Bigint& n) {
  const Bigint t = n + Bigint(1), u = n + Bigint(5);
  return Bigint(2) * u * t * t;
}

namespace {

// The explicit form, transcribed cofactor by cofactor. Every division is
// asserted exact. The leading block's exponent is 2 t^2 u + u (the window
// count times the block width); the four ell factors below are the closed
// G numerators evaluated at q1 = 2^(2u) and q2 = 2^(2tu).
Bigint build_m_explicit(std::uint64_t n64, const EvalConfig& cfg) {
  const Bigint n(n64), t(n64 + 1), u(n64 + 5);
  auto P2 = [&](const Bigint& e) { return checked_pow2(e, cfg.max_bits); };
  const Bigint one(1);

  const Bigint tu2 = Bigint(2) * t * u;              // exponent of q2
  const Bigint u2 = Bigint(2) * u;                   // exponent of q1
  const Bigint t2u2 = Bigint(2) * t * t * u;         // exponent of q2^t

  const Bigint l1 = n * P2(t2u2) - t * P2(Bigint(2) * n * t * u) + one;
  const Bigint l2 = n * n * P2(u2 * (n + Bigint(2))) -
                    (Bigint(2) * n * n + Bigint(2) * n - one) * P2(tu2) +
                    t * t * P2(Bigint(2) * n * u) - P2(u2) - one;
  const Bigint l3 = n * n * P2(tu2 * (n + Bigint(2))) -
                    (Bigint(2) * n * n + Bigint(2) * n - one) * P2(t2u2) +
                    t * t * P2(Bigint(2) * n * t * u) - P2(tu2) - one;
  const Bigint n2 = n * n, n3 = n * n * n, n4 = n * n * n * n;
  const Bigint l4 =
      (Bigint(6) * n4 + Bigint(12) * n3 - Bigint(6) * n2 - Bigint(12) * n +
       Bigint(11)) *
          P2(u2 * (n + Bigint(2))) +
      (Bigint(-4) * n4 - Bigint(12) * n3 - Bigint(6) * n2 + Bigint(12) * n +
       Bigint(11)) *
          P2(tu2) +
      (Bigint(-4) * n4 - Bigint(4) * n3 + Bigint(6) * n2 - Bigint(4) * n +
       one) *
          P2(u2 * (n + Bigint(3))) +
      t * t * t * t * P2(Bigint(2) * n * u) - P2(Bigint(6) * u) -
      Bigint(11) * P2(Bigint(4) * u) - Bigint(11) * P2(u2) - one +
      n4 * P2(u2 * (n + Bigint(4)));

  const Bigint q1m1 = P2(u2) - one;       // 2^(2u) - 1
  const Bigint q2m1 = P2(tu2) - one;      // 2^(2tu) - 1
  const Bigint q1m1_3 = q1m1 * q1m1 * q1m1;

  Bigint m = divexact_checked(P2(t2u2 + u) - P2(u), P2(u) + one, "M block 1");

  m -= divexact_checked(
      q2m1 * (n * P2(tu2 + u + one) - n * P2(tu2 + one)) * l1,
      q1m1 * q2m1 * q2m1, "M block 2");

  m += divexact_checked(
      (P2(Bigint(3) * u + one) - P2(u2 + one)) * (P2(t2u2) - one) * l2,
      q1m1_3 * q2m1, "M block 3");

  m += divexact_checked(n * P2(tu2 + u2 + one) * (P2(u) - one) * l1 * l2,
                        q1m1_3 * q2m1 * q2m1, "M block 4");

  m -= divexact_checked(
      n * n * q2m1 * (P2(tu2 + u) - P2(tu2)) * l3,
      q1m1 * q2m1 * q2m1 * q2m1, "M block 5");

  m -= divexact_checked(
      (P2(Bigint(3) * u) - P2(u2)) * (P2(t2u2) - one) * l4,
      q1m1_3 * q1m1 * q1m1 * q2m1, "M block 6");

  return m;
}

}  // namespace

Bigint build_m(const Bigint& n, MVariant variant, const EvalConfig& cfg) {
  if (n.sign() < 0) throw DomainError("M needs n >= 0");
  const Bigint need = m_required_bits(n);
  if (!need.fits_u64() || need.to_u64() > cfg.max_bits) {
    throw BitLimitExceeded(need.to_string(), cfg.max_bits);
  }
  const std::uint64_t n64 = n.to_u64();
  if (variant == MVariant::Explicit) return build_m_explicit(n64, cfg);
  return assemble_w(unity_instance(n64), WMethod::Contributions, cfg);
}

}  // namespace primeterm
