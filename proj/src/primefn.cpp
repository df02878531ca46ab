#include "primeterm/primefn.hpp"

#include <cmath>

#include "primeterm/errors.hpp"
#include "primeterm/mterm.hpp"
#include "primeterm/oracle.hpp"

namespace primeterm {

Bigint sqrt_unity_count(const Bigint& n, FnMode mode, const EvalConfig& cfg) {
  if (n.sign() < 0) throw DomainError("sqrt_unity_count needs n >= 0");
  if (mode == FnMode::Oracle) return oracle::sqrt_unity_count(n);
  // The packed word exists even at n = 0 (side 1, width 5) and reports zero
  // solutions there; no special case.
  const Bigint m = build_m(n, MVariant::Assembled, cfg);
  const std::uint64_t u = m_width(n.to_u64());
  const Bigint t(m_side(n.to_u64()));
  return divexact_checked(Bigint(m.popcount()), Bigint(u), "HW(M)/u") - t * t;
}

Bigint omega(const Bigint& n, FnMode mode, const EvalConfig& cfg) {
  if (n.sign() <= 0) throw DomainError("omega needs n >= 1");
  if (mode == FnMode::Oracle) return Bigint(oracle::omega(n));
  Bigint count = sqrt_unity_count(Bigint(4) * n, FnMode::Term, cfg);
  return Bigint(count.trailing_zeros()) - Bigint(1);
}

Bigint prime_pi(const Bigint& n, FnMode mode, const EvalConfig& cfg) {
  if (n.sign() < 0) throw DomainError("prime_pi needs n >= 0");
  if (mode == FnMode::Oracle) return Bigint(oracle::prime_pi(n.to_u64()));
  return omega(oracle::factorial(n.to_u64()), FnMode::Term, cfg);
}

double nth_prime_required_bits_log2(std::uint64_t n) {
  // The binding instance is a = n^2: the packed word for 4 (n^2)! needs
  // 2 u t^2 with t = 4 (n^2)! + 1 bits, about 128 ((n^2)!)^3.
  double lg_fact = 0;  // log2((n^2)!)
  for (std::uint64_t i = 2; i <= n * n; ++i) lg_fact += std::log2(double(i));
  return 3 * lg_fact + 7;
}

Bigint nth_prime(std::uint64_t n, NMode mode, const EvalConfig& cfg) {
  if (n == 0) throw DomainError("nth_prime needs n >= 1");
  if (mode == NMode::Oracle) {
    // Count a in [0, n^2] with pi(a) + 1 <= n via the sieve identity,
    // still as an integer-exponent comparison rather than through pi.
    Bigint count(0);
    for (std::uint64_t a = 0; a <= n * n; ++a) {
      const std::uint64_t e = oracle::prime_pi(a) + 1;
      if (e <= n) count += Bigint(1);
    }
    return count;
  }
  // Refuse the whole count up front if its largest instance cannot fit;
  // a partial count would be silently wrong, not partial.
  const double lg_need = nth_prime_required_bits_log2(n);
  if (lg_need > std::log2(double(cfg.max_bits))) {
    const double digits = lg_need * 0.30103;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1fe%d", std::pow(10.0, digits - std::floor(digits)),
                  int(std::floor(digits)));
    throw BitLimitExceeded(buf, cfg.max_bits);
  }
  Bigint count(0);
  const Bigint limit = checked_pow2(Bigint(n), cfg.max_bits);
  for (std::uint64_t a = 0; a <= n * n; ++a) {
    Bigint nu = sqrt_unity_count(Bigint(4) * oracle::factorial(a),
                                 FnMode::Term, cfg);
    if (nu <= limit) count += Bigint(1);
  }
  return count;
}

Bigint next_prime(const Bigint& x, FnMode mode, const EvalConfig& cfg) {
  if (x.sign() < 0) throw DomainError("next_prime needs x >= 0");
  if (mode == FnMode::Oracle) {
    const std::uint64_t pi_x = oracle::prime_pi(x.to_u64());
    return Bigint(oracle::nth_prime(pi_x + 1));
  }
  const Bigint pi_x = prime_pi(x, FnMode::Term, cfg);
  return nth_prime(pi_x.to_u64() + 1, NMode::Hypercube, cfg);
}

}  // namespace primeterm
