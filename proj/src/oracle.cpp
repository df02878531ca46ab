#include "primeterm/oracle.hpp"

#include <algorithm>
#include <mutex>

#include "primeterm/errors.hpp"

namespace primeterm::oracle {

namespace {

const std::vector<std::uint32_t>& cached_primes() {
  static std::vector<std::uint32_t> primes = sieve_primes(kSieveLimit);
  return primes;
}

}  // namespace

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
      composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

std::uint64_t prime_pi(std::uint64_t n) {
  if (n > kSieveLimit) throw RangeExceeded("prime_pi oracle limited to 10^6");
  const auto& primes = cached_primes();
  auto it = std::upper_bound(primes.begin(), primes.end(), n);
  return static_cast<std::uint64_t>(it - primes.begin());
}

std::uint64_t nth_prime(std::uint64_t n) {
  const auto& primes = cached_primes();
  if (n == 0 || n > primes.size())
    throw RangeExceeded("nth_prime oracle limited to primes below 10^6");
  return primes[n - 1];
}

bool is_prime(std::uint64_t n) {
  if (n > kSieveLimit) throw RangeExceeded("is_prime oracle limited to 10^6");
  if (n < 2) return false;
  const auto& primes = cached_primes();
  return std::binary_search(primes.begin(), primes.end(),
                            static_cast<std::uint32_t>(n));
}

Factorization factorize(const Bigint& n) {
  if (n.sign() <= 0) throw DomainError("factorize needs n >= 1");
  if (n.to_double() > kFactorizeLimit)
    throw RangeExceeded("factorize oracle limited to ~10^12");
  Factorization out;
  Bigint rest = n;
  auto strip = [&](const Bigint& p) {
    unsigned e = 0;
    for (;;) {
      Bigint q, r;
      fdiv_qr(q, r, rest, p);
      if (!r.is_zero()) break;
      rest = q;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(Bigint(2));
  strip(Bigint(3));
  strip(Bigint(5));
  // 2/3/5 wheel: candidate steps cycling through the 8 residues coprime to 30.
  static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  Bigint d(7);
  int w = 0;
  while (d * d <= rest) {
    strip(d);
    d += Bigint(wheel[w]);
    w = (w + 1) & 7;
  }
  if (rest > Bigint(1)) out.emplace_back(rest, 1);
  return out;
}

std::uint64_t omega(const Bigint& n) { return factorize(n).size(); }

std::uint64_t sqrt_unity_scan(std::uint64_t n, ExecPolicy policy) {
  if (n == 0) return 0;
  return chunked_reduce<std::uint64_t>(
      n, 0,
      [n](std::uint64_t acc, std::uint64_t a) {
        // Machine-word path when a^2 cannot overflow, Bigint otherwise.
        if (a < (std::uint64_t(1) << 32)) {
          return acc + (a * a % n == 1 % n ? 1 : 0);
        }
        Bigint r = fdiv_r(Bigint(a) * Bigint(a), Bigint(n));
        return acc + (r == fdiv_r(Bigint(1), Bigint(n)) ? 1 : 0);
      },
      [](std::uint64_t x, std::uint64_t y) { return x + y; }, policy);
}

Bigint sqrt_unity_crt(const Factorization& f) {
  // Solution counts per prime power: 2 -> 1, 4 -> 2, 2^k (k>=3) -> 4,
  // odd p^k -> 2; the total is their product.
  Bigint count(1);
  for (const auto& [p, e] : f) {
    if (p == Bigint(2)) {
      count *= e == 1 ? Bigint(1) : (e == 2 ? Bigint(2) : Bigint(4));
    } else {
      count *= Bigint(2);
    }
  }
  return count;
}

Bigint sqrt_unity_count(const Bigint& n) {
  if (n.sign() < 0) throw DomainError("sqrt_unity_count needs n >= 0");
  if (n.is_zero()) return Bigint(0);
  if (n == Bigint(1)) return Bigint(1);
  if (n.fits_u64() && n.to_u64() <= kSieveLimit) {
    return Bigint(sqrt_unity_scan(n.to_u64()));
  }
  return sqrt_unity_crt(factorize(n));
}

std::vector<std::vector<Bigint>> pascal_rows(unsigned amax) {
  std::vector<std::vector<Bigint>> rows(amax + 1);
  for (unsigned a = 0; a <= amax; ++a) {
    rows[a].resize(a + 1, Bigint(1));
    for (unsigned b = 1; b < a; ++b) rows[a][b] = rows[a - 1][b - 1] + rows[a - 1][b];
  }
  return rows;
}

Bigint binom(const Bigint& a, std::uint64_t b) {
  if (a.sign() < 0) throw DomainError("binom oracle needs a >= 0");
  if (Bigint(b) > a) return Bigint(0);
  Bigint num(1);
  for (std::uint64_t i = 0; i < b; ++i) num *= a - Bigint(i);
  Bigint den(1);
  for (std::uint64_t i = 2; i <= b; ++i) den *= Bigint(i);
  return divexact_checked(num, den, "binomial");
}

Bigint factorial(std::uint64_t n) {
  Bigint r(1);
  for (std::uint64_t i = 2; i <= n; ++i) r *= Bigint(i);
  return r;
}

Bigint gcd(Bigint a, Bigint b) {
  if (a.sign() < 0) a = -a;
  if (b.sign() < 0) b = -b;
  while (!b.is_zero()) {
    Bigint r = fdiv_r(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t hamming_weight(Bigint n) {
  if (n.sign() < 0) throw DomainError("hamming weight of a negative value");
  std::uint64_t count = 0;
  Bigint two(2), q, r;
  while (!n.is_zero()) {
    fdiv_qr(q, r, n, two);
    if (!r.is_zero()) ++count;
    n = std::move(q);
  }
  return count;
}

std::uint64_t nu2(Bigint n) {
  if (n.sign() < 0) n = -n;
  if (n.is_zero()) throw DomainError("2-adic valuation of zero");
  std::uint64_t count = 0;
  Bigint two(2), q, r;
  for (;;) {
    fdiv_qr(q, r, n, two);
    if (!r.is_zero()) return count;
    ++count;
    n = std::move(q);
  }
}

Bigint geom_sum_direct(unsigned r, const Bigint& q, std::uint64_t t) {
  Bigint sum(0), qj(1);
  for (std::uint64_t j = 0; j < t; ++j) {
    sum += pow_ui(Bigint(j), r) * qj;
    qj *= q;
  }
  return sum;
}

std::vector<Bigint> padovan(std::uint64_t d, std::uint64_t count) {
  if (d < 2) throw DomainError("padovan needs degree >= 2");
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

}  // namespace primeterm::oracle
