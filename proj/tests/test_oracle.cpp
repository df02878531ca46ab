#include <doctest.h>

#include "primeterm/errors.hpp"
#include "primeterm/oracle.hpp"

using namespace primeterm;
namespace orc = primeterm::oracle;

TEST_CASE("sieve and prime counting") {
  CHECK(orc::prime_pi(10) == 4);  // 2, 3, 5, 7
  CHECK(orc::prime_pi(0) == 0);
  CHECK(orc::prime_pi(2) == 1);
  CHECK(orc::nth_prime(1) == 2);
  CHECK(orc::nth_prime(25) == 97);
  CHECK_THROWS_AS(orc::prime_pi(2'000'000), RangeExceeded);
}

TEST_CASE("oracle self-consistency") {
  for (std::uint64_t x : {2ULL, 10ULL, 97ULL, 1000ULL, 998'500ULL}) {
    const std::uint64_t k = orc::prime_pi(x);
    CHECK(orc::nth_prime(k) <= x);
    CHECK(orc::nth_prime(k + 1) > x);
  }
}

TEST_CASE("factorization") {
  auto f = orc::factorize(Bigint(96));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == Bigint(2));
  CHECK(f[0].second == 5);
  CHECK(f[1].first == Bigint(3));
  CHECK(f[1].second == 1);
  // Product of prime powers reproduces the input, primes increase.
  for (long n : {2L, 17L, 360L, 9699690L, 104729L * 104729L}) {
    Bigint prod(1);
    Bigint last(1);
    for (const auto& [p, e] : orc::factorize(Bigint(n))) {
      CHECK(p > last);
      last = p;
      prod *= pow_ui(p, e);
    }
    CHECK(prod == Bigint(n));
  }
  CHECK(orc::omega(Bigint(12)) == 2);
  CHECK(orc::omega(Bigint(30)) == 3);
  CHECK(orc::omega(Bigint(1)) == 0);
}

TEST_CASE("square roots of unity: prime power counts") {
  // Direct scan agrees with the known prime-power structure up to 2^12.
  auto count_pp = [](std::uint64_t p, unsigned k) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) m *= p;
    return orc::sqrt_unity_scan(m);
  };
  CHECK(count_pp(2, 1) == 1);
  CHECK(count_pp(2, 2) == 2);
  for (unsigned k = 3; k <= 12; ++k) CHECK(count_pp(2, k) == 4);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (unsigned k = 1; k <= 6; ++k) {
      std::uint64_t m = 1;
      bool fits = true;
      for (unsigned i = 0; i < k; ++i) {
        m *= p;
        if (m > 4096) {
          fits = false;
          break;
        }
      }
      if (fits) CHECK(count_pp(p, k) == 2);
    }
  }
}

TEST_CASE("square roots of unity: crt path equals scan") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    CHECK(orc::sqrt_unity_crt(orc::factorize(Bigint(n))) ==
          Bigint(orc::sqrt_unity_scan(n)));
  }
}

TEST_CASE("unity count at 4n is a power of two tied to omega") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    Bigint count = orc::sqrt_unity_crt(orc::factorize(Bigint(4 * n)));
    CHECK(count == Bigint::pow2(orc::omega(Bigint(n)) + 1));
  }
}

TEST_CASE("bit helpers avoid intrinsics") {
  CHECK(orc::hamming_weight(Bigint(0)) == 0);
  CHECK(orc::hamming_weight(Bigint(255)) == 8);
  CHECK(orc::hamming_weight(Bigint::pow2(100) + Bigint(5)) == 3);
  CHECK(orc::nu2(Bigint(12)) == 2);
  CHECK(orc::nu2(Bigint::pow2(77)) == 77);
}

TEST_CASE("misc oracles") {
  CHECK(orc::gcd(Bigint(20), Bigint(12)) == Bigint(4));
  CHECK(orc::gcd(Bigint(0), Bigint(7)) == Bigint(7));
  CHECK(orc::factorial(5) == Bigint(120));
  CHECK(orc::factorial(0) == Bigint(1));
  CHECK(orc::binom(Bigint(60), 30) ==
        Bigint("118264581564861424"));
  CHECK(orc::geom_sum_direct(1, Bigint(2), 3) == Bigint(10));
  auto pad = orc::padovan(8, 64);
  CHECK(pad[63] == Bigint(2));
  // Scan kernel: parallel equals serial.
  for (std::uint64_t n : {1ULL, 12ULL, 4096ULL, 99991ULL}) {
    CHECK(orc::sqrt_unity_scan(n) ==
          orc::sqrt_unity_scan(n, ExecPolicy::Parallel));
  }
}
