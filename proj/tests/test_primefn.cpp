#include <doctest.h>

#include "primeterm/errors.hpp"
#include "primeterm/oracle.hpp"
#include "primeterm/primefn.hpp"

using namespace primeterm;

TEST_CASE("square roots of unity through the packed word") {
  CHECK(sqrt_unity_count(Bigint(0), FnMode::Term) == Bigint(0));
  CHECK(sqrt_unity_count(Bigint(1), FnMode::Term) == Bigint(1));
  CHECK(sqrt_unity_count(Bigint(8), FnMode::Term) == Bigint(4));
  CHECK(sqrt_unity_count(Bigint(12), FnMode::Term) == Bigint(4));
  for (std::uint64_t n = 0; n <= 32; ++n) {
    Bigint want = n == 0 ? Bigint(0) : Bigint(oracle::sqrt_unity_scan(n));
    CHECK(sqrt_unity_count(Bigint(n), FnMode::Term) == want);
  }
  // At multiples of four the count is a power of two.
  for (std::uint64_t n = 1; n <= 64; ++n) {
    Bigint c = sqrt_unity_count(Bigint(4 * n), FnMode::Term);
    CHECK(c == Bigint::pow2(c.trailing_zeros()));
  }
}

TEST_CASE("omega") {
  CHECK(omega(Bigint(1), FnMode::Term) == Bigint(0));
  CHECK(omega(Bigint(12), FnMode::Term) == Bigint(2));
  CHECK(omega(Bigint(30), FnMode::Term) == Bigint(3));
  CHECK(omega(Bigint(30), FnMode::Oracle) == Bigint(3));
  CHECK_THROWS_AS(omega(Bigint(0), FnMode::Term), DomainError);
}

TEST_CASE("prime counting") {
  CHECK(prime_pi(Bigint(0), FnMode::Term) == Bigint(0));
  CHECK(prime_pi(Bigint(4), FnMode::Term) == Bigint(2));
  CHECK(prime_pi(Bigint(10), FnMode::Oracle) == Bigint(4));
  for (std::uint64_t n = 0; n <= 4; ++n)
    CHECK(prime_pi(Bigint(n), FnMode::Term) == Bigint(oracle::prime_pi(n)));
}

TEST_CASE("n-th prime in both modes") {
  CHECK(nth_prime(1, NMode::Hypercube) == Bigint(2));
  CHECK(nth_prime(2, NMode::Hypercube) == Bigint(3));
  CHECK(nth_prime(1, NMode::Oracle) == Bigint(2));
  CHECK(nth_prime(5, NMode::Oracle) == Bigint(11));
  CHECK(nth_prime(100, NMode::Oracle) == Bigint(541));
  CHECK_THROWS_AS(nth_prime(0, NMode::Oracle), DomainError);
}

TEST_CASE("hypercube route refuses beyond its cliff, naming the size") {
  try {
    nth_prime(3, NMode::Hypercube);
    FAIL("expected refusal");
  } catch (const BitLimitExceeded& e) {
    CHECK(e.required_bits.find("e18") != std::string::npos);
  }
}

TEST_CASE("next prime") {
  CHECK(next_prime(Bigint(10), FnMode::Oracle) == Bigint(11));
  CHECK(next_prime(Bigint(2), FnMode::Oracle) == Bigint(3));
  CHECK(next_prime(Bigint(0), FnMode::Oracle) == Bigint(2));
  // Term route end to end at the one feasible scale.
  CHECK(next_prime(Bigint(2), FnMode::Term) == Bigint(3));
}
