#include <doctest.h>

#include "primeterm/bigint.hpp"
#include "primeterm/errors.hpp"

using namespace primeterm;

TEST_CASE("construction and printing") {
  CHECK(Bigint(0).to_string() == "0");
  CHECK(Bigint(-42).to_string() == "-42");
  CHECK(Bigint("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Bigint("12x"), SyntaxError);
}

TEST_CASE("pow2 and bit statistics") {
  CHECK(Bigint::pow2(0) == Bigint(1));
  CHECK(Bigint::pow2(10) == Bigint(1024));
  CHECK(Bigint(0).bit_length() == 0);
  CHECK(Bigint(255).bit_length() == 8);
  CHECK(Bigint(255).popcount() == 8);
  CHECK(Bigint(12).trailing_zeros() == 2);
  CHECK_THROWS_AS(Bigint(-1).popcount(), DomainError);
  CHECK_THROWS_AS(Bigint(0).trailing_zeros(), DomainError);
}

TEST_CASE("floor division semantics") {
  // a = b*floor(a/b) + (a mod b) with the remainder in [0, b).
  for (long a = -50; a <= 50; ++a) {
    for (long b = 1; b <= 7; ++b) {
      Bigint q = fdiv_q(Bigint(a), Bigint(b));
      Bigint r = fdiv_r(Bigint(a), Bigint(b));
      CHECK(r >= Bigint(0));
      CHECK(r < Bigint(b));
      CHECK(Bigint(b) * q + r == Bigint(a));
    }
  }
  CHECK_THROWS_AS(fdiv_q(Bigint(1), Bigint(0)), DomainError);
  CHECK_THROWS_AS(fdiv_q(Bigint(1), Bigint(-2)), DomainError);
}

TEST_CASE("exact division is checked") {
  CHECK(divexact_checked(Bigint(84), Bigint(7), "t") == Bigint(12));
  CHECK_THROWS_AS(divexact_checked(Bigint(85), Bigint(7), "t"),
                  ExactDivisionViolated);
}

TEST_CASE("budget checks") {
  CHECK_THROWS_AS(checked_pow2(Bigint("1099511627776"), 1 << 20),
                  BitLimitExceeded);
  CHECK(checked_pow(Bigint(3), Bigint(4), 1 << 20) == Bigint(81));
  CHECK_THROWS_AS(checked_pow(Bigint(2), Bigint(1) << 40, kDefaultMaxBits),
                  BitLimitExceeded);
  CHECK_THROWS_AS(checked_pow(Bigint(7), Bigint(-1), 1 << 20), DomainError);
  // -1 and 0/1 bases never explode.
  CHECK(checked_pow(Bigint(-1), Bigint(1) << 41, 64) == Bigint(1));
  CHECK(checked_pow(Bigint(0), Bigint(5), 64) == Bigint(0));
  CHECK(checked_pow(Bigint(0), Bigint(0), 64) == Bigint(1));
}
