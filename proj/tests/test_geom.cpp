#include <doctest.h>

#include "primeterm/bigint.hpp"
#include "primeterm/errors.hpp"
#include "primeterm/geom.hpp"
#include "primeterm/oracle.hpp"

using namespace primeterm;

TEST_CASE("progression spot values") {
  CHECK(geom_sum(0, Bigint(2), 3, GeomMethod::Closed) == Bigint(7));
  CHECK(geom_sum(1, Bigint(2), 3, GeomMethod::Closed) == Bigint(10));
  CHECK(geom_sum(2, Bigint(3), 3, GeomMethod::Closed) == Bigint(39));
  CHECK(geom_sum(4, Bigint(2), 2, GeomMethod::Closed) == Bigint(2));
  CHECK(geom_sum(0, Bigint(5), 0, GeomMethod::Closed) == Bigint(0));
}

TEST_CASE("three routes agree") {
  for (long q : {2L, 3L, 5L, 16L}) {
    for (std::uint64_t t = 1; t <= 20; ++t) {
      for (unsigned r = 0; r <= 6; ++r) {
        Bigint direct = oracle::geom_sum_direct(r, Bigint(q), t);
        CHECK(geom_sum(r, Bigint(q), t, GeomMethod::Direct) == direct);
        CHECK(geom_sum(r, Bigint(q), t, GeomMethod::Recurrence) == direct);
        if (r == 0 || r == 1 || r == 2 || r == 4) {
          CHECK(geom_sum(r, Bigint(q), t, GeomMethod::Closed) == direct);
        }
      }
    }
  }
}

TEST_CASE("recurrence coefficients come out as plain powers") {
  // The derivative-and-subtract construction must land on j^r coefficients.
  auto c = geom_recurrence_coeffs(3, 9);
  REQUIRE(c.size() == 9);
  for (std::uint64_t j = 0; j < 9; ++j)
    CHECK(c[j] == pow_ui(Bigint(j), 3));
}

TEST_CASE("domain limits") {
  CHECK_THROWS_AS(geom_sum(3, Bigint(2), 4, GeomMethod::Closed), DomainError);
  CHECK_THROWS_AS(geom_sum(7, Bigint(2), 4, GeomMethod::Recurrence),
                  DomainError);
  CHECK_THROWS_AS(geom_sum(0, Bigint(1), 4, GeomMethod::Closed), DomainError);
}

TEST_CASE("block placement equals direct summation") {
  for (std::uint64_t k : {8ULL, 13ULL, 64ULL, 67ULL, 130ULL}) {
    for (std::uint64_t t : {0ULL, 1ULL, 2ULL, 7ULL, 16ULL}) {
      for (unsigned r : {0u, 1u, 3u, 5u}) {
        if (t >= 2 && pow_ui(Bigint(t - 1), r).bit_length() > k) continue;
        CHECK(geom_sum_pow2_placed(r, k, t) ==
              oracle::geom_sum_direct(r, Bigint::pow2(k), t));
      }
    }
  }
  CHECK_THROWS_AS(geom_sum_pow2_placed(4, 8, 8), DomainError);
}
