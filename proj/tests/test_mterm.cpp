#include <doctest.h>

#include "primeterm/errors.hpp"
#include "primeterm/fhat.hpp"
#include "primeterm/mterm.hpp"
#include "primeterm/oracle.hpp"

using namespace primeterm;

TEST_CASE("packed unity word pins its counts") {
  // n = 4: two square roots of unity; the word is 9 bits per block over a
  // 25-cell cube.
  Bigint m4 = build_m(Bigint(4), MVariant::Assembled);
  CHECK(m4.popcount() % 9 == 0);
  CHECK(m4.popcount() / 9 - 25 == 2);
  // n = 0: the degenerate one-cell cube, zero count.
  Bigint m0 = build_m(Bigint(0), MVariant::Assembled);
  CHECK(m0.popcount() % 5 == 0);
  CHECK(m0.popcount() / 5 - 1 == 0);
}

TEST_CASE("assembled and explicit forms agree") {
  for (std::uint64_t n : {0ULL, 1ULL, 2ULL, 3ULL, 7ULL, 16ULL, 33ULL}) {
    CHECK(build_m(Bigint(n), MVariant::Assembled) ==
          build_m(Bigint(n), MVariant::Explicit));
  }
}

TEST_CASE("word matches a direct lattice packing") {
  for (std::uint64_t n : {1ULL, 4ULL, 9ULL, 12ULL}) {
    HypercubeInstance inst = unity_instance(n);
    CHECK(assemble_w(inst, WMethod::Direct) ==
          build_m(Bigint(n), MVariant::Assembled));
  }
}

TEST_CASE("budget refusal names the requirement") {
  EvalConfig tiny;
  tiny.max_bits = 1 << 16;
  try {
    build_m(Bigint(100), MVariant::Assembled, tiny);
    FAIL("expected refusal");
  } catch (const BitLimitExceeded& e) {
    // 2 u t^2 = 2 * 105 * 101^2
    CHECK(e.required_bits == "2142210");
  }
}

TEST_CASE("normal form check at small n") {
  CHECK(normalized_m_check(0));
  CHECK(normalized_m_check(1));
  CHECK(normalized_m_check(2));
}
