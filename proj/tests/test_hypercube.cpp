#include <doctest.h>

#include "primeterm/errors.hpp"
#include "primeterm/hypercube.hpp"
#include "primeterm/oracle.hpp"

using namespace primeterm;

TEST_CASE("delta blocks and their weight") {
  CHECK(delta_block(Bigint(0), 3) == Bigint(63));
  CHECK(delta_block(Bigint(0), 3).popcount() == 6);
  CHECK(delta_block(Bigint(5), 3) == Bigint(28));
  CHECK(delta_block(Bigint(5), 3).popcount() == 3);
  CHECK(delta_block(Bigint(1), 4) == Bigint(240));
  CHECK(delta_block(Bigint(1), 4).popcount() == 4);
  CHECK_THROWS_AS(delta_block(Bigint(8), 3), DomainError);
  // Weight is 2b at zero and b everywhere else, exhaustively to b = 12.
  for (std::uint64_t b = 1; b <= 12; ++b) {
    CHECK(delta_block(Bigint(0), b).popcount() == 2 * b);
    for (std::uint64_t a = 1; a < (std::uint64_t(1) << b); ++a)
      CHECK(delta_block(Bigint(a), b).popcount() == b);
  }
}

TEST_CASE("lattice enumeration is a bijection") {
  for (std::uint64_t t = 1; t <= 8; ++t) {
    for (unsigned k = 1; k <= 3; ++k) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < k; ++i) total *= t;
      std::vector<bool> hit(total, false);
      std::vector<std::uint64_t> pt(k, 0);
      for (std::uint64_t count = 0;; ++count) {
        std::uint64_t idx = beta_index(pt, t);
        REQUIRE(idx < total);
        CHECK(!hit[idx]);
        hit[idx] = true;
        unsigned i = 0;
        while (i < k && ++pt[i] == t) pt[i++] = 0;
        if (i == k) {
          CHECK(count + 1 == total);
          break;
        }
      }
    }
  }
}

namespace {

HypercubeInstance square_diag(std::uint64_t t) {
  // (x1 - x2)^2 over [0, t)^2.
  HypercubeInstance inst;
  inst.k = 2;
  inst.t = t;
  inst.u = Bigint((t - 1) * (t - 1)).bit_length() + 1;
  auto m2 = [](long c, unsigned r1, unsigned r2) {
    return SimpleMonomial{Bigint(c), {Bigint(1), Bigint(1)}, {r1, r2}};
  };
  inst.poly = {m2(1, 2, 0), m2(-2, 1, 1), m2(1, 0, 2)};
  return inst;
}

}  // namespace

TEST_CASE("both word assemblies agree and count zeros") {
  // (x1 - 1)^2 on [0, 2): a single zero.
  HypercubeInstance inst;
  inst.k = 1;
  inst.t = 2;
  inst.u = 4;
  inst.poly = {SimpleMonomial{Bigint(1), {Bigint(1)}, {2}},
               SimpleMonomial{Bigint(-2), {Bigint(1)}, {1}},
               SimpleMonomial{Bigint(1), {Bigint(1)}, {0}}};
  Bigint wc = assemble_w(inst, WMethod::Contributions);
  Bigint wd = assemble_w(inst, WMethod::Direct);
  CHECK(wc == wd);
  CHECK(wc.popcount() % inst.u == 0);
  CHECK(wc.popcount() / inst.u - 2 == 1);
  CHECK(count_zeros(inst) == Bigint(1));

  HypercubeInstance diag = square_diag(4);
  CHECK(assemble_w(diag, WMethod::Contributions) ==
        assemble_w(diag, WMethod::Direct));
  CHECK(count_zeros(diag) == Bigint(4));
  CHECK(count_zeros_scan(diag) == 4);
  CHECK(count_zeros_scan(diag, ExecPolicy::Parallel) == 4);
}

TEST_CASE("free term contributes even at coefficient zero") {
  CHECK(!contribution_c(Bigint(0), 2, 4, 2).is_zero());
}

TEST_CASE("a polynomial with no roots counts zero") {
  HypercubeInstance inst = square_diag(4);
  inst.poly.push_back(
      SimpleMonomial{Bigint(1), {Bigint(1), Bigint(1)}, {0, 0}});  // +1
  CHECK(count_zeros(inst) == Bigint(0));
}

TEST_CASE("parallel direct assembly matches serial") {
  HypercubeInstance diag = square_diag(7);
  CHECK(assemble_w(diag, WMethod::Direct) ==
        assemble_w(diag, WMethod::Direct, {}, ExecPolicy::Parallel));
}
