#include <doctest.h>

#include <array>
#include <random>

#include "primeterm/errors.hpp"
#include "primeterm/relations.hpp"

using namespace primeterm;

TEST_CASE("registry arities") {
  CHECK(relation_info(RelId::Div).quantified == 2);
  CHECK(relation_info(RelId::Mod).quantified == 2);
  CHECK(relation_info(RelId::Divides).quantified == 1);
  CHECK(relation_info(RelId::NotDivides).quantified == 3);
  CHECK(relation_info(RelId::Nu2).quantified == 4);
  CHECK(relation_info(RelId::Exp).quantified == 4);
  CHECK(relation_info(RelId::Binom12).quantified == 12);
  CHECK(relation_info(RelId::Binom7).quantified == 7);
  CHECK(relation_info(RelId::Factorial).quantified == 13);
  CHECK(relation_info(RelId::HammingWeight).quantified == 12);
  CHECK(relation_info(RelId::M4Zero).quantified == 0);
  CHECK(relation_info(RelId::M4Nine).quantified == 9);
}

TEST_CASE("division witness and bounds") {
  Witness w = witness(RelId::Div, std::array<Bigint, 2>{Bigint(7), Bigint(3)});
  CHECK(w.output == Bigint(2));
  REQUIRE(w.quantified.size() == 2);
  CHECK(w.quantified[0] == Bigint(1));
  CHECK(w.quantified[1] == Bigint(1));
  auto b = bounds(RelId::Div, std::array<Bigint, 2>{Bigint(7), Bigint(3)});
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Bigint(3));
  CHECK(b[1] == Bigint(3));
  CHECK(b[2] == Bigint(8));  // output <= 7, strict bound 8
}

TEST_CASE("valuation witness") {
  Witness w = witness(RelId::Nu2, std::array<Bigint, 1>{Bigint(12)});
  CHECK(w.output == Bigint(2));
  REQUIRE(w.quantified.size() == 4);
  // 8 does not divide 12; 4 does.
  CHECK(w.quantified[0] == Bigint(1));  // 12 = 8*1 + 4
  CHECK(w.quantified[3] == Bigint(3));  // 12 / 4
}

TEST_CASE("no witness for false relations") {
  CHECK_THROWS_AS(
      witness(RelId::Divides, std::array<Bigint, 2>{Bigint(7), Bigint(3)}),
      NoWitness);
  CHECK_THROWS_AS(
      witness(RelId::NotDivides, std::array<Bigint, 2>{Bigint(6), Bigint(3)}),
      NoWitness);
  CHECK_THROWS_AS(witness(RelId::Nu2, std::array<Bigint, 1>{Bigint(0)}),
                  NoWitness);
}

TEST_CASE("binomial bound expression") {
  auto b = bounds(RelId::Binom7, std::array<Bigint, 2>{Bigint(2), Bigint(1)});
  CHECK(b[0] == Bigint(28 * 8 + 9));  // first carrier at x1 = 2
}

TEST_CASE("slot collision is rejected") {
  std::array<ExpoPoly, 2> in = {ExpoPoly::variable(1), ExpoPoly::variable(4)};
  CHECK_THROWS_AS(build_relation(RelId::Div, in, 3, ExpoPoly::variable(3)),
                  SlotCollision);
  CHECK_NOTHROW(build_relation(RelId::Div, in, 4, ExpoPoly::variable(3)));
}

TEST_CASE("m-relations demand structured inputs") {
  CHECK_THROWS_AS(
      witness(RelId::M4Nine, std::array<Bigint, 4>{Bigint(2), Bigint(3),
                                                   Bigint(8), Bigint(9)}),
      DomainError);
}

TEST_CASE("zero sets compose over sums of squares") {
  // For sums of squares P and Q, an assignment zeroes P + Q exactly when it
  // zeroes both.
  ExpoPoly p = build_relation(
      RelId::Div,
      std::array<ExpoPoly, 2>{ExpoPoly::variable(1), ExpoPoly::variable(2)}, 3,
      ExpoPoly::variable(3));
  ExpoPoly q = build_relation(
      RelId::Divides,
      std::array<ExpoPoly, 2>{ExpoPoly::variable(1), ExpoPoly::variable(6)}, 6,
      ExpoPoly::variable(0));
  ExpoPoly sum = p + q;
  std::mt19937_64 rng(5);
  int zero_hits = 0;
  for (int i = 0; i < 4000; ++i) {
    std::vector<Bigint> vals(7);
    for (auto& v : vals) v = Bigint(long(rng() % 5));
    Bigint vp = p.evaluate(vals, Bigint(0));
    Bigint vq = q.evaluate(vals, Bigint(0));
    Bigint vs = sum.evaluate(vals, Bigint(0));
    CHECK(vs == vp + vq);
    CHECK((vs.is_zero()) == (vp.is_zero() && vq.is_zero()));
    if (vs.is_zero()) ++zero_hits;
  }
  CHECK(zero_hits > 0);  // the property was exercised on both branches
}

TEST_CASE("tower bound stays symbolic") {
  TermPtr t = solution_bound_tower();
  const Term* inner = t.get();
  for (int i = 0; i < 3; ++i) {
    REQUIRE(inner->kind() == TermKind::Pow);
    inner = inner->rhs().get();
  }
  CHECK(eval_term(*inner, {{"n", Bigint(1)}}) == Bigint(18));
}
