#include <doctest.h>

#include <random>

#include "primeterm/errors.hpp"
#include "primeterm/expoly.hpp"

using namespace primeterm;

TEST_CASE("squares and cancellation") {
  ExpoPoly p = ep_var(1) - ep_var(2);
  ExpoPoly sq = p.square();
  CHECK(sq.size() == 3);  // x1^2 - 2 x1 x2 + x2^2
  CHECK((sq + (-sq)).zero());
  CHECK((p - p).zero());
  // Square of an m-term polynomial has at most m(m+1)/2 monomials.
  ExpoPoly q = ep_var(1) + ep_var(2) + ep_var(3) + ep_const(4) +
               ep_pow2(LinForm::var(1, 2));
  CHECK(q.square().size() <= 5 * 6 / 2);
}

TEST_CASE("exponent arithmetic stays affine") {
  ExpoPoly a = ep_pow2(LinForm::var(1, 2) + LinForm::constant(3));
  ExpoPoly b = ep_pow2(LinForm::var(2, 1) + LinForm::param_n(4));
  ExpoPoly prod = a * b;
  REQUIRE(prod.size() == 1);
  const auto& [key, coeff] = *prod.terms().begin();
  CHECK(key.exp2.c_const == 0);  // folded into the coefficient
  CHECK(coeff == Bigint(8));
  CHECK(key.exp2.c_n == 4);
  CHECK(key.exp2.vars.at(1) == 2);
  CHECK(key.exp2.vars.at(2) == 1);
  // Same symbolic exponent with different integer constants merges.
  ExpoPoly c = ep_pow2(LinForm::var(1, 1)) * ep_const(3) +
               ep_pow2(LinForm::var(1, 1) + LinForm::constant(5));
  REQUIRE(c.size() == 1);
  CHECK(c.terms().begin()->second == Bigint(35));
}

TEST_CASE("pow2 of a symbolic exponent guards linearity") {
  CHECK(ep_pow2_of(ep_const(3) * ep_var(1) + ep_const(5)).size() == 1);
  CHECK_THROWS_AS(ep_pow2_of(ep_var(1) * ep_var(1)), NonLinearExponent);
  CHECK_THROWS_AS(ep_pow2_of(ep_var(1) * ep_var(2)), NonLinearExponent);
  CHECK_THROWS_AS(ep_pow2_of(ep_const(0) - ep_var(1)), NonLinearExponent);
  CHECK_THROWS_AS(ep_pow2_of(ep_pow2(LinForm::var(1))), NonLinearExponent);
}

TEST_CASE("relabel merges like terms") {
  ExpoPoly p = ep_var(5) + ep_var(9);  // x5 + x9
  ExpoPoly r = p.relabel({{9, 5}});
  REQUIRE(r.size() == 1);
  CHECK(r.coefficient(ExpoKey{{{5, 1}}, {}}) == Bigint(2));
  // Exponent positions relabel too.
  ExpoPoly e = ep_pow2(LinForm::var(9, 3));
  ExpoPoly re = e.relabel({{9, 1}});
  CHECK(re.coefficient(ExpoKey{{}, LinForm::var(1, 3)}) == Bigint(1));
}

TEST_CASE("exponent substitution") {
  // 2^(2 x1 + 1) with x1 -> x2 (a squared stand-in) becomes 2^(2 x2 + 1).
  ExpoPoly p = ep_pow2(LinForm::var(1, 2) + LinForm::constant(1)) * ep_var(1);
  ExpoPoly s = p.substitute_exponent_var(1, LinForm::var(2, 1));
  ExpoKey want;
  want.degrees = {{1, 1}};
  want.exp2 = LinForm::var(2, 2);
  CHECK(s.coefficient(want) == Bigint(2));  // the +1 folded into the coefficient
}

TEST_CASE("expand stats") {
  ExpoPoly sq = (ep_var(1) - ep_var(2)).square();
  ExpandStats st = expand_stats(sq);
  CHECK(st.monomials == 3);
  CHECK(st.variables == 2);
  CHECK(st.max_degree == 2);
  CHECK(st.max_exp_coeff == 0);
  ExpandStats empty = expand_stats(ExpoPoly{});
  CHECK(empty.monomials == 0);
  CHECK(empty.variables == 0);
  CHECK(empty.max_degree == 0);
  CHECK(empty.max_exp_coeff == 0);
}

TEST_CASE("evaluation") {
  // 3 * 2^(x1 + 2) * x2^2 at x1 = 4, x2 = 5 is 3 * 64 * 25.
  ExpoPoly p = ExpoPoly::monomial(
      Bigint(3), LinForm::var(1, 1) + LinForm::constant(2), {{2, 2}});
  CHECK(p.evaluate({Bigint(4), Bigint(5)}, Bigint(0)) == Bigint(4800));
  // n participates through the exponent.
  ExpoPoly q = ep_pow2(LinForm::param_n(2));
  CHECK(q.evaluate({}, Bigint(3)) == Bigint(64));
}

TEST_CASE("emission") {
  CHECK(emit(ep_const(270), EmitFormat::Latex) == "+ 270");
  ExpoPoly one = ExpoPoly::monomial(
      Bigint(-5), LinForm::param_n(1) + LinForm::constant(2), {{2, 1}});
  CHECK(emit(one, EmitFormat::Latex) == "- 5 \\cdot 2^{n + 2} x_{2}");
  CHECK(emit(one, EmitFormat::Text) == "- 5*2^(n+2)*x2");
  CHECK(emit(ExpoPoly{}, EmitFormat::Text) == "0");
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(99);
  ExpoPoly p;
  for (int i = 0; i < 50; ++i) {
    LinForm e;
    e.c_const = rng() % 40;
    e.c_n = rng() % 3;
    std::vector<std::pair<int, unsigned>> degs;
    if (rng() % 2) e.vars[int(rng() % 7) + 1] = rng() % 90 + 1;
    if (rng() % 2) degs.push_back({int(rng() % 7) + 1, unsigned(rng() % 4) + 1});
    p += ExpoPoly::monomial(Bigint(long(rng() % 2001) - 1000), e, degs);
  }
  std::string j = emit(p, EmitFormat::Json);
  ExpoPoly back = parse_expoly_json(j);
  CHECK(back == p);
  CHECK(emit(back, EmitFormat::Json) == j);
}
