#include <doctest.h>

#include <random>

#include "primeterm/errors.hpp"
#include "primeterm/term.hpp"

using namespace primeterm;

namespace {

Bigint ev(const std::string& text, Env env = {}) {
  return eval_term(parse_term(text), env);
}

// Random trees for the round-trip property. Constants stay non-negative
// because that is all the grammar can spell.
TermPtr random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
  switch (pick(rng)) {
    case 0:
      return t_const(long(rng() % 1000));
    case 1: {
      static const char* names[] = {"a", "b", "n", "x", "y0", "z_1"};
      return t_var(names[rng() % 6]);
    }
    default:
      break;
  }
  TermPtr l = random_tree(rng, depth - 1);
  TermPtr r = random_tree(rng, depth - 1);
  switch (rng() % 7) {
    case 0:
      return t_add(l, r);
    case 1:
      return t_sub(l, r);
    case 2:
      return t_monus(l, r);
    case 3:
      return t_mul(l, r);
    case 4:
      return t_div(l, r);
    case 5:
      return t_mod(l, r);
    default:
      return t_pow(l, r);
  }
}

}  // namespace

TEST_CASE("parse basics") {
  TermPtr p = parse_term("2^3");
  CHECK(p->kind() == TermKind::Pow);
  CHECK(eval_term(p, {}) == Bigint(8));
  CHECK(ev("10/4") == Bigint(2));
  CHECK(ev("monus(3,5)") == Bigint(0));
  CHECK(ev("monus(5,3)") == Bigint(2));
  CHECK(ev("7 % 3") == Bigint(1));
  CHECK(ev("2^3^2") == Bigint(512));            // right-associative
  CHECK(ev("2 + 3 * 4") == Bigint(14));
  CHECK(ev("(2 + 3) * 4") == Bigint(20));
  CHECK(ev("10 - 3 - 4") == Bigint(3));         // left-associative
  CHECK(ev("x + 1", {{"x", Bigint(41)}}) == Bigint(42));
}

TEST_CASE("syntax errors carry a byte offset") {
  try {
    parse_term("2 + + 3");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.byte_offset == 4);
  }
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("2 +"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(2"), SyntaxError);
  CHECK_THROWS_AS(parse_term("monus(2)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("2 ) 3"), SyntaxError);
}

TEST_CASE("formatting") {
  CHECK(format_term(t_pow(t_const(2), t_var("n"))) == "2^n");
  CHECK(format_term(t_mod(t_var("a"), t_var("b"))) == "a % b");
  CHECK(format_term(t_pow(t_pow(t_var("a"), t_var("b")), t_var("c"))) ==
        "(a^b)^c");
  CHECK(format_term(t_sub(t_var("a"), t_sub(t_var("b"), t_var("c")))) ==
        "a - (b - c)");
  CHECK(format_term(t_div(t_var("a"), t_var("b")), TermStyle::Latex) ==
        "\\left\\lfloor \\frac{a}{b} \\right\\rfloor");
  CHECK(format_term(t_mod(t_var("a"), t_var("b")), TermStyle::Latex) ==
        "\\left(a \\bmod b\\right)");
}

TEST_CASE("round trip on random trees") {
  std::mt19937_64 rng(20260810);
  for (int i = 0; i < 1000; ++i) {
    TermPtr t = random_tree(rng, 8);
    TermPtr back = parse_term(format_term(t));
    CHECK(structurally_equal(*t, *back));
  }
}

TEST_CASE("format is idempotent through parse") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    TermPtr t = random_tree(rng, 5);
    std::string s = format_term(t);
    CHECK(format_term(parse_term(s)) == s);
  }
}

TEST_CASE("evaluation domain rules") {
  // monus clamps; mod stays in [0, b); both branches over a small grid.
  for (long a = 0; a < 50; ++a) {
    for (long b = 0; b < 50; ++b) {
      Bigint m = ev("monus(a, b)", {{"a", Bigint(a)}, {"b", Bigint(b)}});
      CHECK(m == Bigint(a >= b ? a - b : 0));
    }
  }
  // Signed intermediates are fine as long as divisors stay positive.
  CHECK(ev("(2 - 5) + 10") == Bigint(7));
  CHECK(ev("(2 - 7) % 3") == Bigint(1));  // floor semantics
  CHECK_THROWS_AS(ev("5 / (2 - 4)"), DomainError);
  CHECK_THROWS_AS(ev("5 % (3 - 3)"), DomainError);
  CHECK_THROWS_AS(ev("2^(1 - 3)"), DomainError);
  CHECK_THROWS_AS(ev("q + 1"), UnboundVariable);
}

TEST_CASE("bit budget refusal is analytic") {
  EvalConfig cfg;
  CHECK_THROWS_AS(eval_term(parse_term("2^(2^40)"), {}, cfg),
                  BitLimitExceeded);
  EvalConfig small;
  small.max_bits = 64;
  CHECK_THROWS_AS(eval_term(parse_term("(2^60) * (2^60)"), {}, small),
                  BitLimitExceeded);
}

TEST_CASE("evaluation is deterministic") {
  TermPtr t = parse_term("((2^20 + 7) * 13) % 1009");
  Bigint first = eval_term(t, {});
  for (int i = 0; i < 10; ++i) CHECK(eval_term(t, {}) == first);
}
