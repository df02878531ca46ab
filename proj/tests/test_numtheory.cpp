#include <doctest.h>

#include "primeterm/errors.hpp"
#include "primeterm/numtheory.hpp"
#include "primeterm/oracle.hpp"
#include "primeterm/term.hpp"

using namespace primeterm;
namespace orc = primeterm::oracle;

TEST_CASE("gcd closed forms equal Euclid") {
  for (long a = 1; a <= 20; ++a) {
    for (long b = 1; b <= 20; ++b) {
      Bigint want = orc::gcd(Bigint(a), Bigint(b));
      CHECK(gcd_term(GcdVariant::Mazzanti, Bigint(a), Bigint(b)) == want);
      CHECK(gcd_term(GcdVariant::PrunescuShunia, Bigint(a), Bigint(b)) == want);
    }
  }
  CHECK(gcd_term(GcdVariant::Mazzanti, Bigint(6), Bigint(4)) == Bigint(2));
  CHECK(gcd_term(GcdVariant::PrunescuShunia, Bigint(1), Bigint(1)) == Bigint(1));
  CHECK(gcd_term(GcdVariant::PrunescuShunia, Bigint(20), Bigint(12)) ==
        Bigint(4));
}

TEST_CASE("gcd expression text evaluates the same") {
  // Build the printable form, re-parse it, evaluate with bindings.
  TermPtr ast = gcd_term_ast(GcdVariant::Mazzanti, t_var("a"), t_var("b"));
  TermPtr back = parse_term(format_term(ast));
  Env env = {{"a", Bigint(6)}, {"b", Bigint(4)}};
  CHECK(eval_term(back, env) == Bigint(2));
  TermPtr ast2 =
      gcd_term_ast(GcdVariant::PrunescuShunia, t_var("a"), t_var("b"));
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 6; ++b) {
      if (a == 1 && b == 1) continue;  // raw formula's degenerate cell
      CHECK(eval_term(ast2, {{"a", Bigint(a)}, {"b", Bigint(b)}}) ==
            orc::gcd(Bigint(a), Bigint(b)));
    }
}

TEST_CASE("2-adic valuation") {
  CHECK(nu2_term(Bigint(12), EvalMode::Literal) == Bigint(2));
  CHECK(nu2_term(Bigint(1), EvalMode::Literal) == Bigint(0));
  CHECK(nu2_term(Bigint(256), EvalMode::Semantic) == Bigint(8));
  for (long n = 1; n <= 8; ++n) {
    CHECK(nu2_term(Bigint(n), EvalMode::Literal) ==
          Bigint(orc::nu2(Bigint(n))));
  }
  for (long n = 1; n <= 4096; ++n) {
    CHECK(nu2_term(Bigint(n), EvalMode::Semantic) ==
          Bigint(orc::nu2(Bigint(n))));
  }
  CHECK_THROWS_AS(nu2_term(Bigint(0), EvalMode::Semantic), DomainError);
}

TEST_CASE("hamming weight") {
  CHECK(hw_term(Bigint(5), EvalMode::Semantic) == Bigint(2));
  CHECK(hw_term(Bigint(0), EvalMode::Semantic) == Bigint(0));
  CHECK(hw_term(Bigint(255), EvalMode::Semantic) == Bigint(8));
  for (long n = 0; n <= 2; ++n) {
    CHECK(hw_term(Bigint(n), EvalMode::Literal) ==
          Bigint(orc::hamming_weight(Bigint(n))));
  }
  for (long n = 0; n <= 4096; ++n) {
    CHECK(hw_term(Bigint(n), EvalMode::Semantic) ==
          Bigint(orc::hamming_weight(Bigint(n))));
  }
}

TEST_CASE("exponentiation through powers of two") {
  CHECK(pow_term(Bigint(3), Bigint(4)) == Bigint(81));
  CHECK(pow_term(Bigint(7), Bigint(0)) == Bigint(1));
  // The formula's own convention at zero: 0^0 = 1, 0^y = 0.
  CHECK(pow_term(Bigint(0), Bigint(0)) == Bigint(1));
  CHECK(pow_term(Bigint(0), Bigint(3)) == Bigint(0));
  for (long x = 0; x <= 8; ++x) {
    for (long y = 0; y <= 8; ++y) {
      Bigint direct(1);
      for (long i = 0; i < y; ++i) direct *= Bigint(x);
      if (x == 0 && y == 0) direct = Bigint(1);
      CHECK(pow_term(Bigint(x), Bigint(y)) == direct);
    }
  }
  TermPtr ast = pow_term_ast(t_var("x"), t_var("y"));
  CHECK(eval_term(ast, {{"x", Bigint(5)}, {"y", Bigint(3)}}) == Bigint(125));
}

TEST_CASE("binomial variants") {
  CHECK(binom_term(BinomVariant::DivMod, Bigint(7), Bigint(3)) == Bigint(35));
  for (long a = 0; a <= 60; a += 6)
    CHECK(binom_term(BinomVariant::ModMod, Bigint(a), Bigint(0)) == Bigint(1));
  auto rows = orc::pascal_rows(24);
  for (unsigned a = 0; a <= 24; ++a) {
    for (unsigned b = 0; b <= a; ++b) {
      CHECK(binom_term(BinomVariant::Robinson, Bigint(a), Bigint(b)) ==
            rows[a][b]);
      CHECK(binom_term(BinomVariant::ModMod, Bigint(a), Bigint(b)) ==
            rows[a][b]);
      CHECK(binom_term(BinomVariant::DivMod, Bigint(a), Bigint(b)) ==
            rows[a][b]);
    }
  }
  CHECK_THROWS_AS(binom_term(BinomVariant::DivMod, Bigint(3), Bigint(4)),
                  DomainError);
  TermPtr ast =
      binom_term_ast(BinomVariant::DivMod, t_var("a"), t_var("b"));
  CHECK(eval_term(ast, {{"a", Bigint(7)}, {"b", Bigint(3)}}) == Bigint(35));
}

TEST_CASE("padovan sequence spot values") {
  auto s8 = padovan_seq(8, 64);
  CHECK(s8[63] == Bigint(2));
  const long row[] = {1, 7, 21, 35, 35, 21, 7};
  for (int j = 0; j < 7; ++j) CHECK(s8[56 + j] == Bigint(row[j]));
  CHECK_THROWS_AS(padovan_seq(1, 5), DomainError);
}

TEST_CASE("factorial closed forms") {
  for (std::uint64_t n = 0; n <= 3; ++n)
    CHECK(factorial_term(FactorialVariant::PrunescuSauras, n) ==
          orc::factorial(n));
  CHECK(factorial_term(FactorialVariant::NewTerm, 0) == Bigint(1));
  CHECK(factorial_term(FactorialVariant::NewTerm, 1) == Bigint(1));
  try {
    factorial_term(FactorialVariant::NewTerm, 2);
    FAIL("expected refusal");
  } catch (const BitLimitExceeded& e) {
    // The refusal names the ~1.4e11-bit requirement.
    CHECK(e.required_bits == "137573236753");
  }
  // Literal expression evaluation is feasible through n = 2.
  TermPtr ast =
      factorial_term_ast(FactorialVariant::PrunescuSauras, t_var("n"));
  for (long n = 0; n <= 2; ++n)
    CHECK(eval_term(ast, {{"n", Bigint(n)}}) == orc::factorial(n));
}

TEST_CASE("factorial quotient identity") {
  CHECK(factorial_identity(5, pow_ui(Bigint(6), 7)) == Bigint(120));
  CHECK(factorial_identity(0, Bigint(1)) == Bigint(1));
  CHECK(factorial_identity(8, pow_ui(Bigint(9), 10)) == Bigint(40320));
  for (std::uint64_t n = 0; n <= 8; ++n)
    CHECK(factorial_identity(n, pow_ui(Bigint(n + 1), n + 2)) ==
          orc::factorial(n));
  CHECK_THROWS_AS(factorial_identity(5, Bigint(100)), DomainError);
}

TEST_CASE("prime-or-2") {
  CHECK(prime_or_two(4, EvalMode::Semantic) == Bigint(5));
  CHECK(prime_or_two(3, EvalMode::Semantic) == Bigint(2));
  CHECK(prime_or_two(1, EvalMode::Semantic) == Bigint(2));
  CHECK(prime_or_two(2, EvalMode::Literal) == Bigint(3));
}
