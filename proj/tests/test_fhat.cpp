#include <doctest.h>

#include <fstream>
#include <sstream>

#include "primeterm/expoly.hpp"
#include "primeterm/fhat.hpp"
#include "primeterm/mterm.hpp"

using namespace primeterm;

TEST_CASE("reduced equation hits its reference shape") {
  const ExpoPoly f = build_f(FEquation::Fhat42);
  const ExpandStats st = expand_stats(f);
  // 473 is the like-terms-combined count; the reference listing prints 498
  // entries because 24 of them are uncombined duplicates.
  CHECK(st.monomials == 473);
  CHECK(st.variables == 42);
  CHECK(st.max_degree == 10);
  CHECK(f.coefficient(ExpoKey{}) == Bigint(270));
  // First listed reference monomial.
  ExpoKey k;
  k.degrees = {{2, 2}, {23, 3}, {29, 1}};
  k.exp2.vars = {{2, 184}, {3, 288}, {4, 128}};
  CHECK(f.coefficient(k) == -(Bigint(1) << 35));
}

TEST_CASE("expansion equals the reference listing value for value") {
  std::ifstream in(std::string(PRIMETERM_DATA_DIR) + "/fhat_reference.json");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  ExpoPoly golden = parse_expoly_json(ss.str());
  CHECK(golden == build_f(FEquation::Fhat42));
}

TEST_CASE("emission of the reduced equation is stable") {
  std::string a = emit(build_f(FEquation::Fhat42), EmitFormat::Json);
  std::string b = emit(build_f(FEquation::Fhat42), EmitFormat::Json);
  CHECK(a == b);
  ExpoPoly back = parse_expoly_json(a);
  CHECK(back == build_f(FEquation::Fhat42));
}

TEST_CASE("wide equation reports its counts") {
  const ExpoPoly f = build_f(FEquation::F32);
  const ExpandStats st = expand_stats(f);
  CHECK(st.variables == 32);
  CHECK(st.monomials > 400);  // the count is normalization-sensitive
  MESSAGE("wide equation monomials = ", st.monomials);
}

TEST_CASE("normal form evaluates against the packed word") {
  for (std::uint64_t n = 0; n <= 3; ++n) CHECK(normalized_m_check(n));
}

TEST_CASE("plan covers every monomial") {
  HypercubePlan plan = fhat_plan();
  // One descriptor per canonical monomial: the block constant plus 472
  // progression products.
  CHECK(plan.descriptors.size() == 473);
  std::size_t c_count = 0;
  for (const auto& d : plan.descriptors) c_count += d.is_c ? 1 : 0;
  CHECK(c_count == 1);
}
