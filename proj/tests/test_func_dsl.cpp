#include <doctest.h>

#include <cmath>

#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/func_dsl.hpp"

using namespace orlicz_lab;

TEST_CASE("parse examples") {
  const auto a = parse_young("pow(r,2)*max(r,1)");
  for (double r : {0.0, 0.5, 1.0, 2.5}) CHECK(a(r) == doctest::Approx(r * r * std::max(r, 1.0)));
  const auto b = parse_young("pow(r,3)*log1p(r)");
  for (double r : {0.0, 0.5, 1.0, 2.5}) CHECK(b(r) == doctest::Approx(r * r * r * std::log1p(r)));
  const auto c = parse_young("  2 * ( r + 1.5e-1 ) - min(abs(r), 3) + log(1 + r) ");
  CHECK(c(2.0) == doctest::Approx(2 * 2.15 - 2.0 + std::log(3.0)));
  CHECK(parse_young("r - r - r")(1.0) == doctest::Approx(-1.0));
}

TEST_CASE("parse errors") {
  try {
    parse_young("pow(r,");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_young("exp(r)"), UnknownFunction);
  CHECK_THROWS_AS(parse_young(""), ParseError);
  CHECK_THROWS_AS(parse_young("r r"), ParseError);
  CHECK_THROWS_AS(parse_young("r / 2"), ParseError);
  CHECK_THROWS_AS(parse_young("(r"), ParseError);
  CHECK_THROWS_AS(parse_young("pow(r)"), ParseError);
  CHECK_THROWS_AS(parse_young("bogus("), UnknownFunction);
  try {
    parse_young("r + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("print round trip") {
  for (const char* src : {"pow(r,2)*max(r,1)", "pow(r,3)*log1p(r)", "r-(r-r)", "2*r*r+0.1", "min(r,1)*pow(r,1.5)",
                          "abs(r-3)-(1-r)*2", "pow(r,2)*log(2+r)", "1e-300*r+123456789.123"}) {
    const auto p = parse_young(src);
    const auto text = print(*p.ast);
    const auto q = parse_young(text);
    CHECK_MESSAGE(structurally_equal(*p.ast, *q.ast), src << " -> " << text);
  }
}

TEST_CASE("validate examples") {
  CHECK(validate_profile(parse_young("pow(r,2)"), default_profile_grid()).valid());

  const auto psi = validate_profile(parse_young("pow(r,2)*min(r,1)"), default_profile_grid());
  CHECK_FALSE(psi.convex);
  bool near_one = false;
  for (const auto& v : psi.violations)
    if (v.kind == "convexity" && v.r_left < 1.0 && v.r_right > 1.0) near_one = true;
  CHECK(near_one);

  const auto lg = validate_profile(parse_young("log1p(r)"), default_profile_grid());
  CHECK(lg.zero_at_origin);
  CHECK_FALSE(lg.convex);

  const auto shifted = validate_profile(parse_young("r+1"), default_profile_grid());
  CHECK_FALSE(shifted.zero_at_origin);
  const auto dec = validate_profile(parse_young("abs(r-1)-1"), default_profile_grid());
  CHECK_FALSE(dec.monotone);
  CHECK_FALSE(dec.positive);
  CHECK(parse_young("pow(r,2)").claims_young);
  CHECK_FALSE(parse_young("log1p(r)").claims_convex);
}

TEST_CASE("convexity tolerance scales with the value") {
  // Rounding noise at large r must not register as a violation.
  const auto big = parse_young("1e12*pow(r,2)");
  CHECK(validate_profile(big, default_profile_grid()).valid());
}

TEST_CASE("lift examples") {
  const auto a = lift_radial(parse_young("pow(r,2)"), NormSpec::euclidean(), 3);
  CHECK(a(Vec{1, 2, 2}) == doctest::Approx(9.0));
  REQUIRE(a.homogeneity_order().has_value());
  CHECK(*a.homogeneity_order() == 2.0);

  const auto b = lift_radial(parse_young("pow(r,1)*max(r,1)"), NormSpec::euclidean(), 2);
  CHECK(b(Vec{0.6, 0.8}) == doctest::Approx(1.0));
  CHECK_FALSE(b.homogeneity_order().has_value());

  const auto c = lift_radial(parse_young("pow(r,2)*log1p(r)"), NormSpec::ell_p(3.0), 2);
  CHECK(c(Vec{0, 0}) == 0.0);
  CHECK(c(Vec{1, 1}) == doctest::Approx(std::pow(2.0, 2.0 / 3.0) * std::log1p(std::pow(2.0, 1.0 / 3.0))));

  CHECK_THROWS_AS(lift_radial(parse_young("log1p(r)"), NormSpec::euclidean(), 1), InvalidProfile);
  CHECK_THROWS_AS(lift_radial(parse_young("pow(r,2)*min(r,1)"), NormSpec::euclidean(), 1), InvalidProfile);
}

TEST_CASE("pure power detection") {
  double p = 0.0;
  CHECK(is_pure_power(*parse_young("pow(r, 2.5)").ast, &p));
  CHECK(p == 2.5);
  CHECK_FALSE(is_pure_power(*parse_young("pow(r,2)*1").ast));
  CHECK_FALSE(is_pure_power(*parse_young("pow(r,1+1)").ast));
  CHECK_FALSE(is_pure_power(*parse_young("r").ast));
}

TEST_CASE("norm specs") {
  for (const char* s : {"euclidean", "l1", "linf", "lp:3", "weighted:1,4"}) {
    const auto n = NormSpec::parse(s);
    CHECK(check_norm_axioms(n, 2, 3) == 0);
  }
  CHECK(NormSpec::parse("weighted:1,4")(Vec{1, 1}) == doctest::Approx(std::sqrt(5.0)));
  CHECK(NormSpec::parse("l1").dual()(Vec{1, -3}) == doctest::Approx(3.0));
  CHECK(NormSpec::parse("lp:3").dual().p() == doctest::Approx(1.5));
  CHECK_THROWS(NormSpec::parse("l0"));
  CHECK_THROWS(NormSpec::parse("lp:0.5"));
  CHECK_THROWS(NormSpec::parse("weighted:1,-1"));
}
