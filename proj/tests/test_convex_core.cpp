#include <doctest.h>

#include <cmath>

#include "orlicz_lab/convex_core.hpp"
#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/random.hpp"
#include "orlicz_lab/registry.hpp"
#include "support.hpp"

using namespace orlicz_lab;
using namespace test_support;

TEST_CASE("extended non-negative reals") {
  CHECK_THROWS_AS(ExtendedNonNegReal(-1.0), std::domain_error);
  CHECK_THROWS_AS(ExtendedNonNegReal(std::nan("")), std::domain_error);
  const auto inf = ExtendedNonNegReal::infinity();
  CHECK((inf + ExtendedNonNegReal(3.0)).is_infinite());
  CHECK(inf.scaled_by(2.0).is_infinite());
  CHECK_THROWS_AS(inf.scaled_by(0.0), std::domain_error);
  CHECK(ExtendedNonNegReal(5.0).scaled_by(0.0) == 0.0);
  CHECK(inf > ExtendedNonNegReal(1e308));
  CHECK(inf > 1e308);
  CHECK(ExtendedNonNegReal(2.0) < ExtendedNonNegReal(3.0));
}

TEST_CASE("oracle construction probes") {
  ConvexFunctionOracle::Parts shifted;
  shifted.dim = 1;
  shifted.eval = [](ConstVecView x) { return x[0] * x[0] + 1.0; };
  CHECK_THROWS_AS(ConvexFunctionOracle::create(shifted), ConstructionError);

  ConvexFunctionOracle::Parts concave;
  concave.dim = 2;
  concave.eval = [](ConstVecView x) { return std::sqrt(euclidean_norm(x)); };
  CHECK_THROWS_AS(ConvexFunctionOracle::create(concave), ConstructionError);

  ConvexFunctionOracle::Parts wrong_order;
  wrong_order.dim = 2;
  wrong_order.eval = [](ConstVecView x) { return dot(x, x); };
  wrong_order.homogeneity_order = 3.0;
  CHECK_THROWS_AS(ConvexFunctionOracle::create(wrong_order), ConstructionError);

  for (const auto& name : registry::standard_names())
    for (std::size_t n : {1u, 2u, 3u}) CHECK_NOTHROW(registry::lookup(name, NormSpec::euclidean(), n));
}

TEST_CASE("directional derivative examples") {
  const SearchConfig cfg;
  CHECK_NEAR(directional_derivative(squared(2), Vec{1, 0}, Vec{0, 1}, cfg), 0.0, 1e-8);
  CHECK(directional_derivative(euclidean_abs(1), Vec{0}, Vec{1}, cfg) == doctest::Approx(1.0).epsilon(1e-10));
  // V(r) = r^2 for r >= 1, so the right derivative at 1 is V'(1) = 2.
  CHECK(directional_derivative(hinge(), Vec{1}, Vec{1}, cfg) == doctest::Approx(2.0).epsilon(1e-8));
  // Left of the kink V(r) = r, so L'(1, -1) = -1.
  CHECK(directional_derivative(hinge(), Vec{1}, Vec{-1}, cfg) == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("directional derivative errors") {
  ConvexFunctionOracle::Parts indicator;
  indicator.dim = 1;
  indicator.eval = [](ConstVecView x) { return std::abs(x[0]) <= 1.0 ? 0.0 : kInf; };
  indicator.finite_everywhere = false;
  const auto f = ConvexFunctionOracle::create(indicator, ConvexFunctionOracle::Checks::none());
  CHECK_THROWS_AS(directional_derivative(f, Vec{1.0}, Vec{1.0}, SearchConfig{}), NonFiniteNearPoint);
  CHECK(directional_derivative(f, Vec{1.0}, Vec{-1.0}, SearchConfig{}) == doctest::Approx(0.0));
}

TEST_CASE("legendre examples") {
  const SearchConfig cfg;
  const auto q = registry::quadratic(1);
  CHECK(legendre(q, Vec{3}, cfg).value.value() == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(legendre(q, Vec{3}, cfg, LegendreMode::numeric_only).value.value() == doctest::Approx(4.5).epsilon(1e-9));

  const auto h = hinge();
  for (double s : {3.0, 0.5, 1.5, -2.5}) {
    const double expect = grid_conjugate_1d([&](double t) { return std::abs(t) * std::max(std::abs(t), 1.0); }, s);
    CHECK_NEAR(legendre(h, Vec{s}, cfg).value.value(), expect, 1e-6);
    CHECK_NEAR(legendre_numeric(h, Vec{s}, cfg), expect, 1e-6);
  }
  CHECK(legendre(h, Vec{3}, cfg).value.value() == doctest::Approx(2.25));
  CHECK(legendre(h, Vec{0.5}, cfg).value.value() == 0.0);

  const auto p2 = registry::power(2.0, NormSpec::euclidean(), 1);
  const auto est = legendre(p2, Vec{2}, cfg);
  CHECK(est.bound_side == "exact_analytic");
  CHECK(est.value.value() == doctest::Approx(1.0));
  REQUIRE(est.gap.has_value());
  CHECK(std::abs(*est.gap) < 1e-8);
}

TEST_CASE("legendre detects unbounded objectives") {
  const SearchConfig cfg;
  const auto abs1 = euclidean_abs(1);
  CHECK(legendre_numeric(abs1, Vec{1.5}, cfg) == kInf);
  CHECK_NEAR(legendre_numeric(abs1, Vec{0.7}, cfg), 0.0, 1e-9);
  CHECK(legendre(abs1, Vec{2.0}, cfg).value.is_infinite());
  const auto abs2 = euclidean_abs(2);
  CHECK_NEAR(legendre_numeric(abs2, Vec{0.6, 0.6}, cfg), 0.0, 1e-9);
  CHECK(legendre_numeric(abs2, Vec{0.8, 0.8}, cfg) == kInf);
}

TEST_CASE("legendre numeric matches closed forms of power functions") {
  const SearchConfig cfg;
  for (double p : {1.5, 3.0}) {
    const double q = p / (p - 1.0);
    for (std::size_t n : {1u, 2u, 3u}) {
      const auto f = registry::power(p, NormSpec::euclidean(), n);
      Rng rng = make_rng(11, n);
      for (int k = 0; k < 5; ++k) {
        const Vec y = random_in_ball(rng, Vec(n, 0.0), 3.0);
        const double s = euclidean_norm(y);
        const double expect = std::pow(s, q) / (q * std::pow(p, q - 1.0));
        CHECK(legendre_numeric(f, y, cfg) == doctest::Approx(expect).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("legendre on non-euclidean norms uses the dual norm") {
  const SearchConfig cfg;
  const auto f = registry::power(2.0, NormSpec::ell_p(1.0), 2);
  // ||.||_1^2 has conjugate ||y||_inf^2 / 4.
  const Vec y{1.0, -3.0};
  CHECK(legendre_numeric(f, y, cfg) == doctest::Approx(9.0 / 4.0).epsilon(1e-7));
  CHECK(legendre(f, y, cfg).value.value() == doctest::Approx(9.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("fenchel gap examples") {
  const SearchConfig cfg;
  const auto q2 = registry::quadratic(2);
  CHECK_NEAR(fenchel_gap(q2, Vec{1, 2}, Vec{1, 2}, cfg), 0.0, 1e-12);
  CHECK(fenchel_gap(q2, Vec{1, 0}, Vec{2, 0}, cfg) == doctest::Approx(0.5));
  const auto a = euclidean_abs(1);
  const double grid_sup = grid_conjugate_1d([](double t) { return std::abs(t); }, 0.3);
  CHECK(grid_sup == doctest::Approx(0.0));
  CHECK_NEAR(fenchel_gap(a, Vec{0}, Vec{0.3}, cfg), grid_sup, 1e-9);
}

TEST_CASE("local oscillation examples") {
  const SearchConfig cfg;
  CHECK(local_oscillation(registry::quadratic(2), Vec{0, 0}, 1.0, cfg) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(local_oscillation(euclidean_abs(1), Vec{2}, 1.0, cfg) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(local_oscillation(hinge(), Vec{1}, 1.0, cfg) == doctest::Approx(3.0).epsilon(1e-12));
  // |x|_1 at the origin: sup over the euclidean unit sphere is sqrt(2).
  const auto l1 = registry::power(1.0, NormSpec::ell_p(1.0), 2);
  CHECK(local_oscillation(l1, Vec{0, 0}, 1.0, cfg) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("conjugate oracle") {
  const SearchConfig cfg;
  const auto p3 = registry::power(3.0, NormSpec::euclidean(), 2);
  const auto c = conjugate_oracle(p3, cfg);
  REQUIRE(c.homogeneity_order().has_value());
  CHECK(*c.homogeneity_order() == doctest::Approx(1.5));
  const Vec y{0.3, -1.2};
  const double q = 1.5;
  CHECK(c(y) == doctest::Approx(std::pow(euclidean_norm(y), q) / (q * std::pow(3.0, q - 1.0))));
  const auto cc = conjugate_oracle(c, cfg);
  CHECK(cc(y) == doctest::Approx(p3(y)));

  // Without a closed form the conjugate is computed numerically.
  const auto pl = registry::plog(2.0, NormSpec::euclidean(), 1);
  const auto cn = conjugate_oracle(pl, cfg);
  const double expect = grid_conjugate_1d([](double t) { return t * t * std::log1p(std::abs(t)); }, 2.0, 5.0);
  CHECK(cn(Vec{2.0}) == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("maximize concave line") {
  auto phi = [](double t) { return -(t - 3.0) * (t - 3.0) + 2.0; };
  const auto m = maximize_concave_line(phi, 0.0, 0.0, 1.0, 1e12, 1e-13);
  CHECK_FALSE(m.unbounded);
  CHECK(m.arg == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(m.value == doctest::Approx(2.0).epsilon(1e-12));
  const auto u = maximize_concave_line([](double t) { return t; }, 0.0, 0.0, 1.0, 1e12, 1e-13);
  CHECK(u.unbounded);
  const auto edge = maximize_concave_line([](double t) { return -t; }, 0.0, 0.0, 1.0, 1e12, 1e-13);
  CHECK(edge.arg == 0.0);
  CHECK(edge.value == 0.0);
}
