#include <doctest.h>

#include <cmath>

#include "orlicz_lab/convex_core.hpp"
#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/random.hpp"
#include "orlicz_lab/sphere.hpp"
#include "orlicz_lab/subgrad.hpp"
#include "support.hpp"

using namespace orlicz_lab;
using namespace test_support;

TEST_CASE("support of the subdifferential") {
  const SearchConfig cfg;
  CHECK(support_of_subdifferential(euclidean_abs(1), Vec{0}, Vec{1}, cfg) == doctest::Approx(1.0));
  CHECK(support_of_subdifferential(euclidean_abs(1), Vec{0}, Vec{-1}, cfg) == doctest::Approx(1.0));
  CHECK(support_of_subdifferential(registry::quadratic(2), Vec{1, 0}, Vec{1, 0}, cfg) == doctest::Approx(1.0));
  // One-sided derivative of max(x, 0) at 0 towards -1 is 0.
  CHECK_NEAR(support_of_subdifferential(relu(), Vec{0}, Vec{-1}, cfg), 0.0, 1e-12);
}

TEST_CASE("subdifferential hull examples") {
  SearchConfig cfg;
  cfg.sphere_points_per_dim = 256;
  const auto k1 = subdifferential_hull(euclidean_abs(1), Vec{0}, cfg);
  REQUIRE(k1.size() == 2);
  CHECK(k1.support_values()[0] == doctest::Approx(1.0));
  CHECK(k1.support_values()[1] == doctest::Approx(1.0));

  const auto disc = subdifferential_hull(euclidean_abs(2), Vec{0, 0}, cfg);
  for (double h : disc.support_values()) CHECK(h == doctest::Approx(1.0).epsilon(1e-9));

  const Vec x{1, 2};
  const auto single = subdifferential_hull(registry::quadratic(2), x, cfg);
  for (std::size_t j = 0; j < single.size(); ++j)
    CHECK_NEAR(single.support_values()[j], dot(x, single.directions()[j]), 1e-7);
  CHECK(disc.consistency_violations(1e-9, 2000, 3) == 0);
}

TEST_CASE("compact convex set approximations") {
  const auto dirs = sphere_quadrature(2, 64, 1).directions;
  CHECK_THROWS_AS(CompactConvexSetApprox(2, {{1.0, 1.0}}, {0.0}), std::invalid_argument);
  const auto zero = CompactConvexSetApprox::singleton(Vec{0, 0}, dirs);
  const auto ball = CompactConvexSetApprox::ball(Vec{0, 0}, 1.0, dirs);
  CHECK(hausdorff_distance(zero, ball) == doctest::Approx(1.0));
  const auto a = CompactConvexSetApprox::singleton(Vec{1, 2}, dirs);
  const auto b = CompactConvexSetApprox::singleton(Vec{-2, 6}, dirs);
  // The sampled distance is a lower bound of |a - b| = 5, exact when (a - b)/5 is sampled.
  CHECK(hausdorff_distance(a, b) <= 5.0 + 1e-12);
  CHECK(hausdorff_distance(a, b) >= 5.0 * std::cos(M_PI / 64.0));
  const std::vector<Vec> line = {{1.0}, {-1.0}};
  const CompactConvexSetApprox i1(1, line, {1.0, 1.0}), i2(1, line, {1.0, 0.0});
  CHECK(hausdorff_distance(i1, i2) == doctest::Approx(1.0));
  const auto three = CompactConvexSetApprox::singleton(Vec{0, 0, 0}, sphere_quadrature(3, 64, 1).directions);
  CHECK_THROWS_AS(hausdorff_distance(zero, three), DimensionMismatch);

  // A non-convex support table: a square's support values with one direction pushed inward.
  std::vector<double> bad = CompactConvexSetApprox::ball(Vec{0, 0}, 1.0, dirs).support_values();
  bad[5] = -0.5;
  CHECK(CompactConvexSetApprox(2, dirs, bad).consistency_violations(1e-9, 4000, 1) > 0);
}

TEST_CASE("hausdorff distance is a pseudometric on samples") {
  const auto dirs = sphere_quadrature(3, 200, 1).directions;
  Rng rng = make_rng(5);
  for (int k = 0; k < 20; ++k) {
    const auto a = CompactConvexSetApprox::ball(random_in_ball(rng, Vec(3, 0.0), 2.0), 0.5, dirs);
    const auto b = CompactConvexSetApprox::ball(random_in_ball(rng, Vec(3, 0.0), 2.0), 1.5, dirs);
    const auto c = CompactConvexSetApprox::singleton(random_in_ball(rng, Vec(3, 0.0), 2.0), dirs);
    CHECK(hausdorff_distance(a, b) == hausdorff_distance(b, a));
    CHECK(hausdorff_distance(a, c) <= hausdorff_distance(a, b) + hausdorff_distance(b, c) + 1e-12);
    CHECK(hausdorff_distance(a, a) == 0.0);
  }
}

TEST_CASE("sphere average examples") {
  const SearchConfig cfg;
  CHECK_NEAR(sphere_average_subgradient(euclidean_abs(1), Vec{0}, cfg).y[0], 0.0, 1e-12);
  CHECK(sphere_average_subgradient(relu(), Vec{0}, cfg).y[0] == doctest::Approx(0.5).epsilon(1e-10));
  const auto s = sphere_average_subgradient(registry::quadratic(2), Vec{1, 2}, cfg);
  CHECK(s.y[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(s.y[1] == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(s.certificate.valid());
  CHECK(s.certificate.probe_count >= 1000);
}

TEST_CASE("sphere average in one dimension is the mean of the one-sided derivatives") {
  const SearchConfig cfg;
  const auto h = hinge();
  for (double x : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    const double right = directional_derivative(h, Vec{x}, Vec{1}, cfg);
    const double left = -directional_derivative(h, Vec{x}, Vec{-1}, cfg);
    CHECK_NEAR(sphere_average_subgradient(h, Vec{x}, cfg).y[0], 0.5 * (left + right), 1e-8);
  }
  // Closed-form one-sided derivatives of r max(r, 1): at 1 they are 1 and 2.
  CHECK_NEAR(sphere_average_subgradient(h, Vec{1.0}, cfg).y[0], 1.5, 1e-8);
}

TEST_CASE("barycenter examples") {
  const SearchConfig cfg;
  CHECK_NEAR(barycenter_subgradient(euclidean_abs(1), Vec{0}, cfg).y[0], 0.0, 1e-12);
  CHECK(barycenter_subgradient(relu(), Vec{0}, cfg).y[0] == doctest::Approx(0.5).epsilon(1e-9));
  const auto linf = registry::power(1.0, NormSpec::ell_inf(), 2);
  const auto b = barycenter_subgradient(linf, Vec{0, 0}, cfg);
  CHECK(b.affine_dim == 2);
  CHECK_NEAR(b.y[0], 0.0, 1e-7);
  CHECK_NEAR(b.y[1], 0.0, 1e-7);
  const auto q = barycenter_subgradient(registry::quadratic(2), Vec{1, 2}, cfg);
  CHECK(q.affine_dim == 0);
  CHECK(q.y[1] == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("barycenter of a segment and of a skewed set") {
  const SearchConfig cfg;
  // |x|_inf at (1, 1): the subdifferential is the segment from (1, 0) to (0, 1).
  const auto linf = registry::power(1.0, NormSpec::ell_inf(), 2);
  const auto seg = barycenter_subgradient(linf, Vec{1, 1}, cfg);
  CHECK(seg.affine_dim == 1);
  CHECK(seg.y[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(seg.y[1] == doctest::Approx(0.5).epsilon(1e-6));
  // max(x1, x2, 0) at the origin: the triangle with vertices 0, e1, e2, centroid (1/3, 1/3).
  ConvexFunctionOracle::Parts tri;
  tri.dim = 2;
  tri.eval = [](ConstVecView x) { return std::max({x[0], x[1], 0.0}); };
  const auto f = ConvexFunctionOracle::create(tri, ConvexFunctionOracle::Checks::generic_convex());
  const auto t = barycenter_subgradient(f, Vec{0, 0}, cfg);
  CHECK(t.affine_dim == 2);
  CHECK(t.y[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(t.y[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  // The sphere average of the same set is not its centroid.
  const auto s = sphere_average_subgradient(f, Vec{0, 0}, cfg);
  CHECK(std::abs(s.y[0] - 1.0 / 3.0) > 1e-3);
}

TEST_CASE("barycenter in three dimensions") {
  const SearchConfig cfg;
  // max(x1, x2, x3, 0): tetrahedron 0, e1, e2, e3 with centroid (1/4, 1/4, 1/4).
  ConvexFunctionOracle::Parts tet;
  tet.dim = 3;
  tet.eval = [](ConstVecView x) { return std::max({x[0], x[1], x[2], 0.0}); };
  const auto f = ConvexFunctionOracle::create(tet, ConvexFunctionOracle::Checks::generic_convex());
  const auto b = barycenter_subgradient(f, Vec{0, 0, 0}, cfg);
  CHECK(b.affine_dim == 3);
  for (double c : b.y) CHECK(c == doctest::Approx(0.25).epsilon(2e-3));
  CHECK(b.certificate.valid());
  // |x|_1 at (0, 0, 1): the square [-1, 1]^2 x {1} with centroid (0, 0, 1).
  const auto l1 = registry::power(1.0, NormSpec::ell_p(1.0), 3);
  const auto sq = barycenter_subgradient(l1, Vec{0, 0, 1}, cfg);
  CHECK(sq.affine_dim == 2);
  CHECK(sq.y[2] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(sq.y[0]) < 1e-3);
  CHECK(std::abs(sq.y[1]) < 1e-3);
}

TEST_CASE("barycenter in higher dimensions uses hit-and-run") {
  SearchConfig cfg;
  cfg.sphere_points_per_dim = 512;
  cfg.hit_and_run_samples = 20000;
  const auto l1 = registry::power(1.0, NormSpec::ell_p(1.0), 4);
  const auto b = barycenter_subgradient(l1, Vec{1, -1, 0, 0}, cfg);
  // The face {1} x {-1} x [-1, 1]^2 has centroid (1, -1, 0, 0).
  CHECK(b.affine_dim == 2);
  CHECK(b.y[0] == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(b.y[1] == doctest::Approx(-1.0).epsilon(1e-2));
  CHECK(std::abs(b.y[2]) < 0.05);
  CHECK(b.certificate.valid());
}

TEST_CASE("mollified examples") {
  SearchConfig cfg;
  const auto m = mollified_subgradient(registry::quadratic(2), Vec{1, 0}, 0.1, cfg);
  CHECK(m.y[0] == doctest::Approx(1.0).epsilon(5e-3));
  CHECK(std::abs(m.y[1]) < 5e-3);
  CHECK(std::abs(mollified_subgradient(euclidean_abs(1), Vec{0}, 0.3, cfg).y[0]) < 1e-12);
  const auto r = mollified_subgradient(relu(), Vec{0}, 0.2, cfg);
  CHECK(r.y[0] == doctest::Approx(0.5).epsilon(3.0 * std::max(r.standard_error[0], 1e-12) / 0.5 + 1e-12));
  CHECK_THROWS_AS(mollified_subgradient(relu(), Vec{0}, 0.0, cfg), std::invalid_argument);

  ConvexFunctionOracle::Parts ind;
  ind.dim = 1;
  ind.eval = [](ConstVecView x) { return std::abs(x[0]) <= 1.0 ? x[0] * x[0] : kInf; };
  ind.finite_everywhere = false;
  const auto f = ConvexFunctionOracle::create(ind, ConvexFunctionOracle::Checks::none());
  CHECK_THROWS_AS(mollified_subgradient(f, Vec{0.95}, 0.1, cfg), NonFiniteNearPoint);
}

TEST_CASE("selection consistency examples") {
  const auto cfg = light_config();
  const auto q = selection_consistency_test(registry::quadratic(2), Vec{0.5, -1}, cfg);
  CHECK(q.all_certified);
  CHECK(q.dist_sphere_barycenter < 1e-5);
  CHECK(q.dist_sphere_mollified < 1e-2);

  const auto r = selection_consistency_test(relu(), Vec{0}, cfg);
  CHECK(r.sphere_average.y[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.barycenter.y[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.mollified.back().y[0] == doctest::Approx(0.5).epsilon(0.05));
  CHECK(r.all_certified);

  const auto linf = registry::power(1.0, NormSpec::ell_inf(), 2);
  const auto l = selection_consistency_test(linf, Vec{1, 1}, cfg);
  CHECK(l.sphere_average.certificate.valid());
  CHECK(l.barycenter.certificate.valid());
  for (const auto& m : l.mollified) CHECK(m.certificate.valid());
  CHECK(l.eps_sweep.size() == l.mollified.size());
  CHECK(l.sweep_steps.size() + 1 == l.eps_sweep.size());
}

TEST_CASE("certificates reject a wrong candidate") {
  const SearchConfig cfg;
  const auto c = certify(registry::quadratic(2), Vec{1, 2}, Vec{1.5, 2}, "analytic", cfg);
  CHECK_FALSE(c.valid());
  CHECK(c.min_slack < -1e-3);
  const auto ok = certify(registry::quadratic(2), Vec{1, 2}, Vec{1, 2}, "analytic", cfg);
  CHECK(ok.valid());
  CHECK(ok.tol_slack == doctest::Approx(1e-7 * (1.0 + 2.5)));
}

TEST_CASE("serial and parallel sphere averages agree exactly") {
  const SearchConfig cfg;
  for (std::size_t n : {2u, 3u, 5u}) {
    const auto f = registry::hinge_power(1.0, NormSpec::ell_p(1.0), n);
    Vec x(n, 0.0);
    x[0] = 1.0;
    const auto par = sphere_average_subgradient(f, x, cfg).y;
    const auto ser = sphere_average_serial(f, x, cfg);
    for (std::size_t i = 0; i < n; ++i) CHECK(par[i] == ser[i]);
  }
}
