#include <doctest.h>

#include <cmath>

#include "orlicz_lab/convex_core.hpp"
#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/func_dsl.hpp"
#include "orlicz_lab/delta2.hpp"
#include "orlicz_lab/orlicz.hpp"
#include "support.hpp"

using namespace orlicz_lab;
using namespace test_support;

namespace {

VectorField field(std::size_t dim, std::vector<Vec> v) { return VectorField{dim, std::move(v)}; }

double exponent_constant(double p) {
  const double q = p / (p - 1.0);
  return std::pow(p, 1.0 / p) * std::pow(q, 1.0 / q);
}

}  // namespace

TEST_CASE("probability spaces") {
  CHECK_THROWS_AS(DiscreteProbabilitySpace({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteProbabilitySpace({1.0, 0.0}), std::invalid_argument);
  CHECK(DiscreteProbabilitySpace::uniform(4)[2] == 0.25);
  Rng rng = make_rng(3);
  const auto sp = DiscreteProbabilitySpace::random(64, rng);
  double s = 0.0;
  for (double w : sp.weights()) s += w;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("luxemburg examples") {
  const auto f = squared(1);
  const auto sp = DiscreteProbabilitySpace::uniform(2);
  const auto u = field(1, {{3}, {4}});
  CHECK(luxemburg_norm(f, sp, u).value() == doctest::Approx(std::sqrt(12.5)).epsilon(1e-10));
  CHECK(luxemburg_norm(f, sp, field(1, {{0}, {0}})).value() == 0.0);
  CHECK(luxemburg_norm(f, sp, u.scaled(2.0)).value() == doctest::Approx(2.0 * std::sqrt(12.5)).epsilon(1e-10));
  const auto d = luxemburg_norm_detailed(f, sp, u);
  CHECK(d.attained);
  CHECK(std::abs(d.residual) <= 1e-8);
}

TEST_CASE("luxemburg of an extended-valued function") {
  ConvexFunctionOracle::Parts parts;
  parts.dim = 1;
  parts.eval = [](ConstVecView x) { return std::abs(x[0]) <= 1.0 ? 0.5 * x[0] * x[0] : kInf; };
  parts.finite_everywhere = false;
  const auto f = ConvexFunctionOracle::create(parts, ConvexFunctionOracle::Checks::none());
  const auto sp = DiscreteProbabilitySpace::uniform(2);
  // G(r) = (9 + 16) / (4 r^2) once r >= 4, which is <= 1 for r >= 2.5: the constraint r >= 4 binds.
  CHECK(luxemburg_norm(f, sp, field(1, {{3}, {4}})).value() == doctest::Approx(4.0).epsilon(1e-9));

  ConvexFunctionOracle::Parts never;
  never.dim = 1;
  never.eval = [](ConstVecView x) { return x[0] == 0.0 ? 0.0 : kInf; };
  never.finite_everywhere = false;
  const auto g = ConvexFunctionOracle::create(never, ConvexFunctionOracle::Checks::none());
  CHECK(luxemburg_norm(g, sp, field(1, {{1}, {0}})).is_infinite());
}

TEST_CASE("orlicz brackets for power functions") {
  const SearchConfig cfg;
  Rng rng = make_rng(21);
  for (double p : {1.5, 2.0, 3.0}) {
    const auto f = registry::power(p, NormSpec::euclidean(), 3);
    const auto sp = DiscreteProbabilitySpace::random(64, rng);
    const auto u = VectorField::random_gaussian(64, 3, rng);
    const auto r = orlicz_norm(f, sp, u, cfg);
    const double lux = r.luxemburg.value();
    CHECK(r.orlicz_lower / lux == doctest::Approx(exponent_constant(p)).epsilon(1e-3));
    CHECK(r.orlicz_upper / lux == doctest::Approx(exponent_constant(p)).epsilon(1e-3));
    CHECK(r.gap >= -1e-9);
    CHECK(r.gap / r.orlicz_upper <= 1e-3);
    CHECK(r.witness_constraint <= 1.0 + 1e-12);
  }
  CHECK(exponent_constant(2.0) == doctest::Approx(2.0));
  CHECK(exponent_constant(3.0) == doctest::Approx(1.889882).epsilon(1e-6));
  const auto z = orlicz_norm(squared(2), DiscreteProbabilitySpace::uniform(3), field(2, {{0, 0}, {0, 0}, {0, 0}}), cfg);
  CHECK(z.luxemburg == 0.0);
  CHECK(z.orlicz_lower == 0.0);
  CHECK(z.orlicz_upper == 0.0);
}

TEST_CASE("sandwich and holder") {
  const SearchConfig cfg;
  Rng rng = make_rng(4);
  for (const auto& name : registry::standard_names()) {
    const auto f = registry::lookup(name, NormSpec::euclidean(), 2);
    const auto sp = DiscreteProbabilitySpace::random(32, rng);
    const auto u = VectorField::random_gaussian(32, 2, rng);
    const auto s = sandwich_check(f, sp, u, cfg);
    CHECK_MESSAGE(s.holds, name);
    CHECK_MESSAGE(s.attainment_holds, name);
    const auto v = VectorField::random_gaussian(32, 2, rng);
    const auto h = holder_check(f, sp, u, v, cfg);
    CHECK_MESSAGE(h.holds, name);
    CHECK(h.slack >= 0.0);
  }
  const auto q = registry::quadratic(1);
  const auto sp = DiscreteProbabilitySpace::uniform(2);
  const auto u = field(1, {{1}, {-2}});
  const auto h = holder_check(q, sp, u, u, cfg);
  CHECK(h.lhs == doctest::Approx(2.5));
  CHECK(h.rhs == doctest::Approx(2.5));  // both norms equal sqrt(5 / 4)
  const auto z = holder_check(q, sp, field(1, {{0}, {0}}), u, cfg);
  CHECK(z.lhs == 0.0);
  CHECK(z.holds);
}

TEST_CASE("holder with a conjugate vanishing near zero") {
  const SearchConfig cfg;
  const auto f = hinge();
  const auto sp = DiscreteProbabilitySpace::uniform(2);
  const auto v = field(1, {{0.5}, {-0.25}});
  // L* vanishes on [-1, 1], so G*(r) = 0 for every r >= 0.5 and the norm is at most 0.5.
  const auto conj = conjugate_oracle(f, cfg);
  const double nv = luxemburg_norm(conj, sp, v).value();
  CHECK(nv > 0.0);
  CHECK(nv <= 0.5);
  CHECK(holder_check(f, sp, field(1, {{2}, {1}}), v, cfg).holds);
}

TEST_CASE("perturbation") {
  const SearchConfig cfg;
  const auto f = euclidean_abs(1);
  const auto f0 = registry::quadratic(1);
  const auto g = perturb(f, f0, 1.0);
  CHECK(g(Vec{2.0}) == doctest::Approx(4.0));
  CHECK_THROWS_AS(perturb(f, f0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(perturb(f, f, 1.0), std::invalid_argument);
  const auto s = perturb(squared(2), registry::quadratic(2), 2.0);
  CHECK(s(Vec{1, 2}) == doctest::Approx(10.0));
  REQUIRE(s.homogeneity_order().has_value());
  CHECK(*s.homogeneity_order() == 2.0);

  Rng rng = make_rng(8);
  const auto sp = DiscreteProbabilitySpace::random(16, rng);
  const auto u = VectorField::random_gaussian(16, 1, rng);
  const auto rep = perturbation_sweep(f, f0, sp, u, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}, cfg);
  CHECK(rep.monotone());
  CHECK(rep.terminal_gap < 1e-4);

  // |x|^2 + eps |x|^2 / 2 = (1 + eps/2) |x|^2, so the norm scales by sqrt(1 + eps/2).
  const auto sq = perturbation_sweep(squared(1), f0, sp, u, {1.0, 0.5, 0.1}, cfg);
  for (std::size_t k = 0; k < sq.eps_grid.size(); ++k)
    CHECK(sq.norms[k] == doctest::Approx(sq.base_norm * std::sqrt(1.0 + sq.eps_grid[k] / 2.0)).epsilon(1e-9));
}

TEST_CASE("perturbation of the absolute value against a scalar root") {
  const SearchConfig cfg;
  const auto sp = DiscreteProbabilitySpace::uniform(3);
  const auto u = field(1, {{1.0}, {-2.0}, {0.5}});
  // sum w (|u|/r + eps u^2 / (2 r^2)) = 1 is a quadratic in 1/r.
  const double a = (1.0 + 2.0 + 0.5) / 3.0, b = (1.0 + 4.0 + 0.25) / 3.0;
  for (double eps : {0.1, 0.01}) {
    const double s = (-a + std::sqrt(a * a + 2.0 * eps * b)) / (eps * b);
    const auto g = perturb(euclidean_abs(1), registry::quadratic(1), eps);
    CHECK(luxemburg_norm(g, sp, u, cfg).value() == doctest::Approx(1.0 / s).epsilon(1e-9));
  }
}

TEST_CASE("mixture concavity") {
  const SearchConfig cfg;
  Rng rng = make_rng(9);
  const auto f = squared(1);
  const auto u = VectorField::random_gaussian(8, 1, rng);
  const auto l1 = DiscreteProbabilitySpace::random(8, rng);
  const auto same = mixture_concavity_check(f, u, {l1, l1}, {0.5, 0.5}, cfg);
  CHECK(same.holds);
  CHECK_NEAR(same.concavity_slack, 0.0, 1e-9);
  const auto l2 = DiscreteProbabilitySpace::random(8, rng);
  const auto m = mixture_concavity_check(f, u, {l1, l2}, {0.3, 0.7}, cfg);
  // The L^2 norm squared is linear in the measure.
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s1 += l1[i] * u.values[i][0] * u.values[i][0], s2 += l2[i] * u.values[i][0] * u.values[i][0];
  CHECK(m.mixture_norm == doctest::Approx(std::sqrt(0.3 * s1 + 0.7 * s2)).epsilon(1e-9));
  CHECK(m.holds);

  const auto k = lift_radial(parse_young("pow(r,2)*max(r,1)"), NormSpec::euclidean(), 1);
  const auto mk = mixture_concavity_check(k, u, {l1, l2}, {0.5, 0.5}, cfg);
  CHECK(mk.factor == doctest::Approx(orlicz_lab::gamma(3.0, 2.0)).epsilon(1e-3));
  CHECK(mk.holds);
  CHECK_THROWS_AS(mixture_concavity_check(f, u, {l1, DiscreteProbabilitySpace::uniform(3)}, {0.5, 0.5}, cfg), AtomMismatch);
}

TEST_CASE("convolution") {
  const SearchConfig cfg;
  const auto f = squared(1);
  GridField u;
  for (long i = -2; i <= 6; ++i) u[{i}] = Vec{std::sin(1.0 + i)};
  GridMeasure lam = {{{0}, 0.25}, {{1}, 0.25}, {{2}, 0.5}};
  GridMeasure delta = {{{0}, 1.0}};
  const auto id = convolution_check(f, u, lam, delta, cfg);
  CHECK(id.lhs == doctest::Approx(id.rhs).epsilon(1e-12));
  GridMeasure kap = {{{0}, 0.5}, {{1}, 0.5}};
  const auto c = convolution_check(f, u, lam, kap, cfg);
  CHECK(c.holds);
  CHECK(c.convolution_atoms == 4);
  GridMeasure far = {{{10}, 1.0}};
  CHECK_THROWS_AS(convolution_check(f, u, lam, far, cfg), SupportNotCovered);
}

TEST_CASE("serial and parallel luxemburg functionals agree to rounding") {
  Rng rng = make_rng(12);
  const auto f = registry::plog(2.0, NormSpec::euclidean(), 3);
  const auto sp = DiscreteProbabilitySpace::random(5000, rng);
  const auto u = VectorField::random_gaussian(5000, 3, rng);
  for (double r : {0.5, 1.0, 3.0}) CHECK(luxemburg_functional(f, sp, u, r) == doctest::Approx(luxemburg_functional_serial(f, sp, u, r)).epsilon(1e-13));
}

TEST_CASE("space json") {
  const auto doc = nlohmann::json::parse(R"({"dim": 2, "atoms": [{"weight": 0.25, "value": [1, 2]}, {"weight": 0.75, "value": [0, -1]}]})");
  const auto [sp, u] = read_space_json(doc);
  CHECK(sp.size() == 2);
  CHECK(u.values[1][1] == -1.0);
  CHECK_THROWS(read_space_json(nlohmann::json::parse(R"({"dim": 2, "atoms": [{"weight": 1, "value": [1]}]})")));
}
