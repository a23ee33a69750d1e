#pragma once

#include <cmath>
#include <string>

#include <doctest.h>

#include "orlicz_lab/oracle.hpp"
#include "orlicz_lab/registry.hpp"
#include "orlicz_lab/search_config.hpp"

#define CHECK_NEAR(actual, expected, tol)                    \
  do {                                                       \
    const double actual_ = (actual), expected_ = (expected); \
    INFO(actual_, " vs ", expected_);                        \
    CHECK(std::abs(actual_ - expected_) <= (tol));           \
  } while (0)

namespace test_support {

using orlicz_lab::ConstVecView;
using orlicz_lab::ConvexFunctionOracle;
using orlicz_lab::NormSpec;
using orlicz_lab::Vec;

/// max(x, 0) on the line; vanishes on the negative half-axis.
inline ConvexFunctionOracle relu() {
  ConvexFunctionOracle::Parts p;
  p.dim = 1;
  p.name = "relu";
  p.eval = [](ConstVecView x) { return std::max(x[0], 0.0); };
  return ConvexFunctionOracle::create(std::move(p), ConvexFunctionOracle::Checks::generic_convex());
}

inline ConvexFunctionOracle euclidean_abs(std::size_t n) { return orlicz_lab::registry::power(1.0, NormSpec::euclidean(), n); }

inline ConvexFunctionOracle squared(std::size_t n) { return orlicz_lab::registry::power(2.0, NormSpec::euclidean(), n); }

inline ConvexFunctionOracle hinge() { return orlicz_lab::registry::hinge_power(1.0, NormSpec::euclidean(), 1); }

/// The conjugate of |x| max(|x|, 1) on the line, derived by hand.
inline double hinge_conjugate(double s) {
  s = std::abs(s);
  if (s <= 1.0) return 0.0;
  if (s <= 2.0) return s - 1.0;
  return s * s / 4.0;
}

/// max{0, |x| - 1, x^2/4}: the closed form as printed in the source text.
inline double hinge_conjugate_as_printed(double s) { return std::max({0.0, std::abs(s) - 1.0, s * s / 4.0}); }

/// Brute force sup_t <s, t> - g(t) over a dense grid on [-T, T].
template <class G>
double grid_conjugate_1d(G&& g, double s, double T = 20.0, int points = 400001) {
  double best = -INFINITY;
  for (int i = 0; i < points; ++i) {
    const double t = -T + 2.0 * T * i / (points - 1);
    best = std::max(best, s * t - g(t));
  }
  return best;
}

/// Reduced-cost configuration for property sweeps.
inline orlicz_lab::SearchConfig light_config(std::uint64_t seed = 1) {
  orlicz_lab::SearchConfig cfg;
  cfg.seed = seed;
  cfg.sphere_points_per_dim = 512;
  cfg.probe_count = 1000;
  cfg.mollify_samples = 512;
  cfg.hit_and_run_samples = 5000;
  return cfg;
}

}  // namespace test_support
