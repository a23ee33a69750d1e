#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz_lab/oracle.hpp"
#include "orlicz_lab/search_config.hpp"

namespace orlicz_lab {

enum class YoungKind { R, Phi, Psi };

std::string to_string(YoungKind k);
YoungKind parse_young_kind(const std::string& s);

/// Ratio functions of L:
///   R(r)   = sup_{|x| >= 1} L(rx) / L(x)
///   Phi(r) = sup_{x != 0}   L(rx) / L(x)
///   Psi(r) = inf_{x != 0}   L(rx) / L(x)
/// Sup estimates are lower bounds and inf estimates upper bounds, unless the
/// function is homogeneous, in which case the values are exact.
struct YoungFunctionEstimate {
  YoungKind kind = YoungKind::Phi;
  std::vector<double> r_grid;
  std::vector<double> values;
  /// "lower_bound_of_sup", "upper_bound_of_inf" or "exact".
  std::string bound_side;
  std::vector<Vec> witnesses;
  /// One-sided derivatives of Phi at 1.
  double p_minus = 0.0;
  double p_plus = 0.0;
};

YoungFunctionEstimate young_estimate(const ConvexFunctionOracle& f, YoungKind kind, const std::vector<double>& r_grid,
                                     const SearchConfig& cfg);

/// Single-point estimate with its witness.
std::pair<double, Vec> young_value(const ConvexFunctionOracle& f, YoungKind kind, double r, const SearchConfig& cfg);

/// (p_minus, p_plus): Richardson-extrapolated log-log secant slopes of the
/// Phi estimate at r = 1.
std::pair<double, double> growth_exponents(const ConvexFunctionOracle& f, const SearchConfig& cfg);

struct PropertyCheck {
  std::string name;
  double r = 0.0;
  double s = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  /// pass | shortfall | violation. A shortfall is a failure small enough to
  /// be explained by the one-sided nature of the estimate.
  std::string status;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  int violations = 0;
  int shortfalls = 0;
  int multiplicative_pairs = 0;

  bool ok() const { return violations == 0; }
};

/// Monotonicity, sub-multiplicativity (super- for Psi) on grid pairs whose
/// product is on the grid, and the power envelopes built from p_minus and
/// p_plus. Throws GridNotClosed when no pair (r, s) with rs on the grid exists.
PropertyReport young_properties_check(const YoungFunctionEstimate& est, double shortfall_band = 0.02);

enum class Delta2Domain { outside_unit_ball, punctured_space };

struct Delta2Report {
  Delta2Domain domain = Delta2Domain::punctured_space;
  /// Estimate of sup L'(x, x) / L(x) over the domain (a lower bound).
  double sup_ratio_estimate = 0.0;
  Vec witness;
  double p_minus = 0.0;
  double p_plus = 0.0;
  /// sup_ratio_estimate <= p_plus within 2%.
  bool consistent_with_p_plus = false;
  /// L(2x) <= 2^c L(x) at every probed x.
  bool doubling_holds = false;
  /// "delta2_evidence" or "violation_witness".
  std::string verdict;
};

Delta2Report delta2_diagnostic(const ConvexFunctionOracle& f, Delta2Domain domain, const SearchConfig& cfg);

/// (q_plus, q_minus) = (p_minus / (p_minus - 1), p_plus / (p_plus - 1)).
/// Throws PMinusNotGreaterThanOne.
std::pair<double, double> dual_exponent_bounds(double p_minus, double p_plus);

/// sup{a + b : a + b r <= min(r^p1, r^p0) for all r >= 0}, p1 >= p0 >= 1.
double gamma(double p1, double p0);

struct GammaCrossCheck {
  double value = 0.0;
  /// Same program restricted to r_j = 0.01 j, j = 0..10^4.
  double lp_value = 0.0;
  /// The grid program with geometric tail points r_max 2^k, k = 1..60, added.
  double tail_lp_value = 0.0;
  /// Discretization allowance for lp_value - value.
  double grid_bound = 0.0;
  bool agrees = false;
  bool tail_agrees = false;
};

GammaCrossCheck gamma_cross_check(double p1, double p0, const SearchConfig& cfg);

/// The grid program on its own, for testing.
double gamma_grid_lp(double p1, double p0, std::size_t points = 10001, double r_max = 100.0, int tail_points = 0);

}  // namespace orlicz_lab
