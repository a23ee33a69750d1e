#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlicz_lab/oracle.hpp"
#include "orlicz_lab/search_config.hpp"

namespace orlicz_lab {

struct DirectionalDerivative {
  double value = 0.0;
  bool converged = false;
  int evaluations = 0;
  double smallest_eps = 0.0;
};

/// The quotients (L(x + eps*theta) - L(x)) / eps along the configured eps
/// schedule, largest eps first. Infinite quotients are kept.
std::vector<std::pair<double, double>> difference_quotients(const ConvexFunctionOracle& f, ConstVecView x,
                                                            ConstVecView theta, const SearchConfig& cfg);

/// L'(x, theta) by Richardson-extrapolated difference quotients. The estimate
/// never exceeds any computed quotient. Does not throw on slow convergence;
/// `converged` reports it instead. Throws NonFiniteNearPoint.
DirectionalDerivative directional_derivative_estimate(const ConvexFunctionOracle& f, ConstVecView x,
                                                      ConstVecView theta, const SearchConfig& cfg);

/// As above but throws PrecisionLoss when the estimates fail to stabilize
/// before the eps floor.
double directional_derivative(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView theta,
                              const SearchConfig& cfg);

struct LineMaximum {
  double arg = 0.0;
  double value = -kInf;
  bool unbounded = false;
};

/// Maximizes a concave function of one variable on [lower, +inf). Values
/// above `divergence` are reported as unbounded.
LineMaximum maximize_concave_line(const std::function<double(double)>& phi, double lower, double start,
                                  double scale, double divergence, double rel_tol);

enum class LegendreMode { automatic, numeric_only };

struct ConjugateEstimate {
  ExtendedNonNegReal value;
  /// "exact_analytic" when the closed form was used, otherwise "lower_bound".
  std::string bound_side;
  std::optional<double> numeric;
  std::optional<double> analytic;
  /// analytic - numeric, when both were computed.
  std::optional<double> gap;
  Vec witness;
};

/// L*(x) = sup_y <x, y> - L(y). With a closed form available (and
/// automatic mode) the closed form is returned and the numeric lower bound is
/// computed alongside to record the gap.
ConjugateEstimate legendre(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg,
                           LegendreMode mode = LegendreMode::automatic);

/// Numeric lower bound of L*(x) only (+inf when unbounded).
double legendre_numeric(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg,
                        Vec* witness = nullptr);

/// L(x) + L*(y) - <x, y>; zero iff y is a subgradient at x.
double fenchel_gap(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView y, const SearchConfig& cfg);

/// sup_{|h| <= r} L(x + h) - L(x), estimated on the sphere |h| = r.
double local_oscillation(const ConvexFunctionOracle& f, ConstVecView x, double r, const SearchConfig& cfg);

/// L* as an oracle: the closed form when present, else the numeric
/// transform. Its own conjugate is L (lower semicontinuous L).
ConvexFunctionOracle conjugate_oracle(const ConvexFunctionOracle& f, const SearchConfig& cfg);

}  // namespace orlicz_lab
