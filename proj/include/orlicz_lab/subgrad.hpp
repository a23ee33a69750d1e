#pragma once

#include <string>
#include <vector>

#include "orlicz_lab/oracle.hpp"
#include "orlicz_lab/search_config.hpp"

namespace orlicz_lab {

/// A compact convex set represented by its support function sampled on a
/// fixed set of unit directions.
class CompactConvexSetApprox {
 public:
  /// Throws std::invalid_argument unless every direction has unit length
  /// (within 1e-12) and the sizes agree.
  CompactConvexSetApprox(std::size_t dim, std::vector<Vec> directions, std::vector<double> support_values);

  static CompactConvexSetApprox singleton(ConstVecView point, std::vector<Vec> directions);
  static CompactConvexSetApprox ball(ConstVecView center, double radius, std::vector<Vec> directions);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& directions() const { return directions_; }
  const std::vector<double>& support_values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Counts sampled subadditivity failures h(a + b) > h(a) + h(b) + tol
  /// among direction pairs whose normalized sum is itself in the set, plus
  /// antipodal pairs with negative width.
  int consistency_violations(double tol, int pair_samples, std::uint64_t seed) const;

 private:
  std::size_t dim_;
  std::vector<Vec> directions_;
  std::vector<double> values_;
};

/// max_j |h1(theta_j) - h2(theta_j)|; the direction sets must coincide.
double hausdorff_distance(const CompactConvexSetApprox& a, const CompactConvexSetApprox& b);

/// h_{dL(x)}(theta) = L'(x, theta).
double support_of_subdifferential(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView theta,
                                  const SearchConfig& cfg);

/// Support table of dL(x) on the sphere quadrature set (M = sphere_points_per_dim * n).
CompactConvexSetApprox subdifferential_hull(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg);

struct SubgradientCertificate {
  Vec x;
  Vec y;
  int probe_count = 0;
  /// min over probes z of L(z) - L(x) - <y, z - x>.
  double min_slack = 0.0;
  double tol_slack = 0.0;
  Vec worst_probe;
  std::string method;  // barycenter | sphere_average | mollified | analytic

  bool valid() const { return min_slack >= -tol_slack; }
};

/// Probes the subgradient inequality at uniform points of B(x, probe_radius)
/// and at x +- e_i.
SubgradientCertificate certify(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView y,
                               const std::string& method, const SearchConfig& cfg);

struct Selection {
  Vec y;
  SubgradientCertificate certificate;
  /// Affine dimension of the sampled subdifferential (barycenter only).
  int affine_dim = -1;
  /// Monte Carlo standard error per component (zero for deterministic paths).
  Vec standard_error;
  std::string path;
};

/// y = n * mean over the sphere of L'(x, theta) theta.
Selection sphere_average_subgradient(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg);

/// Centroid of dL(x) under the uniform measure on its affine hull.
Selection barycenter_subgradient(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg);

/// Average of grad L over B(x, eps) (analytic gradient when available,
/// symmetric one-sided partials otherwise).
Selection mollified_subgradient(const ConvexFunctionOracle& f, ConstVecView x, double eps, const SearchConfig& cfg);

/// Serial reference for the sphere average, used to check the parallel kernel.
Vec sphere_average_serial(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg);

struct ConsistencyReport {
  Selection sphere_average;
  Selection barycenter;
  std::vector<double> eps_sweep;
  std::vector<Selection> mollified;
  double dist_sphere_barycenter = 0.0;
  double dist_sphere_mollified = 0.0;
  double dist_barycenter_mollified = 0.0;
  /// |T_eps(j+1) - T_eps(j)| along the sweep.
  std::vector<double> sweep_steps;
  bool appears_cauchy = false;
  bool all_certified = false;
};

/// Empirical comparison of the three selections; never an assertion.
ConsistencyReport selection_consistency_test(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg);

}  // namespace orlicz_lab
