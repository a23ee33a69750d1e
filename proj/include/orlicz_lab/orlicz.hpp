#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orlicz_lab/oracle.hpp"
#include "orlicz_lab/random.hpp"
#include "orlicz_lab/search_config.hpp"

namespace orlicz_lab {

/// Finitely many atoms with positive weights summing to 1.
class DiscreteProbabilitySpace {
 public:
  /// Throws std::invalid_argument unless all weights are positive and sum to
  /// 1 within 1e-12.
  explicit DiscreteProbabilitySpace(std::vector<double> weights);

  static DiscreteProbabilitySpace uniform(std::size_t atoms);
  /// Dirichlet(1, ..., 1) weights, renormalized so the sum is exact to rounding.
  static DiscreteProbabilitySpace random(std::size_t atoms, Rng& rng);

  std::size_t size() const { return w_.size(); }
  const std::vector<double>& weights() const { return w_; }
  double operator[](std::size_t i) const { return w_[i]; }

 private:
  std::vector<double> w_;
};

/// One vector of R^dim per atom.
struct VectorField {
  std::size_t dim = 1;
  std::vector<Vec> values;

  /// Throws DimensionMismatch or std::invalid_argument on bad entries.
  void validate() const;
  std::size_t size() const { return values.size(); }
  bool is_zero() const;
  VectorField scaled(double c) const;

  static VectorField random_gaussian(std::size_t atoms, std::size_t dim, Rng& rng, double scale = 1.0);
};

/// Reads {dim, atoms: [{weight, value: [..]}]}.
std::pair<DiscreteProbabilitySpace, VectorField> read_space_json(const nlohmann::json& doc);

/// G(r) = sum_i w_i L(u_i / r), atoms evaluated concurrently.
double luxemburg_functional(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                            double r);
/// Plain loop reference for G.
double luxemburg_functional_serial(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp,
                                   const VectorField& u, double r);

struct LuxemburgResult {
  ExtendedNonNegReal value;
  /// G(value) - 1 when 0 < value < inf.
  double residual = 0.0;
  bool attained = false;
  int evaluations = 0;
};

/// inf{r > 0 : G(r) <= 1}: bracketing by doubling/halving from r = 1, then
/// bisection to relative width lux_rel_width. The upper (feasible) end of the
/// final bracket is returned.
LuxemburgResult luxemburg_norm_detailed(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp,
                                        const VectorField& u, const SearchConfig& cfg = {});
ExtendedNonNegReal luxemburg_norm(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp,
                                  const VectorField& u, const SearchConfig& cfg = {});

struct NormResult {
  ExtendedNonNegReal luxemburg;
  /// sum_i w_i <u_i, v_i>^+ for a feasible witness v.
  double orlicz_lower = 0.0;
  /// inf_{mu > 0} mu (1 + G(mu)).
  double orlicz_upper = 0.0;
  double amemiya_mu = 0.0;
  /// sum_i w_i L*(v_i) for the returned witness (<= 1).
  double witness_constraint = 0.0;
  VectorField witness_v;
  double gap = 0.0;
};

NormResult orlicz_norm(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                       const SearchConfig& cfg = {});

struct HolderReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double norm_u = 0.0;
  double norm_v_conjugate = 0.0;
  double slack = 0.0;
  bool holds = false;
};

/// sum w <u, v>^+ <= 2 ||u||_L ||v||_{L*}.
HolderReport holder_check(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                          const VectorField& v, const SearchConfig& cfg = {});
/// As above with an explicitly supplied conjugate oracle.
HolderReport holder_check(const ConvexFunctionOracle& f, const ConvexFunctionOracle& conjugate,
                          const DiscreteProbabilitySpace& sp, const VectorField& u, const VectorField& v,
                          const SearchConfig& cfg = {});

struct SandwichReport {
  NormResult norms;
  double lower_slack = 0.0;  // orlicz_lower - luxemburg
  double upper_slack = 0.0;  // 2 luxemburg - orlicz_upper
  double attainment_residual = 0.0;
  bool holds = false;
  bool attainment_holds = false;
};

SandwichReport sandwich_check(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                              const SearchConfig& cfg = {}, double tol = 1e-7);

/// L + eps L0. Throws std::invalid_argument for eps <= 0 or when L0 fails
/// the superlinear-growth probe.
ConvexFunctionOracle perturb(const ConvexFunctionOracle& f, const ConvexFunctionOracle& f0, double eps);

struct PerturbationReport {
  std::vector<double> eps_grid;  // decreasing
  double base_norm = 0.0;
  double base_conjugate_norm = 0.0;
  std::vector<double> norms;
  std::vector<double> conjugate_norms;
  int value_violations = 0;            // L_eps >= L, monotone in eps at probes
  int conjugate_value_violations = 0;  // L*_eps <= L*, monotone in eps at probes
  int norm_violations = 0;
  int conjugate_norm_violations = 0;
  double terminal_gap = 0.0;
  double terminal_conjugate_gap = 0.0;

  bool monotone() const {
    return value_violations == 0 && conjugate_value_violations == 0 && norm_violations == 0 &&
           conjugate_norm_violations == 0;
  }
};

PerturbationReport perturbation_sweep(const ConvexFunctionOracle& f, const ConvexFunctionOracle& f0,
                                      const DiscreteProbabilitySpace& sp, const VectorField& u,
                                      std::vector<double> eps_grid, const SearchConfig& cfg = {});

struct MixtureReport {
  std::vector<double> component_norms;
  double mixture_norm = 0.0;
  double quasi_concavity_slack = 0.0;  // S(mix) - min S_i
  double concavity_slack = 0.0;        // S(mix) - factor * sum t_i S_i
  double factor = 1.0;                 // 1 for homogeneous L, gamma(p+, p-) otherwise
  double p_minus = 0.0;
  double p_plus = 0.0;
  bool holds = false;
};

/// Throws AtomMismatch when the spaces do not share the atoms of u.
MixtureReport mixture_concavity_check(const ConvexFunctionOracle& f, const VectorField& u,
                                      const std::vector<DiscreteProbabilitySpace>& spaces,
                                      const std::vector<double>& t, const SearchConfig& cfg = {}, double tol = 1e-8);

using GridIndex = std::vector<long>;
using GridMeasure = std::map<GridIndex, double>;
using GridField = std::map<GridIndex, Vec>;

struct ConvolutionReport {
  double lhs = 0.0;  // ||u||_{L(lam * kap)}
  double rhs = 0.0;  // sum_y kap(y) ||u(. + y)||_{L(lam)}
  double slack = 0.0;
  std::size_t convolution_atoms = 0;
  bool holds = false;
};

/// lam * kap is the image of lam x kap under (x, y) -> x + y, with coinciding
/// grid indices merged. Throws SupportNotCovered when u misses a needed index.
ConvolutionReport convolution_check(const ConvexFunctionOracle& f, const GridField& u, const GridMeasure& lam,
                                    const GridMeasure& kap, const SearchConfig& cfg = {}, double tol = 1e-8);

}  // namespace orlicz_lab
