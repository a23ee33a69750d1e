#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "orlicz_lab/norm_spec.hpp"
#include "orlicz_lab/types.hpp"

namespace orlicz_lab {

/// L(x) = V(||x||) for a scalar profile V. Carried as metadata so that
/// conjugates can use the one-dimensional reduction L*(y) = V*(||y||_*).
struct RadialStructure {
  std::function<double(double)> profile;
  NormSpec norm = NormSpec::euclidean();
};

/// Evaluation oracle for a convex L: R^n -> [0, +inf] with optional closed
/// forms. Immutable after construction; copies share the callables.
class ConvexFunctionOracle {
 public:
  using EvalFn = std::function<double(ConstVecView)>;
  using GradFn = std::function<Vec(ConstVecView)>;

  struct Parts {
    std::size_t dim = 1;
    std::string name;
    EvalFn eval;
    GradFn gradient;                      // empty when no closed form is known
    EvalFn conjugate;                     // empty when no closed form is known
    std::optional<double> homogeneity_order;
    bool finite_everywhere = true;
    std::optional<RadialStructure> radial;
  };

  /// Which construction probes to run. Positivity off the origin is the
  /// Young-type requirement; generic convex functions such as max(x, 0) and
  /// conjugates that vanish near zero switch it off.
  struct Checks {
    bool zero_at_origin = true;
    bool positivity = true;
    bool convexity = true;
    bool homogeneity = true;
    int probes = 64;
    double probe_radius = 5.0;
    double tol_convexity = 1e-9;
    double tol_homogeneity = 1e-9;
    std::uint64_t seed = 0xC0FFEE;

    static Checks none() { return {false, false, false, false}; }
    static Checks generic_convex() { return {true, false, true, true}; }
  };

  /// Runs the probes in `checks`; throws ConstructionError on violation.
  static ConvexFunctionOracle create(Parts parts, const Checks& checks);
  static ConvexFunctionOracle create(Parts parts);

  std::size_t dim() const { return parts_.dim; }
  const std::string& name() const { return parts_.name; }

  /// Raw value, +inf allowed.
  double operator()(ConstVecView x) const { return parts_.eval(x); }
  ExtendedNonNegReal eval(ConstVecView x) const;

  bool has_gradient() const { return static_cast<bool>(parts_.gradient); }
  Vec gradient(ConstVecView x) const { return parts_.gradient(x); }

  bool has_conjugate() const { return static_cast<bool>(parts_.conjugate); }
  double conjugate(ConstVecView y) const { return parts_.conjugate(y); }

  const std::optional<double>& homogeneity_order() const { return parts_.homogeneity_order; }
  bool finite_everywhere() const { return parts_.finite_everywhere; }
  const std::optional<RadialStructure>& radial() const { return parts_.radial; }

  const Parts& parts() const { return parts_; }

 private:
  explicit ConvexFunctionOracle(Parts p) : parts_(std::move(p)) {}
  Parts parts_;
};

}  // namespace orlicz_lab
