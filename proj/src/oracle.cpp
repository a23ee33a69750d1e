#include "orlicz_lab/oracle.hpp"

#include <sstream>

#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/random.hpp"

namespace orlicz_lab {

namespace {

std::string describe(const std::string& name, const char* what, ConstVecView x, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "oracle '" << name << "': " << what << " at x = (";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << "), value " << value;
  return os.str();
}

}  // namespace

ExtendedNonNegReal ConvexFunctionOracle::eval(ConstVecView x) const {
  if (x.size() != dim()) throw DimensionMismatch("oracle '" + name() + "': point has wrong dimension");
  return ExtendedNonNegReal(parts_.eval(x));
}

ConvexFunctionOracle ConvexFunctionOracle::create(Parts parts) { return create(std::move(parts), Checks{}); }

ConvexFunctionOracle ConvexFunctionOracle::create(Parts parts, const Checks& checks) {
  if (parts.dim == 0) throw ConstructionError("oracle dimension must be positive");
  if (!parts.eval) throw ConstructionError("oracle needs an evaluation map");
  if (parts.homogeneity_order && !(*parts.homogeneity_order >= 1.0))
    throw ConstructionError("homogeneity order must be >= 1");

  const std::size_t n = parts.dim;
  const auto& f = parts.eval;
  const std::string& name = parts.name;

  if (checks.zero_at_origin) {
    const Vec zero(n, 0.0);
    const double f0 = f(zero);
    if (f0 != 0.0) throw ConstructionError(describe(name, "L(0) != 0", zero, f0));
  }

  Rng rng = make_rng(checks.seed, n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_point = [&] {
    const double radius = checks.probe_radius * std::pow(10.0, -3.0 * unit(rng));
    return scaled(random_unit(rng, n), radius);
  };

  for (int k = 0; k < checks.probes; ++k) {
    const Vec x = random_point();
    const double fx = f(x);
    if (std::isnan(fx) || fx < 0.0) throw ConstructionError(describe(name, "negative or NaN value", x, fx));
    if (checks.positivity && !(fx > 0.0)) throw ConstructionError(describe(name, "L(x) = 0 off the origin", x, fx));

    if (checks.convexity) {
      const Vec z = random_point();
      const double t = unit(rng);
      const double fz = f(z);
      Vec m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = t * x[i] + (1.0 - t) * z[i];
      const double fm = f(m);
      const double chord = t * fx + (1.0 - t) * fz;
      if (std::isfinite(chord) && fm > chord + checks.tol_convexity * (1.0 + std::abs(chord)))
        throw ConstructionError(describe(name, "convexity probe failed", m, fm));
    }

    if (checks.homogeneity && parts.homogeneity_order && std::isfinite(fx)) {
      const double r = 0.1 + 9.9 * unit(rng);
      const double frx = f(scaled(x, r));
      const double expect = std::pow(r, *parts.homogeneity_order) * fx;
      if (std::abs(frx - expect) > checks.tol_homogeneity * (std::abs(expect) + 1e-300))
        throw ConstructionError(describe(name, "homogeneity probe failed", x, frx));
    }
  }
  return ConvexFunctionOracle(std::move(parts));
}

}  // namespace orlicz_lab
