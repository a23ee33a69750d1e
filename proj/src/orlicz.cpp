#include "orlicz_lab/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "orlicz_lab/convex_core.hpp"
#include "orlicz_lab/delta2.hpp"
#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/parallel.hpp"
#include "orlicz_lab/subgrad.hpp"

namespace orlicz_lab {

DiscreteProbabilitySpace::DiscreteProbabilitySpace(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("probability space needs at least one atom");
  for (double w : w_)
    if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("atom weights must be positive and finite");
  const double total = parallel::pairwise_sum(w_);
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("atom weights must sum to 1");
}

DiscreteProbabilitySpace DiscreteProbabilitySpace::uniform(std::size_t atoms) {
  return DiscreteProbabilitySpace(std::vector<double>(atoms, 1.0 / static_cast<double>(atoms)));
}

DiscreteProbabilitySpace DiscreteProbabilitySpace::random(std::size_t atoms, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(atoms);
  for (double& x : w) x = e(rng) + 1e-3;
  const double total = parallel::pairwise_sum(w);
  for (double& x : w) x /= total;
  return DiscreteProbabilitySpace(std::move(w));
}

void VectorField::validate() const {
  for (const Vec& v : values) {
    if (v.size() != dim) throw DimensionMismatch("vector field entry has wrong dimension");
    for (double c : v)
      if (!std::isfinite(c)) throw std::invalid_argument("vector field entries must be finite");
  }
}

bool VectorField::is_zero() const {
  for (const Vec& v : values)
    if (!orlicz_lab::is_zero(v)) return false;
  return true;
}

VectorField VectorField::scaled(double c) const {
  VectorField out{dim, {}};
  for (const Vec& v : values) out.values.push_back(orlicz_lab::scaled(v, c));
  return out;
}

VectorField VectorField::random_gaussian(std::size_t atoms, std::size_t dim, Rng& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  VectorField u{dim, {}};
  for (std::size_t i = 0; i < atoms; ++i) {
    Vec v(dim);
    for (double& c : v) c = g(rng);
    u.values.push_back(std::move(v));
  }
  return u;
}

std::pair<DiscreteProbabilitySpace, VectorField> read_space_json(const nlohmann::json& doc) {
  const std::size_t dim = doc.at("dim").get<std::size_t>();
  std::vector<double> w;
  VectorField u{dim, {}};
  for (const auto& atom : doc.at("atoms")) {
    w.push_back(atom.at("weight").get<double>());
    u.values.push_back(atom.at("value").get<Vec>());
  }
  u.validate();
  return {DiscreteProbabilitySpace(std::move(w)), std::move(u)};
}

namespace {

void check_pair(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u) {
  if (u.dim != f.dim()) throw DimensionMismatch("vector field and oracle dimensions differ");
  if (u.size() != sp.size()) throw AtomMismatch("vector field and probability space have different atom counts");
  u.validate();
}

double max_abs(const VectorField& u) {
  double m = 0.0;
  for (const Vec& v : u.values) m = std::max(m, euclidean_norm(v));
  return m;
}

}  // namespace

double luxemburg_functional(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                            double r) {
  return parallel::weighted_sum(sp.weights(), [&](std::size_t i) { return f(scaled(u.values[i], 1.0 / r)); });
}

double luxemburg_functional_serial(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp,
                                   const VectorField& u, double r) {
  return parallel::weighted_sum_serial(sp.weights(), [&](std::size_t i) { return f(scaled(u.values[i], 1.0 / r)); });
}

LuxemburgResult luxemburg_norm_detailed(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp,
                                        const VectorField& u, const SearchConfig& cfg) {
  check_pair(f, sp, u);
  LuxemburgResult res;
  if (u.is_zero()) {
    res.attained = true;
    return res;
  }
  auto G = [&](double r) {
    ++res.evaluations;
    return luxemburg_functional(f, sp, u, r);
  };
  auto feasible = [&](double r) { return G(r) <= 1.0; };  // +inf and NaN count as infeasible

  const double ceiling = std::ldexp(1.0 + max_abs(u), cfg.lux_ceiling_log2);
  double lo, hi;
  if (feasible(1.0)) {
    hi = 1.0;
    lo = 0.5;
    while (feasible(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) {
        res.value = ExtendedNonNegReal(hi);
        return res;
      }
    }
  } else {
    lo = 1.0;
    hi = 2.0;
    while (!feasible(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > ceiling) {
        res.value = ExtendedNonNegReal::infinity();
        return res;
      }
    }
  }
  while (hi - lo > cfg.lux_rel_width * hi) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  res.value = ExtendedNonNegReal(hi);
  res.residual = G(hi) - 1.0;
  res.attained = std::abs(res.residual) <= 1e-8;
  return res;
}

ExtendedNonNegReal luxemburg_norm(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp,
                                  const VectorField& u, const SearchConfig& cfg) {
  return luxemburg_norm_detailed(f, sp, u, cfg).value;
}

NormResult orlicz_norm(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                       const SearchConfig& cfg) {
  check_pair(f, sp, u);
  NormResult out;
  out.luxemburg = luxemburg_norm(f, sp, u, cfg);
  out.witness_v = VectorField{u.dim, std::vector<Vec>(u.size(), Vec(u.dim, 0.0))};
  if (out.luxemburg == 0.0) return out;
  if (out.luxemburg.is_infinite()) {
    out.orlicz_lower = out.orlicz_upper = kInf;
    return out;
  }
  const double lux = out.luxemburg.value();

  // Upper bracket: the Amemiya form, convex in mu, minimized over log mu.
  auto amemiya = [&](double t) {
    const double mu = std::exp(t);
    const double g = luxemburg_functional(f, sp, u, mu);
    return std::isfinite(g) ? mu * (1.0 + g) : kInf;
  };
  const double t_ref = std::log(lux);
  double a = t_ref + std::log(1e-15), b = t_ref + std::log(1024.0);
  const double gr = 0.5 * (3.0 - std::sqrt(5.0));
  double c = a + gr * (b - a), d = b - gr * (b - a);
  double fc = amemiya(c), fd = amemiya(d);
  double best_t = t_ref, best = amemiya(t_ref);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    bool go_left;
    if (std::isinf(fc) && std::isinf(fd)) go_left = d > t_ref;
    else go_left = fc <= fd;
    if (go_left) {
      b = d, d = c, fd = fc;
      c = a + gr * (b - a);
      fc = amemiya(c);
    } else {
      a = c, c = d, fc = fd;
      d = b - gr * (b - a);
      fd = amemiya(d);
    }
    if (fc < best) best = fc, best_t = c;
    if (fd < best) best = fd, best_t = d;
  }
  for (double t : {a, b}) {
    const double v = amemiya(t);
    if (v < best) best = v, best_t = t;
  }
  out.orlicz_upper = best;
  out.amemiya_mu = std::exp(best_t);

  // Lower bracket: v = y(u / mu) from a subgradient selection, made feasible.
  const double mu = out.amemiya_mu;
  std::vector<Vec> w(u.size()), v(u.size());
  parallel::for_each_index_serial(u.size(), [&](std::size_t i) {
    w[i] = scaled(u.values[i], 1.0 / mu);
    v[i] = f.has_gradient() ? f.gradient(w[i]) : sphere_average_subgradient(f, w[i], cfg).y;
  });
  auto conj_at = [&](std::size_t i, ConstVecView y) {
    const double num = f.has_conjugate() ? f.conjugate(y) : legendre_numeric(f, y, cfg);
    const double fenchel = dot(w[i], y) - f(w[i]);
    // Valid only when y is an exact subgradient at w_i; the closed form wins when present.
    return f.has_conjugate() ? num : std::max(num, fenchel);
  };
  auto constraint = [&](const std::vector<Vec>& vv, double shrink) {
    return parallel::weighted_sum(sp.weights(), [&](std::size_t i) {
      if (dot(u.values[i], vv[i]) <= 0.0) return 0.0;
      return conj_at(i, scaled(vv[i], shrink));
    });
  };
  double shrink = 1.0;
  double cst = constraint(v, 1.0);
  for (double delta : {1e-12, 1e-9, 1e-6, 1e-3}) {
    if (std::isfinite(cst)) break;
    shrink = 1.0 - delta;
    cst = constraint(v, shrink);
  }
  if (!std::isfinite(cst)) {
    shrink = 0.0;
    cst = 0.0;
  }
  if (cst > 1.0) {
    shrink /= cst;
    cst = constraint(v, shrink);
  }
  std::vector<double> terms(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double ip = dot(u.values[i], v[i]);
    out.witness_v.values[i] = ip > 0.0 ? scaled(v[i], shrink) : Vec(u.dim, 0.0);
    terms[i] = sp[i] * std::max(0.0, ip) * shrink;
  }
  out.witness_constraint = cst;
  out.orlicz_lower = parallel::pairwise_sum(terms);
  out.gap = out.orlicz_upper - out.orlicz_lower;
  return out;
}

HolderReport holder_check(const ConvexFunctionOracle& f, const ConvexFunctionOracle& conjugate,
                          const DiscreteProbabilitySpace& sp, const VectorField& u, const VectorField& v,
                          const SearchConfig& cfg) {
  check_pair(f, sp, u);
  check_pair(conjugate, sp, v);
  HolderReport rep;
  std::vector<double> terms(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) terms[i] = sp[i] * std::max(0.0, dot(u.values[i], v.values[i]));
  rep.lhs = parallel::pairwise_sum(terms);
  rep.norm_u = luxemburg_norm(f, sp, u, cfg).value();
  rep.norm_v_conjugate = luxemburg_norm(conjugate, sp, v, cfg).value();
  if (rep.norm_u == 0.0 || rep.norm_v_conjugate == 0.0) rep.rhs = 0.0;
  else rep.rhs = 2.0 * rep.norm_u * rep.norm_v_conjugate;
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.lhs <= rep.rhs + 1e-12 * (1.0 + rep.rhs);
  return rep;
}

HolderReport holder_check(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                          const VectorField& v, const SearchConfig& cfg) {
  return holder_check(f, conjugate_oracle(f, cfg), sp, u, v, cfg);
}

SandwichReport sandwich_check(const ConvexFunctionOracle& f, const DiscreteProbabilitySpace& sp, const VectorField& u,
                              const SearchConfig& cfg, double tol) {
  SandwichReport rep;
  rep.norms = orlicz_norm(f, sp, u, cfg);
  const double lux = rep.norms.luxemburg.value();
  if (rep.norms.luxemburg.is_infinite()) {
    rep.holds = std::isinf(rep.norms.orlicz_lower) && std::isinf(rep.norms.orlicz_upper);
    return rep;
  }
  rep.lower_slack = rep.norms.orlicz_lower - lux;
  rep.upper_slack = 2.0 * lux - rep.norms.orlicz_upper;
  rep.holds = rep.lower_slack >= -tol && rep.upper_slack >= -tol;
  rep.attainment_holds = true;
  if (lux > 0.0) {
    rep.attainment_residual = luxemburg_functional(f, sp, u, lux) - 1.0;
    rep.attainment_holds = std::abs(rep.attainment_residual) <= 1e-8;
  }
  return rep;
}

ConvexFunctionOracle perturb(const ConvexFunctionOracle& f, const ConvexFunctionOracle& f0, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("perturb: eps must be positive");
  if (f.dim() != f0.dim()) throw DimensionMismatch("perturb: oracle dimensions differ");
  // Superlinear growth probe: f0(Rx)/R must keep growing along rays.
  const std::size_t n = f.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec e(n, 0.0);
      e[i] = sign;
      const double start = f0(e);
      e[i] = sign * 1024.0;
      const double far = f0(e) / 1024.0;
      if (!(far > 4.0 * start)) throw std::invalid_argument("perturb: the perturbing function is not superlinear");
    }
  }
  ConvexFunctionOracle::Parts p;
  p.dim = n;
  p.name = f.name() + " + " + std::to_string(eps) + "*" + f0.name();
  p.eval = [f, f0, eps](ConstVecView x) { return f(x) + eps * f0(x); };
  if (f.has_gradient() && f0.has_gradient())
    p.gradient = [f, f0, eps](ConstVecView x) { return axpy(f.gradient(x), eps, f0.gradient(x)); };
  if (f.homogeneity_order() && f0.homogeneity_order() && *f.homogeneity_order() == *f0.homogeneity_order())
    p.homogeneity_order = f.homogeneity_order();
  p.finite_everywhere = f.finite_everywhere() && f0.finite_everywhere();
  if (f.radial() && f0.radial() && f.radial()->norm == f0.radial()->norm) {
    auto V = f.radial()->profile, V0 = f0.radial()->profile;
    p.radial = RadialStructure{[V, V0, eps](double r) { return V(r) + eps * V0(r); }, f.radial()->norm};
  }
  return ConvexFunctionOracle::create(std::move(p), ConvexFunctionOracle::Checks::none());
}

PerturbationReport perturbation_sweep(const ConvexFunctionOracle& f, const ConvexFunctionOracle& f0,
                                      const DiscreteProbabilitySpace& sp, const VectorField& u,
                                      std::vector<double> eps_grid, const SearchConfig& cfg) {
  PerturbationReport rep;
  std::sort(eps_grid.begin(), eps_grid.end(), std::greater<>());
  rep.eps_grid = eps_grid;
  const double tol = 1e-9;
  const auto base_conj = conjugate_oracle(f, cfg);
  rep.base_norm = luxemburg_norm(f, sp, u, cfg).value();
  rep.base_conjugate_norm = luxemburg_norm(base_conj, sp, u, cfg).value();

  Rng rng = make_rng(cfg.seed, 0x9e);
  std::vector<Vec> probes;
  for (int i = 0; i < 32; ++i) probes.push_back(random_in_ball(rng, Vec(f.dim(), 0.0), 5.0));

  std::vector<double> prev_val(probes.size()), prev_conj(probes.size());
  for (std::size_t j = 0; j < probes.size(); ++j) {
    prev_val[j] = kInf;
    prev_conj[j] = -kInf;
  }
  double prev_norm = kInf, prev_conj_norm = -kInf;
  for (double eps : eps_grid) {
    const auto fe = perturb(f, f0, eps);
    const auto fe_conj = conjugate_oracle(fe, cfg);
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const double v = fe(probes[j]);
      const double base = f(probes[j]);
      if (v < base - tol * (1.0 + base) || v > prev_val[j] + tol * (1.0 + v)) ++rep.value_violations;
      prev_val[j] = v;
      const double c = fe_conj(probes[j]);
      const double cb = base_conj(probes[j]);
      if (c > cb + tol * (1.0 + std::abs(c)) || c < prev_conj[j] - tol * (1.0 + std::abs(c))) ++rep.conjugate_value_violations;
      prev_conj[j] = c;
    }
    const double nrm = luxemburg_norm(fe, sp, u, cfg).value();
    const double cn = luxemburg_norm(fe_conj, sp, u, cfg).value();
    if (nrm < rep.base_norm * (1.0 - tol) || nrm > prev_norm * (1.0 + tol)) ++rep.norm_violations;
    if (cn > rep.base_conjugate_norm * (1.0 + tol) || cn < prev_conj_norm * (1.0 - tol)) ++rep.conjugate_norm_violations;
    prev_norm = nrm;
    prev_conj_norm = cn;
    rep.norms.push_back(nrm);
    rep.conjugate_norms.push_back(cn);
  }
  if (!rep.norms.empty()) {
    rep.terminal_gap = std::abs(rep.norms.back() - rep.base_norm);
    rep.terminal_conjugate_gap = std::abs(rep.conjugate_norms.back() - rep.base_conjugate_norm);
  }
  return rep;
}

MixtureReport mixture_concavity_check(const ConvexFunctionOracle& f, const VectorField& u,
                                      const std::vector<DiscreteProbabilitySpace>& spaces,
                                      const std::vector<double>& t, const SearchConfig& cfg, double tol) {
  if (spaces.empty() || spaces.size() != t.size()) throw std::invalid_argument("mixture: need one weight per space");
  double tsum = 0.0;
  for (double ti : t) {
    if (!(ti >= 0.0)) throw std::invalid_argument("mixture: weights must be non-negative");
    tsum += ti;
  }
  if (std::abs(tsum - 1.0) > 1e-12) throw std::invalid_argument("mixture: weights must sum to 1");
  for (const auto& sp : spaces)
    if (sp.size() != u.size()) throw AtomMismatch("mixture: spaces must share the atoms of the vector field");

  MixtureReport rep;
  std::vector<double> mix(u.size(), 0.0);
  for (std::size_t k = 0; k < spaces.size(); ++k)
    for (std::size_t i = 0; i < u.size(); ++i) mix[i] += t[k] * spaces[k][i];
  // Drop rounding so the mixture is again a probability vector.
  const double total = parallel::pairwise_sum(mix);
  for (double& m : mix) m /= total;

  double weighted = 0.0, smallest = kInf;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    rep.component_norms.push_back(luxemburg_norm(f, spaces[k], u, cfg).value());
    weighted += t[k] * rep.component_norms.back();
    smallest = std::min(smallest, rep.component_norms.back());
  }
  rep.mixture_norm = luxemburg_norm(f, DiscreteProbabilitySpace(mix), u, cfg).value();
  if (f.homogeneity_order()) {
    rep.p_minus = rep.p_plus = *f.homogeneity_order();
    rep.factor = 1.0;
  } else {
    std::tie(rep.p_minus, rep.p_plus) = growth_exponents(f, cfg);
    // Convexity with L(0) = 0 forces p_minus >= 1; estimates may land a rounding error below.
    const double p0 = std::max(1.0, rep.p_minus);
    rep.factor = gamma(std::max(rep.p_plus, p0), p0);
  }
  rep.quasi_concavity_slack = rep.mixture_norm - smallest;
  rep.concavity_slack = rep.mixture_norm - rep.factor * weighted;
  rep.holds = rep.quasi_concavity_slack >= -tol && rep.concavity_slack >= -tol;
  return rep;
}

ConvolutionReport convolution_check(const ConvexFunctionOracle& f, const GridField& u, const GridMeasure& lam,
                                    const GridMeasure& kap, const SearchConfig& cfg, double tol) {
  auto shifted = [](const GridIndex& a, const GridIndex& b) {
    if (a.size() != b.size()) throw DimensionMismatch("convolution: grid indices have different dimensions");
    GridIndex s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
    return s;
  };
  auto value_at = [&](const GridIndex& idx) -> const Vec& {
    auto it = u.find(idx);
    if (it == u.end()) throw SupportNotCovered("convolution: the field has no value at a required grid point");
    return it->second;
  };

  GridMeasure conv;
  for (const auto& [x, wx] : lam)
    for (const auto& [y, wy] : kap) conv[shifted(x, y)] += wx * wy;

  auto norm_over = [&](const GridMeasure& m, const GridIndex* shift) {
    std::vector<double> w;
    VectorField field{f.dim(), {}};
    for (const auto& [x, wx] : m) {
      w.push_back(wx);
      field.values.push_back(value_at(shift ? shifted(x, *shift) : x));
    }
    const double total = parallel::pairwise_sum(w);
    for (double& v : w) v /= total;
    return luxemburg_norm(f, DiscreteProbabilitySpace(std::move(w)), field, cfg).value();
  };

  ConvolutionReport rep;
  rep.convolution_atoms = conv.size();
  rep.lhs = norm_over(conv, nullptr);
  for (const auto& [y, wy] : kap) rep.rhs += wy * norm_over(lam, &y);
  rep.slack = rep.lhs - rep.rhs;
  rep.holds = rep.slack >= -tol;
  return rep;
}

}  // namespace orlicz_lab
