#include "orlicz_lab/convex_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/random.hpp"
#include "orlicz_lab/sphere.hpp"

namespace orlicz_lab {

std::vector<std::pair<double, double>> difference_quotients(const ConvexFunctionOracle& f, ConstVecView x,
                                                            ConstVecView theta, const SearchConfig& cfg) {
  const double fx = f(x);
  if (!std::isfinite(fx)) throw NonFiniteNearPoint("L(x) is not finite");
  std::vector<std::pair<double, double>> out;
  for (double eps = cfg.dd_eps0; eps >= cfg.dd_eps_floor; eps *= 0.5) {
    const double q = (f(axpy(x, eps, theta)) - fx) / eps;
    out.emplace_back(eps, q);
  }
  return out;
}

DirectionalDerivative directional_derivative_estimate(const ConvexFunctionOracle& f, ConstVecView x,
                                                      ConstVecView theta, const SearchConfig& cfg) {
  DirectionalDerivative out;
  const double fx = f(x);
  ++out.evaluations;
  if (!std::isfinite(fx)) throw NonFiniteNearPoint("L(x) is not finite");
  if (is_zero(theta)) {
    out.converged = true;
    return out;
  }

  const int levels = std::max(0, cfg.dd_richardson_levels);
  std::vector<double> prev_row, row;
  double min_quotient = kInf;
  double previous = kInf;
  bool have_previous = false;
  bool any_finite = false;
  std::vector<double> raw;
  Vec probe(x.size());

  for (double eps = cfg.dd_eps0; eps >= cfg.dd_eps_floor; eps *= 0.5) {
    for (std::size_t i = 0; i < x.size(); ++i) probe[i] = x[i] + eps * theta[i];
    const double q = (f(probe) - fx) / eps;
    ++out.evaluations;
    out.smallest_eps = eps;
    if (!std::isfinite(q)) {
      // Infinite quotients at large eps are uninformative; restart the tableau.
      prev_row.clear();
      raw.clear();
      have_previous = false;
      continue;
    }
    any_finite = true;
    min_quotient = std::min(min_quotient, q);
    raw.push_back(q);

    row.assign(1, q);
    for (int j = 1; j <= levels && j <= static_cast<int>(prev_row.size()); ++j) {
      const double factor = std::ldexp(1.0, j) - 1.0;
      row.push_back(row[j - 1] + (row[j - 1] - prev_row[j - 1]) / factor);
    }
    const double estimate = std::min(row.back(), min_quotient);
    out.value = estimate;
    if (have_previous && std::abs(estimate - previous) < cfg.dd_tol * std::max(1.0, std::abs(estimate))) {
      out.converged = true;
      return out;
    }
    previous = estimate;
    have_previous = true;
    prev_row = row;
  }
  if (!any_finite) throw NonFiniteNearPoint("L is infinite at every scheduled step");
  // Errors of the form c * eps^alpha with non-integer alpha defeat the tableau;
  // the geometric ratio of successive differences recovers alpha.
  auto aitken = [&](std::size_t k) {
    const double d1 = raw[k - 1] - raw[k], d0 = raw[k - 2] - raw[k - 1];
    if (!(d1 > 0.0) || !(d0 > d1)) return kNaN;
    return raw[k] - d1 / (d0 / d1 - 1.0);
  };
  if (raw.size() >= 4) {
    const double a = aitken(raw.size() - 1), b = aitken(raw.size() - 2);
    if (std::isfinite(a) && std::isfinite(b) && std::abs(a - b) < cfg.dd_tol * std::max(1.0, std::abs(a))) {
      out.value = std::min(a, min_quotient);
      out.converged = true;
    }
  }
  return out;
}

double directional_derivative(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView theta,
                              const SearchConfig& cfg) {
  const auto d = directional_derivative_estimate(f, x, theta, cfg);
  if (!d.converged) throw PrecisionLoss("difference quotients did not stabilize before the eps floor");
  return d.value;
}

LineMaximum maximize_concave_line(const std::function<double(double)>& phi, double lower, double start,
                                  double scale, double divergence, double rel_tol) {
  LineMaximum best;
  auto eval = [&](double t) {
    const double v = phi(t);
    if (v > best.value) {
      best.value = v;
      best.arg = t;
    }
    return v;
  };
  auto diverged = [&] { return best.value > divergence; };

  double m = std::max(start, lower);
  double fm = eval(m);
  if (diverged()) return best.unbounded = true, best;
  double step = scale > 0 ? scale : 1.0;
  double a, b;

  const double fr = eval(m + step);
  if (fr > fm) {
    // expand to the right
    a = m;
    m += step;
    fm = fr;
    for (int it = 0;; ++it) {
      if (diverged()) return best.unbounded = true, best;
      step *= 2.0;
      const double fb = eval(m + step);
      if (!(fb > fm) || it > 1100) {
        b = m + step;
        break;
      }
      a = m;
      m += step;
      fm = fb;
    }
  } else {
    const bool can_go_left = m - step >= lower || (m > lower);
    double left = std::max(lower, m - step);
    const double fl = can_go_left ? eval(left) : -kInf;
    if (can_go_left && fl > fm) {
      b = m;
      m = left;
      fm = fl;
      for (int it = 0;; ++it) {
        if (diverged()) return best.unbounded = true, best;
        if (m == lower) {
          a = lower;
          break;
        }
        step *= 2.0;
        const double t = std::max(lower, m - step);
        const double fa = eval(t);
        if (!(fa > fm) || it > 1100) {
          a = t;
          break;
        }
        b = m;
        m = t;
        fm = fa;
      }
    } else {
      a = can_go_left ? left : m;
      b = m + step;
    }
  }

  // Golden-section search on [a, b]; the best point seen is kept throughout.
  const double g = 0.5 * (3.0 - std::sqrt(5.0));
  double c = a + g * (b - a), d = b - g * (b - a);
  double fc = eval(c), fd = eval(d);
  for (int it = 0; it < 400; ++it) {
    if (b - a <= rel_tol * (1.0 + std::abs(a) + std::abs(b))) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = a + g * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = b - g * (b - a);
      fd = eval(d);
    }
  }
  best.unbounded = diverged();
  return best;
}

namespace {

// sup_{r >= 0} r*s - V(r): the conjugate of a radial profile.
LineMaximum radial_conjugate(const std::function<double(double)>& V, double s, const SearchConfig& cfg) {
  auto phi = [&](double r) { return r * s - V(r); };
  return maximize_concave_line(phi, 0.0, 0.0, 1.0, cfg.legendre_divergence, cfg.legendre_line_tol);
}

struct NumericConjugate {
  double value;
  Vec witness;
};

NumericConjugate numeric_conjugate(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg) {
  const std::size_t n = f.dim();
  if (x.size() != n) throw DimensionMismatch("legendre: point has wrong dimension");
  const double div = cfg.legendre_divergence;

  if (n == 1) {
    auto phi = [&](double t) { return x[0] * t - f(std::span<const double>(&t, 1)); };
    auto res = maximize_concave_line(phi, -kInf, 0.0, 1.0, div, cfg.legendre_line_tol);
    if (res.unbounded) return {kInf, {res.arg}};
    return {std::max(0.0, res.value), {res.arg}};
  }

  if (const auto& rad = f.radial()) {
    const double s = rad->norm.dual()(x);
    auto res = radial_conjugate(rad->profile, s, cfg);
    if (res.unbounded) return {kInf, {}};
    Vec w = rad->norm.dual().gradient(x);  // a unit vector for the primal norm, aligned with x
    return {std::max(0.0, res.value), scaled(w, res.arg)};
  }

  auto phi = [&](ConstVecView y) { return dot(x, y) - f(y); };

  // Coercivity probe: grow R until the objective stops increasing along all axis rays.
  double R = 1.0;
  for (int it = 0; it < 60; ++it) {
    bool all_flat = true;
    for (std::size_t i = 0; i < n && all_flat; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec e(n, 0.0);
        e[i] = sign * R;
        const double near = phi(e);
        e[i] *= 2.0;
        const double far = phi(e);
        if (near > div || far > div) return {kInf, e};
        if (far > near) {
          all_flat = false;
          break;
        }
      }
    }
    if (all_flat) break;
    R *= 2.0;
  }

  Rng rng = make_rng(cfg.seed, 0x1e9e);
  NumericConjugate best{0.0, Vec(n, 0.0)};
  std::vector<Vec> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    dirs.push_back(e);
  }
  if (!is_zero(x)) dirs.push_back(scaled(x, 1.0 / euclidean_norm(x)));

  for (int s = 0; s < std::max(1, cfg.legendre_starts); ++s) {
    Vec y = s == 0 ? Vec(n, 0.0) : random_in_ball(rng, Vec(n, 0.0), R);
    double fy = phi(y);
    for (int sweep = 0; sweep < cfg.legendre_max_sweeps; ++sweep) {
      const Vec start = y;
      const double f_start = fy;
      std::vector<Vec> sweep_dirs = dirs;
      sweep_dirs.push_back(random_unit(rng, n));
      sweep_dirs.push_back(random_unit(rng, n));
      for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& d : sweep_dirs) {
          auto line = [&](double t) { return phi(axpy(y, t, d)); };
          const double scale = 0.1 * (1.0 + euclidean_norm(y));
          const auto res = maximize_concave_line(line, -kInf, 0.0, scale, div, cfg.legendre_line_tol);
          if (res.unbounded) return {kInf, axpy(y, res.arg, d)};
          if (res.value > fy) {
            y = axpy(y, res.arg, d);
            fy = res.value;
          }
        }
        if (pass == 0) {
          Vec move = axpy(y, -1.0, start);
          const double len = euclidean_norm(move);
          if (len == 0.0) break;
          sweep_dirs.assign(1, scaled(move, 1.0 / len));
        }
      }
      if (fy - f_start <= 1e-15 * (1.0 + std::abs(fy))) break;
    }
    if (fy > best.value) best = {fy, y};
  }

  if (n == 2) {
    // Seen from a feasible base point, each superlevel set above the base value
    // subtends an arc, so the best value along the ray at angle a is unimodal in a.
    const Vec origin(2, 0.0);
    const Vec base = std::isfinite(phi(origin)) ? origin : best.witness;
    const double scale = 0.1 * (1.0 + euclidean_norm(best.witness));
    bool unbounded = false;
    auto ray = [&](double angle) {
      const Vec d = {std::cos(angle), std::sin(angle)};
      auto line = [&](double r) { return phi(axpy(base, r, d)); };
      const auto res = maximize_concave_line(line, 0.0, 0.0, scale, div, cfg.legendre_line_tol);
      if (res.unbounded) unbounded = true;
      return res;
    };
    const int count = 64;
    const double step = 2.0 * std::numbers::pi / count;
    int top = 0;
    double top_value = -kInf;
    for (int k = 0; k < count; ++k) {
      const double v = ray(step * k).value;
      if (v > top_value) top_value = v, top = k;
    }
    if (unbounded) return {kInf, base};
    auto value_at = [&](double angle) { return ray(angle).value; };
    const auto refined = maximize_concave_line(value_at, step * (top - 1), step * top, step, div, 1e-13);
    if (unbounded) return {kInf, base};
    if (refined.value > best.value) {
      const auto r = ray(refined.arg);
      best = {refined.value, axpy(base, r.arg, Vec{std::cos(refined.arg), std::sin(refined.arg)})};
    }
  }
  return best;
}

}  // namespace

double legendre_numeric(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg, Vec* witness) {
  auto r = numeric_conjugate(f, x, cfg);
  if (witness) *witness = std::move(r.witness);
  return r.value;
}

ConjugateEstimate legendre(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg,
                           LegendreMode mode) {
  ConjugateEstimate out;
  auto num = numeric_conjugate(f, x, cfg);
  out.numeric = num.value;
  out.witness = std::move(num.witness);
  if (mode == LegendreMode::automatic && f.has_conjugate()) {
    const double a = f.conjugate(x);
    out.analytic = a;
    out.value = ExtendedNonNegReal(a);
    out.bound_side = "exact_analytic";
    if (std::isfinite(a) && std::isfinite(num.value)) out.gap = a - num.value;
    else if (std::isinf(a) && std::isinf(num.value)) out.gap = 0.0;
    else out.gap = kInf;
  } else {
    out.value = ExtendedNonNegReal(num.value);
    out.bound_side = "lower_bound";
  }
  return out;
}

double fenchel_gap(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView y, const SearchConfig& cfg) {
  const double fx = f(x);
  if (!std::isfinite(fx)) throw NonFiniteNearPoint("fenchel_gap: L(x) is not finite");
  const double conj = f.has_conjugate() ? f.conjugate(y) : legendre_numeric(f, y, cfg);
  if (std::isinf(conj)) return kInf;
  return fx + conj - dot(x, y);
}

double local_oscillation(const ConvexFunctionOracle& f, ConstVecView x, double r, const SearchConfig& cfg) {
  const std::size_t n = f.dim();
  const double fx = f(x);
  if (!std::isfinite(fx)) throw NonFiniteNearPoint("local_oscillation: L(x) is not finite");
  auto gain = [&](ConstVecView theta) {
    const double v = f(axpy(x, r, theta));
    if (!std::isfinite(v)) throw NonFiniteNearPoint("local_oscillation: L is infinite on the sphere");
    return v - fx;
  };

  const auto dirs = search_directions(n, static_cast<std::size_t>(cfg.oscillation_directions_per_dim) * n, cfg.seed);
  Vec best_dir = dirs.front();
  double best = -kInf;
  for (const Vec& d : dirs) {
    const double g = gain(d);
    if (g > best) {
      best = g;
      best_dir = d;
    }
  }
  if (n == 1) return best;

  // Pattern search on the sphere around the best sample.
  for (double step = 0.1; step > 1e-10;) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec cand = best_dir;
        cand[i] += sign * step;
        const double len = euclidean_norm(cand);
        for (double& c : cand) c /= len;
        const double g = gain(cand);
        if (g > best) {
          best = g;
          best_dir = std::move(cand);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

ConvexFunctionOracle conjugate_oracle(const ConvexFunctionOracle& f, const SearchConfig& cfg) {
  ConvexFunctionOracle::Parts p;
  p.dim = f.dim();
  p.name = f.name() + "*";
  if (f.has_conjugate()) {
    p.eval = f.parts().conjugate;
  } else {
    p.eval = [f, cfg](ConstVecView y) { return legendre_numeric(f, y, cfg); };
  }
  p.conjugate = f.parts().eval;
  if (const auto& h = f.homogeneity_order(); h && *h > 1.0) p.homogeneity_order = *h / (*h - 1.0);
  p.finite_everywhere = false;
  if (const auto& rad = f.radial()) {
    auto V = rad->profile;
    auto cfg_copy = cfg;
    RadialStructure dual;
    dual.norm = rad->norm.dual();
    dual.profile = [V, cfg_copy](double s) {
      const auto r = radial_conjugate(V, s, cfg_copy);
      return r.unbounded ? kInf : std::max(0.0, r.value);
    };
    p.radial = std::move(dual);
  }
  return ConvexFunctionOracle::create(std::move(p), ConvexFunctionOracle::Checks::none());
}

}  // namespace orlicz_lab
