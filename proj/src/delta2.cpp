#include "orlicz_lab/delta2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "orlicz_lab/convex_core.hpp"
#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/parallel.hpp"
#include "orlicz_lab/sphere.hpp"

namespace orlicz_lab {

std::string to_string(YoungKind k) {
  switch (k) {
    case YoungKind::R: return "R";
    case YoungKind::Phi: return "Phi";
    case YoungKind::Psi: return "Psi";
  }
  return "?";
}

YoungKind parse_young_kind(const std::string& s) {
  if (s == "R") return YoungKind::R;
  if (s == "Phi") return YoungKind::Phi;
  if (s == "Psi") return YoungKind::Psi;
  throw std::invalid_argument("unknown Young function kind '" + s + "'");
}

namespace {

constexpr double kTiny = 1e-280;
constexpr double kHuge = 1e300;

bool usable(double v) { return std::isfinite(v) && v > kTiny && v < kHuge; }

// Maximizes a score along a ray, over log10 of the radius. The score returns
// nullopt where it cannot be evaluated reliably (underflow or overflow).
struct RayMax {
  double score = -kInf;
  double radius = 0.0;
};

using Score = std::function<std::optional<double>(double)>;

RayMax ray_search(const Score& score, double lo, double hi, bool extend_up, bool extend_down, const SearchConfig& cfg) {
  std::map<double, double> seen;  // log10 radius -> score
  auto eval = [&](double t) -> std::optional<double> {
    if (auto it = seen.find(t); it != seen.end()) return it->second;
    auto v = score(std::pow(10.0, t));
    if (v && !std::isnan(*v)) seen[t] = *v;
    return v && !std::isnan(*v) ? v : std::nullopt;
  };
  auto best_t = [&] {
    double bt = 0.0, bv = -kInf;
    for (const auto& [t, v] : seen)
      if (v > bv) bt = t, bv = v;
    return std::pair{bt, bv};
  };

  const double a = std::log10(lo), b = std::log10(hi);
  const int k = std::max(2, cfg.young_radial_points);
  for (int i = 0; i < k; ++i) eval(a + (b - a) * i / (k - 1));
  if (seen.empty()) return {};

  auto at_edge = [&](bool upper) {
    const auto [bt, bv] = best_t();
    const double edge_t = upper ? seen.rbegin()->first : seen.begin()->first;
    const double edge_v = upper ? seen.rbegin()->second : seen.begin()->second;
    return edge_v >= bv - 1e-15 * std::abs(bv) || bt == edge_t;
  };
  auto extend = [&](bool upper) {
    double t = upper ? seen.rbegin()->first : seen.begin()->first;
    for (int it = 0; it < 12 && at_edge(upper); ++it) {
      const double step = std::max(3.0, std::abs(t));
      double next = upper ? t + step : t - step;
      next = std::clamp(next, -300.0, 300.0);
      if (next == t) break;
      if (eval(next)) {
        t = next;
        continue;
      }
      // Largest usable exponent between t and next.
      double good = t, bad = next;
      for (int j = 0; j < 40; ++j) {
        const double mid = 0.5 * (good + bad);
        (eval(mid) ? good : bad) = mid;
      }
      break;
    }
  };
  if (extend_up) extend(true);
  if (extend_down) extend(false);

  // Local refinement around the best cell.
  auto neighbors = [&] {
    const auto [bt, bv] = best_t();
    auto it = seen.find(bt);
    const double left = it == seen.begin() ? bt : std::prev(it)->first;
    const double right = std::next(it) == seen.end() ? bt : std::next(it)->first;
    return std::pair{left, right};
  };
  for (int round = 0; round < cfg.young_refine_rounds; ++round) {
    const auto [l, r] = neighbors();
    if (r - l <= 1e-14) break;
    for (int i = 1; i < 10; ++i) eval(l + (r - l) * i / 10.0);
  }
  {
    auto [l, r] = neighbors();
    const double g = 0.5 * (3.0 - std::sqrt(5.0));
    for (int it = 0; it < 80 && r - l > 1e-13; ++it) {
      const double c = l + g * (r - l), d = r - g * (r - l);
      const auto fc = eval(c), fd = eval(d);
      if (!fc || !fd) break;
      if (*fc >= *fd) r = d;
      else l = c;
    }
  }
  const auto [bt, bv] = best_t();
  return {bv, std::pow(10.0, bt)};
}

// Unit directions for the search: one direction for radial functions (the
// ratio depends on the norm of x only), a covering set otherwise.
std::vector<Vec> young_directions(const ConvexFunctionOracle& f, const SearchConfig& cfg) {
  const std::size_t n = f.dim();
  if (f.radial()) {
    Vec e(n, 0.0);
    e[0] = 1.0;
    return {e};
  }
  return search_directions(n, static_cast<std::size_t>(cfg.young_directions_per_dim) * n, cfg.seed);
}

struct RatioSearch {
  double value;
  Vec witness;
};

// lo_factor > 0 restricts the search to |x| >= lo_factor.
RatioSearch best_over_directions(const std::vector<Vec>& dirs, const std::function<Score(const Vec&)>& make_score,
                                 double lo_factor, bool down, const SearchConfig& cfg) {
  std::vector<RayMax> results(dirs.size());
  parallel::for_each_index(dirs.size(), [&](std::size_t j) {
    const double lo = lo_factor > 0 ? lo_factor / euclidean_norm(dirs[j]) : cfg.young_radius_lo;
    results[j] = ray_search(make_score(dirs[j]), lo, std::max(cfg.young_radius_hi, 2.0 * lo), true, down, cfg);
  });
  RatioSearch best{-kInf, {}};
  for (std::size_t j = 0; j < dirs.size(); ++j)
    if (results[j].score > best.value) best = {results[j].score, scaled(dirs[j], results[j].radius)};
  return best;
}

}  // namespace

std::pair<double, Vec> young_value(const ConvexFunctionOracle& f, YoungKind kind, double r, const SearchConfig& cfg) {
  if (!(r >= 0.0)) throw std::invalid_argument("young_value: r must be non-negative");
  const std::size_t n = f.dim();
  Vec unit(n, 0.0);
  unit[0] = 1.0;
  if (r == 0.0) return {0.0, unit};
  if (r == 1.0) return {1.0, unit};
  if (const auto& p = f.homogeneity_order()) return {std::pow(r, *p), unit};

  const double sign = kind == YoungKind::Psi ? -1.0 : 1.0;
  bool divergent = false;
  auto make_score = [&](const Vec& u) -> Score {
    return [&f, &divergent, u, r, sign, kind](double s) -> std::optional<double> {
      const Vec x = scaled(u, s);
      const double lx = f(x);
      if (!usable(lx)) return std::nullopt;
      const double lrx = f(scaled(x, r));
      if (std::isinf(lrx) && kind != YoungKind::Psi && s <= 1e3) divergent = true;
      if (!usable(lrx)) return std::nullopt;
      return sign * (lrx / lx);
    };
  };
  const auto dirs = young_directions(f, cfg);
  const bool outside = kind == YoungKind::R;
  auto res = best_over_directions(dirs, make_score, outside ? 1.0 : 0.0, !outside, cfg);
  if (divergent) return {kInf, res.witness};
  if (!std::isfinite(res.value)) return {kind == YoungKind::Psi ? 0.0 : kInf, res.witness};
  return {sign * res.value, res.witness};
}

std::pair<double, double> growth_exponents(const ConvexFunctionOracle& f, const SearchConfig& cfg) {
  if (const auto& p = f.homogeneity_order()) return {*p, *p};
  std::vector<double> hs = cfg.growth_offsets;
  std::sort(hs.begin(), hs.end(), std::greater<>());
  if (hs.empty()) throw std::invalid_argument("growth_exponents: no offsets configured");
  std::vector<double> up, down;
  for (double h : hs) {
    up.push_back(std::log(young_value(f, YoungKind::Phi, 1.0 + h, cfg).first) / std::log1p(h));
    down.push_back(std::log(young_value(f, YoungKind::Phi, 1.0 - h, cfg).first) / std::log1p(-h));
  }
  // Richardson on successive offsets, assumed to shrink by a constant ratio.
  const double ratio = hs.size() > 1 ? hs[0] / hs[1] : 2.0;
  auto extrapolate = [&](std::vector<double> row) {
    for (int level = 1; row.size() > 1 && level <= 3; ++level) {
      std::vector<double> next;
      const double factor = std::pow(ratio, level) - 1.0;
      for (std::size_t i = 1; i < row.size(); ++i) next.push_back(row[i] + (row[i] - row[i - 1]) / factor);
      row = std::move(next);
    }
    return row.back();
  };
  return {extrapolate(down), extrapolate(up)};
}

YoungFunctionEstimate young_estimate(const ConvexFunctionOracle& f, YoungKind kind, const std::vector<double>& r_grid,
                                     const SearchConfig& cfg) {
  YoungFunctionEstimate est;
  est.kind = kind;
  est.r_grid = r_grid;
  const bool exact = f.homogeneity_order().has_value();
  est.bound_side = exact ? "exact" : kind == YoungKind::Psi ? "upper_bound_of_inf" : "lower_bound_of_sup";
  est.values.resize(r_grid.size());
  est.witnesses.resize(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    auto [v, w] = young_value(f, kind, r_grid[i], cfg);
    est.values[i] = v;
    est.witnesses[i] = std::move(w);
  }
  std::tie(est.p_minus, est.p_plus) = growth_exponents(f, cfg);
  return est;
}

PropertyReport young_properties_check(const YoungFunctionEstimate& est, double band) {
  PropertyReport rep;
  const auto& r = est.r_grid;
  const auto& v = est.values;
  const bool psi = est.kind == YoungKind::Psi;
  const bool exact = est.bound_side == "exact";
  constexpr double tight = 1e-9;

  auto record = [&](std::string name, double rr, double ss, double lhs, double rhs, bool want_le) {
    PropertyCheck c{std::move(name), rr, ss, lhs, rhs, "pass"};
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    const double excess = want_le ? lhs - rhs : rhs - lhs;
    if (excess > tight * (1.0 + scale)) {
      c.status = !exact && excess <= band * scale ? "shortfall" : "violation";
      (c.status == "violation" ? rep.violations : rep.shortfalls)++;
    }
    rep.checks.push_back(std::move(c));
  };

  std::vector<std::size_t> order(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });
  for (std::size_t k = 1; k < order.size(); ++k)
    record("monotone", r[order[k - 1]], r[order[k]], v[order[k - 1]], v[order[k]], true);

  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i; j < r.size(); ++j) {
      const double prod = r[i] * r[j];
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (std::abs(r[k] - prod) > 1e-12 * std::max(1.0, prod)) continue;
        ++rep.multiplicative_pairs;
        if (psi) record("super_multiplicative", r[i], r[j], v[k], v[i] * v[j], false);
        else record("sub_multiplicative", r[i], r[j], v[k], v[i] * v[j], true);
        break;
      }
    }
  }
  if (rep.multiplicative_pairs == 0) throw GridNotClosed("no grid pair (r, s) has its product rs on the grid");

  for (std::size_t i = 0; i < r.size(); ++i) {
    const double ri = r[i];
    if (ri <= 0.0) continue;
    if (!psi) {
      const double p = ri <= 1.0 ? est.p_minus : est.p_plus;
      record(ri <= 1.0 ? "power_envelope_p_minus" : "power_envelope_p_plus", ri, p, v[i], std::pow(ri, p), true);
    } else {
      const double p = ri <= 1.0 ? est.p_plus : est.p_minus;
      record(ri <= 1.0 ? "power_envelope_p_plus" : "power_envelope_p_minus", ri, p, v[i], std::pow(ri, p), false);
    }
  }
  return rep;
}

Delta2Report delta2_diagnostic(const ConvexFunctionOracle& f, Delta2Domain domain, const SearchConfig& cfg) {
  Delta2Report rep;
  rep.domain = domain;
  const bool outside = domain == Delta2Domain::outside_unit_ball;
  auto make_score = [&](const Vec& u) -> Score {
    return [&f, &cfg, u](double s) -> std::optional<double> {
      const Vec x = scaled(u, s);
      const double lx = f(x);
      if (!usable(lx) || !usable(f(scaled(x, 1.0 + cfg.dd_eps0)))) return std::nullopt;
      const auto d = directional_derivative_estimate(f, x, x, cfg);
      return d.value / lx;
    };
  };
  const auto dirs = young_directions(f, cfg);
  const auto best = best_over_directions(dirs, make_score, outside ? 1.0 : 0.0, !outside, cfg);
  rep.sup_ratio_estimate = best.value;
  rep.witness = best.witness;
  std::tie(rep.p_minus, rep.p_plus) = growth_exponents(f, cfg);
  rep.consistent_with_p_plus = rep.sup_ratio_estimate <= rep.p_plus * 1.02 + 1e-9;

  rep.doubling_holds = std::isfinite(rep.sup_ratio_estimate);
  if (rep.doubling_holds) {
    const double bound = std::pow(2.0, rep.sup_ratio_estimate);
    const double lo = outside ? 1.0 : cfg.young_radius_lo;
    const int k = std::max(2, cfg.young_radial_points);
    for (const Vec& u : dirs) {
      for (int i = 0; i < k && rep.doubling_holds; ++i) {
        const double s = lo * std::pow(cfg.young_radius_hi / lo, static_cast<double>(i) / (k - 1)) / euclidean_norm(u);
        const Vec x = scaled(u, s);
        const double lx = f(x), l2x = f(scaled(x, 2.0));
        if (!usable(lx)) continue;
        if (!(l2x <= bound * lx * (1.0 + 1e-6))) {
          rep.doubling_holds = false;
          rep.witness = x;
        }
      }
    }
  }
  rep.verdict = rep.doubling_holds ? "delta2_evidence" : "violation_witness";
  return rep;
}

std::pair<double, double> dual_exponent_bounds(double p_minus, double p_plus) {
  if (!(p_minus > 1.0)) throw PMinusNotGreaterThanOne("p_minus must exceed 1 for the conjugate to satisfy a two-sided growth bound");
  if (!(p_plus >= p_minus)) throw std::invalid_argument("dual_exponent_bounds: p_plus must be >= p_minus");
  return {p_minus / (p_minus - 1.0), p_plus / (p_plus - 1.0)};
}

namespace {

// sup_{0 <= r <= 1} (b r - r^p)
double left_conjugate(double b, double p) {
  if (b <= 0.0) return 0.0;
  if (p == 1.0) return std::max(0.0, b - 1.0);
  if (b >= p) return b - 1.0;
  const double r = std::pow(b / p, 1.0 / (p - 1.0));
  return b * r - std::pow(r, p);
}

// sup_{r >= 1} (b r - r^p)
double right_conjugate(double b, double p) {
  if (p == 1.0) return b > 1.0 ? kInf : b - 1.0;
  if (b <= p) return b - 1.0;
  const double r = std::pow(b / p, 1.0 / (p - 1.0));
  return b * r - std::pow(r, p);
}

double golden_max(const std::function<double(double)>& fn, double a, double b, int iters = 200) {
  const double g = 0.5 * (3.0 - std::sqrt(5.0));
  double c = a + g * (b - a), d = b - g * (b - a);
  double fc = fn(c), fd = fn(d);
  double best = std::max({fn(a), fn(b), fc, fd});
  for (int i = 0; i < iters && b - a > 1e-15 * (1.0 + std::abs(a)); ++i) {
    if (fc >= fd) {
      b = d, d = c, fd = fc;
      c = a + g * (b - a);
      fc = fn(c);
    } else {
      a = c, c = d, fc = fd;
      d = b - g * (b - a);
      fd = fn(d);
    }
    best = std::max({best, fc, fd});
  }
  return best;
}

void check_gamma_args(double p1, double p0) {
  if (!(p0 >= 1.0) || !(p1 >= p0) || !std::isfinite(p1)) throw std::invalid_argument("gamma: need p1 >= p0 >= 1");
}

}  // namespace

double gamma(double p1, double p0) {
  check_gamma_args(p1, p0);
  if (p1 == p0) return 1.0;
  // a + b is maximal for a = -m*(b), m = min(r^p1, r^p0); b - m*(b) is concave.
  auto objective = [&](double b) { return b - std::max(left_conjugate(b, p1), right_conjugate(b, p0)); };
  const double upper = p0 == 1.0 ? 1.0 : p1;
  return golden_max(objective, 0.0, upper);
}

double gamma_grid_lp(double p1, double p0, std::size_t points, double r_max, int tail_points) {
  check_gamma_args(p1, p0);
  std::vector<double> r(points);
  for (std::size_t j = 0; j < points; ++j) r[j] = r_max * static_cast<double>(j) / static_cast<double>(points - 1);
  for (int k = 1; k <= tail_points; ++k) r.push_back(std::ldexp(r_max, k));
  std::vector<double> m(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) m[j] = std::min(std::pow(r[j], p1), std::pow(r[j], p0));
  // For a fixed slope b the best intercept is min_j (m_j - b r_j).
  auto objective = [&](double b) {
    double a = kInf;
    for (std::size_t j = 0; j < r.size(); ++j) a = std::min(a, m[j] - b * r[j]);
    return a + b;
  };
  return golden_max(objective, -1.0, p1 + 1.0);
}

GammaCrossCheck gamma_cross_check(double p1, double p0, const SearchConfig& cfg) {
  GammaCrossCheck out;
  out.value = gamma(p1, p0);
  const std::size_t points = 10001;
  const double h = 0.01;
  out.lp_value = gamma_grid_lp(p1, p0, points, h * static_cast<double>(points - 1));
  out.tail_lp_value = gamma_grid_lp(p1, p0, points, h * static_cast<double>(points - 1), 60);
  if (p1 != p0) {
    // The grid misses the tangency points by at most h/2; the loss is bounded by
    // h^2/8 times the curvature of min(r^p1, r^p0) near them.
    auto curvature = [&](double rr) {
      if (rr <= 0.0) return 0.0;
      const double p = rr <= 1.0 ? p1 : p0;
      return p * (p - 1.0) * std::pow(rr, p - 2.0);
    };
    double b = 0.0, best = -kInf;
    for (int i = 0; i <= 2000; ++i) {
      const double bb = (p0 == 1.0 ? 1.0 : p1) * i / 2000.0;
      const double val = bb - std::max(left_conjugate(bb, p1), right_conjugate(bb, p0));
      if (val > best) best = val, b = bb;
    }
    double k = 0.0;
    for (double p : {p1, p0}) {
      if (p == 1.0) continue;
      const double rr = std::pow(b / p, 1.0 / (p - 1.0));
      for (double off : {-h, 0.0, h}) k = std::max(k, curvature(std::max(h, rr + off)));
    }
    out.grid_bound = h * h / 8.0 * k * 2.0;
  }
  auto within = [&](double lp) {
    const double diff = lp - out.value;
    return diff >= -cfg.gamma_xval_tol && diff <= cfg.gamma_xval_tol + out.grid_bound;
  };
  out.agrees = within(out.lp_value);
  out.tail_agrees = within(out.tail_lp_value);
  return out;
}

}  // namespace orlicz_lab
