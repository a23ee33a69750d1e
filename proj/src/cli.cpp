#include "orlicz_lab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "orlicz_lab/convex_core.hpp"
#include "orlicz_lab/delta2.hpp"
#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/func_dsl.hpp"
#include "orlicz_lab/norm_spec.hpp"
#include "orlicz_lab/orlicz.hpp"
#include "orlicz_lab/parallel.hpp"
#include "orlicz_lab/registry.hpp"
#include "orlicz_lab/report.hpp"
#include "orlicz_lab/subgrad.hpp"

namespace orlicz_lab::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json vec_json(ConstVecView v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

json field_json(const VectorField& u) {
  json a = json::array();
  for (const Vec& v : u.values) a.push_back(vec_json(v));
  return a;
}

std::string status_of(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("bad grid '" + spec + "': expected start:stop:step");
    }
  }
  if (parts.size() != 3) throw UsageError("bad grid '" + spec + "': expected start:stop:step");
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!(step > 0.0) || !(b >= a)) throw UsageError("bad grid '" + spec + "': need step > 0 and stop >= start");
  std::vector<double> out;
  for (long k = 0;; ++k) {
    double x = a + static_cast<double>(k) * step;
    if (x > b + 0.5 * step) break;
    if (std::abs(x) < 1e-9 * step) x = 0.0;
    out.push_back(x);
    if (out.size() > 10000000) throw UsageError("grid '" + spec + "' has too many points");
  }
  return out;
}

std::vector<double> parse_list(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError("bad number list '" + spec + "'");
    }
  }
  return out;
}

ConvexFunctionOracle build_function(const RunConfig& rc) {
  const NormSpec norm = NormSpec::parse(rc.norm);
  if (!rc.registry.empty()) return registry::lookup(rc.registry, norm, rc.dim);
  if (rc.func.empty()) throw UsageError("one of --func or --registry is required");
  if (registry::is_registry_name(rc.func)) return registry::lookup(rc.func, norm, rc.dim);
  return lift_radial(parse_young(rc.func), norm, rc.dim);
}

namespace {

struct Context {
  RunConfig rc;
  SearchConfig cfg;
  ReportEnvelope report;
};

Vec point_or_origin(const Context& c) {
  if (c.rc.point.empty()) return Vec(c.rc.dim, 0.0);
  Vec x = parse_list(c.rc.point);
  if (x.size() != c.rc.dim) throw UsageError("--point has " + std::to_string(x.size()) + " coordinates, --dim is " + std::to_string(c.rc.dim));
  return x;
}

// ---------------------------------------------------------------- legendre

void cmd_legendre(Context& c) {
  const auto f = build_function(c.rc);
  std::vector<Vec> points;
  if (!c.rc.point.empty()) {
    points.push_back(point_or_origin(c));
  } else {
    for (double t : parse_grid(c.rc.grid.empty() ? "-5:5:0.01" : c.rc.grid)) {
      Vec x(c.rc.dim, 0.0);
      x[0] = t;
      points.push_back(x);
    }
  }
  std::vector<ConjugateEstimate> est(points.size());
  parallel::for_each_index(points.size(), [&](std::size_t i) { est[i] = legendre(f, points[i], c.cfg); });

  Table t;
  if (c.rc.dim == 1) t.columns.push_back("x");
  else
    for (std::size_t k = 0; k < c.rc.dim; ++k) t.columns.push_back("x" + std::to_string(k + 1));
  for (const char* col : {"L_star", "bound_side", "numeric", "analytic", "gap"}) t.columns.push_back(col);
  double max_gap = 0.0;
  std::size_t unbounded = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<json> row;
    for (double v : points[i]) row.push_back(number(v));
    row.push_back(number(est[i].value.value()));
    row.push_back(est[i].bound_side);
    row.push_back(est[i].numeric ? number(*est[i].numeric) : json());
    row.push_back(est[i].analytic ? number(*est[i].analytic) : json());
    row.push_back(est[i].gap ? number(*est[i].gap) : json());
    if (est[i].gap && std::isfinite(*est[i].gap)) max_gap = std::max(max_gap, std::abs(*est[i].gap));
    if (est[i].value.is_infinite()) ++unbounded;
    t.rows.push_back(std::move(row));
  }
  c.report.table = std::move(t);
  CheckRecord r{"legendre_transform", "estimate"};
  r.values = {{"points", points.size()}, {"unbounded_points", unbounded}, {"bound_side", est.empty() ? "" : est.front().bound_side},
              {"max_numeric_analytic_gap", number(max_gap)}};
  c.report.add(std::move(r));
}

// ---------------------------------------------------------------- subgrad

CheckRecord certificate_record(const std::string& name, const Selection& s) {
  const auto& cert = s.certificate;
  CheckRecord r{name, status_of(cert.valid())};
  r.values = {{"y", vec_json(s.y)}, {"path", s.path}, {"affine_dim", s.affine_dim},
              {"standard_error", vec_json(s.standard_error)}, {"probe_count", cert.probe_count}};
  r.slacks = {{"min_slack", number(cert.min_slack)}, {"tolerance", number(cert.tol_slack)}};
  r.witnesses = {{"x", vec_json(cert.x)}, {"worst_probe", vec_json(cert.worst_probe)}};
  return r;
}

void cmd_subgrad(Context& c) {
  const auto f = build_function(c.rc);
  const Vec x = point_or_origin(c);
  auto cfg = c.cfg;
  if (!c.rc.eps_grid.empty()) cfg.mollify_sweep = parse_list(c.rc.eps_grid);
  const auto rep = selection_consistency_test(f, x, cfg);
  c.report.add(certificate_record("certificate_sphere_average", rep.sphere_average));
  c.report.add(certificate_record("certificate_barycenter", rep.barycenter));
  for (std::size_t j = 0; j < rep.mollified.size(); ++j) {
    std::ostringstream name;
    name << "certificate_mollified_eps_" << rep.eps_sweep[j];
    c.report.add(certificate_record(name.str(), rep.mollified[j]));
  }
  CheckRecord cons{"selection_consistency_empirical", "estimate"};
  cons.values = {{"dist_sphere_barycenter", number(rep.dist_sphere_barycenter)},
                 {"dist_sphere_mollified", number(rep.dist_sphere_mollified)},
                 {"dist_barycenter_mollified", number(rep.dist_barycenter_mollified)},
                 {"eps_sweep", number_list(rep.eps_sweep)},
                 {"sweep_steps", number_list(rep.sweep_steps)},
                 {"appears_cauchy", rep.appears_cauchy},
                 {"tolerance", "empirical comparison, nothing asserted"}};
  c.report.add(std::move(cons));

  const double osc = local_oscillation(f, x, 1.0, cfg);
  const double tol = 1e-6 * (1.0 + osc);
  for (const auto* s : {&rep.sphere_average, &rep.barycenter}) {
    const double mag = euclidean_norm(s->y);
    CheckRecord m{"magnitude_bound_" + s->certificate.method, status_of(mag <= osc + tol)};
    m.values = {{"norm_y", number(mag)}, {"oscillation_r1", number(osc)}, {"bound_side", "lower_bound_of_sup"}};
    m.slacks = {{"slack", number(osc - mag)}, {"tolerance", number(tol)}};
    m.witnesses = {{"x", vec_json(x)}, {"y", vec_json(s->y)}};
    c.report.add(std::move(m));
  }
}

// ---------------------------------------------------------------- delta2

void cmd_delta2(Context& c) {
  const auto f = build_function(c.rc);
  const auto grid = parse_grid(c.rc.grid.empty() ? "0.25:4:0.25" : c.rc.grid);
  const auto phi = young_estimate(f, YoungKind::Phi, grid, c.cfg);
  const auto psi = young_estimate(f, YoungKind::Psi, grid, c.cfg);
  const auto rr = young_estimate(f, YoungKind::R, grid, c.cfg);

  Table t;
  t.columns = {"r", "Phi", "Psi", "R", "Phi_bound_side", "Psi_bound_side", "R_bound_side"};
  for (std::size_t i = 0; i < grid.size(); ++i)
    t.rows.push_back({number(grid[i]), number(phi.values[i]), number(psi.values[i]), number(rr.values[i]),
                      phi.bound_side, psi.bound_side, rr.bound_side});
  c.report.table = std::move(t);

  for (const auto* est : {&phi, &psi, &rr}) {
    if (est->kind == YoungKind::R) continue;
    try {
      const auto props = young_properties_check(*est, c.cfg.young_shortfall_band);
      CheckRecord r{"young_properties_" + to_string(est->kind), props.violations ? "fail" : "pass"};
      r.values = {{"checks", props.checks.size()}, {"multiplicative_pairs", props.multiplicative_pairs},
                  {"shortfalls", props.shortfalls}, {"violations", props.violations},
                  {"p_minus", number(est->p_minus)}, {"p_plus", number(est->p_plus)}, {"bound_side", est->bound_side}};
      json bad = json::array();
      for (const auto& pc : props.checks)
        if (pc.status != "pass")
          bad.push_back({{"name", pc.name}, {"status", pc.status}, {"r", number(pc.r)}, {"s", number(pc.s)},
                         {"lhs", number(pc.lhs)}, {"rhs", number(pc.rhs)}});
      r.witnesses = {{"non_passing", bad}};
      r.slacks = {{"tolerance", "1e-9 relative; shortfall band " + std::to_string(c.cfg.young_shortfall_band)}};
      c.report.add(std::move(r));
    } catch (const GridNotClosed& e) {
      CheckRecord r{"young_properties_" + to_string(est->kind), "estimate"};
      r.values = {{"skipped", e.what()}};
      c.report.add(std::move(r));
    }
  }

  // Reciprocal identity Psi(r) Phi(1/r) = 1, allowed 5% for opposite-sided bounds.
  {
    int pairs = 0, bad = 0;
    double worst = 0.0;
    json witness;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] <= 0.0) continue;
      for (std::size_t j = 0; j < grid.size(); ++j) {
        if (std::abs(grid[j] * grid[i] - 1.0) > 1e-12) continue;
        ++pairs;
        const double prod = psi.values[i] * phi.values[j];
        const double dev = std::abs(prod - 1.0);
        if (dev > worst) worst = dev, witness = {{"r", number(grid[i])}, {"product", number(prod)}};
        if (dev > 0.05) ++bad;
      }
    }
    CheckRecord r{"reciprocal_identity", pairs ? status_of(bad == 0) : "estimate"};
    r.values = {{"pairs", pairs}, {"failures", bad}};
    r.slacks = {{"max_deviation", number(worst)}, {"tolerance", 0.05}};
    r.witnesses = {{"worst", witness}};
    c.report.add(std::move(r));
  }
  {
    int bad = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (rr.values[i] > phi.values[i] * (1.0 + 1e-9) + 1e-12) ++bad;
    CheckRecord r{"R_below_Phi", status_of(bad == 0)};
    r.values = {{"failures", bad}};
    r.slacks = {{"tolerance", "1e-9 relative"}};
    c.report.add(std::move(r));
  }
  for (auto domain : {Delta2Domain::outside_unit_ball, Delta2Domain::punctured_space}) {
    const auto d = delta2_diagnostic(f, domain, c.cfg);
    const std::string dname = domain == Delta2Domain::outside_unit_ball ? "outside_unit_ball" : "punctured_space";
    CheckRecord r{"delta2_" + dname, status_of(d.consistent_with_p_plus)};
    r.values = {{"sup_ratio_estimate", number(d.sup_ratio_estimate)}, {"bound_side", "lower_bound_of_sup"},
                {"p_minus", number(d.p_minus)}, {"p_plus", number(d.p_plus)}, {"verdict", d.verdict},
                {"doubling_holds", d.doubling_holds}};
    r.slacks = {{"p_plus_margin", number(d.p_plus * 1.02 - d.sup_ratio_estimate)}, {"tolerance", "2% of p_plus"}};
    r.witnesses = {{"x", vec_json(d.witness)}};
    c.report.add(std::move(r));
  }
  CheckRecord dual{"dual_exponent_bounds", "estimate"};
  try {
    const auto [qp, qm] = dual_exponent_bounds(phi.p_minus, std::max(phi.p_plus, phi.p_minus));
    dual.values = {{"q_plus_bound", number(qp)}, {"q_minus_bound", number(qm)}, {"bound_side", "upper_bound"}};
  } catch (const PMinusNotGreaterThanOne& e) {
    dual.values = {{"undefined", e.what()}};
  }
  c.report.add(std::move(dual));
}

// ---------------------------------------------------------------- norms

std::pair<DiscreteProbabilitySpace, VectorField> load_or_random_space(const Context& c, std::size_t atoms) {
  if (!c.rc.in.empty()) {
    std::ifstream in(c.rc.in);
    if (!in) throw std::runtime_error("cannot open input file '" + c.rc.in + "'");
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw std::runtime_error("input file '" + c.rc.in + "' is not valid JSON: " + e.what());
    }
    auto sp = read_space_json(doc);
    if (sp.second.dim != c.rc.dim) throw UsageError("input field has dim " + std::to_string(sp.second.dim) + ", --dim is " + std::to_string(c.rc.dim));
    return sp;
  }
  Rng rng = make_rng(c.rc.seed, 0x17);
  auto sp = DiscreteProbabilitySpace::random(atoms, rng);
  return {std::move(sp), VectorField::random_gaussian(atoms, c.rc.dim, rng)};
}

CheckRecord sandwich_record(const std::string& name, const SandwichReport& s, const VectorField& u, double tol) {
  CheckRecord r{name, status_of(s.holds)};
  r.values = {{"luxemburg", number(s.norms.luxemburg.value())},
              {"orlicz_lower", number(s.norms.orlicz_lower)},
              {"orlicz_upper", number(s.norms.orlicz_upper)},
              {"gap", number(s.norms.gap)},
              {"bound_side", "luxemburg exact to 1e-10 relative; orlicz bracketed"}};
  r.slacks = {{"lower", number(s.lower_slack)}, {"upper", number(s.upper_slack)}, {"tolerance", tol}};
  if (!s.holds) r.witnesses = {{"u", field_json(u)}};
  return r;
}

void cmd_norms(Context& c) {
  const auto f = build_function(c.rc);
  const auto [sp, u] = load_or_random_space(c, 64);
  const double tol = 1e-7;
  const auto s = sandwich_check(f, sp, u, c.cfg, tol);
  c.report.add(sandwich_record("sandwich", s, u, tol));
  CheckRecord a{"attainment", s.norms.luxemburg.is_finite() && s.norms.luxemburg > 0.0 ? status_of(s.attainment_holds) : "estimate"};
  a.slacks = {{"residual", number(s.attainment_residual)}, {"tolerance", 1e-8}};
  c.report.add(std::move(a));
  CheckRecord w{"orlicz_witness", "estimate"};
  w.values = {{"amemiya_mu", number(s.norms.amemiya_mu)}, {"witness_constraint", number(s.norms.witness_constraint)},
              {"bound_side", "feasible witness (lower bracket)"}};
  w.witnesses = {{"v", field_json(s.norms.witness_v)}};
  c.report.add(std::move(w));
}

// ---------------------------------------------------------------- suites

struct SuiteTally {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_slack = kInf;
  json first_failure;
  json extra = json::object();
  bool skipped = false;
  std::string skip_reason;

  void record(bool ok, double slack, const std::function<json()>& describe) {
    ++trials;
    worst_slack = std::min(worst_slack, slack);
    if (!ok) {
      if (failures == 0) first_failure = describe();
      ++failures;
    }
  }

  CheckRecord to_record(double tol) const {
    if (skipped) {
      CheckRecord r{name, "estimate"};
      r.values = {{"skipped", skip_reason}};
      return r;
    }
    CheckRecord r{name, status_of(failures == 0)};
    r.values = extra;
    r.values["trials"] = trials;
    r.values["failures"] = failures;
    r.slacks = {{"worst", number(worst_slack)}, {"tolerance", number(tol)}};
    if (failures) r.witnesses = {{"first_failure", first_failure}};
    return r;
  }
};

void suite_sandwich(Context& c, const ConvexFunctionOracle& f) {
  SuiteTally t;
  t.name = "suite_sandwich";
  const double tol = 1e-7;
  Rng rng = make_rng(c.rc.seed, 1);
  for (int k = 0; k < c.rc.trials; ++k) {
    const auto sp = DiscreteProbabilitySpace::random(64, rng);
    const auto u = VectorField::random_gaussian(64, f.dim(), rng);
    const auto s = sandwich_check(f, sp, u, c.cfg, tol);
    t.record(s.holds, std::min(s.lower_slack, s.upper_slack), [&] { return json{{"u", field_json(u)}, {"weights", number_list(sp.weights())}}; });
  }
  c.report.add(t.to_record(tol));
}

void suite_holder(Context& c, const ConvexFunctionOracle& f) {
  SuiteTally t;
  t.name = "suite_holder";
  Rng rng = make_rng(c.rc.seed, 2);
  const auto conj = conjugate_oracle(f, c.cfg);
  for (int k = 0; k < c.rc.trials; ++k) {
    const auto sp = DiscreteProbabilitySpace::random(16, rng);
    const auto u = VectorField::random_gaussian(16, f.dim(), rng);
    const auto v = VectorField::random_gaussian(16, f.dim(), rng);
    const auto h = holder_check(f, conj, sp, u, v, c.cfg);
    t.record(h.holds, h.slack, [&] { return json{{"u", field_json(u)}, {"v", field_json(v)}}; });
  }
  c.report.add(t.to_record(0.0));
}

void suite_mixture(Context& c, const ConvexFunctionOracle& f) {
  SuiteTally t;
  t.name = "suite_mixture";
  const double tol = 1e-8;
  Rng rng = make_rng(c.rc.seed, 3);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int k = 0; k < c.rc.trials; ++k) {
    const auto u = VectorField::random_gaussian(16, f.dim(), rng);
    std::vector<DiscreteProbabilitySpace> spaces{DiscreteProbabilitySpace::random(16, rng), DiscreteProbabilitySpace::random(16, rng)};
    const double s = unif(rng);
    const auto m = mixture_concavity_check(f, u, spaces, {s, 1.0 - s}, c.cfg, tol);
    t.extra["factor"] = number(m.factor);
    t.record(m.holds, std::min(m.concavity_slack, m.quasi_concavity_slack), [&] { return json{{"u", field_json(u)}, {"t", s}}; });
  }
  c.report.add(t.to_record(tol));
}

void suite_convolution(Context& c, const ConvexFunctionOracle& f) {
  SuiteTally t;
  t.name = "suite_convolution";
  const double tol = 1e-8;
  if (!f.homogeneity_order()) {
    t.skipped = true;
    t.skip_reason = "the convolution inequality needs a homogeneous function";
    c.report.add(t.to_record(tol));
    return;
  }
  Rng rng = make_rng(c.rc.seed, 4);
  std::exponential_distribution<double> e(1.0);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = 0; k < c.rc.trials; ++k) {
    GridMeasure lam, kap;
    GridField u;
    double sl = 0.0, sk = 0.0;
    for (long i = 0; i < 5; ++i) sl += lam[{i}] = e(rng) + 1e-3;
    for (long i = 0; i < 4; ++i) sk += kap[{i}] = e(rng) + 1e-3;
    for (auto& [_, w] : lam) w /= sl;
    for (auto& [_, w] : kap) w /= sk;
    for (long i = 0; i < 9; ++i) {
      Vec v(f.dim());
      for (double& x : v) x = g(rng);
      u[{i}] = v;
    }
    const auto r = convolution_check(f, u, lam, kap, c.cfg, tol);
    t.record(r.holds, r.slack, [&] { return json{{"trial", k}}; });
  }
  c.report.add(t.to_record(tol));
}

void suite_perturbation(Context& c, const ConvexFunctionOracle& f) {
  SuiteTally t;
  t.name = "suite_perturbation";
  const auto eps = c.rc.eps_grid.empty() ? std::vector<double>{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6} : parse_list(c.rc.eps_grid);
  Rng rng = make_rng(c.rc.seed, 5);
  const auto f0 = registry::quadratic(f.dim());
  const int trials = std::max(1, std::min(c.rc.trials, 5));
  for (int k = 0; k < trials; ++k) {
    const auto sp = DiscreteProbabilitySpace::random(16, rng);
    const auto u = VectorField::random_gaussian(16, f.dim(), rng);
    const auto r = perturbation_sweep(f, f0, sp, u, eps, c.cfg);
    t.extra["terminal_gap"] = number(r.terminal_gap);
    t.record(r.monotone(), -static_cast<double>(r.norm_violations + r.conjugate_norm_violations + r.value_violations +
                                                r.conjugate_value_violations),
             [&] { return json{{"u", field_json(u)}, {"norms", number_list(r.norms)}, {"conjugate_norms", number_list(r.conjugate_norms)}}; });
  }
  c.report.add(t.to_record(0.0));
}

void suite_gamma(Context& c) {
  SuiteTally t;
  t.name = "suite_gamma";
  for (double p : {1.0, 1.5, 2.0, 3.0}) t.record(gamma(p, p) == 1.0, 0.0, [&] { return json{{"p", p}}; });
  const auto x = gamma_cross_check(2.0, 1.0, c.cfg);
  t.extra["gamma_2_1"] = number(x.value);
  t.extra["lp_2_1"] = number(x.lp_value);
  t.extra["tail_lp_2_1"] = number(x.tail_lp_value);
  t.extra["truncated_grid_agrees"] = x.agrees;
  t.record(x.tail_agrees, c.cfg.gamma_xval_tol - std::abs(x.tail_lp_value - x.value),
           [&] { return json{{"p1", 2}, {"p0", 1}}; });
  for (double p0 : {1.0, 1.5, 2.0})
    for (double p1 : {1.0, 1.5, 2.0, 3.0, 5.0}) {
      if (p1 < p0) continue;
      const double g = gamma(p1, p0);
      t.record(g > 0.0 && g <= 1.0, std::min(g, 1.0 - g), [&] { return json{{"p1", p1}, {"p0", p0}, {"gamma", g}}; });
    }
  c.report.add(t.to_record(c.cfg.gamma_xval_tol));
}

void suite_legendre(Context& c, const ConvexFunctionOracle& f) {
  SuiteTally t;
  t.name = "suite_young_fenchel";
  Rng rng = make_rng(c.rc.seed, 6);
  for (int k = 0; k < c.rc.trials; ++k) {
    const Vec x = random_in_ball(rng, Vec(f.dim(), 0.0), 3.0);
    const Vec y = random_in_ball(rng, Vec(f.dim(), 0.0), 3.0);
    const double conj = legendre(f, y, c.cfg).value.value();
    const double slack = f(x) + conj - dot(x, y);
    const double tol = c.cfg.tol_fenchel * (1.0 + std::abs(conj));
    t.record(slack >= -tol, slack, [&] { return json{{"x", vec_json(x)}, {"y", vec_json(y)}}; });
  }
  c.report.add(t.to_record(c.cfg.tol_fenchel));
}

void suite_certificates(Context& c, const ConvexFunctionOracle& f) {
  SuiteTally t;
  t.name = "suite_certificates";
  Rng rng = make_rng(c.rc.seed, 7);
  auto cfg = c.cfg;
  const int trials = std::max(1, std::min(c.rc.trials, 10));
  for (int k = 0; k < trials; ++k) {
    const Vec x = k == 0 ? Vec(f.dim(), 0.0) : random_in_ball(rng, Vec(f.dim(), 0.0), 3.0);
    for (const auto& s : {sphere_average_subgradient(f, x, cfg), barycenter_subgradient(f, x, cfg),
                          mollified_subgradient(f, x, cfg.mollify_eps, cfg)}) {
      const auto& cert = s.certificate;
      t.record(cert.valid(), cert.min_slack + cert.tol_slack,
               [&] { return json{{"x", vec_json(x)}, {"y", vec_json(s.y)}, {"method", cert.method}}; });
    }
  }
  c.report.add(t.to_record(cfg.tol_slack_rel));
}

void suite_young(Context& c, const ConvexFunctionOracle& f) {
  const std::vector<double> grid = {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  const auto est = young_estimate(f, YoungKind::Phi, grid, c.cfg);
  const auto props = young_properties_check(est, c.cfg.young_shortfall_band);
  CheckRecord r{"suite_young_properties", props.violations ? "fail" : "pass"};
  r.values = {{"p_minus", number(est.p_minus)}, {"p_plus", number(est.p_plus)}, {"shortfalls", props.shortfalls},
              {"violations", props.violations}, {"bound_side", est.bound_side}, {"phi", number_list(est.values)}};
  r.slacks = {{"tolerance", "1e-9 relative"}};
  c.report.add(std::move(r));
}

void cmd_mixture(Context& c) {
  const auto f = build_function(c.rc);
  suite_mixture(c, f);
}

void cmd_verify(Context& c) {
  const std::string& s = c.rc.suite;
  static const std::vector<std::string> known = {"all", "sandwich", "holder", "mixture", "convolution",
                                                 "perturbation", "gamma", "legendre", "certificates", "young"};
  if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite '" + s + "'");
  if (s == "gamma") {
    suite_gamma(c);
    return;
  }
  const auto f = build_function(c.rc);
  const bool all = s == "all";
  if (all || s == "sandwich") suite_sandwich(c, f);
  if (all || s == "holder") suite_holder(c, f);
  if (all || s == "mixture") suite_mixture(c, f);
  if (all || s == "convolution") suite_convolution(c, f);
  if (all || s == "perturbation") suite_perturbation(c, f);
  if (all) suite_gamma(c);
  if (all || s == "legendre") suite_legendre(c, f);
  if (all || s == "certificates") suite_certificates(c, f);
  if (all || s == "young") suite_young(c, f);
}

// ---------------------------------------------------------------- config

void merge_config_file(RunConfig& rc, const std::string& path, const std::map<std::string, bool>& given) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  auto take = [&](const char* key, auto& field) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (given.count(key) && given.at(key)) return;
    try {
      field = it->template get<std::decay_t<decltype(field)>>();
    } catch (const json::exception&) {
      throw UsageError(std::string("config key '") + key + "' has the wrong type");
    }
  };
  static const std::vector<std::string> keys = {"func", "registry", "dim", "norm", "seed", "grid", "trials", "eps_grid",
                                                "in", "out", "format", "suite", "point", "timing", "search"};
  for (const auto& [k, _] : doc.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw UsageError("unknown config key '" + k + "'");
  take("func", rc.func);
  take("registry", rc.registry);
  take("dim", rc.dim);
  take("norm", rc.norm);
  take("seed", rc.seed);
  take("grid", rc.grid);
  take("trials", rc.trials);
  take("eps_grid", rc.eps_grid);
  take("in", rc.in);
  take("out", rc.out);
  take("format", rc.format);
  take("suite", rc.suite);
  take("point", rc.point);
  take("timing", rc.timing);
  if (auto it = doc.find("search"); it != doc.end()) rc.search = *it;
}

json echo(const RunConfig& rc, const SearchConfig& cfg) {
  json search;
  to_json(search, cfg);
  return {{"command", rc.command}, {"func", rc.func},   {"registry", rc.registry}, {"dim", rc.dim},
          {"norm", rc.norm},       {"seed", rc.seed},   {"grid", rc.grid},         {"trials", rc.trials},
          {"eps_grid", rc.eps_grid}, {"in", rc.in},     {"format", rc.format},     {"suite", rc.suite},
          {"point", rc.point},     {"search", search}};
}

}  // namespace

int run(int argc, const char* const* argv) {
  parallel::configure_from_env();
  RunConfig rc;
  std::string config_path;
  CLI::App app{"orlicz-lab: convex-analysis diagnostics (conjugates, subgradients, growth conditions, Orlicz norms)"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::map<std::string, CLI::Option*> opts;
  opts["func"] = app.add_option("--func", rc.func, "Profile text in r (e.g. \"pow(r,2)*max(r,1)\") or a registry name");
  opts["registry"] = app.add_option("--registry", rc.registry, "Registry name: quadratic, norm, pow<p>, power:<p>, hinge, hinge_power:<p>, plog:<p>, plog2:<p>");
  opts["dim"] = app.add_option("--dim", rc.dim, "Ambient dimension")->check(CLI::PositiveNumber);
  opts["norm"] = app.add_option("--norm", rc.norm, "euclidean | l1 | linf | lp:<p> | weighted:<w1>,<w2>,...");
  opts["seed"] = app.add_option("--seed", rc.seed, "Random seed (recorded in the report)");
  opts["grid"] = app.add_option("--grid", rc.grid, "Grid start:stop:step, endpoints inclusive");
  opts["trials"] = app.add_option("--trials", rc.trials, "Random instances per suite")->check(CLI::NonNegativeNumber);
  opts["eps_grid"] = app.add_option("--eps-grid", rc.eps_grid, "Comma-separated eps values");
  opts["in"] = app.add_option("--in", rc.in, "Input JSON {dim, atoms: [{weight, value}]}");
  opts["out"] = app.add_option("--out", rc.out, "Output path (default: standard output)");
  opts["format"] = app.add_option("--format", rc.format, "json | csv (default: from --out extension, else json)");
  opts["suite"] = app.add_option("--suite", rc.suite, "verify suite: all, sandwich, holder, mixture, convolution, perturbation, gamma, legendre, certificates, young");
  opts["point"] = app.add_option("--point", rc.point, "Comma-separated point x");
  opts["timing"] = app.add_flag("--timing", rc.timing, "Record wall time (output is then not byte-stable)");
  app.add_option("--config", config_path, "JSON config with the same keys as the flags; flags win");

  for (const char* name : {"legendre", "subgrad", "delta2", "norms", "mixture", "verify"}) {
    static const std::map<std::string, std::string> help = {
        {"legendre", "Conjugate L* on a grid or at --point"},
        {"subgrad", "Subgradient selections and certificates at --point"},
        {"delta2", "Phi, Psi, R tables and growth diagnostics"},
        {"norms", "Luxemburg and Orlicz norms for --in (or a random instance)"},
        {"mixture", "Concavity of the Luxemburg functional under mixtures"},
        {"verify", "Randomized verification suites"}};
    app.add_subcommand(name, help.at(name))->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }
  rc.command = app.get_subcommands().front()->get_name();

  Context ctx;
  try {
    if (!config_path.empty()) {
      std::map<std::string, bool> given;
      for (const auto& [k, o] : opts) given[k] = o->count() > 0;
      merge_config_file(rc, config_path, given);
    }
    if (rc.format.empty()) rc.format = rc.out.size() >= 4 && rc.out.substr(rc.out.size() - 4) == ".csv" ? "csv" : "json";
    if (rc.format != "json" && rc.format != "csv") throw UsageError("--format must be json or csv");
    ctx.rc = rc;
    ctx.cfg.seed = rc.seed;
    apply_overrides(ctx.cfg, rc.search);
    ctx.report.command = rc.command;
    ctx.report.config = echo(rc, ctx.cfg);

    const auto start = std::chrono::steady_clock::now();
    if (rc.command == "legendre") cmd_legendre(ctx);
    else if (rc.command == "subgrad") cmd_subgrad(ctx);
    else if (rc.command == "delta2") cmd_delta2(ctx);
    else if (rc.command == "norms") cmd_norms(ctx);
    else if (rc.command == "mixture") cmd_mixture(ctx);
    else cmd_verify(ctx);
    if (rc.timing)
      ctx.report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(ctx.report, rc.format, rc.out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidProfile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return ctx.report.any_failed() ? 2 : 0;
}

}  // namespace orlicz_lab::cli
