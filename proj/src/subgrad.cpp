#include "orlicz_lab/subgrad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "orlicz_lab/convex_core.hpp"
#include "orlicz_lab/errors.hpp"
#include "orlicz_lab/parallel.hpp"
#include "orlicz_lab/polytope.hpp"
#include "orlicz_lab/random.hpp"
#include "orlicz_lab/sphere.hpp"

namespace orlicz_lab {

CompactConvexSetApprox::CompactConvexSetApprox(std::size_t dim, std::vector<Vec> directions,
                                               std::vector<double> support_values)
    : dim_(dim), directions_(std::move(directions)), values_(std::move(support_values)) {
  if (directions_.size() != values_.size())
    throw std::invalid_argument("support table: direction and value counts differ");
  for (const Vec& d : directions_) {
    if (d.size() != dim_) throw DimensionMismatch("support table: direction has wrong dimension");
    if (std::abs(euclidean_norm(d) - 1.0) > 1e-12) throw std::invalid_argument("support table: direction is not a unit vector");
  }
}

CompactConvexSetApprox CompactConvexSetApprox::singleton(ConstVecView point, std::vector<Vec> directions) {
  std::vector<double> h;
  for (const Vec& d : directions) h.push_back(dot(point, d));
  return {point.size(), std::move(directions), std::move(h)};
}

CompactConvexSetApprox CompactConvexSetApprox::ball(ConstVecView center, double radius, std::vector<Vec> directions) {
  std::vector<double> h;
  for (const Vec& d : directions) h.push_back(dot(center, d) + radius);
  return {center.size(), std::move(directions), std::move(h)};
}

int CompactConvexSetApprox::consistency_violations(double tol, int pair_samples, std::uint64_t seed) const {
  int bad = 0;
  const std::size_t m = size();
  if (m == 0) return 0;
  // Widths h(t) + h(-t) must be non-negative.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (dot(directions_[i], directions_[j]) <= -1.0 + 1e-12) {
        if (values_[i] + values_[j] < -tol) ++bad;
        break;
      }
    }
    if (m > 4096 && i > 256) break;
  }
  Rng rng = make_rng(seed, 0x5a);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (int s = 0; s < pair_samples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    Vec sum = axpy(directions_[i], 1.0, directions_[j]);
    const double len = euclidean_norm(sum);
    if (len < 1e-6) continue;
    for (double& c : sum) c /= len;
    for (std::size_t k = 0; k < m; ++k) {
      if (dot(directions_[k], sum) >= 1.0 - 1e-12) {
        if (len * values_[k] > values_[i] + values_[j] + tol) ++bad;
        break;
      }
    }
  }
  return bad;
}

double hausdorff_distance(const CompactConvexSetApprox& a, const CompactConvexSetApprox& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("hausdorff_distance: dimensions differ");
  if (a.size() != b.size()) throw std::invalid_argument("hausdorff_distance: direction sets differ");
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.directions()[j] != b.directions()[j]) throw std::invalid_argument("hausdorff_distance: direction sets differ");
    d = std::max(d, std::abs(a.support_values()[j] - b.support_values()[j]));
  }
  return d;
}

double support_of_subdifferential(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView theta,
                                  const SearchConfig& cfg) {
  return directional_derivative(f, x, theta, cfg);
}

namespace {

double dd(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView theta, const SearchConfig& cfg) {
  return directional_derivative_estimate(f, x, theta, cfg).value;
}

std::vector<double> support_batch(const ConvexFunctionOracle& f, ConstVecView x, const std::vector<Vec>& dirs,
                                  const SearchConfig& cfg) {
  return parallel::map_indexed(dirs.size(), [&](std::size_t j) { return dd(f, x, dirs[j], cfg); });
}

void check_point(const ConvexFunctionOracle& f, ConstVecView x) {
  if (x.size() != f.dim()) throw DimensionMismatch("point dimension does not match the oracle");
  if (!std::isfinite(f(x))) throw NonFiniteNearPoint("L(x) is not finite");
}

// 1/2 sum_i (L'(x, e_i) - L'(x, -e_i)) e_i: the midpoint of the bounding box
// of dL(x), which is its centroid when dL(x) is a point or a segment.
Vec box_midpoint(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg) {
  const std::size_t n = x.size();
  Vec m(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    const double up = dd(f, x, e, cfg);
    e[i] = -1.0;
    const double down = dd(f, x, e, cfg);
    m[i] = 0.5 * (up - down);
  }
  return m;
}

int affine_dimension(const std::vector<Vec>& cloud, double scale, const SearchConfig& cfg, Vec* normal = nullptr,
                     std::vector<Vec>* span = nullptr) {
  if (cloud.empty()) return -1;
  const std::size_t n = cloud.front().size();
  Eigen::MatrixXd M(cloud.size(), n);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
  for (std::size_t i = 0; i < cloud.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) mean[k] += cloud[i][k] / static_cast<double>(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) M(i, k) = cloud[i][k] - mean[k];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues() / std::sqrt(static_cast<double>(cloud.size()));
  const double top = s.size() ? s[0] : 0.0;
  int k = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > cfg.affine_rel_threshold * top && s[i] > cfg.affine_abs_threshold * scale) ++k;
  if (normal) {
    normal->assign(n, 0.0);
    const Eigen::Index last = static_cast<Eigen::Index>(n) - 1;
    for (std::size_t j = 0; j < n; ++j) (*normal)[j] = svd.matrixV()(static_cast<Eigen::Index>(j), last);
  }
  if (span) {
    span->assign(static_cast<std::size_t>(k), Vec(n, 0.0));
    for (int i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) (*span)[static_cast<std::size_t>(i)][j] = svd.matrixV()(static_cast<Eigen::Index>(j), i);
  }
  return k;
}

Vec centroid_2d(const std::vector<Vec>& dirs, const std::vector<double>& h, double inflate, double box,
                std::vector<Vec>* cloud) {
  using namespace polytope;
  Polygon poly = box_polygon(box);
  for (std::size_t j = 0; j < dirs.size() && !poly.empty(); ++j)
    poly = clip(poly, Halfspace<P2>{{dirs[j][0], dirs[j][1]}, h[j] + inflate});
  if (poly.empty()) throw HullDegenerate("support values admit no common point");
  if (cloud)
    for (const auto& p : poly) cloud->push_back({p[0], p[1]});
  const P2 c = centroid(poly);
  return {c[0], c[1]};
}

SubgradientCertificate certify_impl(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView y,
                                    const std::string& method, const SearchConfig& cfg) {
  return certify(f, x, y, method, cfg);
}

}  // namespace

CompactConvexSetApprox subdifferential_hull(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg) {
  check_point(f, x);
  const std::size_t n = f.dim();
  auto q = sphere_quadrature(n, static_cast<std::size_t>(cfg.sphere_points_per_dim) * n, cfg.seed);
  auto h = support_batch(f, x, q.directions, cfg);
  return {n, std::move(q.directions), std::move(h)};
}

SubgradientCertificate certify(const ConvexFunctionOracle& f, ConstVecView x, ConstVecView y,
                               const std::string& method, const SearchConfig& cfg) {
  const std::size_t n = f.dim();
  const double fx = f(x);
  if (!std::isfinite(fx)) throw NonFiniteNearPoint("certify: L(x) is not finite");
  std::vector<Vec> probes;
  Rng rng = make_rng(cfg.seed, 0xce47);
  for (int i = 0; i < cfg.probe_count; ++i) probes.push_back(random_in_ball(rng, x, cfg.probe_radius));
  for (std::size_t i = 0; i < n; ++i) {
    Vec z(x.begin(), x.end());
    z[i] += 1.0;
    probes.push_back(z);
    z[i] -= 2.0;
    probes.push_back(z);
  }
  const auto slack = parallel::map_indexed(probes.size(), [&](std::size_t k) {
    const Vec& z = probes[k];
    const double fz = f(z);
    if (std::isinf(fz)) return kInf;
    return fz - fx - dot(y, axpy(z, -1.0, x));
  });
  SubgradientCertificate c;
  c.x.assign(x.begin(), x.end());
  c.y.assign(y.begin(), y.end());
  c.probe_count = static_cast<int>(probes.size());
  c.method = method;
  c.tol_slack = cfg.tol_slack_rel * (1.0 + std::abs(fx));
  const auto it = std::min_element(slack.begin(), slack.end());
  c.min_slack = *it;
  c.worst_probe = probes[static_cast<std::size_t>(it - slack.begin())];
  return c;
}

Selection sphere_average_subgradient(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg) {
  check_point(f, x);
  const std::size_t n = f.dim();
  const auto q = sphere_quadrature(n, static_cast<std::size_t>(cfg.sphere_points_per_dim) * n, cfg.seed);
  const auto h = support_batch(f, x, q.directions, cfg);
  Selection s;
  s.y.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> terms(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) terms[j] = q.weights[j] * h[j] * q.directions[j][k];
    s.y[k] = static_cast<double>(n) * parallel::pairwise_sum(terms);
  }
  s.standard_error.assign(n, 0.0);
  s.path = n <= 3 ? "quadrature" : "monte_carlo";
  if (n > 3) {
    // Antithetic pairs are consecutive; their sums are independent samples.
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> pair_terms;
      for (std::size_t j = 0; j + 1 < q.size(); j += 2)
        pair_terms.push_back(0.5 * static_cast<double>(n) * (h[j] * q.directions[j][k] + h[j + 1] * q.directions[j + 1][k]));
      double mean = 0.0, var = 0.0;
      for (double v : pair_terms) mean += v / static_cast<double>(pair_terms.size());
      for (double v : pair_terms) var += (v - mean) * (v - mean) / static_cast<double>(pair_terms.size() - 1);
      s.standard_error[k] = std::sqrt(var / static_cast<double>(pair_terms.size()));
    }
  }
  s.certificate = certify_impl(f, x, s.y, "sphere_average", cfg);
  return s;
}

Vec sphere_average_serial(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg) {
  const std::size_t n = f.dim();
  const auto q = sphere_quadrature(n, static_cast<std::size_t>(cfg.sphere_points_per_dim) * n, cfg.seed);
  std::vector<double> h(q.size());
  parallel::for_each_index_serial(q.size(), [&](std::size_t j) { h[j] = dd(f, x, q.directions[j], cfg); });
  Vec y(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> terms(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) terms[j] = q.weights[j] * h[j] * q.directions[j][k];
    y[k] = static_cast<double>(n) * parallel::pairwise_sum(terms);
  }
  return y;
}

namespace {

Vec barycenter_3d(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg, const DirectionSet& dirs,
                  const std::vector<double>& h, double inflate, double box, double scale, Selection& s) {
  using namespace polytope;
  Polyhedron poly = box_polyhedron(box);
  for (std::size_t j = 0; j < dirs.size() && !poly.empty(); ++j) {
    const Vec& d = dirs.directions[j];
    poly = clip(poly, Halfspace<P3>{{d[0], d[1], d[2]}, h[j] + inflate});
  }
  if (poly.empty()) throw HullDegenerate("support values admit no common point");
  std::vector<Vec> cloud;
  for (const auto& p : poly.vertices()) cloud.push_back({p[0], p[1], p[2]});
  Vec normal;
  s.affine_dim = affine_dimension(cloud, scale, cfg, &normal);
  if (s.affine_dim <= 1) {
    s.path = s.affine_dim == 0 ? "singleton" : "segment";
    return box_midpoint(f, x, cfg);
  }
  if (s.affine_dim == 3) {
    s.path = "polyhedron";
    const P3 c = centroid(poly);
    return {c[0], c[1], c[2]};
  }
  // Planar subdifferential: centroid of the in-plane polygon plus the normal offset.
  s.path = "planar_polygon";
  const double len = euclidean_norm(normal);
  for (double& c : normal) c /= len;
  Vec helper = std::abs(normal[0]) < 0.9 ? Vec{1.0, 0.0, 0.0} : Vec{0.0, 1.0, 0.0};
  Vec u = axpy(helper, -dot(helper, normal), normal);
  const double ul = euclidean_norm(u);
  for (double& c : u) c /= ul;
  Vec v = {normal[1] * u[2] - normal[2] * u[1], normal[2] * u[0] - normal[0] * u[2], normal[0] * u[1] - normal[1] * u[0]};
  const std::size_t count = static_cast<std::size_t>(cfg.hull_directions_2d);
  std::vector<Vec> plane_dirs, dirs2;
  for (std::size_t j = 0; j < count; ++j) {
    const double a = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(count);
    plane_dirs.push_back(axpy(scaled(u, std::cos(a)), std::sin(a), v));
    dirs2.push_back({std::cos(a), std::sin(a)});
  }
  const auto h2 = support_batch(f, x, plane_dirs, cfg);
  const Vec c2 = centroid_2d(dirs2, h2, inflate, box, nullptr);
  const double up = dd(f, x, normal, cfg);
  const double down = dd(f, x, scaled(normal, -1.0), cfg);
  Vec y = scaled(normal, 0.5 * (up - down));
  y = axpy(y, c2[0], u);
  return axpy(y, c2[1], v);
}

Vec barycenter_hit_and_run(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg,
                           const DirectionSet& dirs, const std::vector<double>& h, double inflate, double scale,
                           Selection& s) {
  const std::size_t n = x.size();
  // Exposed points are gradients of the support function; central differences are
  // exact for polytopes once the step stays inside a normal cone.
  const double step = 1e-6;
  const std::size_t exposed_count = std::min(dirs.size(), 16 * n);
  std::vector<Vec> exposed(exposed_count);
  parallel::for_each_index(exposed_count, [&](std::size_t j) {
    Vec& g = exposed[j];
    g.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      Vec up(dirs.directions[j]), down(dirs.directions[j]);
      up[k] += step;
      down[k] -= step;
      g[k] = (dd(f, x, up, cfg) - dd(f, x, down, cfg)) / (2.0 * step);
    }
  });
  std::vector<Vec> span;
  s.affine_dim = affine_dimension(exposed, scale, cfg, nullptr, &span);
  if (s.affine_dim <= 1) {
    s.path = s.affine_dim == 0 ? "singleton" : "segment";
    return box_midpoint(f, x, cfg);
  }
  Vec y(n, 0.0);
  for (const Vec& p : exposed) y = axpy(y, 1.0 / static_cast<double>(exposed.size()), p);
  double slab = inflate;
  for (std::size_t j = 0; j < dirs.size(); ++j) slab = std::max(slab, 2.0 * (dot(dirs.directions[j], y) - h[j]));
  Rng rng = make_rng(cfg.seed, 0x4a11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int burn = 1000;
  const int total = std::max(50, cfg.hit_and_run_samples);
  std::vector<Vec> samples;
  samples.reserve(static_cast<std::size_t>(total));
  for (int it = 0; it < burn + total; ++it) {
    Vec d(n, 0.0);
    for (const Vec& b : span) d = axpy(d, gauss(rng), b);
    const double len = euclidean_norm(d);
    for (double& c : d) c /= len;
    double lo = -kInf, hi = kInf;
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      const double a = dot(dirs.directions[j], d);
      const double b = std::max(0.0, h[j] + slab - dot(dirs.directions[j], y));
      if (a > 1e-15) hi = std::min(hi, b / a);
      else if (a < -1e-15) lo = std::max(lo, b / a);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw HullDegenerate("hit-and-run chord is unbounded");
    y = axpy(y, lo + (hi - lo) * unif(rng), d);
    if (it >= burn) samples.push_back(y);
  }
  s.path = "hit_and_run";
  Vec mean(n, 0.0);
  const std::size_t batches = 50, per = samples.size() / batches;
  std::vector<Vec> batch_means(batches, Vec(n, 0.0));
  for (std::size_t b = 0; b < batches; ++b)
    for (std::size_t i = b * per; i < (b + 1) * per; ++i)
      for (std::size_t k = 0; k < n; ++k) batch_means[b][k] += samples[i][k] / static_cast<double>(per);
  for (const Vec& bm : batch_means)
    for (std::size_t k = 0; k < n; ++k) mean[k] += bm[k] / static_cast<double>(batches);
  s.standard_error.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double var = 0.0;
    for (const Vec& bm : batch_means) var += (bm[k] - mean[k]) * (bm[k] - mean[k]) / static_cast<double>(batches - 1);
    s.standard_error[k] = std::sqrt(var / static_cast<double>(batches));
  }
  return mean;
}

}  // namespace

Selection barycenter_subgradient(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg) {
  check_point(f, x);
  const std::size_t n = f.dim();
  Selection s;
  s.standard_error.assign(n, 0.0);
  if (n == 1) {
    s.y = box_midpoint(f, x, cfg);
    const double width = dd(f, x, Vec{1.0}, cfg) + dd(f, x, Vec{-1.0}, cfg);
    s.affine_dim = width > cfg.affine_abs_threshold * std::max(1.0, std::abs(s.y[0])) ? 1 : 0;
    s.path = s.affine_dim == 0 ? "singleton" : "segment";
    s.certificate = certify_impl(f, x, s.y, "barycenter", cfg);
    return s;
  }

  const auto dirs = hull_directions(n, static_cast<std::size_t>(cfg.hull_directions_2d),
                                    static_cast<std::size_t>(cfg.hull_polar_nodes_3d), cfg.seed);
  const auto h = support_batch(f, x, dirs.directions, cfg);
  double hmax = 0.0;
  for (double v : h) hmax = std::max(hmax, std::abs(v));
  const double scale = std::max(1.0, hmax);
  const double inflate = cfg.hull_inflation_rel * scale;
  const double box = hmax + 1.0;

  if (n == 2) {
    std::vector<Vec> cloud;
    const Vec c = centroid_2d(dirs.directions, h, inflate, box, &cloud);
    s.affine_dim = affine_dimension(cloud, scale, cfg);
    if (s.affine_dim <= 1) {
      s.path = s.affine_dim == 0 ? "singleton" : "segment";
      s.y = box_midpoint(f, x, cfg);
    } else {
      s.path = "polygon";
      s.y = c;
    }
  } else if (n == 3) {
    s.y = barycenter_3d(f, x, cfg, dirs, h, inflate, box, scale, s);
  } else {
    s.y = barycenter_hit_and_run(f, x, cfg, dirs, h, inflate, scale, s);
  }
  s.certificate = certify_impl(f, x, s.y, "barycenter", cfg);
  return s;
}

Selection mollified_subgradient(const ConvexFunctionOracle& f, ConstVecView x, double eps, const SearchConfig& cfg) {
  if (!(eps > 0.0)) throw std::invalid_argument("mollified_subgradient: eps must be positive");
  check_point(f, x);
  const std::size_t n = f.dim();
  const std::size_t pairs = static_cast<std::size_t>(std::max(1, cfg.mollify_samples / 2));
  Rng rng = make_rng(cfg.seed, 0x3011);
  std::vector<Vec> offsets;
  const Vec origin(n, 0.0);
  for (std::size_t i = 0; i < pairs; ++i) offsets.push_back(random_in_ball(rng, origin, eps));

  auto grad = [&](ConstVecView z) -> Vec {
    if (!std::isfinite(f(z))) throw NonFiniteNearPoint("mollified_subgradient: L is infinite inside the ball");
    if (f.has_gradient()) return f.gradient(z);
    Vec g(n);
    for (std::size_t k = 0; k < n; ++k) {
      Vec e(n, 0.0);
      e[k] = 1.0;
      const double up = dd(f, z, e, cfg);
      e[k] = -1.0;
      g[k] = 0.5 * (up - dd(f, z, e, cfg));
    }
    return g;
  };

  std::vector<Vec> pair_means(pairs);
  parallel::for_each_index(pairs, [&](std::size_t i) {
    const Vec a = grad(axpy(x, 1.0, offsets[i]));
    const Vec b = grad(axpy(x, -1.0, offsets[i]));
    pair_means[i] = scaled(axpy(a, 1.0, b), 0.5);
  });

  Selection s;
  s.path = f.has_gradient() ? "analytic_gradient" : "one_sided_partials";
  s.y.assign(n, 0.0);
  s.standard_error.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> col(pairs);
    for (std::size_t i = 0; i < pairs; ++i) col[i] = pair_means[i][k];
    const double mean = parallel::pairwise_sum(col) / static_cast<double>(pairs);
    double var = 0.0;
    for (double v : col) var += (v - mean) * (v - mean);
    s.y[k] = mean;
    if (pairs > 1) s.standard_error[k] = std::sqrt(var / static_cast<double>(pairs - 1) / static_cast<double>(pairs));
  }
  s.certificate = certify_impl(f, x, s.y, "mollified", cfg);
  return s;
}

ConsistencyReport selection_consistency_test(const ConvexFunctionOracle& f, ConstVecView x, const SearchConfig& cfg) {
  ConsistencyReport r;
  r.sphere_average = sphere_average_subgradient(f, x, cfg);
  r.barycenter = barycenter_subgradient(f, x, cfg);
  r.eps_sweep = cfg.mollify_sweep;
  std::sort(r.eps_sweep.begin(), r.eps_sweep.end(), std::greater<>());
  for (double eps : r.eps_sweep) r.mollified.push_back(mollified_subgradient(f, x, eps, cfg));
  r.all_certified = r.sphere_average.certificate.valid() && r.barycenter.certificate.valid();
  for (const auto& m : r.mollified) r.all_certified = r.all_certified && m.certificate.valid();
  r.dist_sphere_barycenter = distance(r.sphere_average.y, r.barycenter.y);
  if (!r.mollified.empty()) {
    const Vec& finest = r.mollified.back().y;
    r.dist_sphere_mollified = distance(r.sphere_average.y, finest);
    r.dist_barycenter_mollified = distance(r.barycenter.y, finest);
    for (std::size_t j = 1; j < r.mollified.size(); ++j)
      r.sweep_steps.push_back(distance(r.mollified[j].y, r.mollified[j - 1].y));
    const double size = 1.0 + euclidean_norm(finest);
    r.appears_cauchy = r.sweep_steps.empty() ||
                       (r.sweep_steps.back() <= r.sweep_steps.front() + 1e-12 && r.sweep_steps.back() <= 1e-3 * size);
  }
  return r;
}

}  // namespace orlicz_lab
