#include "orlicz_lab/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "orlicz_lab/random.hpp"

namespace orlicz_lab {

void gauss_legendre(std::size_t m, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(m, 0.0);
  weights.assign(m, 0.0);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(m) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(m) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[m - 1 - i] = x;
    weights[i] = weights[m - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

DirectionSet circle(std::size_t count, double offset) {
  DirectionSet s;
  s.dim = 2;
  if (count % 2) ++count;
  const double w = 1.0 / static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(k) + offset) / static_cast<double>(count);
    s.directions.push_back({std::cos(t), std::sin(t)});
    s.weights.push_back(w);
  }
  return s;
}

DirectionSet gl_product(std::size_t polar) {
  std::vector<double> t, wt;
  gauss_legendre(polar, t, wt);
  const std::size_t azimuths = 2 * polar;
  DirectionSet s;
  s.dim = 3;
  for (std::size_t i = 0; i < polar; ++i) {
    const double ct = t[i], st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (std::size_t k = 0; k < azimuths; ++k) {
      const double phi = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(azimuths);
      s.directions.push_back({st * std::cos(phi), st * std::sin(phi), ct});
      s.weights.push_back(0.5 * wt[i] / static_cast<double>(azimuths));
    }
  }
  return s;
}

DirectionSet antithetic_uniform(std::size_t n, std::size_t count, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0x5eed5);
  DirectionSet s;
  s.dim = n;
  const std::size_t pairs = std::max<std::size_t>(1, count / 2);
  const double w = 0.5 / static_cast<double>(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    Vec d = random_unit(rng, n);
    s.directions.push_back(d);
    s.directions.push_back(scaled(d, -1.0));
    s.weights.push_back(w);
    s.weights.push_back(w);
  }
  return s;
}

}  // namespace

DirectionSet sphere_quadrature(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sphere_quadrature: dimension must be positive");
  if (n == 1) return DirectionSet{1, {{1.0}, {-1.0}}, {0.5, 0.5}};
  if (n == 2) return circle(count, 0.5);
  if (n == 3) {
    const auto polar = static_cast<std::size_t>(std::max(2.0, std::round(std::sqrt(count / 2.0))));
    return gl_product(polar);
  }
  return antithetic_uniform(n, count, seed);
}

DirectionSet hull_directions(std::size_t n, std::size_t count_2d, std::size_t polar_nodes_3d,
                             std::uint64_t seed) {
  if (n == 1) return DirectionSet{1, {{1.0}, {-1.0}}, {0.5, 0.5}};
  if (n == 2) {
    std::size_t c = std::max<std::size_t>(8, count_2d);
    c = (c + 7) / 8 * 8;
    return circle(c, 0.0);
  }
  DirectionSet s = n == 3 ? gl_product(polar_nodes_3d) : antithetic_uniform(n, 64 * n * n, seed);
  if (n == 3) {
    // Facet normals of piecewise-linear functions with small integer slopes.
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c) {
          const int nonzero = (a != 0) + (b != 0) + (c != 0);
          if (nonzero < 2) continue;
          const double len = std::sqrt(static_cast<double>(nonzero));
          s.directions.push_back({a / len, b / len, c / len});
          s.weights.push_back(0.0);
        }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec e(n, 0.0);
      e[i] = sign;
      s.directions.push_back(e);
      s.weights.push_back(0.0);
    }
  }
  return s;
}

std::vector<Vec> search_directions(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 1) return {{1.0}, {-1.0}};
  if (n == 2) return circle(std::max<std::size_t>(count, 4), 0.0).directions;
  std::vector<Vec> out;
  if (n == 3) {
    const std::size_t m = std::max<std::size_t>(count, 6);
    for (std::size_t k = 0; k < m; ++k) {
      const double h = -1.0 + 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
      const double phi = static_cast<double>(k) * std::numbers::pi * (3.0 - std::sqrt(5.0));
      const double s = std::sqrt(std::max(0.0, 1.0 - h * h));
      out.push_back({s * std::cos(phi), s * std::sin(phi), h});
    }
    return out;
  }
  Rng rng = make_rng(seed, 0xd1c);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_unit(rng, n));
  return out;
}

}  // namespace orlicz_lab
