#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "orlicz_lab/types.hpp"

namespace orlicz_lab {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

inline Vec random_unit(Rng& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  double s = 0.0;
  do {
    s = 0.0;
    for (double& c : v) {
      c = g(rng);
      s += c * c;
    }
  } while (s < 1e-300);
  s = std::sqrt(s);
  for (double& c : v) c /= s;
  return v;
}

/// Uniform point in the Euclidean ball B(center, radius).
inline Vec random_in_ball(Rng& rng, ConstVecView center, double radius) {
  const std::size_t n = center.size();
  Vec d = random_unit(rng, n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double rho = radius * std::pow(u(rng), 1.0 / static_cast<double>(n));
  Vec out(center.begin(), center.end());
  for (std::size_t i = 0; i < n; ++i) out[i] += rho * d[i];
  return out;
}

}  // namespace orlicz_lab
