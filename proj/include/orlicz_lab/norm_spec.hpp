#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz_lab/types.hpp"

namespace orlicz_lab {

/// A norm on R^n: euclidean, ell_p (p >= 1), ell_inf, or a weighted
/// euclidean norm sqrt(sum w_i x_i^2) with positive weights.
class NormSpec {
 public:
  enum class Kind { euclidean, ell_p, ell_inf, weighted_euclidean };

  static NormSpec euclidean() { return NormSpec(Kind::euclidean, 2.0, {}); }
  static NormSpec ell_p(double p);
  static NormSpec ell_inf() { return NormSpec(Kind::ell_inf, kInf, {}); }
  static NormSpec weighted_euclidean(std::vector<double> weights);

  /// Accepts "euclidean" | "l2" | "l1" | "linf" | "lp:<p>" | "weighted:<w1>,<w2>,...".
  static NormSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  const std::vector<double>& weights() const { return weights_; }

  double operator()(ConstVecView x) const;
  /// The dual norm ||y||_* = sup_{||x|| <= 1} <x, y>.
  NormSpec dual() const;
  /// A (sub)gradient of the norm at x != 0; zero at the origin.
  Vec gradient(ConstVecView x) const;

  std::string to_string() const;
  bool operator==(const NormSpec&) const = default;

 private:
  NormSpec(Kind k, double p, std::vector<double> w) : kind_(k), p_(p), weights_(std::move(w)) {}

  Kind kind_;
  double p_;
  std::vector<double> weights_;
};

/// Probes the triangle inequality and absolute homogeneity on random points;
/// returns the number of violations.
int check_norm_axioms(const NormSpec& norm, std::size_t n, std::uint64_t seed, int trials = 200);

}  // namespace orlicz_lab
