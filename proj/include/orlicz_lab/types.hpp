#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace orlicz_lab {

using Vec = std::vector<double>;
using ConstVecView = std::span<const double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline double dot(ConstVecView a, ConstVecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Scaled by the largest entry so that tiny and huge vectors neither underflow nor overflow.
inline double euclidean_norm(ConstVecView a) {
  if (a.size() == 1) return std::abs(a[0]);
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  if (m == 0.0 || std::isinf(m)) return m;
  double s = 0.0;
  for (double v : a) s += (v / m) * (v / m);
  return m * std::sqrt(s);
}

inline Vec scaled(ConstVecView a, double c) {
  Vec out(a.begin(), a.end());
  for (double& v : out) v *= c;
  return out;
}

// a + c*b
inline Vec axpy(ConstVecView a, double c, ConstVecView b) {
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * b[i];
  return out;
}

inline double distance(ConstVecView a, ConstVecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline bool is_zero(ConstVecView a) {
  for (double v : a)
    if (v != 0.0) return false;
  return true;
}

/// A value in [0, +inf]. Negative or NaN inputs are rejected at construction;
/// 0 * inf is rejected rather than silently mapped to 0 or NaN.
class ExtendedNonNegReal {
 public:
  constexpr ExtendedNonNegReal() = default;
  explicit ExtendedNonNegReal(double v);

  static ExtendedNonNegReal infinity() { return ExtendedNonNegReal(kInf); }

  double value() const { return v_; }
  bool is_infinite() const { return std::isinf(v_); }
  bool is_finite() const { return !is_infinite(); }

  ExtendedNonNegReal operator+(ExtendedNonNegReal o) const { return ExtendedNonNegReal(v_ + o.v_); }
  ExtendedNonNegReal scaled_by(double c) const;

  friend auto operator<=>(ExtendedNonNegReal a, ExtendedNonNegReal b) { return a.v_ <=> b.v_; }
  friend bool operator==(ExtendedNonNegReal a, ExtendedNonNegReal b) { return a.v_ == b.v_; }
  friend auto operator<=>(ExtendedNonNegReal a, double b) { return a.v_ <=> b; }
  friend bool operator==(ExtendedNonNegReal a, double b) { return a.v_ == b; }

 private:
  double v_ = 0.0;
};

}  // namespace orlicz_lab
