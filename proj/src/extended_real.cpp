#include "orlicz_lab/types.hpp"

#include <stdexcept>

namespace orlicz_lab {

ExtendedNonNegReal::ExtendedNonNegReal(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0)
    throw std::domain_error("ExtendedNonNegReal: value must lie in [0, +inf]");
  if (v == 0.0) v_ = 0.0;  // fold -0.0
}

ExtendedNonNegReal ExtendedNonNegReal::scaled_by(double c) const {
  if (std::isnan(c) || c < 0.0) throw std::domain_error("ExtendedNonNegReal: negative scale");
  if (c == 0.0) {
    if (is_infinite()) throw std::domain_error("ExtendedNonNegReal: 0 * inf is undefined");
    return ExtendedNonNegReal(0.0);
  }
  return ExtendedNonNegReal(c * v_);
}

}  // namespace orlicz_lab
