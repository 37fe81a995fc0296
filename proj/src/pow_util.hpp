#pragma once

#include <cmath>

namespace aplab::detail {

// pow with the exponents that dominate the inner loops special-cased.
inline double pow_fast(double x, double e) {
  if (e == 1.0) return x;
  if (e == 2.0) return x * x;
  if (e == 0.5) return std::sqrt(x);
  if (e == -1.0) return 1.0 / x;
  if (e == -2.0) return 1.0 / (x * x);
  if (e == -0.5) return 1.0 / std::sqrt(x);
  return std::pow(x, e);
}

}  // namespace aplab::detail
