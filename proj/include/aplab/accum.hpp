#pragma once

#include <cmath>

namespace aplab {

// Neumaier compensated accumulator.  Interval sums must not lose accuracy
// relative to the interval itself, so plain global prefix sums (whose
// cancellation error scales with the position, not the interval) are not
// used anywhere a supremum or norm is formed.
struct NeumaierSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) noexcept {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }

  double value() const noexcept { return s + c; }
};

}  // namespace aplab
