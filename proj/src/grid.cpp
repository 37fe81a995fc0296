#include "aplab/grid.hpp"

#include <cmath>
#include <string>

namespace aplab {

Grid::Grid(double half_width, std::size_t n_cells)
    : half_width_(half_width), n_cells_(n_cells) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(Errc::invalid_argument,
                "half_width must be positive and finite, got " + std::to_string(half_width));
  }
  if (n_cells < 2 || !std::has_single_bit(n_cells)) {
    throw Error(Errc::invalid_argument,
                "n_cells must be a power of two >= 2, got " + std::to_string(n_cells));
  }
  cell_width_ = 2.0 * half_width_ / static_cast<double>(n_cells_);
  if (!(cell_width_ > 0.0)) {
    throw Error(Errc::invalid_argument, "cell_width underflowed to zero");
  }
}

LebesgueExponent::LebesgueExponent(double p) : p_(p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(Errc::invalid_argument,
                "exponent p must satisfy 1 < p < infinity, got " + std::to_string(p));
  }
}

}  // namespace aplab
