#pragma once

#include <bit>
#include <compare>
#include <cstddef>

#include "aplab/errors.hpp"

namespace aplab {

// Uniform partition of [-half_width, half_width) into n_cells half-open
// cells of equal width.  n_cells must be a power of two, at least 2.
class Grid {
 public:
  Grid(double half_width, std::size_t n_cells);

  double half_width() const noexcept { return half_width_; }
  std::size_t n_cells() const noexcept { return n_cells_; }
  double cell_width() const noexcept { return cell_width_; }

  double cell_left(std::size_t i) const noexcept {
    return -half_width_ + static_cast<double>(i) * cell_width_;
  }
  double cell_midpoint(std::size_t i) const noexcept {
    return -half_width_ + (static_cast<double>(i) + 0.5) * cell_width_;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double half_width_;
  std::size_t n_cells_;
  double cell_width_;
};

// Cell-aligned half-open interval [start, end) with 0 <= start < end <= n_cells.
struct CellInterval {
  std::size_t start = 0;
  std::size_t end = 0;
  friend auto operator<=>(const CellInterval&, const CellInterval&) = default;
};

// Exponent p with 1 < p < infinity.
class LebesgueExponent {
 public:
  explicit LebesgueExponent(double p);

  double value() const noexcept { return p_; }
  // p' = p/(p-1)
  double conjugate() const noexcept { return p_ / (p_ - 1.0); }
  // exponent -1/(p-1) of the dual weight
  double dual_power() const noexcept { return -1.0 / (p_ - 1.0); }

 private:
  double p_;
};

}  // namespace aplab
