#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aplab/grid.hpp"

namespace aplab {

// Real-valued piecewise-constant function on a Grid.  All values finite.
// Immutable after construction.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction constant(const Grid& grid, double value);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  bool same_grid_as(const GridFunction& other) const noexcept {
    return grid_ == other.grid_;
  }

 private:
  Grid grid_;
  std::vector<double> values_;
};

// Guard rails keeping w^R and w^{-1/(p-1)} inside double range.
struct WeightLimits {
  double floor = 1e-12;
  double ceiling = 1e12;
};

// Strictly positive grid function with every value in [floor, ceiling].
class Weight {
 public:
  explicit Weight(GridFunction fn, WeightLimits limits = {});

  const GridFunction& fn() const noexcept { return fn_; }
  const Grid& grid() const noexcept { return fn_.grid(); }
  std::span<const double> values() const noexcept { return fn_.values(); }
  double operator[](std::size_t i) const noexcept { return fn_[i]; }
  std::size_t size() const noexcept { return fn_.size(); }
  WeightLimits limits() const noexcept { return limits_; }

 private:
  GridFunction fn_;
  WeightLimits limits_;
};

// w_i = |midpoint(i)|^alpha.  Midpoints never hit 0 on an even grid.
Weight make_power_weight(const Grid& grid, double alpha, WeightLimits limits = {});

// w_t with values w0_i * exp(t * phi_i); t = 0 returns w0 exactly.
Weight perturb_weight(const Weight& w0, const GridFunction& phi, double t);

GridFunction pointwise_log(const GridFunction& f);
GridFunction pointwise_exp(const GridFunction& f);
GridFunction pointwise_power(const GridFunction& f, double r);
GridFunction pointwise_abs(const GridFunction& f);
GridFunction pointwise_scale(const GridFunction& f, double lambda);
GridFunction pointwise_add(const GridFunction& f, const GridFunction& g);
GridFunction pointwise_divide(const GridFunction& f, const GridFunction& g);

}  // namespace aplab
