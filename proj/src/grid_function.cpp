#include "aplab/grid_function.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace aplab {

namespace {

void check_finite(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(Errc::range,
                  "nonfinite value at cell " + std::to_string(i));
    }
  }
}

void check_same_grid(const GridFunction& f, const GridFunction& g) {
  if (!f.same_grid_as(g)) {
    throw Error(Errc::grid_mismatch, "operands live on different grids");
  }
}

}  // namespace

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n_cells()) {
    throw Error(Errc::invalid_argument,
                "value count " + std::to_string(values_.size()) +
                    " does not match n_cells " + std::to_string(grid_.n_cells()));
  }
  check_finite(values_);
}

GridFunction GridFunction::constant(const Grid& grid, double value) {
  return GridFunction(grid, std::vector<double>(grid.n_cells(), value));
}

Weight::Weight(GridFunction fn, WeightLimits limits)
    : fn_(std::move(fn)), limits_(limits) {
  if (!(limits_.floor > 0.0) || !(limits_.ceiling > limits_.floor)) {
    throw Error(Errc::invalid_argument, "weight limits must satisfy 0 < floor < ceiling");
  }
  const auto vals = fn_.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!(vals[i] >= limits_.floor && vals[i] <= limits_.ceiling)) {
      throw Error(Errc::range,
                  "weight value " + std::to_string(vals[i]) + " at cell " +
                      std::to_string(i) + " outside [floor, ceiling]");
    }
  }
}

Weight make_power_weight(const Grid& grid, double alpha, WeightLimits limits) {
  std::vector<double> v(grid.n_cells());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = std::pow(std::abs(grid.cell_midpoint(i)), alpha);
  }
  return Weight(GridFunction(grid, std::move(v)), limits);
}

Weight perturb_weight(const Weight& w0, const GridFunction& phi, double t) {
  check_same_grid(w0.fn(), phi);
  if (t == 0.0) {
    return w0;
  }
  std::vector<double> v(w0.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = w0[i] * std::exp(t * phi[i]);
  }
  return Weight(GridFunction(w0.grid(), std::move(v)), w0.limits());
}

GridFunction pointwise_log(const GridFunction& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(f[i] > 0.0)) {
      throw Error(Errc::domain, "log of nonpositive value at cell " + std::to_string(i));
    }
    v[i] = std::log(f[i]);
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction pointwise_exp(const GridFunction& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = std::exp(f[i]);
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction pointwise_power(const GridFunction& f, double r) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = std::pow(f[i], r);
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction pointwise_abs(const GridFunction& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = std::abs(f[i]);
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction pointwise_scale(const GridFunction& f, double lambda) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = lambda * f[i];
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction pointwise_add(const GridFunction& f, const GridFunction& g) {
  check_same_grid(f, g);
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = f[i] + g[i];
  }
  return GridFunction(f.grid(), std::move(v));
}

GridFunction pointwise_divide(const GridFunction& f, const GridFunction& g) {
  check_same_grid(f, g);
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(g[i] > 0.0)) {
      throw Error(Errc::domain, "divide by nonpositive value at cell " + std::to_string(i));
    }
    v[i] = f[i] / g[i];
  }
  return GridFunction(f.grid(), std::move(v));
}

}  // namespace aplab
