#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "aplab/grid_function.hpp"

namespace testutil {

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double ulp(double x) {
  const double ax = std::abs(x);
  return std::nextafter(ax, std::numeric_limits<double>::infinity()) - ax;
}

inline bool close_ulp(double a, double b, double k) {
  return std::abs(a - b) <= k * ulp(std::max(std::abs(a), std::abs(b)));
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

inline aplab::Weight random_weight(const aplab::Grid& grid, std::mt19937_64& rng,
                                   double log_lo = -2.0, double log_hi = 2.0) {
  std::vector<double> v(grid.n_cells());
  for (auto& x : v) {
    x = std::exp(log_lo + (log_hi - log_lo) * uniform_unit(rng));
  }
  return aplab::Weight(aplab::GridFunction(grid, std::move(v)));
}

inline aplab::GridFunction random_function(const aplab::Grid& grid, std::mt19937_64& rng,
                                           double lo = -2.0, double hi = 2.0) {
  std::vector<double> v(grid.n_cells());
  for (auto& x : v) {
    x = lo + (hi - lo) * uniform_unit(rng);
  }
  return aplab::GridFunction(grid, std::move(v));
}

// ---- independent oracles: plain loops, no prefix sums, no shared code ----

inline double oracle_ap(const std::vector<double>& w, double p) {
  const std::size_t n = w.size();
  double best = -1.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      double s1 = 0.0;
      double s2 = 0.0;
      for (std::size_t i = a; i < b; ++i) {
        s1 += w[i];
        s2 += std::pow(w[i], -1.0 / (p - 1.0));
      }
      const double len = static_cast<double>(b - a);
      const double v = (s1 / len) * std::pow(s2 / len, p - 1.0);
      if (v > best) {
        best = v;
      }
    }
  }
  return best;
}

inline double oracle_bmo(const std::vector<double>& f) {
  const std::size_t n = f.size();
  double best = -1.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      double mean = 0.0;
      for (std::size_t i = a; i < b; ++i) {
        mean += f[i];
      }
      mean /= static_cast<double>(b - a);
      double dev = 0.0;
      for (std::size_t i = a; i < b; ++i) {
        dev += std::abs(f[i] - mean);
      }
      dev /= static_cast<double>(b - a);
      if (dev > best) {
        best = dev;
      }
    }
  }
  return best;
}

inline std::vector<double> oracle_maximal(const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = 0.0;
    for (std::size_t a = 0; a <= i; ++a) {
      for (std::size_t b = i + 1; b <= n; ++b) {
        double s = 0.0;
        for (std::size_t k = a; k < b; ++k) {
          s += std::abs(f[k]);
        }
        s /= static_cast<double>(b - a);
        if (s > best) {
          best = s;
        }
      }
    }
    out[i] = best;
  }
  return out;
}

// Positive root of (p-1)x^p - p x^{p-1} - 1 = 0: the exact L^p(R) norm of
// the continuum uncentered maximal operator.  Bisection.
inline double oracle_continuum_norm(double p) {
  auto g = [p](double x) { return (p - 1.0) * std::pow(x, p) - p * std::pow(x, p - 1.0) - 1.0; };
  double lo = 1.0;
  double hi = 10.0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace testutil
