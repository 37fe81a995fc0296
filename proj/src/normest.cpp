#include "aplab/normest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "aplab/parallel.hpp"
#include "pow_util.hpp"

namespace aplab {

namespace {

// Stable across standard library implementations, unlike the
// distribution templates.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::vector<double>> build_pool(const Grid& grid, LebesgueExponent p,
                                            const EstimatorConfig& cfg,
                                            std::vector<std::string>* tags) {
  const std::size_t n = grid.n_cells();
  std::vector<std::vector<double>> pool;

  if (cfg.pool_constant) {
    tags->push_back("constant");
    pool.emplace_back(n, 1.0);
  }

  if (cfg.pool_indicators) {
    tags->push_back("dyadic-indicator");
    // Dyadic lengths; start lattice coarsened to cap the pool at a few
    // hundred candidates per level.
    const std::size_t start_step_floor = std::max<std::size_t>(1, n / 64);
    for (std::size_t len = 1; len <= n; len *= 2) {
      const std::size_t step = std::max(len, start_step_floor);
      for (std::size_t s = 0; s + len <= n; s += step) {
        std::vector<double> f(n, 0.0);
        std::fill(f.begin() + static_cast<long>(s), f.begin() + static_cast<long>(s + len), 1.0);
        pool.push_back(std::move(f));
      }
    }
  }

  if (cfg.pool_profiles) {
    tags->push_back("singularity-profile");
    // max(|x - a|, h/2)^{-theta}: near-extremizers of the unweighted
    // problem.  The clamp at half a cell keeps the values finite when the
    // center lands on a midpoint; theta runs past the critical exponent
    // 1/p' because the discrete sup is attained slightly beyond it.
    const double floor_dist = 0.5 * grid.cell_width();
    const double l = grid.half_width();
    const double theta_scale = 1.0 / p.conjugate();
    for (int k = 1; k <= 14; ++k) {
      const double theta = 0.1 * k * theta_scale;
      for (int j = 0; j <= 8; ++j) {
        const double a = -l + 0.25 * j * l;
        std::vector<double> f(n);
        for (std::size_t i = 0; i < n; ++i) {
          f[i] = std::pow(std::max(std::abs(grid.cell_midpoint(i) - a), floor_dist), -theta);
        }
        pool.push_back(std::move(f));
      }
    }
  }

  if (cfg.pool_random && cfg.random_count > 0) {
    tags->push_back("random-log-uniform");
    std::mt19937_64 rng(cfg.seed);
    for (int c = 0; c < cfg.random_count; ++c) {
      std::vector<double> f(n);
      for (std::size_t i = 0; i < n; ++i) {
        f[i] = std::exp(-1.0 + 2.0 * uniform_unit(rng));
      }
      pool.push_back(std::move(f));
    }
  }

  return pool;
}

}  // namespace

double rayleigh_quotient(const GridFunction& f, const Weight& w, LebesgueExponent p) {
  const double den = weighted_lp_norm(f, w, p);
  if (den == 0.0) {
    throw Error(Errc::invalid_argument, "rayleigh_quotient of the zero function");
  }
  const double num = weighted_lp_norm(maximal_values(f), w, p);
  return num / den;
}

NormEstimate estimate_norm(const Weight& w, LebesgueExponent p, const EstimatorConfig& cfg) {
  const Grid& grid = w.grid();
  const std::size_t n = grid.n_cells();
  if (cfg.budget < 0) {
    throw Error(Errc::invalid_argument, "budget must be >= 0");
  }

  std::vector<std::string> tags;
  std::vector<std::vector<double>> pool = build_pool(grid, p, cfg, &tags);
  if (pool.empty() && cfg.budget == 0) {
    throw Error(Errc::invalid_argument, "empty pool with zero ascent budget");
  }

  long evaluations = 0;
  std::vector<double> current;
  double best_r = 0.0;

  if (pool.empty()) {
    current.assign(n, 1.0);
    best_r = rayleigh_quotient(GridFunction(grid, current), w, p);
    ++evaluations;
  } else {
    std::vector<double> ratios(pool.size());
    parallel_chunks(pool.size(), [&](std::size_t, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        ratios[i] = rayleigh_quotient(GridFunction(grid, pool[i]), w, p);
      }
    });
    evaluations += static_cast<long>(pool.size());
    std::size_t arg = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (ratios[i] > ratios[arg]) {
        arg = i;  // strict >: ties go to the smaller pool index
      }
    }
    current = std::move(pool[arg]);
    best_r = ratios[arg];
  }

  // Coordinate ascent with multiplicative steps; greedy per cell.
  long used = 0;
  bool converged = false;
  while (!converged && used < cfg.budget) {
    const double sweep_start = best_r;
    for (std::size_t i = 0; i < n && used < cfg.budget; ++i) {
      double best_move_r = best_r;
      double best_mult = 0.0;
      for (const double m : cfg.step_multipliers) {
        if (used >= cfg.budget) {
          break;
        }
        const double nv = current[i] * m;
        if (!std::isfinite(nv) || nv <= 0.0 || nv < 1e-300 || nv > 1e300) {
          continue;
        }
        std::vector<double> trial = current;
        trial[i] = nv;
        const double r = rayleigh_quotient(GridFunction(grid, std::move(trial)), w, p);
        ++used;
        if (r > best_move_r) {
          best_move_r = r;
          best_mult = m;
        }
      }
      if (best_mult != 0.0) {
        current[i] *= best_mult;
        best_r = best_move_r;
      }
    }
    if (best_r <= sweep_start * (1.0 + cfg.stop_tol)) {
      converged = true;
    }
  }
  evaluations += used;

  return NormEstimate{best_r, GridFunction(grid, std::move(current)), evaluations,
                      std::move(tags), cfg.seed};
}

}  // namespace aplab
