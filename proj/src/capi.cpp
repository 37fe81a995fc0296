#include "aplab.h"

#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "aplab/characteristics.hpp"
#include "aplab/experiments.hpp"
#include "aplab/grid_function.hpp"
#include "aplab/io.hpp"
#include "aplab/maximal.hpp"
#include "aplab/normest.hpp"

struct aplab_grid_s {
  aplab::Grid grid;
};

struct aplab_fn_s {
  aplab::GridFunction fn;
};

namespace {

thread_local std::string g_last_error;

aplab_status to_status(aplab::Errc code) {
  switch (code) {
    case aplab::Errc::invalid_argument:
      return APLAB_ERR_INVALID;
    case aplab::Errc::grid_mismatch:
      return APLAB_ERR_GRID_MISMATCH;
    case aplab::Errc::range:
      return APLAB_ERR_RANGE;
    case aplab::Errc::domain:
      return APLAB_ERR_DOMAIN;
    case aplab::Errc::parse:
      return APLAB_ERR_PARSE;
    case aplab::Errc::io:
      return APLAB_ERR_IO;
    case aplab::Errc::contract:
      return APLAB_ERR_CONTRACT;
  }
  return APLAB_ERR_UNKNOWN;
}

template <typename Fn>
aplab_status guarded(Fn&& body) {
  try {
    body();
    return APLAB_OK;
  } catch (const aplab::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return APLAB_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return APLAB_ERR_UNKNOWN;
  }
}

aplab_status require(bool cond, const char* msg) {
  if (!cond) {
    g_last_error = msg;
    return APLAB_ERR_INVALID;
  }
  return APLAB_OK;
}

aplab::Weight as_weight(const aplab_fn* fn) { return aplab::Weight(fn->fn); }

aplab::EstimatorConfig to_config(const aplab_estimator_config* cfg) {
  aplab::EstimatorConfig out;
  if (cfg) {
    out.pool_constant = cfg->pool_constant != 0;
    out.pool_indicators = cfg->pool_indicators != 0;
    out.pool_profiles = cfg->pool_profiles != 0;
    out.pool_random = cfg->pool_random != 0;
    out.random_count = static_cast<int>(cfg->random_count);
    out.budget = cfg->budget;
    out.seed = cfg->seed;
  }
  return out;
}

}  // namespace

extern "C" {

const char* aplab_last_error(void) { return g_last_error.c_str(); }

aplab_status aplab_grid_create(double half_width, long n_cells, aplab_grid** out) {
  if (auto st = require(out && n_cells > 0, "null output or nonpositive n_cells"))
    return st;
  return guarded([&] {
    *out = new aplab_grid_s{aplab::Grid(half_width, static_cast<std::size_t>(n_cells))};
  });
}

void aplab_grid_destroy(aplab_grid* grid) { delete grid; }

double aplab_grid_half_width(const aplab_grid* grid) { return grid->grid.half_width(); }
long aplab_grid_n_cells(const aplab_grid* grid) {
  return static_cast<long>(grid->grid.n_cells());
}
double aplab_grid_cell_width(const aplab_grid* grid) { return grid->grid.cell_width(); }

aplab_status aplab_fn_const(const aplab_grid* grid, double value, aplab_fn** out) {
  if (auto st = require(grid && out, "null argument")) return st;
  return guarded([&] {
    *out = new aplab_fn_s{aplab::GridFunction::constant(grid->grid, value)};
  });
}

aplab_status aplab_fn_from_values(const aplab_grid* grid, const double* values, long n,
                                  aplab_fn** out) {
  if (auto st = require(grid && values && out && n > 0, "null argument")) return st;
  return guarded([&] {
    std::vector<double> v(values, values + n);
    *out = new aplab_fn_s{aplab::GridFunction(grid->grid, std::move(v))};
  });
}

aplab_status aplab_fn_power_weight(const aplab_grid* grid, double alpha, aplab_fn** out) {
  if (auto st = require(grid && out, "null argument")) return st;
  return guarded([&] {
    *out = new aplab_fn_s{aplab::make_power_weight(grid->grid, alpha).fn()};
  });
}

aplab_status aplab_fn_perturb(const aplab_fn* w0, const aplab_fn* phi, double t,
                              aplab_fn** out) {
  if (auto st = require(w0 && phi && out, "null argument")) return st;
  return guarded([&] {
    *out = new aplab_fn_s{aplab::perturb_weight(as_weight(w0), phi->fn, t).fn()};
  });
}

aplab_status aplab_fn_random_log_uniform(const aplab_grid* grid, double lo, double hi,
                                         uint64_t seed, aplab_fn** out) {
  if (auto st = require(grid && out, "null argument")) return st;
  return guarded([&] {
    *out = new aplab_fn_s{aplab::random_log_uniform_weight(grid->grid, lo, hi, seed).fn()};
  });
}

void aplab_fn_destroy(aplab_fn* fn) { delete fn; }

long aplab_fn_size(const aplab_fn* fn) { return static_cast<long>(fn->fn.size()); }

aplab_status aplab_fn_copy_values(const aplab_fn* fn, double* out, long n) {
  if (auto st = require(fn && out, "null argument")) return st;
  if (auto st = require(static_cast<std::size_t>(n) == fn->fn.size(),
                        "buffer size does not match n_cells"))
    return st;
  std::memcpy(out, fn->fn.values().data(), fn->fn.size() * sizeof(double));
  return APLAB_OK;
}

aplab_status aplab_fn_grid_params(const aplab_fn* fn, double* half_width, long* n_cells) {
  if (auto st = require(fn && half_width && n_cells, "null argument")) return st;
  *half_width = fn->fn.grid().half_width();
  *n_cells = static_cast<long>(fn->fn.grid().n_cells());
  return APLAB_OK;
}

aplab_status aplab_fn_read_csv(const char* path, aplab_fn** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new aplab_fn_s{aplab::read_grid_function(path)}; });
}

aplab_status aplab_fn_write_csv(const aplab_fn* fn, const char* path) {
  if (auto st = require(fn && path, "null argument")) return st;
  return guarded([&] { aplab::write_grid_function(fn->fn, path); });
}

aplab_status aplab_ap_characteristic(const aplab_fn* w, double p, double* value,
                                     long* witness_start, long* witness_end) {
  if (auto st = require(w && value, "null argument")) return st;
  return guarded([&] {
    const auto res = aplab::ap_characteristic(as_weight(w), aplab::LebesgueExponent(p));
    *value = res.value;
    if (witness_start) *witness_start = static_cast<long>(res.witness.start);
    if (witness_end) *witness_end = static_cast<long>(res.witness.end);
  });
}

aplab_status aplab_bmo_seminorm(const aplab_fn* f, double* value, long* witness_start,
                                long* witness_end) {
  if (auto st = require(f && value, "null argument")) return st;
  return guarded([&] {
    const auto res = aplab::bmo_seminorm(f->fn);
    *value = res.value;
    if (witness_start) *witness_start = static_cast<long>(res.witness.start);
    if (witness_end) *witness_end = static_cast<long>(res.witness.end);
  });
}

aplab_status aplab_dstar(const aplab_fn* u, const aplab_fn* v, double* value) {
  if (auto st = require(u && v && value, "null argument")) return st;
  return guarded([&] { *value = aplab::dstar(as_weight(u), as_weight(v)); });
}

aplab_status aplab_holder_chain(const aplab_fn* w, const aplab_fn* w0, double p, double R,
                                double* lhs, double* rhs, double* factor_ratio,
                                double* factor_base) {
  if (auto st = require(w && w0 && lhs && rhs, "null argument")) return st;
  return guarded([&] {
    const auto b = aplab::holder_chain_bound(as_weight(w), as_weight(w0),
                                             aplab::LebesgueExponent(p),
                                             aplab::HolderParams(R));
    *lhs = b.lhs;
    *rhs = b.rhs;
    if (factor_ratio) *factor_ratio = b.factor_ratio;
    if (factor_base) *factor_base = b.factor_base;
  });
}

aplab_status aplab_maximal_apply(const aplab_fn* f, aplab_fn** mf) {
  if (auto st = require(f && mf, "null argument")) return st;
  return guarded([&] {
    *mf = new aplab_fn_s{aplab::apply_maximal(f->fn).values};
  });
}

aplab_status aplab_weighted_lp_norm(const aplab_fn* f, const aplab_fn* w, double p,
                                    double* value) {
  if (auto st = require(f && w && value, "null argument")) return st;
  return guarded([&] {
    *value = aplab::weighted_lp_norm(f->fn, as_weight(w), aplab::LebesgueExponent(p));
  });
}

aplab_status aplab_rayleigh_quotient(const aplab_fn* f, const aplab_fn* w, double p,
                                     double* value) {
  if (auto st = require(f && w && value, "null argument")) return st;
  return guarded([&] {
    *value = aplab::rayleigh_quotient(f->fn, as_weight(w), aplab::LebesgueExponent(p));
  });
}

void aplab_estimator_config_default(aplab_estimator_config* cfg) {
  if (!cfg) return;
  const aplab::EstimatorConfig d;
  cfg->pool_constant = d.pool_constant ? 1 : 0;
  cfg->pool_indicators = d.pool_indicators ? 1 : 0;
  cfg->pool_profiles = d.pool_profiles ? 1 : 0;
  cfg->pool_random = d.pool_random ? 1 : 0;
  cfg->random_count = d.random_count;
  cfg->budget = d.budget;
  cfg->seed = d.seed;
}

aplab_status aplab_estimate_norm(const aplab_fn* w, double p,
                                 const aplab_estimator_config* cfg, double* lower_bound,
                                 long* evaluations, aplab_fn** witness) {
  if (auto st = require(w && lower_bound, "null argument")) return st;
  return guarded([&] {
    auto est = aplab::estimate_norm(as_weight(w), aplab::LebesgueExponent(p), to_config(cfg));
    *lower_bound = est.lower_bound;
    if (evaluations) *evaluations = est.evaluations;
    if (witness) *witness = new aplab_fn_s{std::move(est.witness)};
  });
}

aplab_status aplab_run_sweep(const aplab_fn* w0, const aplab_fn* phi,
                             const double* t_list, long nt, double p,
                             const aplab_estimator_config* cfg, const char* out_csv) {
  if (auto st = require(w0 && phi && t_list && nt > 0 && out_csv, "null argument"))
    return st;
  return guarded([&] {
    const std::vector<double> ts(t_list, t_list + nt);
    const auto rows = aplab::continuity_sweep(as_weight(w0), phi->fn, ts,
                                              aplab::LebesgueExponent(p), to_config(cfg));
    aplab::write_sweep_csv(rows, out_csv);
  });
}

aplab_status aplab_run_holder_scan(const aplab_fn* const* ws, const aplab_fn* const* w0s,
                                   long n_pairs, double p, const double* R_list, long nr,
                                   const char* out_csv, long* violations) {
  if (auto st = require(ws && w0s && n_pairs > 0 && R_list && nr > 0 && out_csv,
                        "null argument"))
    return st;
  return guarded([&] {
    std::vector<std::pair<aplab::Weight, aplab::Weight>> pairs;
    pairs.reserve(static_cast<std::size_t>(n_pairs));
    for (long i = 0; i < n_pairs; ++i) {
      pairs.emplace_back(as_weight(ws[i]), as_weight(w0s[i]));
    }
    const std::vector<double> rs(R_list, R_list + nr);
    const auto records =
        aplab::holder_chain_scan(pairs, aplab::LebesgueExponent(p), rs);
    aplab::write_holder_csv(records, out_csv);
    if (violations) {
      long bad = 0;
      for (const auto& r : records) {
        if (r.lhs > r.rhs * (1.0 + 1e-9)) {
          ++bad;
        }
      }
      *violations = bad;
    }
  });
}

aplab_status aplab_run_buckley(const aplab_grid* grid, const double* alpha_list, long na,
                               double p, const aplab_estimator_config* cfg,
                               const char* out_csv, double* slope) {
  if (auto st = require(grid && alpha_list && na > 0 && out_csv, "null argument"))
    return st;
  return guarded([&] {
    const std::vector<double> alphas(alpha_list, alpha_list + na);
    const auto study = aplab::buckley_study(alphas, aplab::LebesgueExponent(p),
                                            grid->grid, to_config(cfg));
    aplab::write_buckley_csv(study.rows, out_csv);
    if (slope) *slope = study.slope;
  });
}

aplab_status aplab_run_metric_audit(const aplab_grid* grid, long trials, uint64_t seed,
                                    const char* out_csv, long* violations) {
  if (auto st = require(grid && trials > 0 && out_csv, "null argument")) return st;
  return guarded([&] {
    std::vector<aplab::Weight> weights;
    const std::size_t family = 16;
    weights.reserve(family);
    for (std::size_t i = 0; i < family; ++i) {
      weights.push_back(
          aplab::random_log_uniform_weight(grid->grid, -2.0, 2.0, seed * 1000003u + i));
    }
    const auto report = aplab::metric_axioms_audit(weights, trials, seed);
    aplab::write_audit_csv(report, out_csv);
    if (violations) *violations = report.violations;
  });
}

}  // extern "C"
