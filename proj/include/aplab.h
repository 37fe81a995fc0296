/* C interface to the weighted-estimate laboratory.
 *
 * Opaque handles, integer status codes.  Every function returning
 * aplab_status sets its output parameters only on APLAB_OK; on failure
 * aplab_last_error() returns a thread-local description of the problem.
 */
#ifndef APLAB_H
#define APLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aplab_grid_s aplab_grid;
typedef struct aplab_fn_s aplab_fn; /* grid function; weights are the positive case */

typedef enum {
  APLAB_OK = 0,
  APLAB_ERR_INVALID = 1,
  APLAB_ERR_GRID_MISMATCH = 2,
  APLAB_ERR_RANGE = 3,
  APLAB_ERR_DOMAIN = 4,
  APLAB_ERR_PARSE = 5,
  APLAB_ERR_IO = 6,
  APLAB_ERR_CONTRACT = 7,
  APLAB_ERR_UNKNOWN = 99
} aplab_status;

const char* aplab_last_error(void);

/* ---- grids ---- */
aplab_status aplab_grid_create(double half_width, long n_cells, aplab_grid** out);
void aplab_grid_destroy(aplab_grid* grid);
double aplab_grid_half_width(const aplab_grid* grid);
long aplab_grid_n_cells(const aplab_grid* grid);
double aplab_grid_cell_width(const aplab_grid* grid);

/* ---- grid functions ---- */
aplab_status aplab_fn_const(const aplab_grid* grid, double value, aplab_fn** out);
aplab_status aplab_fn_from_values(const aplab_grid* grid, const double* values, long n,
                                  aplab_fn** out);
aplab_status aplab_fn_power_weight(const aplab_grid* grid, double alpha, aplab_fn** out);
aplab_status aplab_fn_perturb(const aplab_fn* w0, const aplab_fn* phi, double t,
                              aplab_fn** out);
aplab_status aplab_fn_random_log_uniform(const aplab_grid* grid, double lo, double hi,
                                         uint64_t seed, aplab_fn** out);
void aplab_fn_destroy(aplab_fn* fn);
long aplab_fn_size(const aplab_fn* fn);
aplab_status aplab_fn_copy_values(const aplab_fn* fn, double* out, long n);
aplab_status aplab_fn_grid_params(const aplab_fn* fn, double* half_width, long* n_cells);

/* ---- CSV (format: `# half_width=... n_cells=...`, `cell_index,value` rows,
 * plus a `<path>.json` sidecar) ---- */
aplab_status aplab_fn_read_csv(const char* path, aplab_fn** out);
aplab_status aplab_fn_write_csv(const aplab_fn* fn, const char* path);

/* ---- characteristics ---- */
aplab_status aplab_ap_characteristic(const aplab_fn* w, double p, double* value,
                                     long* witness_start, long* witness_end);
aplab_status aplab_bmo_seminorm(const aplab_fn* f, double* value, long* witness_start,
                                long* witness_end);
aplab_status aplab_dstar(const aplab_fn* u, const aplab_fn* v, double* value);
aplab_status aplab_holder_chain(const aplab_fn* w, const aplab_fn* w0, double p, double R,
                                double* lhs, double* rhs, double* factor_ratio,
                                double* factor_base);

/* ---- maximal operator and norms ---- */
aplab_status aplab_maximal_apply(const aplab_fn* f, aplab_fn** mf);
aplab_status aplab_weighted_lp_norm(const aplab_fn* f, const aplab_fn* w, double p,
                                    double* value);
aplab_status aplab_rayleigh_quotient(const aplab_fn* f, const aplab_fn* w, double p,
                                     double* value);

/* ---- norm estimation ---- */
typedef struct {
  int pool_constant;
  int pool_indicators;
  int pool_profiles;
  int pool_random;
  long random_count;
  long budget;
  uint64_t seed;
} aplab_estimator_config;

void aplab_estimator_config_default(aplab_estimator_config* cfg);
aplab_status aplab_estimate_norm(const aplab_fn* w, double p,
                                 const aplab_estimator_config* cfg, double* lower_bound,
                                 long* evaluations, aplab_fn** witness);

/* ---- studies; each writes one CSV ---- */
aplab_status aplab_run_sweep(const aplab_fn* w0, const aplab_fn* phi,
                             const double* t_list, long nt, double p,
                             const aplab_estimator_config* cfg, const char* out_csv);
aplab_status aplab_run_holder_scan(const aplab_fn* const* ws, const aplab_fn* const* w0s,
                                   long n_pairs, double p, const double* R_list, long nr,
                                   const char* out_csv, long* violations);
aplab_status aplab_run_buckley(const aplab_grid* grid, const double* alpha_list, long na,
                               double p, const aplab_estimator_config* cfg,
                               const char* out_csv, double* slope);
aplab_status aplab_run_metric_audit(const aplab_grid* grid, long trials, uint64_t seed,
                                    const char* out_csv, long* violations);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* APLAB_H */
