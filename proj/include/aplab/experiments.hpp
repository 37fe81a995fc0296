#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aplab/characteristics.hpp"
#include "aplab/normest.hpp"

namespace aplab {

struct SweepRow {
  double t = 0.0;
  double delta = 0.0;  // d_*(w_t, w0) = |t| * ||phi||_*
  double ap_char = 0.0;
  double norm_lb = 0.0;
  long runtime_ms = 0;
};

// One row per t plus a final t = 0 row.  Pool and seed are shared across
// the sweep so differences reflect the weight, not estimator noise.
// Rows whose weight leaves the value range are skipped.
std::vector<SweepRow> continuity_sweep(const Weight& w0, const GridFunction& phi,
                                       const std::vector<double>& t_list,
                                       LebesgueExponent p, const EstimatorConfig& cfg);

struct HolderRecord {
  int pair_id = 0;
  double R = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double factor_ratio = 0.0;
  double factor_base = 0.0;
};

std::vector<HolderRecord> holder_chain_scan(
    const std::vector<std::pair<Weight, Weight>>& pairs, LebesgueExponent p,
    const std::vector<double>& R_list);

struct BuckleyRow {
  double alpha = 0.0;
  double ap_char = 0.0;
  double norm_lb = 0.0;
  double ratio = 0.0;  // norm_lb / ap_char^{1/(p-1)}
};

struct BuckleyStudy {
  std::vector<BuckleyRow> rows;
  // Least-squares slope of log(norm_lb) vs log(ap_char) over rows with
  // ap_char > 2; NaN when fewer than two rows qualify.
  double slope = 0.0;
};

// Power weights |x|^alpha; every alpha must lie strictly in (-1, p-1).
BuckleyStudy buckley_study(const std::vector<double>& alpha_list, LebesgueExponent p,
                           const Grid& grid, const EstimatorConfig& cfg);

struct AuditRow {
  long trial = 0;
  std::string check;  // symmetry | triangle | scaling | indiscernible
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct AuditReport {
  std::vector<AuditRow> rows;
  long violations = 0;
};

// Random triples from `weights`: symmetry (bitwise), triangle (1e-12
// absolute slack), d_*(w, lambda*w) <= 1e-12, and identity of
// indiscernibles modulo scaling.
AuditReport metric_axioms_audit(const std::vector<Weight>& weights, long trials,
                                std::uint64_t seed = 1);

Weight random_log_uniform_weight(const Grid& grid, double lo, double hi,
                                 std::uint64_t seed);

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);
void write_holder_csv(const std::vector<HolderRecord>& rows, const std::string& path);
void write_buckley_csv(const std::vector<BuckleyRow>& rows, const std::string& path);
void write_audit_csv(const AuditReport& report, const std::string& path);

}  // namespace aplab
