#include "aplab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <utility>

#include "aplab/io.hpp"

namespace aplab {

namespace {

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::io, "cannot write " + path);
  }
  return out;
}

}  // namespace

std::vector<SweepRow> continuity_sweep(const Weight& w0, const GridFunction& phi,
                                       const std::vector<double>& t_list,
                                       LebesgueExponent p, const EstimatorConfig& cfg) {
  std::vector<double> ts = t_list;
  ts.push_back(0.0);

  std::vector<SweepRow> rows;
  rows.reserve(ts.size());
  for (const double t : ts) {
    const auto t0 = std::chrono::steady_clock::now();
    Weight wt = w0;
    try {
      wt = perturb_weight(w0, phi, t);
    } catch (const Error& e) {
      std::cerr << "sweep: skipping t=" << t << ": " << e.what() << "\n";
      continue;
    }
    SweepRow row;
    row.t = t;
    row.delta = dstar(wt, w0);
    row.ap_char = ap_characteristic(wt, p).value;
    row.norm_lb = estimate_norm(wt, p, cfg).lower_bound;
    row.runtime_ms = elapsed_ms(t0);
    rows.push_back(row);
  }
  return rows;
}

std::vector<HolderRecord> holder_chain_scan(
    const std::vector<std::pair<Weight, Weight>>& pairs, LebesgueExponent p,
    const std::vector<double>& R_list) {
  std::vector<HolderRecord> records;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const double R : R_list) {
      try {
        const HolderChainBound b =
            holder_chain_bound(pairs[i].first, pairs[i].second, p, HolderParams(R));
        records.push_back(
            {static_cast<int>(i), R, b.lhs, b.rhs, b.factor_ratio, b.factor_base});
      } catch (const Error& e) {
        std::cerr << "holder scan: skipping pair " << i << " R=" << R << ": " << e.what()
                  << "\n";
      }
    }
  }
  return records;
}

BuckleyStudy buckley_study(const std::vector<double>& alpha_list, LebesgueExponent p,
                           const Grid& grid, const EstimatorConfig& cfg) {
  BuckleyStudy study;
  const double inv_pm1 = 1.0 / (p.value() - 1.0);
  for (const double alpha : alpha_list) {
    if (!(alpha > -1.0 && alpha < p.value() - 1.0)) {
      throw Error(Errc::invalid_argument,
                  "alpha must lie strictly in (-1, p-1), got " + std::to_string(alpha));
    }
    const Weight w = make_power_weight(grid, alpha);
    BuckleyRow row;
    row.alpha = alpha;
    row.ap_char = ap_characteristic(w, p).value;
    row.norm_lb = estimate_norm(w, p, cfg).lower_bound;
    row.ratio = row.norm_lb / std::pow(row.ap_char, inv_pm1);
    study.rows.push_back(row);
  }

  // log-log least squares over rows with ap_char > 2
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long k = 0;
  for (const auto& row : study.rows) {
    if (row.ap_char > 2.0) {
      const double x = std::log(row.ap_char);
      const double y = std::log(row.norm_lb);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++k;
    }
  }
  if (k >= 2) {
    study.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  } else {
    study.slope = std::numeric_limits<double>::quiet_NaN();
  }
  return study;
}

AuditReport metric_axioms_audit(const std::vector<Weight>& weights, long trials,
                                std::uint64_t seed) {
  if (weights.size() < 3) {
    throw Error(Errc::invalid_argument, "audit needs at least three weights");
  }
  for (const auto& w : weights) {
    if (!w.fn().same_grid_as(weights.front().fn())) {
      throw Error(Errc::grid_mismatch, "audit weights live on different grids");
    }
  }

  AuditReport report;
  std::mt19937_64 rng(seed);
  auto pick = [&]() { return rng() % weights.size(); };

  for (long trial = 0; trial < trials; ++trial) {
    const Weight& u = weights[pick()];
    const Weight& v = weights[pick()];
    const Weight& x = weights[pick()];

    const double duv = dstar(u, v);
    const double dvu = dstar(v, u);
    report.rows.push_back({trial, "symmetry", duv, dvu, duv == dvu});

    const double dux = dstar(u, x);
    const double dvx = dstar(v, x);
    report.rows.push_back({trial, "triangle", dux, duv + dvx + 1e-12, dux <= duv + dvx + 1e-12});

    const double lambda = std::exp(-3.0 + 6.0 * uniform_unit(rng));
    const Weight scaled(pointwise_scale(u.fn(), lambda),
                        WeightLimits{u.limits().floor * 1e-2, u.limits().ceiling * 1e2});
    const double dsc = dstar(u, scaled);
    report.rows.push_back({trial, "scaling", dsc, 1e-12, dsc <= 1e-12});

    if (dsc <= 1e-12) {
      // identity of indiscernibles modulo scaling: the ratio must be
      // constant to within 1e-6 relative spread
      double rmin = std::numeric_limits<double>::infinity();
      double rmax = -rmin;
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = u[i] / scaled[i];
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
      }
      const double spread = (rmax - rmin) / rmin;
      report.rows.push_back({trial, "indiscernible", spread, 1e-6, spread <= 1e-6});
    }
  }

  for (const auto& row : report.rows) {
    if (!row.pass) {
      ++report.violations;
    }
  }
  return report;
}

Weight random_log_uniform_weight(const Grid& grid, double lo, double hi,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(grid.n_cells());
  for (auto& x : v) {
    x = std::exp(lo + (hi - lo) * uniform_unit(rng));
  }
  return Weight(GridFunction(grid, std::move(v)));
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  auto out = open_csv(path);
  out << "t,delta,ap_char,norm_lb,runtime_ms\n";
  for (const auto& r : rows) {
    out << format_double(r.t) << "," << format_double(r.delta) << ","
        << format_double(r.ap_char) << "," << format_double(r.norm_lb) << ","
        << r.runtime_ms << "\n";
  }
}

void write_holder_csv(const std::vector<HolderRecord>& rows, const std::string& path) {
  auto out = open_csv(path);
  out << "pair_id,R,lhs,rhs,factor_ratio,factor_base\n";
  for (const auto& r : rows) {
    out << r.pair_id << "," << format_double(r.R) << "," << format_double(r.lhs) << ","
        << format_double(r.rhs) << "," << format_double(r.factor_ratio) << ","
        << format_double(r.factor_base) << "\n";
  }
}

void write_buckley_csv(const std::vector<BuckleyRow>& rows, const std::string& path) {
  auto out = open_csv(path);
  out << "alpha,ap_char,norm_lb,ratio\n";
  for (const auto& r : rows) {
    out << format_double(r.alpha) << "," << format_double(r.ap_char) << ","
        << format_double(r.norm_lb) << "," << format_double(r.ratio) << "\n";
  }
}

void write_audit_csv(const AuditReport& report, const std::string& path) {
  auto out = open_csv(path);
  out << "trial,check,lhs,rhs,pass\n";
  for (const auto& r : report.rows) {
    out << r.trial << "," << r.check << "," << format_double(r.lhs) << ","
        << format_double(r.rhs) << "," << (r.pass ? 1 : 0) << "\n";
  }
}

}  // namespace aplab
