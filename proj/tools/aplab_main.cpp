// Command-line front end.  Links the C API only.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "aplab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitContract = 2;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(aplab_status st) {
  if (st != APLAB_OK) {
    throw CliError(aplab_last_error());
  }
}

// RAII wrappers over the opaque handles.
struct Grid {
  aplab_grid* h = nullptr;
  Grid(double half_width, long n_cells) { check(aplab_grid_create(half_width, n_cells, &h)); }
  Grid(const Grid&) = delete;
  ~Grid() { aplab_grid_destroy(h); }
};

struct Fn {
  aplab_fn* h = nullptr;
  Fn() = default;
  Fn(Fn&& o) noexcept : h(o.h) { o.h = nullptr; }
  Fn(const Fn&) = delete;
  Fn& operator=(Fn&& o) noexcept {
    std::swap(h, o.h);
    return *this;
  }
  ~Fn() { aplab_fn_destroy(h); }
  aplab_fn** out() { return &h; }
};

// Shared flag bundle: grid geometry plus one of three function sources.
struct FnSource {
  double half_width = 1.0;
  long n_cells = 256;
  std::string path;
  double const_value = std::nan("");
  double power_alpha = std::nan("");

  void add_flags(CLI::App* cmd, const std::string& what) {
    cmd->add_option("--half-width", half_width, "domain half-width (default 1)");
    cmd->add_option("--n-cells", n_cells, "number of cells, a power of two (default 256)");
    cmd->add_option("--weight", path, "read the " + what + " from a grid-function CSV");
    cmd->add_option("--const", const_value, "constant " + what);
    cmd->add_option("--power-alpha", power_alpha, "power " + what + " |x|^alpha");
  }

  Fn make() const {
    const int sources = !path.empty() + !std::isnan(const_value) + !std::isnan(power_alpha);
    if (sources != 1) {
      throw CliError("exactly one of --weight, --const, --power-alpha is required");
    }
    Fn f;
    if (!path.empty()) {
      check(aplab_fn_read_csv(path.c_str(), f.out()));
      return f;
    }
    Grid g(half_width, n_cells);
    if (!std::isnan(const_value)) {
      check(aplab_fn_const(g.h, const_value, f.out()));
    } else {
      check(aplab_fn_power_weight(g.h, power_alpha, f.out()));
    }
    return f;
  }
};

std::vector<double> parse_list(const std::string& csv, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw CliError(std::string(flag) + ": bad entry '" + item + "'");
    }
  }
  if (out.empty()) {
    throw CliError(std::string(flag) + ": empty list");
  }
  return out;
}

std::string out_file(const std::string& out_dir, const char* name) {
  std::filesystem::create_directories(out_dir);
  return (std::filesystem::path(out_dir) / name).string();
}

// Height-2 step on the right half: the default perturbation direction phi.
Fn default_step_phi(const aplab_fn* like) {
  double hw = 0.0;
  long n = 0;
  check(aplab_fn_grid_params(like, &hw, &n));
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (long i = n / 2; i < n; ++i) {
    v[static_cast<std::size_t>(i)] = 2.0;
  }
  Grid g(hw, n);
  Fn f;
  check(aplab_fn_from_values(g.h, v.data(), n, f.out()));
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for Muckenhoupt weights and maximal-operator norms"};
  app.require_subcommand(1);

  FnSource src;
  double p = 2.0;
  std::string u_path, v_path, phi_path;
  std::string out_dir = ".";
  std::string t_list_s = "0.2,0.1,0.05,0.025";
  std::string alpha_list_s = "0.5,0.7,0.8,0.9";
  std::string r_list_s = "2,4,8";
  long budget = -1;
  std::uint64_t seed = 1;
  long pairs = 100;
  long trials = 1000;

  auto add_estimator_flags = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget, "ascent evaluation budget (default from library)");
    cmd->add_option("--seed", seed, "RNG seed (default 1)");
  };

  CLI::App* ap = app.add_subcommand("ap-char", "A_p characteristic of a weight");
  src.add_flags(ap, "weight");
  ap->add_option("--p", p, "Lebesgue exponent, p > 1");

  CLI::App* bmo = app.add_subcommand("bmo", "BMO seminorm of a grid function");
  src.add_flags(bmo, "function");

  CLI::App* dstar = app.add_subcommand("dstar", "d_* distance between two weights");
  dstar->add_option("--u", u_path, "first weight CSV")->required();
  dstar->add_option("--v", v_path, "second weight CSV")->required();

  CLI::App* maxop = app.add_subcommand("maxop", "apply the maximal operator, write Mf");
  src.add_flags(maxop, "function");
  maxop->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* normest = app.add_subcommand("norm-est", "lower bound for the operator norm");
  src.add_flags(normest, "weight");
  normest->add_option("--p", p, "Lebesgue exponent, p > 1");
  add_estimator_flags(normest);
  normest->add_option("--out", out_dir, "output directory for the witness (default .)");

  CLI::App* sweep = app.add_subcommand("sweep", "continuity sweep along w0 e^{t phi}");
  src.add_flags(sweep, "base weight");
  sweep->add_option("--p", p, "Lebesgue exponent, p > 1");
  sweep->add_option("--phi", phi_path, "perturbation direction CSV (default: height-2 step)");
  sweep->add_option("--t-list", t_list_s, "comma-separated t values");
  add_estimator_flags(sweep);
  sweep->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* holder = app.add_subcommand("holder-scan", "Holder chain bound over random pairs");
  holder->add_option("--half-width", src.half_width, "domain half-width (default 1)");
  holder->add_option("--n-cells", src.n_cells, "number of cells (default 256)");
  holder->add_option("--p", p, "Lebesgue exponent, p > 1");
  holder->add_option("--R-list", r_list_s, "comma-separated R values");
  holder->add_option("--pairs", pairs, "number of random weight pairs (default 100)");
  holder->add_option("--seed", seed, "RNG seed (default 1)");
  holder->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* buckley = app.add_subcommand("buckley", "norm growth against the characteristic");
  buckley->add_option("--half-width", src.half_width, "domain half-width (default 1)");
  buckley->add_option("--n-cells", src.n_cells, "number of cells (default 256)");
  buckley->add_option("--p", p, "Lebesgue exponent, p > 1");
  buckley->add_option("--alpha-list", alpha_list_s, "comma-separated power-weight exponents");
  add_estimator_flags(buckley);
  buckley->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* audit = app.add_subcommand("metric-audit", "d_* metric axioms on random weights");
  audit->add_option("--half-width", src.half_width, "domain half-width (default 1)");
  audit->add_option("--n-cells", src.n_cells, "number of cells (default 256)");
  audit->add_option("--trials", trials, "random triples to audit (default 1000)");
  audit->add_option("--seed", seed, "RNG seed (default 1)");
  audit->add_option("--out", out_dir, "output directory (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitValidation;
  }

  aplab_estimator_config cfg;
  aplab_estimator_config_default(&cfg);
  if (budget >= 0) {
    cfg.budget = budget;
  }
  cfg.seed = seed;

  try {
    if (ap->parsed()) {
      Fn w = src.make();
      double value = 0.0;
      long ws = 0, we = 0;
      check(aplab_ap_characteristic(w.h, p, &value, &ws, &we));
      std::printf("ap_char %s witness [%ld,%ld)\n", fmt(value).c_str(), ws, we);
    } else if (bmo->parsed()) {
      Fn f = src.make();
      double value = 0.0;
      long ws = 0, we = 0;
      check(aplab_bmo_seminorm(f.h, &value, &ws, &we));
      std::printf("bmo %s witness [%ld,%ld)\n", fmt(value).c_str(), ws, we);
    } else if (dstar->parsed()) {
      Fn u, v;
      check(aplab_fn_read_csv(u_path.c_str(), u.out()));
      check(aplab_fn_read_csv(v_path.c_str(), v.out()));
      double value = 0.0;
      check(aplab_dstar(u.h, v.h, &value));
      std::printf("dstar %s\n", fmt(value).c_str());
    } else if (maxop->parsed()) {
      Fn f = src.make();
      Fn mf;
      check(aplab_maximal_apply(f.h, mf.out()));
      const std::string path = out_file(out_dir, "maxop.csv");
      check(aplab_fn_write_csv(mf.h, path.c_str()));
      std::printf("wrote %s\n", path.c_str());
    } else if (normest->parsed()) {
      Fn w = src.make();
      double lb = 0.0;
      long evals = 0;
      Fn witness;
      check(aplab_estimate_norm(w.h, p, &cfg, &lb, &evals, witness.out()));
      const std::string path = out_file(out_dir, "witness.csv");
      check(aplab_fn_write_csv(witness.h, path.c_str()));
      std::printf("lower_bound %s evaluations %ld seed %llu witness %s\n", fmt(lb).c_str(),
                  evals, static_cast<unsigned long long>(seed), path.c_str());
    } else if (sweep->parsed()) {
      Fn w0 = src.make();
      Fn phi;
      if (!phi_path.empty()) {
        check(aplab_fn_read_csv(phi_path.c_str(), phi.out()));
      } else {
        phi = default_step_phi(w0.h);
      }
      const std::vector<double> ts = parse_list(t_list_s, "--t-list");
      const std::string path = out_file(out_dir, "sweep.csv");
      check(aplab_run_sweep(w0.h, phi.h, ts.data(), static_cast<long>(ts.size()), p, &cfg,
                            path.c_str()));
      std::printf("wrote %s\n", path.c_str());
    } else if (holder->parsed()) {
      if (pairs <= 0) {
        throw CliError("--pairs must be positive");
      }
      Grid g(src.half_width, src.n_cells);
      std::vector<Fn> owned;
      owned.reserve(static_cast<std::size_t>(2 * pairs));
      std::vector<const aplab_fn*> ws, w0s;
      for (long i = 0; i < pairs; ++i) {
        Fn a, b;
        check(aplab_fn_random_log_uniform(g.h, -1.0, 1.0, seed * 2654435761u + 2 * i, a.out()));
        check(aplab_fn_random_log_uniform(g.h, -1.0, 1.0, seed * 2654435761u + 2 * i + 1,
                                          b.out()));
        ws.push_back(a.h);
        w0s.push_back(b.h);
        owned.push_back(std::move(a));
        owned.push_back(std::move(b));
      }
      const std::vector<double> rs = parse_list(r_list_s, "--R-list");
      const std::string path = out_file(out_dir, "holder.csv");
      long violations = 0;
      check(aplab_run_holder_scan(ws.data(), w0s.data(), pairs, p, rs.data(),
                                  static_cast<long>(rs.size()), path.c_str(), &violations));
      std::printf("wrote %s violations %ld\n", path.c_str(), violations);
      if (violations > 0) {
        return kExitContract;
      }
    } else if (buckley->parsed()) {
      Grid g(src.half_width, src.n_cells);
      const std::vector<double> alphas = parse_list(alpha_list_s, "--alpha-list");
      const std::string path = out_file(out_dir, "buckley.csv");
      double slope = 0.0;
      check(aplab_run_buckley(g.h, alphas.data(), static_cast<long>(alphas.size()), p, &cfg,
                              path.c_str(), &slope));
      std::printf("wrote %s slope %s\n", path.c_str(), fmt(slope).c_str());
      if (std::isfinite(slope) && slope > 1.0 / (p - 1.0) + 0.2) {
        std::fprintf(stderr, "slope %s exceeds the growth bound %s\n", fmt(slope).c_str(),
                     fmt(1.0 / (p - 1.0) + 0.2).c_str());
        return kExitContract;
      }
    } else if (audit->parsed()) {
      Grid g(src.half_width, src.n_cells);
      const std::string path = out_file(out_dir, "metric_audit.csv");
      long violations = 0;
      check(aplab_run_metric_audit(g.h, trials, seed, path.c_str(), &violations));
      std::printf("wrote %s violations %ld\n", path.c_str(), violations);
      if (violations > 0) {
        return kExitContract;
      }
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
  return kExitOk;
}
