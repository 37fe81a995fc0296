#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aplab.h"

namespace fs = std::filesystem;

namespace {

std::atomic<int> g_dir_seq{0};

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("aplab_capi_test_" + std::to_string(g_dir_seq.fetch_add(1)));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct GridHandle {
  aplab_grid* g = nullptr;
  GridHandle(double hw, long n) { REQUIRE(aplab_grid_create(hw, n, &g) == APLAB_OK); }
  ~GridHandle() { aplab_grid_destroy(g); }
};

struct FnHandle {
  aplab_fn* f = nullptr;
  FnHandle() = default;
  explicit FnHandle(aplab_fn* p) : f(p) {}
  FnHandle(const FnHandle&) = delete;
  ~FnHandle() { aplab_fn_destroy(f); }
  aplab_fn** out() { return &f; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("grid lifecycle and accessors") {
  GridHandle g(2.0, 8);
  CHECK(aplab_grid_half_width(g.g) == 2.0);
  CHECK(aplab_grid_n_cells(g.g) == 8);
  CHECK(aplab_grid_cell_width(g.g) == 0.5);

  aplab_grid* bad = nullptr;
  CHECK(aplab_grid_create(-1.0, 8, &bad) == APLAB_ERR_INVALID);
  CHECK(bad == nullptr);
  CHECK(aplab_grid_create(1.0, 6, &bad) == APLAB_ERR_INVALID);  // not a power of two
  CHECK(std::strlen(aplab_last_error()) > 0);
  CHECK(aplab_grid_create(1.0, 8, nullptr) == APLAB_ERR_INVALID);
}

TEST_CASE("grid function construction and value access") {
  GridHandle g(1.0, 4);
  SUBCASE("constant") {
    FnHandle f;
    REQUIRE(aplab_fn_const(g.g, 2.5, f.out()) == APLAB_OK);
    CHECK(aplab_fn_size(f.f) == 4);
    double vals[4];
    REQUIRE(aplab_fn_copy_values(f.f, vals, 4) == APLAB_OK);
    for (double v : vals) {
      CHECK(v == 2.5);
    }
    double hw = 0.0;
    long n = 0;
    REQUIRE(aplab_fn_grid_params(f.f, &hw, &n) == APLAB_OK);
    CHECK(hw == 1.0);
    CHECK(n == 4);
  }
  SUBCASE("from values, wrong length and bad values rejected") {
    const double three[3] = {1, 2, 3};
    FnHandle f;
    CHECK(aplab_fn_from_values(g.g, three, 3, f.out()) == APLAB_ERR_INVALID);
    const double nan_vals[4] = {1, 2, NAN, 4};
    CHECK(aplab_fn_from_values(g.g, nan_vals, 4, f.out()) == APLAB_ERR_RANGE);
    const double good[4] = {1, 2, 3, 4};
    REQUIRE(aplab_fn_from_values(g.g, good, 4, f.out()) == APLAB_OK);
    double back[4];
    REQUIRE(aplab_fn_copy_values(f.f, back, 4) == APLAB_OK);
    CHECK(back[2] == 3.0);
    CHECK(aplab_fn_copy_values(f.f, back, 3) == APLAB_ERR_INVALID);
  }
  SUBCASE("power weight and perturbation") {
    FnHandle w;
    REQUIRE(aplab_fn_power_weight(g.g, 1.0, w.out()) == APLAB_OK);
    double vals[4];
    REQUIRE(aplab_fn_copy_values(w.f, vals, 4) == APLAB_OK);
    CHECK(vals[0] == doctest::Approx(0.75));  // |midpoint of cell 0|

    FnHandle phi;
    REQUIRE(aplab_fn_const(g.g, 1.0, phi.out()) == APLAB_OK);
    FnHandle wt;
    REQUIRE(aplab_fn_perturb(w.f, phi.f, 1.0, wt.out()) == APLAB_OK);
    double pv[4];
    REQUIRE(aplab_fn_copy_values(wt.f, pv, 4) == APLAB_OK);
    CHECK(pv[0] == doctest::Approx(0.75 * std::exp(1.0)));
  }
  SUBCASE("random log-uniform weight is deterministic in the seed") {
    FnHandle a, b;
    REQUIRE(aplab_fn_random_log_uniform(g.g, -1.0, 1.0, 77, a.out()) == APLAB_OK);
    REQUIRE(aplab_fn_random_log_uniform(g.g, -1.0, 1.0, 77, b.out()) == APLAB_OK);
    double va[4], vb[4];
    REQUIRE(aplab_fn_copy_values(a.f, va, 4) == APLAB_OK);
    REQUIRE(aplab_fn_copy_values(b.f, vb, 4) == APLAB_OK);
    for (int i = 0; i < 4; ++i) {
      CHECK(va[i] == vb[i]);
      CHECK(va[i] >= std::exp(-1.0));
      CHECK(va[i] <= std::exp(1.0));
    }
  }
}

TEST_CASE("csv round trip through the C surface") {
  TempDir tmp;
  GridHandle g(1.5, 8);
  const double vals[8] = {0.5, 1, 2, 4, 8, 0.25, 1.0 / 3.0, 7};
  FnHandle f;
  REQUIRE(aplab_fn_from_values(g.g, vals, 8, f.out()) == APLAB_OK);
  const std::string path = tmp.file("w.csv");
  REQUIRE(aplab_fn_write_csv(f.f, path.c_str()) == APLAB_OK);
  CHECK(fs::exists(path + ".json"));

  FnHandle back;
  REQUIRE(aplab_fn_read_csv(path.c_str(), back.out()) == APLAB_OK);
  double out[8];
  REQUIRE(aplab_fn_copy_values(back.f, out, 8) == APLAB_OK);
  for (int i = 0; i < 8; ++i) {
    CHECK(out[i] == vals[i]);
  }
  double hw = 0.0;
  long n = 0;
  REQUIRE(aplab_fn_grid_params(back.f, &hw, &n) == APLAB_OK);
  CHECK(hw == 1.5);

  FnHandle nope;
  CHECK(aplab_fn_read_csv(tmp.file("missing.csv").c_str(), nope.out()) == APLAB_ERR_IO);
}

TEST_CASE("characteristics through the C surface") {
  GridHandle g2(1.0, 2);
  const double step[2] = {1.0, 4.0};
  FnHandle w;
  REQUIRE(aplab_fn_from_values(g2.g, step, 2, w.out()) == APLAB_OK);

  double value = 0.0;
  long ws = -1, we = -1;
  REQUIRE(aplab_ap_characteristic(w.f, 2.0, &value, &ws, &we) == APLAB_OK);
  CHECK(value == doctest::Approx(1.5625).epsilon(1e-14));
  CHECK(ws == 0);
  CHECK(we == 2);

  CHECK(aplab_ap_characteristic(w.f, 0.5, &value, &ws, &we) == APLAB_ERR_INVALID);

  FnHandle f;
  const double fv[2] = {0.0, 2.0};
  REQUIRE(aplab_fn_from_values(g2.g, fv, 2, f.out()) == APLAB_OK);
  REQUIRE(aplab_bmo_seminorm(f.f, &value, &ws, &we) == APLAB_OK);
  CHECK(value == doctest::Approx(1.0).epsilon(1e-14));

  FnHandle u;
  REQUIRE(aplab_fn_const(g2.g, 3.0, u.out()) == APLAB_OK);
  double d = -1.0;
  REQUIRE(aplab_dstar(u.f, u.f, &d) == APLAB_OK);
  CHECK(d == 0.0);
  REQUIRE(aplab_dstar(u.f, w.f, &d) == APLAB_OK);
  CHECK(d > 0.0);

  GridHandle g4(1.0, 4);
  FnHandle other;
  REQUIRE(aplab_fn_const(g4.g, 1.0, other.out()) == APLAB_OK);
  CHECK(aplab_dstar(u.f, other.f, &d) == APLAB_ERR_GRID_MISMATCH);

  double lhs = 0, rhs = 0, fr = 0, fb = 0;
  REQUIRE(aplab_holder_chain(w.f, w.f, 2.0, 2.0, &lhs, &rhs, &fr, &fb) == APLAB_OK);
  CHECK(lhs == doctest::Approx(1.5625).epsilon(1e-12));
  CHECK(rhs == doctest::Approx(std::sqrt(4.515625)).epsilon(1e-12));
  CHECK(fr == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fb == doctest::Approx(4.515625).epsilon(1e-12));
}

TEST_CASE("maximal operator and norms through the C surface") {
  GridHandle g(1.0, 4);
  const double fv[4] = {0, 0, 1, 0};
  FnHandle f;
  REQUIRE(aplab_fn_from_values(g.g, fv, 4, f.out()) == APLAB_OK);

  FnHandle mf;
  REQUIRE(aplab_maximal_apply(f.f, mf.out()) == APLAB_OK);
  double mv[4];
  REQUIRE(aplab_fn_copy_values(mf.f, mv, 4) == APLAB_OK);
  CHECK(mv[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(mv[2] == 1.0);

  FnHandle one;
  REQUIRE(aplab_fn_const(g.g, 1.0, one.out()) == APLAB_OK);
  double norm = 0.0;
  REQUIRE(aplab_weighted_lp_norm(one.f, one.f, 2.0, &norm) == APLAB_OK);
  CHECK(norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  double ratio = 0.0;
  REQUIRE(aplab_rayleigh_quotient(f.f, one.f, 2.0, &ratio) == APLAB_OK);
  CHECK(ratio == doctest::Approx(std::sqrt(58.0 / 36.0)).epsilon(1e-12));

  FnHandle zero;
  REQUIRE(aplab_fn_const(g.g, 0.0, zero.out()) == APLAB_OK);
  CHECK(aplab_rayleigh_quotient(zero.f, one.f, 2.0, &ratio) == APLAB_ERR_INVALID);
}

TEST_CASE("norm estimation through the C surface") {
  GridHandle g(1.0, 64);
  FnHandle one;
  REQUIRE(aplab_fn_const(g.g, 1.0, one.out()) == APLAB_OK);

  aplab_estimator_config cfg;
  aplab_estimator_config_default(&cfg);
  CHECK(cfg.pool_constant == 1);
  CHECK(cfg.budget > 0);
  cfg.budget = 100;
  cfg.seed = 11;

  double lb = 0.0;
  long evals = 0;
  FnHandle witness;
  REQUIRE(aplab_estimate_norm(one.f, 2.0, &cfg, &lb, &evals, witness.out()) == APLAB_OK);
  CHECK(lb >= 1.0);
  CHECK(evals > 0);
  REQUIRE(witness.f != nullptr);

  // the reported bound is the Rayleigh quotient of the witness
  double check = 0.0;
  REQUIRE(aplab_rayleigh_quotient(witness.f, one.f, 2.0, &check) == APLAB_OK);
  CHECK(check == doctest::Approx(lb).epsilon(1e-12));
}

TEST_CASE("study runners write CSVs through the C surface") {
  TempDir tmp;
  GridHandle g(1.0, 32);
  aplab_estimator_config cfg;
  aplab_estimator_config_default(&cfg);
  cfg.budget = 0;

  SUBCASE("sweep") {
    FnHandle w0, phi;
    REQUIRE(aplab_fn_const(g.g, 1.0, w0.out()) == APLAB_OK);
    REQUIRE(aplab_fn_power_weight(g.g, 0.5, phi.out()) == APLAB_OK);
    const double ts[2] = {0.2, 0.1};
    const std::string path = tmp.file("sweep.csv");
    REQUIRE(aplab_run_sweep(w0.f, phi.f, ts, 2, 2.0, &cfg, path.c_str()) == APLAB_OK);
    const std::string body = slurp(path);
    CHECK(body.rfind("t,delta,ap_char,norm_lb,runtime_ms\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 4);  // header + 2 rows + t=0
  }
  SUBCASE("holder scan") {
    FnHandle a, b;
    REQUIRE(aplab_fn_random_log_uniform(g.g, -1.0, 1.0, 3, a.out()) == APLAB_OK);
    REQUIRE(aplab_fn_random_log_uniform(g.g, -1.0, 1.0, 4, b.out()) == APLAB_OK);
    const aplab_fn* ws[2] = {a.f, b.f};
    const aplab_fn* w0s[2] = {b.f, a.f};
    const double Rs[2] = {2.0, 4.0};
    const std::string path = tmp.file("holder.csv");
    long violations = -1;
    REQUIRE(aplab_run_holder_scan(ws, w0s, 2, 2.0, Rs, 2, path.c_str(), &violations) ==
            APLAB_OK);
    CHECK(violations == 0);
    CHECK(slurp(path).rfind("pair_id,R,lhs,rhs,factor_ratio,factor_base\n", 0) == 0);
  }
  SUBCASE("buckley") {
    const double alphas[2] = {0.0, 0.5};
    const std::string path = tmp.file("buckley.csv");
    double slope = 0.0;
    REQUIRE(aplab_run_buckley(g.g, alphas, 2, 2.0, &cfg, path.c_str(), &slope) ==
            APLAB_OK);
    CHECK(std::isnan(slope));  // no rows with ap_char > 2 at these alphas
    CHECK(slurp(path).rfind("alpha,ap_char,norm_lb,ratio\n", 0) == 0);

    const double bad = 1.5;
    CHECK(aplab_run_buckley(g.g, &bad, 1, 2.0, &cfg, path.c_str(), &slope) ==
          APLAB_ERR_INVALID);
  }
  SUBCASE("metric audit") {
    const std::string path = tmp.file("audit.csv");
    long violations = -1;
    REQUIRE(aplab_run_metric_audit(g.g, 50, 7, path.c_str(), &violations) == APLAB_OK);
    CHECK(violations == 0);
    CHECK(slurp(path).rfind("trial,check,lhs,rhs,pass\n", 0) == 0);
  }
}

TEST_CASE("null arguments are invalid, not fatal") {
  CHECK(aplab_fn_const(nullptr, 1.0, nullptr) == APLAB_ERR_INVALID);
  CHECK(aplab_dstar(nullptr, nullptr, nullptr) == APLAB_ERR_INVALID);
  CHECK(aplab_maximal_apply(nullptr, nullptr) == APLAB_ERR_INVALID);
  aplab_fn_destroy(nullptr);    // no-op
  aplab_grid_destroy(nullptr);  // no-op
}
