#include "aplab/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aplab/accum.hpp"
#include "aplab/parallel.hpp"
#include "pow_util.hpp"

namespace aplab {

namespace {

struct BestInterval {
  double value = -std::numeric_limits<double>::infinity();
  CellInterval witness;
};

void check_interval(const GridFunction& f, CellInterval q) {
  if (!(q.start < q.end && q.end <= f.size())) {
    throw Error(Errc::invalid_argument,
                "invalid interval [" + std::to_string(q.start) + "," +
                    std::to_string(q.end) + ") for " + std::to_string(f.size()) + " cells");
  }
}

// Fenwick tree over value ranks carrying counts and value sums, so the sum
// of |f_k - m| over an interval is answerable as m moves.
class OrderStatTree {
 public:
  explicit OrderStatTree(std::size_t n) : cnt_(n + 1, 0.0), sum_(n + 1, 0.0) {}

  void clear() {
    std::fill(cnt_.begin(), cnt_.end(), 0.0);
    std::fill(sum_.begin(), sum_.end(), 0.0);
  }

  void insert(std::size_t rank, double value) {
    for (std::size_t i = rank + 1; i < cnt_.size(); i += i & (~i + 1)) {
      cnt_[i] += 1.0;
      sum_[i] += value;
    }
  }

  // count and sum over the first `k` ranks
  std::pair<double, double> prefix(std::size_t k) const {
    double c = 0.0;
    double s = 0.0;
    for (std::size_t i = k; i > 0; i -= i & (~i + 1)) {
      c += cnt_[i];
      s += sum_[i];
    }
    return {c, s};
  }

 private:
  std::vector<double> cnt_;
  std::vector<double> sum_;
};

}  // namespace

HolderParams::HolderParams(double R) : R_(R) {
  if (!(R > 1.0) || !std::isfinite(R)) {
    throw Error(Errc::invalid_argument, "R must satisfy 1 < R < infinity");
  }
}

double interval_average(const GridFunction& f, CellInterval q) {
  check_interval(f, q);
  NeumaierSum acc;
  for (std::size_t i = q.start; i < q.end; ++i) {
    acc.add(f[i]);
  }
  return acc.value() / static_cast<double>(q.end - q.start);
}

ApResult ap_characteristic(const Weight& w, LebesgueExponent p) {
  const std::size_t n = w.size();
  const double dual_e = p.dual_power();
  const double outer_e = p.value() - 1.0;

  std::vector<double> dual(n);
  for (std::size_t i = 0; i < n; ++i) {
    dual[i] = detail::pow_fast(w[i], dual_e);
  }

  // Per-left-endpoint compensated running sums: the accuracy of an interval
  // average depends only on the interval, not on its position, which keeps
  // the characteristic stable under weight scaling.
  std::vector<BestInterval> by_chunk(chunk_count(n));
  parallel_chunks(n, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
    BestInterval best;
    for (std::size_t a = lo; a < hi; ++a) {
      NeumaierSum sw;
      NeumaierSum ss;
      for (std::size_t b = a + 1; b <= n; ++b) {
        sw.add(w[b - 1]);
        ss.add(dual[b - 1]);
        const double len = static_cast<double>(b - a);
        const double v = (sw.value() / len) * detail::pow_fast(ss.value() / len, outer_e);
        if (v > best.value) {
          best.value = v;
          best.witness = {a, b};
        }
      }
    }
    by_chunk[chunk] = best;
  });

  BestInterval best;
  for (const auto& cand : by_chunk) {
    // chunks are in ascending start order; strict > keeps the
    // lexicographically smallest witness among exact ties
    if (cand.value > best.value) {
      best = cand;
    }
  }
  return ApResult{best.value, best.witness, p.value()};
}

BmoResult bmo_seminorm(const GridFunction& f) {
  const std::size_t n = f.size();
  const auto vals = f.values();

  std::vector<double> sorted(vals.begin(), vals.end());
  std::sort(sorted.begin(), sorted.end());
  auto rank_of = [&](double x) {
    return static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  };
  auto below_or_equal = [&](double m) {
    return static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), m) - sorted.begin());
  };

  std::vector<BestInterval> by_chunk(chunk_count(n));
  parallel_chunks(n, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
    BestInterval best;
    best.value = -1.0;  // so a constant function still gets witness [0,1)
    OrderStatTree tree(n);
    for (std::size_t l = lo; l < hi; ++l) {
      tree.clear();
      NeumaierSum run;
      for (std::size_t r = l; r < n; ++r) {
        tree.insert(rank_of(vals[r]), vals[r]);
        run.add(vals[r]);
        const double len = static_cast<double>(r - l + 1);
        const double total = run.value();
        const double m = total / len;
        const auto [c_le, s_le] = tree.prefix(below_or_equal(m));
        double dev = (m * c_le - s_le) + ((total - s_le) - m * (len - c_le));
        if (dev < 0.0) {
          dev = 0.0;  // rounding can push the exact 0 slightly negative
        }
        const double v = dev / len;
        if (v > best.value) {
          best.value = v;
          best.witness = {l, r + 1};
        }
      }
    }
    by_chunk[chunk] = best;
  });

  BestInterval best;
  best.value = -1.0;
  for (const auto& cand : by_chunk) {
    if (cand.value > best.value) {
      best = cand;
    }
  }
  return BmoResult{best.value, best.witness};
}

double dstar(const Weight& u, const Weight& v) {
  if (!u.fn().same_grid_as(v.fn())) {
    throw Error(Errc::grid_mismatch, "dstar operands live on different grids");
  }
  const std::size_t n = u.size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = std::log(u[i]) - std::log(v[i]);
  }
  // Canonical sign so that d(u,v) and d(v,u) run on bitwise-identical
  // input; the seminorm itself is even.
  for (std::size_t i = 0; i < n; ++i) {
    if (diff[i] != 0.0) {
      if (diff[i] < 0.0) {
        for (auto& x : diff) {
          x = -x;
        }
      }
      break;
    }
  }
  return bmo_seminorm(GridFunction(u.grid(), std::move(diff))).value;
}

HolderChainBound holder_chain_bound(const Weight& w, const Weight& w0,
                                    LebesgueExponent p, const HolderParams& params) {
  if (!w.fn().same_grid_as(w0.fn())) {
    throw Error(Errc::grid_mismatch, "holder_chain_bound operands live on different grids");
  }
  const GridFunction ratio = pointwise_divide(w.fn(), w0.fn());
  const Weight ratio_pow(pointwise_power(ratio, params.R()), w.limits());
  const Weight base_pow(pointwise_power(w0.fn(), params.Rprime()), w0.limits());

  HolderChainBound out;
  out.lhs = ap_characteristic(w, p).value;
  out.factor_ratio = ap_characteristic(ratio_pow, p).value;
  out.factor_base = ap_characteristic(base_pow, p).value;
  out.rhs = std::pow(out.factor_ratio, 1.0 / params.R()) *
            std::pow(out.factor_base, 1.0 / params.Rprime());
  return out;
}

}  // namespace aplab
