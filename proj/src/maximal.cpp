#include "aplab/maximal.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "aplab/accum.hpp"
#include "pow_util.hpp"

namespace aplab {

namespace {

// For every start s: one ascending pass builds the averages of |f| over
// [s, e), one descending pass turns them into suffix maxima, which are the
// per-cell maxima over intervals containing the cell.  O(N^2) total.
template <bool WithWitness>
void maximal_scan(const GridFunction& f, std::vector<double>& out,
                  std::vector<CellInterval>* wit) {
  const std::size_t n = f.size();
  out.assign(n, -std::numeric_limits<double>::infinity());
  if (WithWitness) {
    wit->assign(n, CellInterval{});
  }
  std::vector<double> avg(n + 1, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    NeumaierSum acc;
    for (std::size_t e = s + 1; e <= n; ++e) {
      acc.add(std::abs(f[e - 1]));
      avg[e] = acc.value() / static_cast<double>(e - s);
    }
    double suffix = avg[n];
    std::size_t suffix_e = n;
    for (std::size_t i = n; i-- > s;) {
      // candidate end e = i + 1; ">=" prefers the smaller end on ties,
      // and the ascending s loop with strict ">" prefers the smaller start
      if (avg[i + 1] >= suffix || i + 1 == n) {
        suffix = avg[i + 1];
        suffix_e = i + 1;
      }
      if (suffix > out[i]) {
        out[i] = suffix;
        if (WithWitness) {
          (*wit)[i] = {s, suffix_e};
        }
      }
    }
  }
}

}  // namespace

MaximalOutput apply_maximal(const GridFunction& f) {
  std::vector<double> out;
  std::vector<CellInterval> wit;
  maximal_scan<true>(f, out, &wit);
  return MaximalOutput{GridFunction(f.grid(), std::move(out)), std::move(wit)};
}

GridFunction maximal_values(const GridFunction& f) {
  std::vector<double> out;
  maximal_scan<false>(f, out, nullptr);
  return GridFunction(f.grid(), std::move(out));
}

double weighted_lp_norm(const GridFunction& f, const Weight& w, LebesgueExponent p) {
  if (!f.same_grid_as(w.fn())) {
    throw Error(Errc::grid_mismatch, "norm operands live on different grids");
  }
  NeumaierSum acc;
  const double pe = p.value();
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc.add(w[i] * detail::pow_fast(std::abs(f[i]), pe));
  }
  return detail::pow_fast(acc.value() * f.grid().cell_width(), 1.0 / pe);
}

}  // namespace aplab
