#pragma once

#include <vector>

#include "aplab/grid_function.hpp"

namespace aplab {

struct MaximalOutput {
  GridFunction values;                  // Mf per cell
  std::vector<CellInterval> witnesses;  // per-cell argmax interval
};

// Discrete uncentered Hardy-Littlewood maximal operator over cell-aligned
// intervals: Mf_i = max over intervals q containing cell i of <|f|>_q.
// Pointwise below the continuum operator of the same step function, so
// downstream norm estimates are honest lower bounds.
MaximalOutput apply_maximal(const GridFunction& f);

// Same values without witness bookkeeping (hot path for the estimator).
GridFunction maximal_values(const GridFunction& f);

// (sum_i w_i |f_i|^p cell_width)^{1/p}
double weighted_lp_norm(const GridFunction& f, const Weight& w, LebesgueExponent p);

}  // namespace aplab
