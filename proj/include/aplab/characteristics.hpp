#pragma once

#include "aplab/grid_function.hpp"

namespace aplab {

struct ApResult {
  double value = 0.0;  // >= 1 up to rounding
  CellInterval witness;
  double p = 0.0;
};

struct BmoResult {
  double value = 0.0;  // >= 0; 0 iff constant
  CellInterval witness;
};

// Conjugate pair R, R' = R/(R-1) = 1 + epsilon.
class HolderParams {
 public:
  explicit HolderParams(double R);

  double R() const noexcept { return R_; }
  double Rprime() const noexcept { return R_ / (R_ - 1.0); }
  double epsilon() const noexcept { return Rprime() - 1.0; }

 private:
  double R_;
};

// (sum over cells in q) / (end - start); exact for equal-width cells.
double interval_average(const GridFunction& f, CellInterval q);

// max over cell-aligned intervals q of <w>_q * <w^{-1/(p-1)}>_q^{p-1}.
// Witness ties broken lexicographically by (start, end).
ApResult ap_characteristic(const Weight& w, LebesgueExponent p);

// max over cell-aligned intervals q of the mean absolute deviation of f
// about its average on q.  Exact over the cell-aligned family.
BmoResult bmo_seminorm(const GridFunction& f);

// d_*(u, v) = ||log u - log v||_*.
double dstar(const Weight& u, const Weight& v);

struct HolderChainBound {
  double lhs = 0.0;           // [w]_{A_p}
  double rhs = 0.0;           // factor_ratio^{1/R} * factor_base^{1/R'}
  double factor_ratio = 0.0;  // [(w/w0)^R]_{A_p}
  double factor_base = 0.0;   // [w0^{R'}]_{A_p}
};

// Always lhs <= rhs up to rounding: the chain holds exactly per interval
// and all three suprema range over the same interval family.
HolderChainBound holder_chain_bound(const Weight& w, const Weight& w0,
                                    LebesgueExponent p, const HolderParams& params);

}  // namespace aplab
