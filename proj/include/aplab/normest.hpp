#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aplab/grid_function.hpp"
#include "aplab/maximal.hpp"

namespace aplab {

struct EstimatorConfig {
  // Candidate families.  Test functions are nonnegative: M sees only |f|
  // and so does ||f||_{L^p(w)}, so nothing is lost.
  bool pool_constant = true;
  bool pool_indicators = true;  // dyadic interval indicators
  bool pool_profiles = true;    // (|x - a| + h)^{-theta} singularity profiles
  bool pool_random = true;      // log-uniform random functions
  int random_count = 8;

  long budget = 2000;  // coordinate-ascent evaluation budget
  std::vector<double> step_multipliers{2.0, 0.5, 1.1, 1.0 / 1.1};
  std::uint64_t seed = 1;
  double stop_tol = 1e-6;  // relative improvement per sweep below this stops
};

struct NormEstimate {
  double lower_bound = 0.0;  // certified: equals the ratio at `witness`
  GridFunction witness;
  long evaluations = 0;
  std::vector<std::string> pool_tags;
  std::uint64_t seed = 0;
};

// ||Mf||_{L^p(w)} / ||f||_{L^p(w)}; scale-invariant in f.
double rayleigh_quotient(const GridFunction& f, const Weight& w, LebesgueExponent p);

// Best pool candidate, then derivative-free coordinate ascent with
// multiplicative steps.  Fully deterministic given the seed; the pool
// argmax breaks ties by candidate index regardless of thread count.
NormEstimate estimate_norm(const Weight& w, LebesgueExponent p, const EstimatorConfig& cfg);

}  // namespace aplab
