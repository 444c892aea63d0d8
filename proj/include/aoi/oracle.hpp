#pragma once

// Independent numerical minimizer of the reduced age objective.
//
// Processing times are tied to y by the tight rule of each mode, leaving a
// convex objective in y over {sum y = T} intersected with linear half-spaces.
// It is minimised by pairwise mass transfer: move delta from y_j to y_i (the
// sum is preserved exactly), optionally carrying the move down a run of tight
// chain constraints, with delta chosen by golden-section search on the convex
// 1-D restriction and clipped to the feasible interval.

#include <cstdint>
#include <vector>

#include "aoi/model.hpp"

namespace aoi {

struct OracleConfig {
  int restarts = 50;
  int max_iterations = 20000;  // sweeps over all transfer directions, per restart
  double line_search_tol = 1e-10;
  std::uint64_t seed = 0x5eed;

  void validate() const;
};

struct OracleResult {
  Schedule schedule;
  double objective = 0.0;
  int best_restart = 0;
  int sweeps = 0;            // sweeps used by the best restart
  int renormalizations = 0;  // exact re-summations of y to T in the best restart
  std::vector<double> trace;  // best objective after each sweep of the best restart
};

/// Throws Infeasible if no feasible start exists, NonConvergence if a restart
/// exhausts max_iterations.
OracleResult oracle_solve(const ProblemInstance& instance, const OracleConfig& config);

/// (oracle objective - closed-form objective) / closed-form objective.
double compare(const ProblemInstance& instance, const OracleConfig& config);

/// Smallest horizon admitting a feasible proportional-age schedule: the tight
/// chain y_1 = 0, y_i = max(0, c - alpha y_{i-1}).
double proportional_min_horizon(int N, double c, double alpha);

}  // namespace aoi
