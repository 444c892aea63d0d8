#pragma once

// Age versus distortion budget for the constant-budget problem.

#include <optional>
#include <vector>

#include "aoi/closed_form.hpp"
#include "aoi/distortion.hpp"

namespace aoi {

struct TradeoffRow {
  double beta = 0.0;
  std::optional<double> c_min;      // empty when the budget is unattainable
  std::optional<Solution> solution;  // empty when no schedule fits the horizon
};

/// Evenly spaced budgets beta_lo..beta_hi (inclusive, `steps` points), each
/// turned into a processing floor and solved in closed form. Infeasible budgets
/// produce rows without a solution instead of failing the sweep.
std::vector<TradeoffRow> sweep_tradeoff(const DistortionSpec& spec, double T, int N,
                                        double beta_lo, double beta_hi, int steps);

/// True when average age never increases as beta grows (feasible rows only).
bool average_age_nonincreasing(const std::vector<TradeoffRow>& rows, double T,
                               double tol = 1e-12);

}  // namespace aoi
