#include "aoi/tradeoff.hpp"

#include <cmath>

#include "aoi/errors.hpp"

namespace aoi {

std::vector<TradeoffRow> sweep_tradeoff(const DistortionSpec& spec, double T, int N,
                                        double beta_lo, double beta_hi, int steps) {
  spec.validate();
  if (steps < 1) throw DomainError("sweep: need at least one step");
  if (!std::isfinite(beta_lo) || !std::isfinite(beta_hi) || beta_lo < 0.0 || beta_hi < beta_lo) {
    throw DomainError("sweep: budget range must satisfy 0 <= beta_lo <= beta_hi");
  }
  if (steps == 1 && beta_lo != beta_hi) throw DomainError("sweep: one step needs beta_lo == beta_hi");

  std::vector<TradeoffRow> rows(steps);
  for (int k = 0; k < steps; ++k) {
    auto& row = rows[k];
    row.beta = steps == 1 ? beta_lo
                          : (k == steps - 1 ? beta_hi
                                            : beta_lo + (beta_hi - beta_lo) * k / (steps - 1));
    try {
      row.c_min = min_processing_for(spec, row.beta);
      row.solution = solve_constant(T, N, *row.c_min);
    } catch (const Infeasible&) {
      // stays flagged via the empty optionals
    }
  }
  return rows;
}

bool average_age_nonincreasing(const std::vector<TradeoffRow>& rows, double T, double tol) {
  double previous = INFINITY;
  for (const auto& row : rows) {
    if (!row.solution) continue;
    const double avg = row.solution->total_age / T;
    if (avg > previous * (1.0 + tol)) return false;
    previous = avg;
  }
  return true;
}

}  // namespace aoi
