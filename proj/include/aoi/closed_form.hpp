#pragma once

// Optimal update schedules in closed form, one solver per constraint mode.
//
// Every solver first fixes the processing times at the smallest admissible
// value (any slack in c_i only adds c_i * y_i to the age), then picks the
// inter-request intervals from the regime the parameters fall into.

#include <map>
#include <string>
#include <string_view>

#include "aoi/model.hpp"

namespace aoi {

enum class Branch {
  // constant c_min
  ConstantSpread,      // T > (N+2) c: equal waits, longer first/last interval
  ConstantBackToBack,  // N c <= T <= (N+2) c: back-to-back after the first
  // inverse-age alpha
  InverseEqualized,  // alpha <= 1
  InverseChain,      // alpha > 1: y_i = alpha y_{i-1}
  // proportional-age (c, alpha)
  ProportionalChain,      // T <= B1: y_i = c - alpha y_{i-1}
  ProportionalEqualized,  // B1 < T < B2
  ProportionalCapped,     // B2 <= T < B3: y_i = c / alpha
  ProportionalUniform,    // T >= B3
};

std::string_view to_string(Branch branch);

struct RegimeReport {
  ModeKind mode = ModeKind::Constant;
  Branch branch = Branch::ConstantSpread;
  std::string condition;
  /// Signed distance of the instance from each regime boundary, e.g.
  /// "T-B1" -> T - B1. Zero means the instance sits on the boundary.
  std::map<std::string, double> boundary_distances;
};

struct Solution {
  Schedule schedule;
  RegimeReport regime;
  double total_age = 0.0;
};

Solution solve_constant(double T, int N, double c_min);
Solution solve_inverse_age(double T, int N, double alpha);
Solution solve_proportional_age(double T, int N, double c, double alpha);

/// Dispatches on instance.mode.
Solution solve(const ProblemInstance& instance);

/// Regime boundaries of the proportional-age mode.
struct ProportionalBounds {
  double b1 = 0.0;  // (N+2-alpha)/(1+alpha) * c
  double b2 = 0.0;  // (N+1-alpha)/alpha * c
  double b3 = 0.0;  // (N+1)/alpha * c
};
ProportionalBounds proportional_bounds(int N, double c, double alpha);

/// Raw per-branch formulas, evaluated without regime classification. Used to
/// check continuity across regime boundaries; outside their own regime the
/// returned schedules need not be feasible or optimal.
namespace branch {

Schedule constant_spread(double T, int N, double c_min);
Schedule constant_back_to_back(double T, int N, double c_min);
Schedule inverse_equalized(double T, int N, double alpha);
Schedule inverse_chain(double T, int N, double alpha);
/// Throws Infeasible when no first interval keeps the tight chain feasible.
Schedule proportional_chain(double T, int N, double c, double alpha);
Schedule proportional_equalized(double T, int N, double c, double alpha);
Schedule proportional_capped(double T, int N, double c, double alpha);
Schedule proportional_uniform(double T, int N, double c, double alpha);

}  // namespace branch

}  // namespace aoi
