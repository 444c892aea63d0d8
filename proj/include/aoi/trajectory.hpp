#pragma once

// Sawtooth age curve a(t) implied by a schedule.

#include <vector>

#include "aoi/model.hpp"

namespace aoi {

enum class BreakpointKind { Start, Request, Receipt, End };

struct Breakpoint {
  double t = 0.0;
  double age_before = 0.0;
  double age_after = 0.0;
  BreakpointKind kind = BreakpointKind::Start;
};

/// Ordered breakpoints. Age grows with slope 1 between consecutive
/// breakpoints and only drops at Receipt points, to the processing time of
/// the received update.
struct AgeTrajectory {
  std::vector<Breakpoint> breakpoints;
  double horizon = 0.0;
};

struct AgeSample {
  double t = 0.0;
  double age = 0.0;
};

/// Throws InfeasibleSchedule if any request gap is negative.
AgeTrajectory build(const Schedule& schedule);

/// Exact area under a(t) on [0, horizon].
double integrate(const AgeTrajectory& traj);

/// Samples every `step` time units plus every breakpoint. Receipts produce two
/// rows with the same t: the age just before, then just after the drop.
std::vector<AgeSample> sample(const AgeTrajectory& traj, double step);

}  // namespace aoi
