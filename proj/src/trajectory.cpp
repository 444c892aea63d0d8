#include "aoi/trajectory.hpp"

#include <cmath>
#include <string>

#include "aoi/errors.hpp"

namespace aoi {

namespace {

constexpr double kGapSlack = 1e-12;

// Coincident instants (zero wait or zero processing) collapse into a single
// breakpoint so t stays strictly increasing. A receipt absorbs whatever sits
// at the same t; requests and the end marker landing on a breakpoint vanish.
void push(std::vector<Breakpoint>& out, Breakpoint bp) {
  if (!out.empty() && bp.t <= out.back().t) {
    auto& last = out.back();
    if (bp.kind != BreakpointKind::Receipt) return;
    if (last.kind == BreakpointKind::Request) {
      last = bp;
    } else {
      last.age_after = bp.age_after;
    }
    return;
  }
  out.push_back(bp);
}

}  // namespace

AgeTrajectory build(const Schedule& schedule) {
  auto s = request_gaps(schedule);
  double scale = 0.0;
  for (double v : schedule.y) scale += std::abs(v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Back-to-back closed forms can leave a gap of a few ulps below zero.
    if (s[i] < 0.0 && s[i] >= -kGapSlack * scale) s[i] = 0.0;
    if (s[i] < 0.0) {
      throw InfeasibleSchedule("trajectory: request gap s_" + std::to_string(i + 1) +
                               " is negative");
    }
  }
  const int n = schedule.updates();
  AgeTrajectory traj;
  traj.breakpoints.reserve(2 * n + 2);
  traj.breakpoints.push_back({0.0, 0.0, 0.0, BreakpointKind::Start});

  double receipt = 0.0;  // G_{i-1}
  for (int i = 0; i < n; ++i) {
    const double yi = schedule.y[i];
    const double ci = schedule.c[i];
    const double requested = receipt + s[i];
    push(traj.breakpoints, {requested, yi, yi, BreakpointKind::Request});
    receipt = requested + ci;
    push(traj.breakpoints, {receipt, yi + ci, ci, BreakpointKind::Receipt});
  }
  traj.horizon = receipt + s[n];
  const double final_age = schedule.y[n];
  push(traj.breakpoints, {traj.horizon, final_age, final_age, BreakpointKind::End});
  return traj;
}

double integrate(const AgeTrajectory& traj) {
  double area = 0.0;
  const auto& bp = traj.breakpoints;
  for (std::size_t k = 1; k < bp.size(); ++k) {
    area += 0.5 * (bp[k - 1].age_after + bp[k].age_before) * (bp[k].t - bp[k - 1].t);
  }
  if (!bp.empty() && bp.back().t < traj.horizon) {
    const double dt = traj.horizon - bp.back().t;
    area += (bp.back().age_after + 0.5 * dt) * dt;
  }
  return area;
}

std::vector<AgeSample> sample(const AgeTrajectory& traj, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("sample: step must be positive");
  std::vector<AgeSample> rows;
  const auto& bp = traj.breakpoints;
  if (bp.empty()) return rows;

  auto emit_breakpoint = [&](const Breakpoint& p) {
    if (p.kind == BreakpointKind::Receipt) rows.push_back({p.t, p.age_before});
    rows.push_back({p.t, p.age_after});
  };

  std::size_t grid = 1;  // grid point k * step; k = 0 is the start breakpoint
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    emit_breakpoint(bp[k]);
    while (grid * step <= bp[k].t) ++grid;
    for (; grid * step < bp[k + 1].t; ++grid) {
      const double t = grid * step;
      rows.push_back({t, bp[k].age_after + (t - bp[k].t)});
    }
  }
  emit_breakpoint(bp.back());
  return rows;
}

}  // namespace aoi
