#include "aoi/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "aoi/errors.hpp"

namespace aoi {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string indexed(const char* name, std::size_t one_based) {
  return std::string(name) + "_" + std::to_string(one_based);
}

}  // namespace

ModeKind kind_of(const ConstraintMode& mode) {
  return std::visit(overloaded{[](const ConstantMode&) { return ModeKind::Constant; },
                               [](const InverseAgeMode&) { return ModeKind::InverseAge; },
                               [](const ProportionalAgeMode&) { return ModeKind::ProportionalAge; }},
                    mode);
}

std::string_view to_string(ModeKind kind) {
  switch (kind) {
    case ModeKind::Constant: return "constant";
    case ModeKind::InverseAge: return "inverse";
    case ModeKind::ProportionalAge: return "proportional";
  }
  return "?";
}

void validate(const ConstraintMode& mode) {
  std::visit(overloaded{
                 [](const ConstantMode& m) {
                   if (!std::isfinite(m.c_min) || m.c_min < 0.0)
                     throw DomainError("constant mode: c must be nonnegative");
                 },
                 [](const InverseAgeMode& m) {
                   if (!std::isfinite(m.alpha) || m.alpha <= 0.0)
                     throw DomainError("inverse-age mode: alpha must be positive");
                 },
                 [](const ProportionalAgeMode& m) {
                   if (!std::isfinite(m.c) || m.c <= 0.0)
                     throw DomainError("proportional-age mode: c must be positive");
                   if (!(m.alpha > 0.0 && m.alpha < 0.5))
                     throw DomainError("proportional-age mode: alpha must lie in (0, 1/2)");
                 }},
             mode);
}

void ProblemInstance::validate() const {
  if (!std::isfinite(T) || T <= 0.0) throw DomainError("instance: T must be positive");
  if (N < 1) throw DomainError("instance: N must be at least 1");
  aoi::validate(mode);
}

void Schedule::check_shape() const {
  if (c.empty()) throw ShapeError("schedule: needs at least one update");
  if (y.size() != c.size() + 1) {
    std::ostringstream msg;
    msg << "schedule: expected " << c.size() + 1 << " intervals for " << c.size()
        << " updates, got " << y.size();
    throw ShapeError(msg.str());
  }
}

double total_age(const Schedule& schedule) {
  schedule.check_shape();
  double squares = 0.0;
  for (double v : schedule.y) squares += v * v;
  double cross = 0.0;
  for (std::size_t i = 0; i < schedule.c.size(); ++i) cross += schedule.c[i] * schedule.y[i];
  return 0.5 * squares + cross;
}

double average_age(const Schedule& schedule, double T) {
  if (!(T > 0.0)) throw DomainError("average_age: T must be positive");
  return total_age(schedule) / T;
}

std::vector<double> request_gaps(const Schedule& schedule) {
  schedule.check_shape();
  std::vector<double> s(schedule.y.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = schedule.y[i] - (i == 0 ? 0.0 : schedule.c[i - 1]);
  }
  return s;
}

FeasibilityReport check_feasibility(const ProblemInstance& instance, const Schedule& schedule,
                                    double tol) {
  schedule.check_shape();
  if (schedule.updates() != instance.N) {
    throw ShapeError("schedule has " + std::to_string(schedule.updates()) +
                     " updates, instance expects " + std::to_string(instance.N));
  }
  if (!(tol >= 0.0)) throw DomainError("check_feasibility: tol must be nonnegative");

  FeasibilityReport report;
  auto require = [&](std::string what, double residual, double bound) {
    if (residual > bound) report.violations.push_back({std::move(what), residual});
  };

  const double sum = std::accumulate(schedule.y.begin(), schedule.y.end(), 0.0);
  require("sum(y) = T", std::abs(sum - instance.T), std::max(tol, 1e-9) * instance.T);

  const auto s = request_gaps(schedule);
  for (std::size_t i = 0; i < s.size(); ++i) {
    require(indexed("s", i + 1) + " >= 0", -s[i], tol);
  }
  for (std::size_t i = 0; i < schedule.c.size(); ++i) {
    const double ci = schedule.c[i];
    const double yi = schedule.y[i];
    const auto c_name = indexed("c", i + 1);
    std::visit(overloaded{
                   [&](const ConstantMode& m) {
                     std::ostringstream what;
                     what << c_name << " >= " << m.c_min;
                     require(what.str(), m.c_min - ci, tol);
                   },
                   [&](const InverseAgeMode& m) {
                     require(c_name + " >= alpha*" + indexed("y", i + 1), m.alpha * yi - ci, tol);
                   },
                   [&](const ProportionalAgeMode& m) {
                     require(c_name + " >= 0", -ci, tol);
                     require(c_name + " >= c - alpha*" + indexed("y", i + 1),
                             m.c - m.alpha * yi - ci, tol);
                   }},
               instance.mode);
  }
  return report;
}

double min_processing(const ConstraintMode& mode, double y) {
  return std::visit(
      overloaded{[](const ConstantMode& m) { return m.c_min; },
                 [y](const InverseAgeMode& m) { return m.alpha * y; },
                 [y](const ProportionalAgeMode& m) { return std::max(0.0, m.c - m.alpha * y); }},
      mode);
}

Schedule with_tight_processing(const ConstraintMode& mode, std::span<const double> y) {
  if (y.size() < 2) throw ShapeError("schedule: needs at least two intervals");
  Schedule out;
  out.y.assign(y.begin(), y.end());
  out.c.resize(y.size() - 1);
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = min_processing(mode, y[i]);
  return out;
}

}  // namespace aoi
