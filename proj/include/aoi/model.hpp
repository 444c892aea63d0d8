#pragma once

// Problem instances, schedules and the total-age objective.
//
// A schedule for N updates over a horizon T is described by
//   y[0..N]   inter-request intervals; y_i is the receiver's age at the
//             moment update i is requested, sum(y) = T
//   c[0..N-1] processing times of the N updates
// Storage is 0-based. The boundary convention c_0 = c_{N+1} = 0 is applied in
// code and never stored.

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aoi {

/// c_i >= c_min.
struct ConstantMode {
  double c_min = 0.0;
};

/// c_i >= alpha * y_i.
struct InverseAgeMode {
  double alpha = 0.0;
};

/// c_i >= max(0, c - alpha * y_i), 0 < alpha < 1/2.
struct ProportionalAgeMode {
  double c = 0.0;
  double alpha = 0.0;
};

using ConstraintMode = std::variant<ConstantMode, InverseAgeMode, ProportionalAgeMode>;

enum class ModeKind { Constant, InverseAge, ProportionalAge };

ModeKind kind_of(const ConstraintMode& mode);
std::string_view to_string(ModeKind kind);
void validate(const ConstraintMode& mode);

struct ProblemInstance {
  double T = 1.0;
  int N = 1;
  ConstraintMode mode = ConstantMode{};

  void validate() const;
};

struct Schedule {
  std::vector<double> y;
  std::vector<double> c;

  int updates() const { return static_cast<int>(c.size()); }
  /// Throws ShapeError unless y.size() == c.size() + 1 and c is non-empty.
  void check_shape() const;
};

/// A_T = 1/2 sum y_i^2 + sum c_i y_i.
double total_age(const Schedule& schedule);

/// A_T / T.
double average_age(const Schedule& schedule, double T);

/// s_i = y_i - c_{i-1} with c_0 = 0; N+1 entries.
std::vector<double> request_gaps(const Schedule& schedule);

struct Violation {
  std::string constraint;
  double residual = 0.0;  // amount by which the constraint is missed (> tol)
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
};

/// Checks horizon sum, request gaps and the processing-time rule of the mode.
/// The horizon is compared with relative tolerance max(tol, 1e-9) against T,
/// every other residual absolutely against tol.
FeasibilityReport check_feasibility(const ProblemInstance& instance, const Schedule& schedule,
                                    double tol = 1e-9);

/// Smallest processing time the mode allows when the update is requested at age y.
double min_processing(const ConstraintMode& mode, double y);

/// Schedule with every c_i at its smallest admissible value for the given y.
Schedule with_tight_processing(const ConstraintMode& mode, std::span<const double> y);

}  // namespace aoi
