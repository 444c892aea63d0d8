#include "aoi/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <type_traits>
#include <sstream>
#include <vector>

#include "aoi/errors.hpp"

namespace aoi {

namespace {

// Relative slack applied to regime-boundary comparisons so that boundary
// instances built with rounding (e.g. c = 10/3, N = 3, T = 10) classify
// the same way as their exact counterparts.
constexpr double kBoundarySlack = 1e-12;

bool below(double value, double bound) { return value < bound - kBoundarySlack * std::abs(bound); }
bool at_most(double value, double bound) { return value <= bound + kBoundarySlack * std::abs(bound); }

void require_horizon(double T, int N) {
  if (!std::isfinite(T) || T <= 0.0) throw DomainError("T must be positive");
  if (N < 1) throw DomainError("N must be at least 1");
}

// Intervals affine in the first interval eta: y_i = offset_i + slope_i * eta.
struct AffineIntervals {
  std::vector<double> offset;
  std::vector<double> slope;

  std::vector<double> at(double eta) const {
    std::vector<double> y(offset.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = offset[i] + slope[i] * eta;
    return y;
  }
};

// Fills the last interval so the intervals sum to T.
void close_horizon(AffineIntervals& f, double T) {
  f.offset.push_back(T - std::accumulate(f.offset.begin(), f.offset.end(), 0.0));
  f.slope.push_back(-std::accumulate(f.slope.begin(), f.slope.end(), 0.0));
}

// Minimiser over eta of sum_i quad_i * y_i^2 + lin_i * y_i, assembled from the
// affine coefficients term by term.
double minimize_quadratic(const AffineIntervals& f, const std::vector<double>& quad,
                          const std::vector<double>& lin) {
  double a2 = 0.0;  // coefficient of eta^2
  double a1 = 0.0;  // coefficient of eta
  for (std::size_t i = 0; i < f.offset.size(); ++i) {
    a2 += quad[i] * f.slope[i] * f.slope[i];
    a1 += 2.0 * quad[i] * f.offset[i] * f.slope[i] + lin[i] * f.slope[i];
  }
  return -a1 / (2.0 * a2);
}

Schedule assemble(std::vector<double> y, std::vector<double> c) {
  return Schedule{std::move(y), std::move(c)};
}

std::string describe(double value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

Solution finish(Schedule schedule, ModeKind mode, Branch which, std::string condition,
                std::map<std::string, double> distances) {
  Solution out;
  out.total_age = total_age(schedule);
  out.schedule = std::move(schedule);
  out.regime = RegimeReport{mode, which, std::move(condition), std::move(distances)};
  return out;
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::ConstantSpread: return "constant-spread";
    case Branch::ConstantBackToBack: return "constant-back-to-back";
    case Branch::InverseEqualized: return "inverse-equalized";
    case Branch::InverseChain: return "inverse-chain";
    case Branch::ProportionalChain: return "proportional-chain";
    case Branch::ProportionalEqualized: return "proportional-equalized";
    case Branch::ProportionalCapped: return "proportional-capped";
    case Branch::ProportionalUniform: return "proportional-uniform";
  }
  return "?";
}

ProportionalBounds proportional_bounds(int N, double c, double alpha) {
  return {(N + 2 - alpha) / (1 + alpha) * c, (N + 1 - alpha) / alpha * c, (N + 1) / alpha * c};
}

namespace branch {

Schedule constant_spread(double T, int N, double c_min) {
  std::vector<double> y(N + 1, (T - c_min) / (N + 1));
  y[N] = (T + N * c_min) / (N + 1);
  return assemble(std::move(y), std::vector<double>(N, c_min));
}

Schedule constant_back_to_back(double T, int N, double c_min) {
  std::vector<double> y(N + 1, c_min);
  y[0] = std::max(0.0, (T - N * c_min) / 2);
  y[N] = (T - (N - 2) * c_min) / 2;
  return assemble(std::move(y), std::vector<double>(N, c_min));
}

Schedule inverse_equalized(double T, int N, double alpha) {
  std::vector<double> y(N + 1, T / (N + 2 * alpha + 1));
  y[N] = (2 * alpha + 1) * T / (N + 2 * alpha + 1);
  std::vector<double> c(N);
  for (int i = 0; i < N; ++i) c[i] = alpha * y[i];
  return assemble(std::move(y), std::move(c));
}

Schedule inverse_chain(double T, int N, double alpha) {
  // y_i = alpha^(i-1) eta for i <= N, last interval takes the rest.
  AffineIntervals f;
  double power = 1.0;
  for (int i = 0; i < N; ++i, power *= alpha) {
    f.offset.push_back(0.0);
    f.slope.push_back(power);
  }
  close_horizon(f, T);
  std::vector<double> quad(N + 1, 0.5 + alpha);
  quad[N] = 0.5;
  const double eta = minimize_quadratic(f, quad, std::vector<double>(N + 1, 0.0));

  std::vector<double> y(N + 1);
  y[0] = eta;
  for (int i = 1; i < N; ++i) y[i] = alpha * y[i - 1];
  y[N] = T - std::accumulate(y.begin(), y.begin() + N, 0.0);
  std::vector<double> c(N);
  for (int i = 0; i < N; ++i) c[i] = alpha * y[i];
  return assemble(std::move(y), std::move(c));
}

Schedule proportional_chain(double T, int N, double c, double alpha) {
  // y_1 = eta, y_i = c - alpha y_{i-1} for 2 <= i <= N, last takes the rest.
  AffineIntervals f;
  f.offset.push_back(0.0);
  f.slope.push_back(1.0);
  for (int i = 1; i < N; ++i) {
    f.offset.push_back(c - alpha * f.offset.back());
    f.slope.push_back(-alpha * f.slope.back());
  }
  close_horizon(f, T);

  std::vector<double> quad(N + 1, 0.5 - alpha);
  std::vector<double> lin(N + 1, c);
  quad[N] = 0.5;
  lin[N] = 0.0;
  const double unconstrained = minimize_quadratic(f, quad, lin);

  // Feasible eta: every y_i >= 0 and y_{N+1} + alpha y_N >= c.
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  auto restrict = [&](double r, double s) {  // r + s * eta >= 0
    if (s > 0.0) {
      lo = std::max(lo, -r / s);
    } else if (s < 0.0) {
      hi = std::min(hi, -r / s);
    } else if (r < -kBoundarySlack * T) {
      hi = -std::numeric_limits<double>::infinity();
    }
  };
  for (int i = 0; i <= N; ++i) restrict(f.offset[i], f.slope[i]);
  const int last = N;
  const int prev = N - 1;
  restrict(f.offset[last] + alpha * f.offset[prev] - c, f.slope[last] + alpha * f.slope[prev]);

  if (lo > hi + kBoundarySlack * T) {
    throw Infeasible("infeasible: T = " + describe(T) +
                     " is shorter than the tightest processing chain (c=" + describe(c) +
                     ", alpha=" + describe(alpha) + ")");
  }
  const double eta = std::clamp(unconstrained, lo, std::max(lo, hi));

  std::vector<double> y(N + 1);
  y[0] = eta;
  for (int i = 1; i < N; ++i) y[i] = c - alpha * y[i - 1];
  y[N] = T - std::accumulate(y.begin(), y.begin() + N, 0.0);
  return with_tight_processing(ProportionalAgeMode{c, alpha}, y);
}

Schedule proportional_equalized(double T, int N, double c, double alpha) {
  const double denom = N + 1 - 2 * alpha;
  std::vector<double> y(N + 1, (T - c) / denom);
  y[N] = ((1 - 2 * alpha) * T + N * c) / denom;
  return with_tight_processing(ProportionalAgeMode{c, alpha}, y);
}

Schedule proportional_capped(double T, int N, double c, double alpha) {
  std::vector<double> y(N + 1, c / alpha);
  y[N] = T - N * c / alpha;
  return with_tight_processing(ProportionalAgeMode{c, alpha}, y);
}

Schedule proportional_uniform(double T, int N, double c, double alpha) {
  return with_tight_processing(ProportionalAgeMode{c, alpha}, std::vector<double>(N + 1, T / (N + 1)));
}

}  // namespace branch

Solution solve_constant(double T, int N, double c_min) {
  require_horizon(T, N);
  validate(ConstantMode{c_min});
  const double busy = N * c_min;
  const double spread_bound = (N + 2) * c_min;
  std::map<std::string, double> distances{{"T-N*c", T - busy}, {"T-(N+2)*c", T - spread_bound}};
  if (below(T, busy)) {
    throw Infeasible("infeasible: T < N*c (T=" + describe(T) + ", N*c=" + describe(busy) + ")");
  }
  if (at_most(T, spread_bound) && c_min > 0.0) {
    return finish(branch::constant_back_to_back(T, N, c_min), ModeKind::Constant,
                  Branch::ConstantBackToBack, "N*c <= T <= (N+2)*c", std::move(distances));
  }
  return finish(branch::constant_spread(T, N, c_min), ModeKind::Constant, Branch::ConstantSpread,
                "T > (N+2)*c", std::move(distances));
}

Solution solve_inverse_age(double T, int N, double alpha) {
  require_horizon(T, N);
  validate(InverseAgeMode{alpha});
  std::map<std::string, double> distances{{"alpha-1", alpha - 1.0}};
  if (alpha <= 1.0) {
    return finish(branch::inverse_equalized(T, N, alpha), ModeKind::InverseAge,
                  Branch::InverseEqualized, "alpha <= 1", std::move(distances));
  }
  return finish(branch::inverse_chain(T, N, alpha), ModeKind::InverseAge, Branch::InverseChain,
                "alpha > 1", std::move(distances));
}

Solution solve_proportional_age(double T, int N, double c, double alpha) {
  require_horizon(T, N);
  validate(ProportionalAgeMode{c, alpha});
  const auto bounds = proportional_bounds(N, c, alpha);
  std::map<std::string, double> distances{
      {"T-B1", T - bounds.b1}, {"T-B2", T - bounds.b2}, {"T-B3", T - bounds.b3}};
  const auto mode = ModeKind::ProportionalAge;

  if (!below(T, bounds.b3)) {
    return finish(branch::proportional_uniform(T, N, c, alpha), mode,
                  Branch::ProportionalUniform, "T >= (N+1)/alpha*c", std::move(distances));
  }
  if (!below(T, bounds.b2)) {
    return finish(branch::proportional_capped(T, N, c, alpha), mode, Branch::ProportionalCapped,
                  "(N+1-alpha)/alpha*c <= T < (N+1)/alpha*c", std::move(distances));
  }
  if (!at_most(T, bounds.b1)) {
    return finish(branch::proportional_equalized(T, N, c, alpha), mode,
                  Branch::ProportionalEqualized,
                  "(N+2-alpha)/(1+alpha)*c < T < (N+1-alpha)/alpha*c", std::move(distances));
  }
  auto schedule = branch::proportional_chain(T, N, c, alpha);
  const double cap = c / alpha;
  for (int i = 0; i < N; ++i) {
    if (schedule.y[i] > cap * (1.0 + 1e-9)) {
      throw InternalConsistencyError("proportional chain: y_" + std::to_string(i + 1) +
                                     " exceeds c/alpha");
    }
  }
  return finish(std::move(schedule), mode, Branch::ProportionalChain,
                "T <= (N+2-alpha)/(1+alpha)*c", std::move(distances));
}

Solution solve(const ProblemInstance& instance) {
  instance.validate();
  return std::visit(
      [&](const auto& m) -> Solution {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ConstantMode>) {
          return solve_constant(instance.T, instance.N, m.c_min);
        } else if constexpr (std::is_same_v<M, InverseAgeMode>) {
          return solve_inverse_age(instance.T, instance.N, m.alpha);
        } else {
          return solve_proportional_age(instance.T, instance.N, m.c, m.alpha);
        }
      },
      instance.mode);
}

}  // namespace aoi
