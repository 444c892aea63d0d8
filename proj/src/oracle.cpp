#include "aoi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <numeric>
#include <random>
#include <type_traits>

#include "aoi/closed_form.hpp"
#include "aoi/errors.hpp"

namespace aoi {

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr int kRepairAttempts = 100;

// a_prev * y[k-1] + a_cur * y[k] >= rhs; a_prev is unused for k == 0.
struct LinearConstraint {
  int k = 0;
  double a_prev = 0.0;
  double a_cur = 1.0;
  double rhs = 0.0;
  bool chain = false;  // couples y[k-1] and y[k]

  double slack(const std::vector<double>& y) const {
    const double prev = k > 0 ? a_prev * y[k - 1] : 0.0;
    return prev + a_cur * y[k] - rhs;
  }
  double rate(const std::vector<double>& d) const {
    const double prev = k > 0 ? a_prev * d[k - 1] : 0.0;
    return prev + a_cur * d[k];
  }
};

// Reduced objective with c_i tied to y_i by the tight rule; separable in y.
class ReducedProblem {
 public:
  explicit ReducedProblem(const ProblemInstance& inst) : inst_(inst), n_(inst.N) {
    constraints_.push_back({0, 0.0, 1.0, 0.0, false});
    std::visit(
        [&](const auto& m) {
          using M = std::decay_t<decltype(m)>;
          for (int k = 1; k <= n_; ++k) {
            if constexpr (std::is_same_v<M, ConstantMode>) {
              constraints_.push_back({k, 0.0, 1.0, m.c_min, false});
            } else if constexpr (std::is_same_v<M, InverseAgeMode>) {
              constraints_.push_back({k, -m.alpha, 1.0, 0.0, true});
            } else {
              constraints_.push_back({k, 0.0, 1.0, 0.0, false});
              constraints_.push_back({k, m.alpha, 1.0, m.c, true});
            }
          }
        },
        inst_.mode);
    for (std::size_t idx = 0; idx < constraints_.size(); ++idx) {
      if (constraints_[idx].chain) chain_at_[constraints_[idx].k] = static_cast<int>(idx);
    }
  }

  int size() const { return n_ + 1; }
  double horizon() const { return inst_.T; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  int chain_constraint(int k) const {
    auto it = chain_at_.find(k);
    return it == chain_at_.end() ? -1 : it->second;
  }

  // Contribution of interval i at value v.
  double term(int i, double v) const {
    if (i == n_) return 0.5 * v * v;
    return std::visit(
        [&](const auto& m) -> double {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, ConstantMode>) {
            return 0.5 * v * v + m.c_min * v;
          } else if constexpr (std::is_same_v<M, InverseAgeMode>) {
            return (0.5 + m.alpha) * v * v;
          } else {
            return 0.5 * v * v + v * std::max(0.0, m.c - m.alpha * v);
          }
        },
        inst_.mode);
  }

  double objective(const std::vector<double>& y) const {
    double f = 0.0;
    for (int i = 0; i <= n_; ++i) f += term(i, y[i]);
    return f;
  }

  double lower_bound(int k, const std::vector<double>& y) const {
    if (k == 0) return 0.0;
    return std::max(0.0, min_processing(inst_.mode, y[k - 1]));
  }

  bool feasible(const std::vector<double>& y, double tol) const {
    for (const auto& con : constraints_) {
      if (con.slack(y) < -tol) return false;
    }
    return true;
  }

 private:
  const ProblemInstance& inst_;
  int n_;
  std::vector<LinearConstraint> constraints_;
  std::map<int, int> chain_at_;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Random positive draws scaled to the horizon, then clamped up to each lower
// bound in order; on failure the draws shrink toward the tight chain.
bool feasible_start(const ReducedProblem& prob, std::mt19937_64& rng, std::vector<double>& y) {
  const int n = prob.size();
  const double T = prob.horizon();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> draw(n);
  for (auto& v : draw) v = 1.0 - unit(rng);  // (0, 1]
  const double total = std::accumulate(draw.begin(), draw.end(), 0.0);
  for (auto& v : draw) v *= T / total;

  y.assign(n, 0.0);
  double scale = 1.0;
  for (int attempt = 0; attempt < kRepairAttempts; ++attempt, scale *= 0.5) {
    double used = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
      y[k] = std::max(scale * draw[k], prob.lower_bound(k, y));
      used += y[k];
    }
    y[n - 1] = T - used;
    if (prob.feasible(y, 1e-12 * T)) return true;
  }
  // Last resort: the tight chain itself.
  double used = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    y[k] = prob.lower_bound(k, y);
    used += y[k];
  }
  y[n - 1] = T - used;
  return prob.feasible(y, 1e-12 * T);
}

struct Direction {
  std::vector<int> support;
  std::vector<double> d;  // dense, zero off support
};

// Unit move into y[i] carried along every tight chain constraint after i,
// balanced by y[j]. Returns false when j falls inside the carried run.
bool make_direction(const ReducedProblem& prob, const std::vector<double>& y, int i, int j,
                    bool carry, double tight_tol, Direction& dir) {
  const int n = prob.size();
  std::fill(dir.d.begin(), dir.d.end(), 0.0);
  dir.support.clear();
  dir.d[i] = 1.0;
  dir.support.push_back(i);
  double moved = 1.0;
  if (carry) {
    for (int k = i + 1; k < n; ++k) {
      const int idx = prob.chain_constraint(k);
      if (idx < 0) break;
      const auto& con = prob.constraints()[idx];
      if (con.slack(y) > tight_tol) break;
      if (k == j) return false;
      dir.d[k] = -con.a_prev / con.a_cur * dir.d[k - 1];
      dir.support.push_back(k);
      moved += dir.d[k];
    }
    if (dir.support.size() == 1) return false;  // same as the plain move
  }
  dir.d[j] -= moved;
  dir.support.push_back(j);
  return true;
}

// Feasible step interval along d from y.
std::pair<double, double> step_range(const ReducedProblem& prob, const std::vector<double>& y,
                                     const std::vector<double>& d) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& con : prob.constraints()) {
    const double g = con.rate(d);
    if (g == 0.0) continue;
    const double bound = -std::max(0.0, con.slack(y)) / g;
    if (g > 0.0) {
      lo = std::max(lo, bound);
    } else {
      hi = std::min(hi, bound);
    }
  }
  return {lo, hi};
}

struct RestartOutcome {
  std::vector<double> y;
  double objective = 0.0;
  int sweeps = 0;
  int renormalizations = 0;
  std::vector<double> trace;
};

RestartOutcome descend(const ReducedProblem& prob, std::vector<double> y,
                       const OracleConfig& config) {
  const int n = prob.size();
  const double T = prob.horizon();
  const double tight_tol = 1e-9 * T;
  const double width_tol = 1e-13 * T;

  RestartOutcome out;
  double f = prob.objective(y);
  out.trace.push_back(f);
  Direction dir{{}, std::vector<double>(n, 0.0)};

  auto delta_f = [&](double step) {
    double change = 0.0;
    for (int k : dir.support) change += prob.term(k, y[k] + step * dir.d[k]) - prob.term(k, y[k]);
    return change;
  };

  for (int sweep = 1; sweep <= config.max_iterations; ++sweep) {
    double sweep_gain = 0.0;
    for (int carry = 0; carry < 2; ++carry) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          if (!make_direction(prob, y, i, j, carry == 1, tight_tol, dir)) continue;
          auto [lo, hi] = step_range(prob, y, dir.d);
          lo = std::max(lo, -T);
          hi = std::min(hi, T);
          if (!(hi - lo > width_tol)) continue;

          // Golden-section search; the 1-D restriction is convex.
          double a = lo;
          double b = hi;
          double x1 = b - kGolden * (b - a);
          double x2 = a + kGolden * (b - a);
          double f1 = delta_f(x1);
          double f2 = delta_f(x2);
          while (b - a > width_tol) {
            if (f1 <= f2) {
              b = x2;
              x2 = x1;
              f2 = f1;
              x1 = b - kGolden * (b - a);
              f1 = delta_f(x1);
            } else {
              a = x1;
              x1 = x2;
              f1 = f2;
              x2 = a + kGolden * (b - a);
              f2 = delta_f(x2);
            }
          }
          double best = 0.5 * (a + b);
          double gain = -delta_f(best);
          for (double edge : {lo, hi}) {
            const double g = -delta_f(edge);
            if (g > gain) {
              gain = g;
              best = edge;
            }
          }
          if (gain <= 0.0) continue;
          for (int k : dir.support) y[k] += best * dir.d[k];
          sweep_gain += gain;
        }
      }
    }

    const double drift = T - std::accumulate(y.begin(), y.end(), 0.0);
    if (drift != 0.0) {
      y[n - 1] += drift;
      ++out.renormalizations;
    }
    const double next = prob.objective(y);
    f = std::min(f, next);
    out.trace.push_back(f);
    out.sweeps = sweep;
    if (sweep_gain <= config.line_search_tol * std::max(1.0, std::abs(f))) {
      out.y = std::move(y);
      out.objective = next;
      return out;
    }
  }
  throw NonConvergence("oracle: no convergence within " + std::to_string(config.max_iterations) +
                       " sweeps");
}

}  // namespace

void OracleConfig::validate() const {
  if (restarts < 1) throw DomainError("oracle: restarts must be positive");
  if (max_iterations < 1) throw DomainError("oracle: max_iterations must be positive");
  if (!(line_search_tol > 0.0)) throw DomainError("oracle: line_search_tol must be positive");
}

double proportional_min_horizon(int N, double c, double alpha) {
  double prev = 0.0;  // y_1 = 0
  double total = 0.0;
  for (int k = 1; k <= N; ++k) {
    prev = std::max(0.0, c - alpha * prev);
    total += prev;
  }
  return total;
}

OracleResult oracle_solve(const ProblemInstance& instance, const OracleConfig& config) {
  instance.validate();
  config.validate();
  if (const auto* m = std::get_if<ProportionalAgeMode>(&instance.mode)) {
    const double needed = proportional_min_horizon(instance.N, m->c, m->alpha);
    if (instance.T < needed * (1.0 - 1e-12)) {
      throw Infeasible("oracle: T below the tight-chain minimum horizon");
    }
  }

  const ReducedProblem prob(instance);
  OracleResult best;
  bool have = false;
  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(splitmix(config.seed ^ splitmix(static_cast<std::uint64_t>(r))));
    std::vector<double> start;
    if (!feasible_start(prob, rng, start)) {
      throw Infeasible("oracle: could not construct a feasible starting schedule");
    }
    auto outcome = descend(prob, std::move(start), config);
    if (!have || outcome.objective < best.objective) {
      best.schedule = with_tight_processing(instance.mode, outcome.y);
      best.objective = outcome.objective;
      best.best_restart = r;
      best.sweeps = outcome.sweeps;
      best.renormalizations = outcome.renormalizations;
      best.trace = std::move(outcome.trace);
      have = true;
    }
  }
  best.objective = total_age(best.schedule);
  return best;
}

double compare(const ProblemInstance& instance, const OracleConfig& config) {
  const double closed = solve(instance).total_age;
  const double numeric = oracle_solve(instance, config).objective;
  return (numeric - closed) / closed;
}

}  // namespace aoi
