#include <doctest.h>

#include <cmath>
#include <numeric>

#include "aoi/closed_form.hpp"
#include "aoi/errors.hpp"
#include "aoi/oracle.hpp"

using namespace aoi;
using doctest::Approx;

namespace {

OracleConfig quick(std::uint64_t seed = 99) {
  OracleConfig cfg;
  cfg.restarts = 6;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("oracle reproduces the constant-floor example") {
  const ProblemInstance inst{10, 3, ConstantMode{1}};
  const auto res = oracle_solve(inst, OracleConfig{});
  CHECK(res.objective == Approx(19.625).epsilon(1e-3));
  // Hand evaluation of the objective on the published schedule.
  CHECK(0.5 * (3 * 2.25 * 2.25 + 3.25 * 3.25) + 3 * 2.25 == Approx(19.625));
}

TEST_CASE("oracle finds the symmetric unconstrained optimum") {
  const auto res = oracle_solve({10, 3, ConstantMode{0}}, quick());
  for (double v : res.schedule.y) CHECK(v == Approx(2.5).epsilon(1e-6));
}

TEST_CASE("oracle matches the alpha > 1 chain objective") {
  const ProblemInstance inst{10, 3, InverseAgeMode{1.5}};
  const auto res = oracle_solve(inst, quick());
  CHECK(res.objective == Approx(solve(inst).total_age).epsilon(1e-3));
}

TEST_CASE("compare stays inside the gap band on the published instances") {
  for (const auto& inst : {ProblemInstance{10, 3, ConstantMode{2.5}},
                           ProblemInstance{10, 3, InverseAgeMode{0.5}},
                           ProblemInstance{6, 3, ProportionalAgeMode{1, 0.4}},
                           ProblemInstance{3, 3, ProportionalAgeMode{1, 0.4}},
                           ProblemInstance{10, 3, ConstantMode{10.0 / 3.0}}}) {
    const double gap = compare(inst, quick());
    CHECK(gap >= -1e-6);
    CHECK(gap <= 1e-3);
  }
}

TEST_CASE("oracle output is feasible and sums to T") {
  for (const auto& inst : {ProblemInstance{7.3, 5, ConstantMode{0.9}},
                           ProblemInstance{4.1, 6, InverseAgeMode{2.2}},
                           ProblemInstance{3.0, 4, ProportionalAgeMode{0.8, 0.3}}}) {
    const auto res = oracle_solve(inst, quick());
    CHECK(check_feasibility(inst, res.schedule, 1e-7).feasible());
    const double sum = std::accumulate(res.schedule.y.begin(), res.schedule.y.end(), 0.0);
    CHECK(std::abs(sum - inst.T) <= 1e-12 * inst.T);
  }
}

TEST_CASE("oracle is deterministic for a fixed seed") {
  const ProblemInstance inst{9.0, 5, ProportionalAgeMode{1.3, 0.35}};
  const auto a = oracle_solve(inst, quick(1234));
  const auto b = oracle_solve(inst, quick(1234));
  CHECK(a.schedule.y == b.schedule.y);
  CHECK(a.schedule.c == b.schedule.c);
  CHECK(a.objective == b.objective);
}

TEST_CASE("best objective never increases across sweeps") {
  const auto res = oracle_solve({12.0, 6, InverseAgeMode{1.7}}, quick(5));
  REQUIRE(res.trace.size() >= 2);
  for (std::size_t k = 1; k < res.trace.size(); ++k) CHECK(res.trace[k] <= res.trace[k - 1]);
}

TEST_CASE("oracle error paths") {
  CHECK_THROWS_AS(oracle_solve({10, 3, ConstantMode{4}}, quick()), Infeasible);
  CHECK_THROWS_AS(oracle_solve({2.0, 3, ProportionalAgeMode{1, 0.4}}, quick()), Infeasible);

  OracleConfig starved = quick();
  starved.max_iterations = 1;
  starved.line_search_tol = 1e-300;
  CHECK_THROWS_AS(oracle_solve({10, 6, InverseAgeMode{1.5}}, starved), NonConvergence);

  OracleConfig bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(oracle_solve({10, 3, ConstantMode{1}}, bad), DomainError);
}
