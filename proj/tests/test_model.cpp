#include <doctest.h>

#include <algorithm>
#include <random>

#include "aoi/closed_form.hpp"
#include "aoi/errors.hpp"
#include "aoi/model.hpp"
#include "test_oracles.hpp"

using namespace aoi;
using doctest::Approx;

namespace {

Schedule sched(std::vector<double> y, std::vector<double> c) { return {std::move(y), std::move(c)}; }

}  // namespace

TEST_CASE("total and average age") {
  const auto equal = sched({2.5, 2.5, 2.5, 2.5}, {0, 0, 0});
  CHECK(total_age(equal) == Approx(12.5));
  CHECK(average_age(equal, 10.0) == Approx(1.25));

  const auto spread = sched({2.25, 2.25, 2.25, 3.25}, {1, 1, 1});
  CHECK(total_age(spread) == Approx(19.625));
  CHECK(average_age(spread, 10.0) == Approx(1.9625));

  const double T = 7.0;
  CHECK(total_age(sched({T / 2, T / 2}, {0})) == Approx(T * T / 4));
}

TEST_CASE("average age is linear in a common scale factor") {
  const auto base = sched({0.8, 1.2, 2.0, 6.0}, {1.2, 1.8, 3.0});
  for (double k : {0.5, 2.0, 7.5}) {
    auto scaled = base;
    for (auto& v : scaled.y) v *= k;
    for (auto& v : scaled.c) v *= k;
    CHECK(average_age(scaled, 10.0 * k) == Approx(k * average_age(base, 10.0)));
  }
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(total_age(sched({1, 2}, {})), ShapeError);
  CHECK_THROWS_AS(total_age(sched({1, 2, 3}, {0})), ShapeError);
  CHECK_THROWS_AS(request_gaps(sched({1}, {0})), ShapeError);
  ProblemInstance inst{10.0, 3, ConstantMode{1.0}};
  CHECK_THROWS_AS(check_feasibility(inst, sched({5, 5}, {1})), ShapeError);
}

TEST_CASE("request gaps") {
  auto close = [](const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == Approx(b[i]));
  };
  close(request_gaps(sched({2.25, 2.25, 2.25, 3.25}, {1, 1, 1})), {2.25, 1.25, 1.25, 2.25});
  close(request_gaps(sched({1.25, 2.5, 2.5, 3.75}, {2.5, 2.5, 2.5})), {1.25, 0, 0, 1.25});
  close(request_gaps(sched({1, 2, 3}, {0, 0})), {1, 2, 3});
}

TEST_CASE("feasibility checks") {
  const ProblemInstance inst{10.0, 3, ConstantMode{1.0}};
  CHECK(check_feasibility(inst, sched({2.25, 2.25, 2.25, 3.25}, {1, 1, 1})).feasible());

  const auto report = check_feasibility(inst, sched({2.25, 2.25, 2.25, 3.25}, {0.5, 1, 1}));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].constraint == "c_1 >= 1");
  CHECK(report.violations[0].residual == Approx(0.5));

  // N c = 12 > T: nothing with c_i >= 4 fits into 10 time units.
  const ProblemInstance tight{10.0, 3, ConstantMode{4.0}};
  CHECK_FALSE(check_feasibility(tight, sched({0, 4, 4, 2}, {4, 4, 4})).feasible());
  CHECK_FALSE(check_feasibility(tight, sched({2.5, 2.5, 2.5, 2.5}, {4, 4, 4})).feasible());

  const auto wrong_sum = check_feasibility(inst, sched({2, 2, 2, 2}, {1, 1, 1}));
  REQUIRE_FALSE(wrong_sum.feasible());
  CHECK(wrong_sum.violations[0].constraint == "sum(y) = T");

  const ProblemInstance inv{10.0, 3, InverseAgeMode{0.5}};
  CHECK(check_feasibility(inv, sched({2, 2, 2, 4}, {1, 1, 1})).feasible());
  CHECK_FALSE(check_feasibility(inv, sched({2, 2, 2, 4}, {0.9, 1, 1})).feasible());

  const ProblemInstance prop{6.0, 3, ProportionalAgeMode{1.0, 0.4}};
  CHECK(check_feasibility(prop, sched({1.5625, 1.5625, 1.5625, 1.3125}, {0.375, 0.375, 0.375}))
            .feasible());
  CHECK_FALSE(
      check_feasibility(prop, sched({1.5625, 1.5625, 1.5625, 1.3125}, {0.3, 0.375, 0.375}))
          .feasible());
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS((ProblemInstance{0.0, 3, ConstantMode{0}}.validate()), DomainError);
  CHECK_THROWS_AS((ProblemInstance{10.0, 0, ConstantMode{0}}.validate()), DomainError);
  CHECK_THROWS_AS((ProblemInstance{10.0, 3, ConstantMode{-1}}.validate()), DomainError);
  CHECK_THROWS_AS((ProblemInstance{10.0, 3, InverseAgeMode{0}}.validate()), DomainError);
  CHECK_THROWS_AS((ProblemInstance{10.0, 3, ProportionalAgeMode{1, 0.5}}.validate()), DomainError);
  CHECK_THROWS_AS((ProblemInstance{10.0, 3, ProportionalAgeMode{0, 0.2}}.validate()), DomainError);
  CHECK_NOTHROW((ProblemInstance{10.0, 3, ProportionalAgeMode{1, 0.49}}.validate()));
}

TEST_CASE("unconstrained optimum has average age T/(2(N+1))") {
  for (int N = 1; N <= 8; ++N) {
    for (double T : {1.0, 3.7, 10.0}) {
      const auto sol = solve_constant(T, N, 0.0);
      CHECK(average_age(sol.schedule, T) == Approx(T / (2.0 * (N + 1))).epsilon(1e-14));
    }
  }
}

TEST_CASE("property: permuting y with non-uniform c changes the total age") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int N = 2 + trial % 5;
    Schedule s{std::vector<double>(N + 1), std::vector<double>(N)};
    for (auto& v : s.y) v = 0.1 + unit(rng);
    for (auto& v : s.c) v = unit(rng);
    auto permuted = s;
    std::shuffle(permuted.y.begin(), permuted.y.end(), rng);
    // Direct re-evaluation of the objective for the permuted vector.
    double direct = 0.0;
    for (std::size_t i = 0; i < permuted.y.size(); ++i) {
      direct += 0.5 * permuted.y[i] * permuted.y[i];
      if (i < permuted.c.size()) direct += permuted.c[i] * permuted.y[i];
    }
    CHECK(total_age(permuted) == Approx(direct).epsilon(1e-14));
    if (permuted.y != s.y) CHECK(total_age(permuted) != Approx(total_age(s)).epsilon(1e-12));
  }
}

TEST_CASE("tight processing completion") {
  const std::vector<double> y{2.0, 3.0, 5.0};
  const auto s = with_tight_processing(ProportionalAgeMode{1.0, 0.4}, y);
  CHECK(s.c[0] == Approx(0.2));
  CHECK(s.c[1] == 0.0);
  CHECK(with_tight_processing(InverseAgeMode{0.5}, y).c[1] == Approx(1.5));
  CHECK(with_tight_processing(ConstantMode{0.7}, y).c[0] == Approx(0.7));
}
