#include <doctest.h>

#include <cmath>
#include <random>

#include "aoi/distortion.hpp"
#include "aoi/errors.hpp"
#include "test_oracles.hpp"

using namespace aoi;
using doctest::Approx;

TEST_CASE("exponential curve spans [0, 1] for the unit preset") {
  const auto spec = unit_preset();
  CHECK(eval(spec, 0.0) == Approx(1.0).epsilon(1e-15));
  CHECK(eval(spec, 4.0) == Approx(0.0).epsilon(1e-15));
  CHECK(eval(spec, 4.0) >= 0.0);
}

TEST_CASE("inverse-linear curve at zero processing is a/d") {
  const auto spec = DistortionSpec::inverse_linear(1.0, 1.0, 1.0, 10.0);
  CHECK(eval(spec, 0.0) == 1.0);
  CHECK(eval(spec, 3.0) == Approx(0.25));
}

TEST_CASE("eval rejects processing times outside [0, c_max]") {
  const auto spec = unit_preset();
  CHECK_THROWS_AS(eval(spec, -0.1), DomainError);
  CHECK_THROWS_AS(eval(spec, 4.1), DomainError);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(DistortionSpec::exponential(0.0, 1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(DistortionSpec::exponential(1.0, -1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(DistortionSpec::exponential(1.0, 1.0, 0.5, 1.0), DomainError);  // 0.5 > e^-1
  CHECK_THROWS_AS(DistortionSpec::inverse_linear(1.0, 1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(DistortionSpec::inverse_linear(1.0, 1.0, 1.0, 0.0), DomainError);
  CHECK_NOTHROW(tradeoff_preset());
}

TEST_CASE("min_processing_for examples") {
  const auto unit = unit_preset();
  CHECK(min_processing_for(unit, 1.0) == 0.0);
  CHECK(min_processing_for(unit, 5.0) == 0.0);

  // Expected value from bisection on eval, independent of the log inversion.
  const double beta = eval(unit, 2.5);
  const double by_bisection = testing::bisect_decreasing(
      [&](double c) { return eval(unit, c); }, beta, 0.0, unit.c_max);
  CHECK(by_bisection == Approx(2.5).epsilon(1e-12));
  CHECK(min_processing_for(unit, beta) == Approx(by_bisection).epsilon(1e-12));

  const auto il = DistortionSpec::inverse_linear(1.0, 1.0, 1.0, 10.0);
  const double il_bisection = testing::bisect_decreasing(
      [&](double c) { return eval(il, c); }, 0.25, 0.0, il.c_max);
  CHECK(il_bisection == Approx(3.0).epsilon(1e-12));
  CHECK(min_processing_for(il, 0.25) == Approx(3.0).epsilon(1e-14));
}

TEST_CASE("budgets below the curve's floor are infeasible") {
  const auto il = DistortionSpec::inverse_linear(1.0, 1.0, 1.0, 10.0);  // floor 1/11
  CHECK_THROWS_AS(min_processing_for(il, 0.05), InfeasibleDistortion);
  CHECK(min_processing_for(il, 1.0 / 11.0) == Approx(10.0));
  CHECK_THROWS_AS(min_processing_for(il, -1.0), DomainError);
  // The trade-off curve reaches zero at c_max, so a zero budget is attainable.
  CHECK(min_processing_for(tradeoff_preset(), 0.0) == Approx(2.5));
}

TEST_CASE("sensor fusion spec") {
  const auto s = sensor_fusion_spec(1.0, 0.0, 1.0, 10);
  CHECK(s.kind == DistortionKind::InverseLinear);
  CHECK(s.a == 1.0);
  CHECK(s.b == 1.0);
  CHECK(s.d == 1.0);
  CHECK(s.c_max == 10.0);
  CHECK(sensor_fusion_spec(2.0, 1.0, 1.0, 5).d == 1.0);
  CHECK(eval(s, 1.0) == Approx(0.5));
  CHECK(testing::linear_estimator_mse(1.0, 0.0, 1.0, 1) == Approx(0.5));

  CHECK_THROWS_AS(sensor_fusion_spec(0.0, 0.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(sensor_fusion_spec(1.0, 0.0, -1.0, 1), DomainError);
  CHECK_THROWS_AS(sensor_fusion_spec(1.0, 0.0, 1.0, 0), DomainError);
}

TEST_CASE("sensor fusion curve equals the best linear estimator's MSE") {
  for (const auto& [sigma_sq, mu, sigma_x_sq] :
       {std::tuple{1.0, 0.0, 1.0}, {0.5, 2.0, 3.0}, {4.0, -1.0, 0.25}}) {
    const auto spec = sensor_fusion_spec(sigma_sq, mu, sigma_x_sq, 8);
    for (int reads = 1; reads <= 3; ++reads) {
      CAPTURE(reads);
      CHECK(eval(spec, reads) ==
            Approx(testing::linear_estimator_mse(sigma_sq, mu, sigma_x_sq, reads)).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: strict monotonicity, nonnegativity and round trip") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const bool exponential = trial % 2 == 0;
    const double c_max = 0.5 + 10.0 * unit(rng);
    const double b = 0.05 + 2.0 * unit(rng);
    const double a = 0.1 + 10.0 * unit(rng);
    const double d = exponential ? unit(rng) * std::exp(-b * c_max) : 0.05 + 3.0 * unit(rng);
    const auto spec = exponential ? DistortionSpec::exponential(a, b, d, c_max)
                                  : DistortionSpec::inverse_linear(a, b, d, c_max);
    double c1 = unit(rng) * c_max;
    double c2 = unit(rng) * c_max;
    if (c1 > c2) std::swap(c1, c2);
    CAPTURE(trial);
    if (c2 - c1 > 1e-9) CHECK(eval(spec, c1) > eval(spec, c2));
    CHECK(eval(spec, c2) >= 0.0);
    if (!exponential) CHECK(eval(spec, c2) > 0.0);
    CHECK(std::abs(min_processing_for(spec, eval(spec, c1)) - c1) <= 1e-9);
  }
}
