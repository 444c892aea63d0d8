#include "aoi/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aoi/errors.hpp"

namespace aoi {

namespace {

// Relative slack on d <= exp(-b c_max); presets place d exactly on the bound.
constexpr double kBoundSlack = 1e-12;

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void DistortionSpec::validate() const {
  if (!finite_positive(a)) throw DomainError("distortion: a must be positive");
  if (!finite_positive(b)) throw DomainError("distortion: b must be positive");
  if (!finite_positive(c_max)) throw DomainError("distortion: c_max must be positive");
  if (!std::isfinite(d) || d < 0.0) throw DomainError("distortion: d must be nonnegative");
  switch (kind) {
    case DistortionKind::Exponential:
      if (d > std::exp(-b * c_max) * (1.0 + kBoundSlack)) {
        throw DomainError("distortion: exponential curve needs d <= exp(-b*c_max)");
      }
      break;
    case DistortionKind::InverseLinear:
      if (d <= 0.0) throw DomainError("distortion: inverse-linear curve needs d > 0");
      break;
  }
}

DistortionSpec DistortionSpec::exponential(double a, double b, double d, double c_max) {
  DistortionSpec s{DistortionKind::Exponential, a, b, d, c_max};
  s.validate();
  return s;
}

DistortionSpec DistortionSpec::inverse_linear(double a, double b, double d, double c_max) {
  DistortionSpec s{DistortionKind::InverseLinear, a, b, d, c_max};
  s.validate();
  return s;
}

double eval(const DistortionSpec& spec, double c) {
  if (!(c >= 0.0) || c > spec.c_max) {
    std::ostringstream msg;
    msg << "distortion: processing time " << c << " outside [0, " << spec.c_max << "]";
    throw DomainError(msg.str());
  }
  switch (spec.kind) {
    case DistortionKind::Exponential:
      // Clamp the rounding residue at the zero-distortion end.
      return std::max(0.0, spec.a * (std::exp(-spec.b * c) - spec.d));
    case DistortionKind::InverseLinear:
      return spec.a / (spec.b * c + spec.d);
  }
  return 0.0;
}

double min_processing_for(const DistortionSpec& spec, double beta) {
  if (std::isnan(beta) || beta < 0.0) throw DomainError("distortion: budget must be positive");
  if (beta >= eval(spec, 0.0)) return 0.0;
  const double floor = eval(spec, spec.c_max);
  if (beta < floor) {
    std::ostringstream msg;
    msg << "distortion budget " << beta << " below the attainable minimum " << floor;
    throw InfeasibleDistortion(msg.str());
  }
  double c = 0.0;
  switch (spec.kind) {
    case DistortionKind::Exponential:
      c = -std::log(beta / spec.a + spec.d) / spec.b;
      break;
    case DistortionKind::InverseLinear:
      c = (spec.a / beta - spec.d) / spec.b;
      break;
  }
  return std::clamp(c, 0.0, spec.c_max);
}

DistortionSpec sensor_fusion_spec(double sigma_sq, double mu_x, double sigma_x_sq,
                                  int m_sensors) {
  if (!finite_positive(sigma_sq)) throw DomainError("sensor fusion: noise variance must be positive");
  if (!finite_positive(sigma_x_sq)) throw DomainError("sensor fusion: signal variance must be positive");
  if (!std::isfinite(mu_x)) throw DomainError("sensor fusion: mean must be finite");
  if (m_sensors < 1) throw DomainError("sensor fusion: need at least one sensor");
  return DistortionSpec::inverse_linear(sigma_sq, 1.0, sigma_sq / (mu_x * mu_x + sigma_x_sq),
                                        static_cast<double>(m_sensors));
}

DistortionSpec tradeoff_preset() {
  const double d = std::exp(-3.0);
  return DistortionSpec::exponential(8.0 / (1.0 - d), 1.2, d, 2.5);
}

DistortionSpec unit_preset() {
  const double d = std::exp(-1.0);
  return DistortionSpec::exponential(1.0 / (1.0 - d), 0.25, d, 4.0);
}

}  // namespace aoi
