#pragma once

// Distortion-vs-processing-time curves.
//
//   Exponential:    D(c) = a * (exp(-b c) - d),   d <= exp(-b c_max)
//   InverseLinear:  D(c) = a / (b c + d),         d > 0
//
// Both are strictly decreasing on [0, c_max]. A distortion budget beta is
// turned into the smallest processing time meeting it with
// min_processing_for().

namespace aoi {

enum class DistortionKind { Exponential, InverseLinear };

struct DistortionSpec {
  DistortionKind kind = DistortionKind::Exponential;
  double a = 1.0;
  double b = 1.0;
  double d = 0.0;
  double c_max = 1.0;

  /// Throws DomainError when the invariants of the chosen kind do not hold.
  void validate() const;

  static DistortionSpec exponential(double a, double b, double d, double c_max);
  static DistortionSpec inverse_linear(double a, double b, double d, double c_max);
};

/// Distortion of an update processed for c time units, c in [0, c_max].
double eval(const DistortionSpec& spec, double c);

/// Smallest c in [0, c_max] with eval(spec, c) <= beta.
///
/// Returns 0 when the unprocessed update already meets the budget. Throws
/// InfeasibleDistortion when beta < eval(spec, c_max). A zero budget is only
/// accepted when the curve actually reaches zero at c_max.
double min_processing_for(const DistortionSpec& spec, double beta);

/// Inverse-linear curve of the optimal linear estimator that fuses c unit-time
/// sensor reads of X ~ (mu_x, sigma_x_sq) under noise variance sigma_sq.
DistortionSpec sensor_fusion_spec(double sigma_sq, double mu_x, double sigma_x_sq,
                                  int m_sensors);

/// Curve used for the age/distortion trade-off figure:
/// a = 8/(1-e^-3), b = 1.2, d = e^-3, with c_max = 2.5 where D reaches zero.
DistortionSpec tradeoff_preset();

/// Curve of the constant-budget examples: a = 1/(1-e^-1), b = 1/4, d = e^-1,
/// c_max = 4, spanning distortions [0, 1].
DistortionSpec unit_preset();

}  // namespace aoi
