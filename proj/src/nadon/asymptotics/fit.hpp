#pragma once

#include <utility>
#include <vector>

#include "nadon/algebra/rational.hpp"
#include "nadon/asymptotics/run.hpp"

namespace nadon {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms
};

// Ordinary least squares y = slope x + intercept.
LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

struct SlopeFitReport {
  double fitted_slope = 0.0;     // raw fit, before the calibration sign
  double intercept = 0.0;
  double residual = 0.0;
  std::pair<double, double> window{0.0, 0.0};
  double sensitivity_slope = 0.0;  // same fit over the last third
  bool flagged = false;            // the two windows disagree
  Rational mna = 0;
  int calibration_sign = 1;
  double relative_error = 0.0;     // |sign * slope - mna| / max(|mna|, 1)
};

constexpr double kTailFraction = 0.5;
constexpr double kSensitivityFraction = 1.0 / 3.0;
constexpr double kSensitivityTolerance = 0.05;

// Fits over the last half of the samples; WindowTooShort if that has fewer
// than two points.
SlopeFitReport fit_slope(const std::vector<double>& t, const std::vector<double>& mdon,
                         const Rational& mna, int calibration_sign = 1);

struct SandwichReport {
  double lower = 0.0;  // C: mna t - C <= M(t)
  double upper = 0.0;  // C': M(t) <= mna t + C'
  double bound = 0.0;  // 10 (1 + |mna|)
  bool within = false;
};

SandwichReport sandwich_constants(const std::vector<double>& t, const std::vector<double>& mdon,
                                  double mna, int calibration_sign = 1);

struct DivergenceReport {
  bool increasing = false;
  bool divergent = false;
  double exponent = 0.0;  // slope of log dist against log t over the tail
};

constexpr double kDivergenceExponent = 0.9;

DivergenceReport distance_divergence_check(const std::vector<double>& t,
                                           const std::vector<double>& dist);

// Average decay rate of log(offdiag) over the tail, per unit t.
double offdiagonal_decay_rate(const std::vector<double>& t, const std::vector<double>& offdiag);

}  // namespace nadon
