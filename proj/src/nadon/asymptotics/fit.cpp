#include "nadon/asymptotics/fit.hpp"

#include <algorithm>
#include <cmath>

#include "nadon/errors.hpp"

namespace nadon {

namespace {

std::size_t tail_start(std::size_t n, double fraction) {
  const auto len = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
  return n - std::min(n, len);
}

template <class V>
V tail(const V& v, std::size_t from) {
  return V(v.begin() + static_cast<std::ptrdiff_t>(from), v.end());
}

}  // namespace

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorKind::WindowTooShort, "least squares needs at least two samples");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0)) throw Error(ErrorKind::WindowTooShort, "least squares window has zero width");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - f.slope * x[i] - f.intercept;
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

SlopeFitReport fit_slope(const std::vector<double>& t, const std::vector<double>& mdon,
                         const Rational& mna, int calibration_sign) {
  if (t.size() != mdon.size()) throw Error(ErrorKind::InvalidConfig, "trace columns differ in length");
  const std::size_t from = tail_start(t.size(), kTailFraction);
  if (t.size() - from < 2) {
    throw Error(ErrorKind::WindowTooShort,
                "tail window has " + std::to_string(t.size() - from) + " samples, need 2");
  }
  SlopeFitReport rep;
  const LineFit f = least_squares(tail(t, from), tail(mdon, from));
  rep.fitted_slope = f.slope;
  rep.intercept = f.intercept;
  rep.residual = f.residual;
  rep.window = {t[from], t.back()};

  const std::size_t from3 = tail_start(t.size(), kSensitivityFraction);
  if (t.size() - from3 >= 2) {
    rep.sensitivity_slope = least_squares(tail(t, from3), tail(mdon, from3)).slope;
    rep.flagged = std::abs(rep.sensitivity_slope - f.slope) >
                  kSensitivityTolerance * std::max(std::abs(f.slope), 1.0);
  } else {
    rep.sensitivity_slope = f.slope;
  }
  rep.mna = mna;
  rep.calibration_sign = calibration_sign;
  const double m = mna.get_d();
  rep.relative_error = std::abs(calibration_sign * f.slope - m) / std::max(std::abs(m), 1.0);
  return rep;
}

SandwichReport sandwich_constants(const std::vector<double>& t, const std::vector<double>& mdon,
                                  double mna, int calibration_sign) {
  SandwichReport s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double d = calibration_sign * mdon[i] - mna * t[i];
    s.lower = std::max(s.lower, -d);
    s.upper = std::max(s.upper, d);
  }
  s.bound = 10.0 * (1.0 + std::abs(mna));
  s.within = s.lower <= s.bound && s.upper <= s.bound;
  return s;
}

DivergenceReport distance_divergence_check(const std::vector<double>& t,
                                           const std::vector<double>& dist) {
  DivergenceReport r;
  const std::size_t from = tail_start(t.size(), kTailFraction);
  std::vector<double> lx, ly;
  for (std::size_t i = from; i < t.size(); ++i) {
    if (t[i] > 0 && dist[i] > 0) {
      lx.push_back(std::log(t[i]));
      ly.push_back(std::log(dist[i]));
    }
  }
  r.increasing = t.size() >= 2;
  for (std::size_t i = from + 1; i < t.size(); ++i) r.increasing = r.increasing && dist[i] > dist[i - 1];
  if (lx.size() < 2) {
    // Zero distance throughout: nothing to fit, and nothing diverges.
    if (t.size() - from < 2) throw Error(ErrorKind::WindowTooShort, "distance tail too short");
    r.increasing = false;
    return r;
  }
  r.exponent = least_squares(lx, ly).slope;
  r.divergent = r.increasing && r.exponent >= kDivergenceExponent;
  return r;
}

double offdiagonal_decay_rate(const std::vector<double>& t, const std::vector<double>& offdiag) {
  const std::size_t from = tail_start(t.size(), kTailFraction);
  std::vector<double> x, y;
  for (std::size_t i = from; i < t.size(); ++i) {
    if (offdiag[i] > 0) {
      x.push_back(t[i]);
      y.push_back(std::log(offdiag[i]));
    }
  }
  return -least_squares(x, y).slope;
}

}  // namespace nadon
