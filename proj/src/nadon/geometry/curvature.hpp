#pragma once

#include <cmath>
#include <vector>

#include "nadon/geometry/metric_field.hpp"

namespace nadon {

struct FdSettings {
  // Relative; see fd_step_length. Below about 1e-3 roundoff in the second
  // differences outweighs what Richardson extrapolation gains.
  double step = 2e-3;
  double tolerance = 1e-3;   // Richardson agreement, relative
};

// Outside the unit disc the chart-frame metric of O(a) decays like
// |z|^{-2a}; the holomorphic gauge diag(z^{a_i}) removes this so the metric is
// smooth in 1/z. Curvature transforms by conjugation.
bool uses_outer_gauge(cd z);
CMatrix frame_gauge(const std::vector<int>& degrees, cd z);

// Chart step: step * (1 + |z|^2)^{1/2}, small against the distance to both poles.
inline double fd_step_length(double step, cd z) { return step * std::sqrt(conformal(z)); }

// Values of the (gauged, when |z| > 1) metric on the five-point stencils at z
// with steps delta and delta/2.
struct Stencil {
  CMatrix center;
  CMatrix coarse[4];  // +x, -x, +y, -y at delta
  CMatrix fine[4];    // same at delta/2
};

Stencil sample_stencil(const MetricFunction& h, const std::vector<int>& degrees, cd z,
                       double step);
// Stencil points for z; the gauge, if any, is applied by the caller.
std::vector<cd> stencil_points(cd z, double step);

// Lambda_omega F = -(1 + |z|^2)^2 dbar(h^{-1} d h) from a stencil, in the
// stencil's frame; Richardson-extrapolated from delta and delta/2. Throws
// StepTooCoarse when the two estimates disagree beyond tolerance.
CMatrix lambda_curvature_fd(const Stencil& s, cd z, const FdSettings& fd);
// In the chart frame.
CMatrix lambda_curvature_fd(const MetricFunction& h, const std::vector<int>& degrees, cd z,
                            const FdSettings& fd);

// Lambda_omega F at every node: analytic when available, otherwise by
// differences of the evaluator.
std::vector<CMatrix> lambda_curvature(const MetricField& h, const FdSettings& fd = {});

// integral of tr F = integral of tr(Lambda_omega F) omega; equals deg(E).
double curvature_integral(const MetricField& h, const FdSettings& fd = {});

}  // namespace nadon
