#pragma once

#include "nadon/geometry/metric_field.hpp"

namespace nadon {

// Pointwise geodesic data between two metrics: with S = h0^{1/2} and
// K = S^{-1} h1 S^{-1} = V diag(lambda) V*, h_s = S V diag(lambda^s) V* S and
// h_s^{-1} d_s h_s = S^{-1} V diag(log lambda) V* S for every s.
struct GeodesicPair {
  CMatrix sqrt_h0;
  CMatrix inv_sqrt_h0;
  CMatrix vectors;
  RVector eigenvalues;

  GeodesicPair(const CMatrix& h1, const CMatrix& h0);
  CMatrix at(double s) const;
  CMatrix velocity() const;  // h_s^{-1} d_s h_s
};

// h_s = exp(s log(h1 h0^{-1})) h0.
MetricField geodesic_point(const MetricField& h1, const MetricField& h0, double s);

// integral over X of (tr v^2)^{1/2} omega, v = log(h1 h0^{-1}).
double geodesic_distance(const MetricField& h1, const MetricField& h0);
double pointwise_distance(const CMatrix& h1, const CMatrix& h0);

}  // namespace nadon
