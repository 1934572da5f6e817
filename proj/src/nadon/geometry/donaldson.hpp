#pragma once

#include "nadon/geometry/curvature.hpp"
#include "nadon/geometry/fubini_study.hpp"

namespace nadon {

struct FunctionalValue {
  double m1 = 0.0;
  double m2 = 0.0;
  double mdon = 0.0;  // m1 - mu m2
  int path_nodes = 0;
};

// Gauss-Legendre nodes and weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& x, std::vector<double>& w);

// M(h1, h0) along the connecting geodesic h_s = exp(s log(h1 h0^{-1})) h0:
// M1 = int_0^1 int tr(h_s^{-1} d_s h_s Lambda F_s) omega ds,
// M2 = int log det(h0^{-1} h1) omega. Both metrics need evaluators.
FunctionalValue donaldson(const MetricField& h1, const MetricField& h0, double mu,
                          int path_nodes = 32, const FdSettings& fd = {});

// Same functional along the Bergman path between two FS metrics: with
// dual-form factors L_s = L_a exp(s Z / 2), Z hermitian, the path runs from
// FS(L_a) to FS(L_a exp(Z/2)). Curvature is analytic.
FunctionalValue donaldson_bergman_path(const SectionSpace& space, const CMatrix& factor_a,
                                       const CMatrix& generator, const QuadratureGrid& grid,
                                       double mu, int path_nodes = 32);

// Convenience form between two FS metrics with generator from their dual forms.
FunctionalValue donaldson_fs(const FubiniStudy& b, const FubiniStudy& a, const QuadratureGrid& grid,
                             double mu, int path_nodes = 32);

}  // namespace nadon
