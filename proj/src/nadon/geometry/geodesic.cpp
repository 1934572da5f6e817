#include "nadon/geometry/geodesic.hpp"

#include <cmath>

#include "nadon/errors.hpp"

namespace nadon {

GeodesicPair::GeodesicPair(const CMatrix& h1, const CMatrix& h0) {
  Eigen::SelfAdjointEigenSolver<CMatrix> e0(hermitian_part(h0));
  const RVector d0 = e0.eigenvalues();
  sqrt_h0 = e0.eigenvectors() * d0.cwiseSqrt().asDiagonal() * e0.eigenvectors().adjoint();
  inv_sqrt_h0 =
      e0.eigenvectors() * d0.cwiseSqrt().cwiseInverse().asDiagonal() * e0.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> ek(hermitian_part(inv_sqrt_h0 * h1 * inv_sqrt_h0));
  vectors = ek.eigenvectors();
  eigenvalues = ek.eigenvalues();
}

CMatrix GeodesicPair::at(double s) const {
  const RVector p = eigenvalues.unaryExpr([s](double x) { return std::pow(x, s); });
  return hermitian_part(sqrt_h0 * vectors * p.asDiagonal() * vectors.adjoint() * sqrt_h0);
}

CMatrix GeodesicPair::velocity() const {
  const RVector l = eigenvalues.unaryExpr([](double x) { return std::log(x); });
  return inv_sqrt_h0 * vectors * l.asDiagonal() * vectors.adjoint() * sqrt_h0;
}

MetricField geodesic_point(const MetricField& h1, const MetricField& h0, double s) {
  if (&h1.grid() != &h0.grid() && h1.grid().size() != h0.grid().size()) {
    throw Error(ErrorKind::InvalidConfig, "metrics live on different grids");
  }
  if (h1.has_evaluator() && h0.has_evaluator()) {
    auto e1 = h1.evaluator();
    auto e0 = h0.evaluator();
    return MetricField(h0.grid_ptr(), h0.degrees(),
                       [e1, e0, s](cd z) { return GeodesicPair(e1(z), e0(z)).at(s); });
  }
  std::vector<CMatrix> v;
  for (std::size_t i = 0; i < h0.grid().size(); ++i) v.push_back(GeodesicPair(h1[i], h0[i]).at(s));
  return MetricField(h0.grid_ptr(), h0.degrees(), std::move(v));
}

double pointwise_distance(const CMatrix& h1, const CMatrix& h0) {
  const RVector l = generalized_eigenvalues(h1, h0);
  double s = 0.0;
  for (Eigen::Index i = 0; i < l.size(); ++i) s += std::pow(std::log(l(i)), 2);
  return std::sqrt(s);
}

double geodesic_distance(const MetricField& h1, const MetricField& h0) {
  std::vector<double> d;
  d.reserve(h0.grid().size());
  for (std::size_t i = 0; i < h0.grid().size(); ++i) d.push_back(pointwise_distance(h1[i], h0[i]));
  return h0.grid().integrate(d);
}

}  // namespace nadon
