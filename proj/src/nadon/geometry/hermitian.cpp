#include "nadon/geometry/hermitian.hpp"

#include <cmath>
#include <limits>

namespace nadon {

CMatrix hermitian_function(const CMatrix& a, const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(a));
  RVector d = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix hermitian_sqrt(const CMatrix& a) {
  return hermitian_function(a, [](double x) { return std::sqrt(x); });
}

CMatrix hermitian_inv_sqrt(const CMatrix& a) {
  return hermitian_function(a, [](double x) { return 1.0 / std::sqrt(x); });
}

CMatrix hermitian_log(const CMatrix& a) {
  return hermitian_function(a, [](double x) { return std::log(x); });
}

CMatrix hermitian_exp(const CMatrix& a) {
  return hermitian_function(a, [](double x) { return std::exp(x); });
}

bool is_positive_definite(const CMatrix& a) {
  Eigen::LLT<CMatrix> llt(hermitian_part(a));
  return llt.info() == Eigen::Success;
}

double condition_number(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(a), Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

RVector generalized_eigenvalues(const CMatrix& a1, const CMatrix& a0) {
  Eigen::GeneralizedSelfAdjointEigenSolver<CMatrix> es(hermitian_part(a1), hermitian_part(a0),
                                                       Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace nadon
