#include "nadon/geometry/fubini_study.hpp"

#include <cmath>

#include "nadon/errors.hpp"
#include "nadon/geometry/sections.hpp"

namespace nadon {

FubiniStudy::FubiniStudy(const SectionSpace& space, CMatrix factor)
    : space_(std::make_shared<SectionSpace>(space)), factor_(std::move(factor)) {}

FubiniStudy FubiniStudy::from_form(const SectionSpace& space, const CMatrix& form) {
  const Eigen::Index n = static_cast<Eigen::Index>(space.dimension());
  if (form.rows() != n || form.cols() != n) {
    throw Error(ErrorKind::InvalidConfig, "hermitian form has the wrong size");
  }
  // Equilibrate before factoring: forms near the round L2 Gram span many
  // orders of magnitude on the diagonal.
  RVector s = form.diagonal().real().cwiseSqrt().cwiseInverse();
  CMatrix scaled = s.asDiagonal() * hermitian_part(form) * s.asDiagonal();
  Eigen::LLT<CMatrix> llt(scaled);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidConfig, "hermitian form is not positive definite");
  }
  // scaled = R* R with R upper; H^{-1} = S R^{-1} R^{-*} S.
  CMatrix rinv = llt.matrixU().solve(CMatrix::Identity(n, n));
  return FubiniStudy(space, s.asDiagonal() * rinv);
}

FubiniStudy FubiniStudy::from_factor(const SectionSpace& space, CMatrix factor) {
  return FubiniStudy(space, std::move(factor));
}

CMatrix FubiniStudy::form() const {
  CMatrix g = factor_ * factor_.adjoint();
  return hermitian_part(g.inverse());
}

FsLocal FubiniStudy::local(cd z) const {
  const double s = twist_scale(space_->twist(), z);
  FsLocal l;
  l.b = s * evaluation_matrix(*space_, z) * factor_;
  l.db = s * evaluation_derivative(*space_, z) * factor_;
  const Eigen::Index r = l.b.rows();
  const Eigen::Index n = l.b.cols();
  Eigen::HouseholderQR<CMatrix> qr(l.b.adjoint());
  CMatrix full = qr.householderQ();
  l.q = full.leftCols(r);
  l.perp = full.rightCols(n - r);
  l.r = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
  const RVector d = l.r.diagonal().cwiseAbs();
  if (!(d.minCoeff() > 1e-13 * d.maxCoeff())) {
    throw Error(ErrorKind::SingularEvaluation, "evaluation matrix is rank deficient at a node");
  }
  return l;
}

CMatrix metric_from_local(const FsLocal& l) {
  const Eigen::Index r = l.r.rows();
  CMatrix rinv = l.r.triangularView<Eigen::Upper>().solve(CMatrix::Identity(r, r));
  return hermitian_part(rinv * rinv.adjoint());
}

CMatrix lambda_curvature_from_local(const FsLocal& l, int k, cd z) {
  const Eigen::Index r = l.r.rows();
  CMatrix d = l.db * l.perp;
  CMatrix x = d * d.adjoint();
  const double c = conformal(z);
  return -static_cast<double>(k) * CMatrix::Identity(r, r) + c * c * x * metric_from_local(l);
}

CMatrix FubiniStudy::inverse_metric(cd z) const {
  const FsLocal l = local(z);
  return hermitian_part(l.b * l.b.adjoint());
}

CMatrix FubiniStudy::metric(cd z) const { return metric_from_local(local(z)); }

CMatrix FubiniStudy::lambda_curvature(cd z) const {
  return lambda_curvature_from_local(local(z), space_->twist(), z);
}

MetricField FubiniStudy::field(std::shared_ptr<const QuadratureGrid> grid) const {
  FubiniStudy self = *this;
  return MetricField(
      std::move(grid), space_->bundle().degrees(), [self](cd z) { return self.metric(z); },
      [self](cd z) { return self.lambda_curvature(z); });
}

}  // namespace nadon
