#include "nadon/geometry/bergman.hpp"

#include <algorithm>
#include <cmath>

#include "nadon/errors.hpp"
#include "nadon/geometry/sections.hpp"

namespace nadon {

CMatrix l2_form(const MetricField& h, const SectionSpace& space) {
  if (h.degrees() != space.bundle().degrees()) {
    throw Error(ErrorKind::InvalidConfig, "metric and section space live on different bundles");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(space.dimension());
  CMatrix form = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < h.grid().size(); ++i) {
    const auto& node = h.grid()[i];
    const CMatrix a = twist_scale(space.twist(), node.z) * evaluation_matrix(space, node.z);
    form += node.weight * a.adjoint() * h[i] * a;
  }
  return hermitian_part(form);
}

BergmanReport bergman_kernel_deviation(const MetricField& h, const SectionSpace& space) {
  const FubiniStudy fs = FubiniStudy::from_form(space, l2_form(h, space));
  BergmanReport rep{0.0, static_cast<double>(space.bundle().rank()) /
                             static_cast<double>(space.dimension())};
  for (std::size_t i = 0; i < h.grid().size(); ++i) {
    const CMatrix s = hermitian_sqrt(h[i]);
    const CMatrix b = rep.normalization * s * fs.inverse_metric(h.grid()[i].z) * s;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(b), Eigen::EigenvaluesOnly);
    const RVector l = es.eigenvalues();
    rep.deviation = std::max({rep.deviation, std::abs(l.minCoeff() - 1.0), std::abs(l.maxCoeff() - 1.0)});
  }
  return rep;
}

}  // namespace nadon
