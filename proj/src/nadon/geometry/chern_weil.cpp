#include "nadon/geometry/chern_weil.hpp"

#include "nadon/errors.hpp"
#include "nadon/geometry/sections.hpp"

namespace nadon {

ChernWeilReport chern_weil_gap(const MetricField& h, const Subspace& w, const FdSettings& fd,
                               std::uint64_t seed) {
  if (!h.has_evaluator()) throw Error(ErrorKind::InvalidConfig, "chern-weil needs a metric evaluator");
  if (h.degrees() != w.space.bundle().degrees()) {
    throw Error(ErrorKind::InvalidConfig, "metric and subspace live on different bundles");
  }
  const GenericRank g = generic_rank(w.space, w.vectors, seed);
  const SaturationResult sat = saturated_invariants(w, seed);
  std::vector<QVector> frame;
  for (auto c : g.frame) frame.push_back(w.vectors[c]);
  const CMatrix coeffs = to_complex(frame, w.space.dimension());
  const auto& degrees = h.degrees();

  ChernWeilReport rep;
  rep.rank = sat.rank;
  rep.degree = sat.degree;
  std::vector<double> lhs(h.grid().size(), 0.0), ii(h.grid().size(), 0.0);
  for (std::size_t n = 0; n < h.grid().size(); ++n) {
    const cd z = h.grid()[n].z;
    const bool outer = uses_outer_gauge(z);
    // Holomorphic frame of S, and its z-derivative, in the gauged frame.
    CMatrix u = evaluation_matrix(w.space, z) * coeffs;
    CMatrix du = evaluation_derivative(w.space, z) * coeffs;
    if (outer) {
      for (std::size_t i = 0; i < degrees.size(); ++i) {
        const Eigen::Index r = static_cast<Eigen::Index>(i);
        const cd gi = std::pow(z, -degrees[i]);
        const cd dgi = -static_cast<double>(degrees[i]) * std::pow(z, -degrees[i] - 1);
        du.row(r) = gi * du.row(r) + dgi * u.row(r);
        u.row(r) *= gi;
      }
    }
    Eigen::JacobiSVD<CMatrix> svd(u);
    const RVector sv = svd.singularValues();
    if (!(sv.minCoeff() > 1e-8 * sv.maxCoeff())) {
      ++rep.excluded_nodes;
      continue;
    }

    const Stencil st = sample_stencil(h.evaluator(), degrees, z, fd.step);
    const CMatrix& hm = st.center;
    CMatrix f;
    if (h.has_analytic_curvature()) {
      f = h.analytic_curvature()(z);
      if (outer) {
        const CMatrix gm = frame_gauge(degrees, z);
        f = gm.inverse() * f * gm;
      }
    } else {
      f = lambda_curvature_fd(st, z, fd);
    }
    // d h by central differences, Richardson-combined.
    const double dz = fd_step_length(fd.step, z);
    const cd i(0, 1);
    auto dh = [&](const CMatrix (&s)[4], double step) -> CMatrix {
      return 0.5 * ((s[0] - s[1]) / (2 * step) - i * (s[2] - s[3]) / (2 * step));
    };
    const CMatrix dhz = (4.0 * dh(st.fine, 0.5 * dz) - dh(st.coarse, dz)) / 3.0;
    const CMatrix theta = hm.inverse() * dhz;

    const CMatrix gram = u.adjoint() * hm * u;
    const CMatrix ginv = gram.inverse();
    const CMatrix pi = u * ginv * u.adjoint() * hm;
    const Eigen::Index r = hm.rows();
    const CMatrix ww = (CMatrix::Identity(r, r) - pi) * (du + theta * u);
    const double c = conformal(z);
    lhs[n] = (f * pi).trace().real();
    ii[n] = c * c * (ginv * ww.adjoint() * hm * ww).trace().real();
  }
  rep.lhs = h.grid().integrate(lhs);
  rep.second_fundamental = h.grid().integrate(ii);
  rep.gap = rep.lhs - static_cast<double>(rep.degree);
  return rep;
}

}  // namespace nadon
