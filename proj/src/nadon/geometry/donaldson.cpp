#include "nadon/geometry/donaldson.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>

#include "nadon/errors.hpp"
#include "nadon/geometry/geodesic.hpp"
#include "nadon/geometry/sections.hpp"

namespace nadon {

void gauss_legendre(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw Error(ErrorKind::InvariantViolation, "Gauss-Legendre table allocation failed");
  x.resize(static_cast<std::size_t>(n));
  w.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &x[i], &w[i], table.get());
}

FunctionalValue donaldson(const MetricField& h1, const MetricField& h0, double mu, int path_nodes,
                          const FdSettings& fd) {
  if (!h1.has_evaluator() || !h0.has_evaluator()) {
    throw Error(ErrorKind::InvalidConfig, "donaldson functional needs metrics with evaluators");
  }
  std::vector<double> s, ws;
  gauss_legendre(path_nodes, 0.0, 1.0, s, ws);

  const auto& e1 = h1.evaluator();
  const auto& e0 = h0.evaluator();
  const auto& degrees = h0.degrees();
  const QuadratureGrid& grid = h0.grid();
  std::vector<double> m1(grid.size(), 0.0), m2(grid.size(), 0.0);

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cd z = grid[i].z;
    const bool outer = uses_outer_gauge(z);
    // The geodesic commutes with holomorphic gauge changes and tr(v Lambda F)
    // is gauge invariant, so the whole stencil is taken in the gauged frame.
    auto pair_at = [&](cd p) {
      if (!outer) return GeodesicPair(e1(p), e0(p));
      const CMatrix g = frame_gauge(degrees, p);
      return GeodesicPair(g.adjoint() * e1(p) * g, g.adjoint() * e0(p) * g);
    };
    std::vector<GeodesicPair> pairs;
    for (cd p : stencil_points(z, fd.step)) pairs.push_back(pair_at(p));
    const CMatrix v = pairs[0].velocity();
    double acc = 0.0;
    for (std::size_t a = 0; a < s.size(); ++a) {
      Stencil st;
      st.center = pairs[0].at(s[a]);
      for (int d = 0; d < 4; ++d) {
        st.coarse[d] = pairs[1 + d].at(s[a]);
        st.fine[d] = pairs[5 + d].at(s[a]);
      }
      acc += ws[a] * (v * lambda_curvature_fd(st, z, fd)).trace().real();
    }
    const GeodesicPair& center = pairs[0];
    m1[i] = acc;
    m2[i] = center.eigenvalues.array().log().sum();
  }

  FunctionalValue out;
  out.m1 = grid.integrate(m1);
  out.m2 = grid.integrate(m2);
  out.mdon = out.m1 - mu * out.m2;
  out.path_nodes = path_nodes;
  return out;
}

FunctionalValue donaldson_bergman_path(const SectionSpace& space, const CMatrix& factor_a,
                                       const CMatrix& generator, const QuadratureGrid& grid,
                                       double mu, int path_nodes) {
  std::vector<double> s, ws;
  gauss_legendre(path_nodes, 0.0, 1.0, s, ws);
  Eigen::SelfAdjointEigenSolver<CMatrix> ez(hermitian_part(generator));
  const CMatrix& vz = ez.eigenvectors();
  const RVector& lz = ez.eigenvalues();
  const CMatrix z_gen = hermitian_part(generator);
  const int k = space.twist();

  std::vector<FubiniStudy> path;
  for (double sa : s) {
    const RVector e = (0.5 * sa * lz).array().exp();
    path.push_back(FubiniStudy::from_factor(space, factor_a * vz * e.asDiagonal() * vz.adjoint()));
  }
  const FubiniStudy fa = FubiniStudy::from_factor(space, factor_a);
  const RVector e1 = (0.5 * lz).array().exp();
  const FubiniStudy fb = FubiniStudy::from_factor(space, factor_a * vz * e1.asDiagonal() * vz.adjoint());

  std::vector<double> m1(grid.size(), 0.0), m2(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const cd z = grid[i].z;
    const double c = conformal(z);
    double acc = 0.0;
    for (std::size_t a = 0; a < s.size(); ++a) {
      const FsLocal l = path[a].local(z);
      const CMatrix q = l.q.adjoint() * z_gen * l.q;
      const CMatrix d = l.r.adjoint().triangularView<Eigen::Lower>().solve(CMatrix(l.db * l.perp));
      const double density = k * q.trace().real() - c * c * (q * d * d.adjoint()).trace().real();
      acc += ws[a] * density;
    }
    m1[i] = acc;
    // log det(h_a^{-1} h_b) = log det P_a - log det P_b with P = R* R.
    const FsLocal la = fa.local(z);
    const FsLocal lb = fb.local(z);
    m2[i] = 2.0 * (la.r.diagonal().cwiseAbs().array().log().sum() -
                   lb.r.diagonal().cwiseAbs().array().log().sum());
  }
  FunctionalValue out;
  out.m1 = grid.integrate(m1);
  out.m2 = grid.integrate(m2);
  out.mdon = out.m1 - mu * out.m2;
  out.path_nodes = path_nodes;
  return out;
}

FunctionalValue donaldson_fs(const FubiniStudy& b, const FubiniStudy& a, const QuadratureGrid& grid,
                             double mu, int path_nodes) {
  const CMatrix la_inv = a.factor().inverse();
  const CMatrix m = la_inv * b.factor() * b.factor().adjoint() * la_inv.adjoint();
  return donaldson_bergman_path(a.space(), a.factor(), hermitian_log(m), grid, mu, path_nodes);
}

}  // namespace nadon
