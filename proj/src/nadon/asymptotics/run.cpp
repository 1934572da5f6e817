#include "nadon/asymptotics/run.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <string>

#include "nadon/errors.hpp"
#include "nadon/geometry/donaldson.hpp"
#include "nadon/geometry/geodesic.hpp"
#include "nadon/geometry/sections.hpp"

namespace nadon {

namespace {

// d/dt of (M1, M2) densities at one node for the factor L = U e^{wt}.
struct Rates {
  double m1;
  double m2;
};

Rates rates_at(const FsLocal& l, const RVector& w, int k, cd z) {
  const CMatrix y = (2.0 * w).cast<cd>().asDiagonal();
  const CMatrix q = l.q.adjoint() * y * l.q;
  const CMatrix d = l.r.adjoint().triangularView<Eigen::Lower>().solve(CMatrix(l.db * l.perp));
  const double c = conformal(z);
  return {k * q.trace().real() - c * c * (q * d * d.adjoint()).trace().real(), -q.trace().real()};
}

double log_abs_det(const FsLocal& l) { return l.r.diagonal().cwiseAbs().array().log().sum(); }

}  // namespace

std::vector<double> uniform_t_grid(double t_max, double step) {
  if (!(step > 0.0) || !(t_max >= 0.0)) {
    throw Error(ErrorKind::InvalidConfig, "t_grid: step must be positive and t_max nonnegative");
  }
  std::vector<double> t;
  const long n = std::lround(t_max / step);
  for (long i = 0; i <= n; ++i) t.push_back(std::min(i * step, t_max));
  if (t.back() < t_max - 1e-12) t.push_back(t_max);
  return t;
}

FunctionalTrace run_1ps(const BergmanOneParameterSubgroup& ops, const SheafInvariants& invariants,
                        const std::vector<double>& t_grid, const QuadratureGrid& grid,
                        const RunOptions& options) {
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw Error(ErrorKind::InvalidConfig, "t_grid: must start at 0");
  }
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw Error(ErrorKind::InvalidConfig, "t_grid: must be increasing");
  }
  const SectionSpace& space = ops.space();
  const double mu = space.bundle().slope().get_d();
  const int k = space.twist();
  const RVector& w = ops.column_weights();
  const FubiniStudy base = ops.metric(0.0);

  std::vector<FsLocal> base_local;
  std::vector<CMatrix> base_inverse;
  base_local.reserve(grid.size());
  for (const auto& node : grid.nodes()) {
    base_local.push_back(base.local(node.z));
    base_inverse.push_back(hermitian_part(base_local.back().b * base_local.back().b.adjoint()));
  }

  // Adapted frames are t-independent.
  const Renormalization ren(ops, invariants, options.frame_metric);
  std::vector<std::optional<AdaptedFrame>> frames(grid.size());
  FunctionalTrace tr;
  if (options.renormalize) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      try {
        frames[i] = ren.adapted_frame(grid[i].z);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularNode) throw;
        ++tr.singular_nodes;
      }
    }
  }

  std::vector<double> s, ws;
  gauss_legendre(options.path_nodes, 0.0, 1.0, s, ws);
  const auto& degrees = ops.space().bundle().degrees();
  double m1_acc = 0.0;
  std::vector<double> m1_density(grid.size()), m2_density(grid.size()), dist_density(grid.size());

  for (std::size_t step = 0; step < t_grid.size(); ++step) {
    const double t = t_grid[step];
    if (step > 0) {
      const double ta = t_grid[step - 1];
      const double h = t - ta;
      std::vector<FubiniStudy> path;
      for (double sa : s) path.push_back(ops.metric(ta + sa * h));
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double acc = 0.0;
        for (std::size_t a = 0; a < s.size(); ++a)
          acc += ws[a] * rates_at(path[a].local(grid[i].z), w, k, grid[i].z).m1;
        m1_density[i] = h * acc;
      }
      m1_acc += grid.integrate(m1_density);
    }

    const FubiniStudy fs = ops.metric(t);
    double offdiag = 0.0, min_eig = std::numeric_limits<double>::infinity(), recon = 0.0;
    double subgeo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const cd z = grid[i].z;
      const FsLocal l = fs.local(z);
      const CMatrix p = hermitian_part(l.b * l.b.adjoint());
      // Against the round metric, so the chart frame's own spread near the
      // poles does not count as degeneration.
      RVector round_half(p.rows());
      for (Eigen::Index a = 0; a < p.rows(); ++a)
        round_half(a) = std::pow(conformal(z), -0.5 * degrees[static_cast<std::size_t>(a)]);
      if (condition_number(round_half.asDiagonal() * p * round_half.asDiagonal()) > options.condition_limit) {
        throw Error(ErrorKind::DivergedMetric,
                    "metric condition number exceeds the limit at t=" + std::to_string(t));
      }
      // log det(h_0^{-1} h_t) = log det P_0 - log det P_t.
      m2_density[i] = 2.0 * (log_abs_det(base_local[i]) - log_abs_det(l));
      dist_density[i] = pointwise_distance(p, base_inverse[i]);

      if (frames[i]) {
        const CMatrix hhat = ren.renormalized(*frames[i], z, t);
        offdiag = std::max(offdiag, Renormalization::offdiagonal_norm(*frames[i], hhat));
        const CMatrix rec = ren.reconstruct_inverse_metric(*frames[i], hhat, t);
        recon = std::max(recon, (rec - p).norm() / p.norm());
        if (std::abs(z) <= options.interior_radius) {
          Eigen::SelfAdjointEigenSolver<CMatrix> es(hhat, Eigen::EigenvaluesOnly);
          min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
        }
      }
      if (options.subgeodesic_probe && std::abs(z) <= options.interior_radius) {
        // v = h^{-1} d_t h = -B (2w) B* P^{-1}; central difference in t.
        const double dt = 1e-4;
        auto v_at = [&](double tt) {
          const FsLocal ll = ops.metric(tt).local(z);
          const CMatrix pp = ll.b * ll.b.adjoint();
          return CMatrix(-ll.b * (2.0 * w).cast<cd>().asDiagonal() * ll.b.adjoint() * pp.inverse());
        };
        const CMatrix dv = (v_at(t + dt) - v_at(std::max(t - dt, 0.0))) / (t > 0 ? 2 * dt : dt);
        // dv is self-adjoint for h; its eigenvalues are those of h^{1/2} dv h^{-1/2}.
        const CMatrix hs = hermitian_sqrt(p.inverse());
        const CMatrix sym = hermitian_part(hs * dv * hs.inverse());
        Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
        subgeo = std::min(subgeo, es.eigenvalues().minCoeff());
      }
    }
    const double m2 = grid.integrate(m2_density);
    tr.t.push_back(t);
    tr.m1.push_back(m1_acc);
    tr.m2.push_back(m2);
    tr.mdon.push_back(m1_acc - mu * m2);
    tr.dist.push_back(grid.integrate(dist_density));
    tr.offdiag_sup.push_back(options.renormalize ? offdiag : 0.0);
    tr.min_eig.push_back(options.renormalize && std::isfinite(min_eig) ? min_eig : 0.0);
    tr.reconstruction_error.push_back(recon);
    if (options.subgeodesic_probe) tr.subgeodesic_min.push_back(subgeo);
  }
  return tr;
}

void write_trace_csv(std::ostream& out, const FunctionalTrace& trace) {
  out << "t,m1,m2,mdon,dist,offdiag_sup,min_eig\n" << std::setprecision(17);
  for (std::size_t i = 0; i < trace.t.size(); ++i) {
    out << trace.t[i] << ',' << trace.m1[i] << ',' << trace.m2[i] << ',' << trace.mdon[i] << ','
        << trace.dist[i] << ',' << trace.offdiag_sup[i] << ',' << trace.min_eig[i] << '\n';
  }
}

}  // namespace nadon
