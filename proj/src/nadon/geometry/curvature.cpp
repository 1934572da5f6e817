#include "nadon/geometry/curvature.hpp"

#include "nadon/errors.hpp"

namespace nadon {

namespace {

const cd kDirections[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// dbar(h^{-1} dh) = -h^{-1} (dbar h) h^{-1} (d h) + h^{-1} (Laplacian h) / 4.
CMatrix dbar_connection(const CMatrix& c, const CMatrix (&n)[4], double dz) {
  const CMatrix hx = (n[0] - n[1]) / (2 * dz);
  const CMatrix hy = (n[2] - n[3]) / (2 * dz);
  const CMatrix lap = (n[0] + n[1] + n[2] + n[3] - 4.0 * c) / (dz * dz);
  const cd i(0, 1);
  const CMatrix d = 0.5 * (hx - i * hy);
  const CMatrix dbar = 0.5 * (hx + i * hy);
  const CMatrix hinv = c.inverse();
  return -hinv * dbar * hinv * d + hinv * lap * 0.25;
}

}  // namespace

bool uses_outer_gauge(cd z) { return std::norm(z) > 1.0; }

CMatrix frame_gauge(const std::vector<int>& degrees, cd z) {
  const Eigen::Index r = static_cast<Eigen::Index>(degrees.size());
  CMatrix g = CMatrix::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) g(i, i) = std::pow(z, degrees[static_cast<std::size_t>(i)]);
  return g;
}

std::vector<cd> stencil_points(cd z, double step) {
  const double dz = fd_step_length(step, z);
  std::vector<cd> p{z};
  for (const cd& d : kDirections) p.push_back(z + dz * d);
  for (const cd& d : kDirections) p.push_back(z + 0.5 * dz * d);
  return p;
}

Stencil sample_stencil(const MetricFunction& h, const std::vector<int>& degrees, cd z,
                       double step) {
  const bool outer = uses_outer_gauge(z);
  auto eval = [&](cd p) -> CMatrix {
    if (!outer) return h(p);
    const CMatrix g = frame_gauge(degrees, p);
    return g.adjoint() * h(p) * g;
  };
  const auto p = stencil_points(z, step);
  Stencil s;
  s.center = eval(p[0]);
  for (int d = 0; d < 4; ++d) {
    s.coarse[d] = eval(p[1 + d]);
    s.fine[d] = eval(p[5 + d]);
  }
  return s;
}

CMatrix lambda_curvature_fd(const Stencil& s, cd z, const FdSettings& fd) {
  const double c = conformal(z);
  const double dz = fd_step_length(fd.step, z);
  const CMatrix coarse = -c * c * dbar_connection(s.center, s.coarse, dz);
  const CMatrix fine = -c * c * dbar_connection(s.center, s.fine, 0.5 * dz);
  const double scale = std::max(1.0, fine.norm());
  if (!((coarse - fine).norm() <= fd.tolerance * scale)) {
    throw Error(ErrorKind::StepTooCoarse, "finite-difference curvature failed the Richardson check");
  }
  return (4.0 * fine - coarse) / 3.0;
}

CMatrix lambda_curvature_fd(const MetricFunction& h, const std::vector<int>& degrees, cd z,
                            const FdSettings& fd) {
  const CMatrix f = lambda_curvature_fd(sample_stencil(h, degrees, z, fd.step), z, fd);
  if (!uses_outer_gauge(z)) return f;
  const CMatrix g = frame_gauge(degrees, z);
  return g * f * g.inverse();
}

std::vector<CMatrix> lambda_curvature(const MetricField& h, const FdSettings& fd) {
  std::vector<CMatrix> out;
  out.reserve(h.grid().size());
  for (const auto& node : h.grid().nodes()) {
    if (h.has_analytic_curvature()) {
      out.push_back(h.analytic_curvature()(node.z));
    } else if (h.has_evaluator()) {
      out.push_back(lambda_curvature_fd(h.evaluator(), h.degrees(), node.z, fd));
    } else {
      throw Error(ErrorKind::InvalidConfig, "curvature needs a metric with an evaluator");
    }
  }
  return out;
}

double curvature_integral(const MetricField& h, const FdSettings& fd) {
  const auto f = lambda_curvature(h, fd);
  std::vector<double> tr;
  tr.reserve(f.size());
  for (const auto& m : f) tr.push_back(m.trace().real());
  return h.grid().integrate(tr);
}

}  // namespace nadon
