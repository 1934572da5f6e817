#include "nadon/geometry/standard_metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "nadon/algebra/filtration.hpp"
#include "nadon/errors.hpp"
#include "nadon/geometry/hermitian.hpp"

namespace nadon {

namespace {

RVector sqrt_round_gram(const SectionSpace& space) {
  const QVector g = round_gram_diagonal(space);
  RVector d(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) d(static_cast<Eigen::Index>(i)) = std::sqrt(g[i].get_d());
  return d;
}

}  // namespace

MetricField round_metric(std::shared_ptr<const QuadratureGrid> grid, const std::vector<int>& degrees) {
  auto h = [degrees](cd z) {
    const double c = conformal(z);
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(degrees.size()),
                              static_cast<Eigen::Index>(degrees.size()));
    for (std::size_t i = 0; i < degrees.size(); ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = std::pow(c, -degrees[i]);
    return m;
  };
  auto f = [degrees](cd) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(degrees.size()),
                              static_cast<Eigen::Index>(degrees.size()));
    for (std::size_t i = 0; i < degrees.size(); ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = static_cast<double>(degrees[i]);
    return m;
  };
  return MetricField(std::move(grid), degrees, h, f);
}

MetricField flat_metric(std::shared_ptr<const QuadratureGrid> grid, int rank) {
  const Eigen::Index r = rank;
  return MetricField(
      std::move(grid), std::vector<int>(static_cast<std::size_t>(rank), 0),
      [r](cd) { return CMatrix(CMatrix::Identity(r, r)); },
      [r](cd) { return CMatrix(CMatrix::Zero(r, r)); });
}

MetricFunction perturbed_metric_function(const std::vector<int>& degrees, const Perturbation& p) {
  const std::size_t r = degrees.size();
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  // psi_i = sum of the linear and quadratic monomials in (x1, x2, x3).
  std::vector<std::array<double, 9>> psi(r);
  for (auto& c : psi)
    for (auto& x : c) x = p.amplitude * u(rng);
  std::vector<double> phase(r * r);
  for (auto& a : phase) a = 3.14159265358979 * u(rng);

  return [degrees, psi, phase, p, r](cd z) {
    const double c = conformal(z);
    const double x1 = 2 * z.real() / c, x2 = 2 * z.imag() / c, x3 = (2.0 - c) / c;
    const double mono[9] = {x1, x2, x3, x1 * x1, x2 * x2, x1 * x2, x1 * x3, x2 * x3, x1 * x2 * x3};
    CMatrix h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    for (std::size_t i = 0; i < r; ++i) {
      double v = 0.0;
      for (int m = 0; m < 9; ++m) v += psi[i][static_cast<std::size_t>(m)] * mono[m];
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = std::exp(-v) * std::pow(c, -degrees[i]);
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        const cd off = std::polar(p.coupling * std::pow(c, -std::max(degrees[i], degrees[j])),
                                  phase[i * r + j]);
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = off;
        h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = std::conj(off);
      }
    }
    return h;
  };
}

MetricField perturbed_metric(std::shared_ptr<const QuadratureGrid> grid,
                             const std::vector<int>& degrees, const Perturbation& p) {
  return MetricField(std::move(grid), degrees, perturbed_metric_function(degrees, p));
}

CMatrix round_form(const SectionSpace& space) {
  const RVector d = sqrt_round_gram(space);
  return CMatrix(d.array().square().matrix().asDiagonal());
}

CMatrix random_form(const SectionSpace& space, std::mt19937_64& rng, double spread) {
  const Eigen::Index n = static_cast<Eigen::Index>(space.dimension());
  std::normal_distribution<double> g;
  CMatrix y(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) y(i, j) = cd(g(rng), g(rng));
  y = hermitian_part(y);
  y *= spread / y.norm();
  const RVector d = sqrt_round_gram(space);
  return hermitian_part(d.asDiagonal() * hermitian_exp(y) * d.asDiagonal());
}

CMatrix perturbed_round_form(const SectionSpace& space, std::uint64_t seed, double epsilon) {
  const Eigen::Index n = static_cast<Eigen::Index>(space.dimension());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix m = CMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) += epsilon * cd(g(rng), g(rng)) / std::sqrt(2.0 * static_cast<double>(n));
  const RVector d = sqrt_round_gram(space);
  return hermitian_part(d.asDiagonal() * m * m.adjoint() * d.asDiagonal());
}

}  // namespace nadon
