#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nadon {

using cd = std::complex<double>;

struct QuadratureNode {
  double rho;
  double theta;
  cd z;           // tan(rho/2) e^{i theta}
  double weight;  // against omega, total mass 1
};

// Gauss-Legendre in u = cos(rho) times the uniform rule in theta. With
// omega = (1/pi) dA / (1 + |z|^2)^2 = du dtheta / (4 pi), the rule integrates
// polynomials in u of degree < 2 n_rho times trigonometric polynomials of
// degree < n_theta exactly.
class QuadratureGrid {
 public:
  QuadratureGrid(int n_rho, int n_theta);

  int n_rho() const noexcept { return n_rho_; }
  int n_theta() const noexcept { return n_theta_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const QuadratureNode& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<QuadratureNode>& nodes() const noexcept { return nodes_; }

  double integrate(const std::vector<double>& values) const;

 private:
  int n_rho_;
  int n_theta_;
  std::vector<QuadratureNode> nodes_;
};

// 1 + |z|^2; omega has density 1 / (pi (1 + |z|^2)^2) against dA.
inline double conformal(cd z) { return 1.0 + std::norm(z); }

}  // namespace nadon
