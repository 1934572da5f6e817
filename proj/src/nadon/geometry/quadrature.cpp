#include "nadon/geometry/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "nadon/errors.hpp"

namespace nadon {

QuadratureGrid::QuadratureGrid(int n_rho, int n_theta) : n_rho_(n_rho), n_theta_(n_theta) {
  if (n_rho < 1 || n_theta < 1) {
    throw Error(ErrorKind::InvalidConfig, "grid: n_rho and n_theta must be positive");
  }
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n_rho)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw Error(ErrorKind::InvariantViolation, "Gauss-Legendre table allocation failed");

  nodes_.reserve(static_cast<std::size_t>(n_rho) * static_cast<std::size_t>(n_theta));
  for (int a = 0; a < n_rho; ++a) {
    double u = 0.0, wu = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(a), &u, &wu, table.get());
    const double rho = std::acos(u);
    const double radius = std::sqrt((1.0 - u) / (1.0 + u));
    for (int b = 0; b < n_theta; ++b) {
      const double theta = 2.0 * std::numbers::pi * b / n_theta;
      nodes_.push_back({rho, theta, std::polar(radius, theta), wu / (2.0 * n_theta)});
    }
  }
}

double QuadratureGrid::integrate(const std::vector<double>& values) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) s += nodes_[i].weight * values[i];
  return s;
}

}  // namespace nadon
