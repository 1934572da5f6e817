#include "nadon/geometry/sections.hpp"

#include <cmath>

namespace nadon {

namespace {

cd ipow(cd z, int p) {
  cd out = 1.0;
  for (int i = 0; i < p; ++i) out *= z;
  return out;
}

}  // namespace

CMatrix evaluation_matrix(const SectionSpace& space, cd z) {
  const auto& basis = space.basis();
  CMatrix a = CMatrix::Zero(space.bundle().rank(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    a(static_cast<Eigen::Index>(basis[b].factor), static_cast<Eigen::Index>(b)) =
        ipow(z, basis[b].x_power);
  }
  return a;
}

CMatrix evaluation_derivative(const SectionSpace& space, cd z) {
  const auto& basis = space.basis();
  CMatrix a = CMatrix::Zero(space.bundle().rank(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const int p = basis[b].x_power;
    if (p == 0) continue;
    a(static_cast<Eigen::Index>(basis[b].factor), static_cast<Eigen::Index>(b)) =
        static_cast<double>(p) * ipow(z, p - 1);
  }
  return a;
}

double twist_scale(int k, cd z) { return std::pow(conformal(z), -0.5 * k); }

CVector to_complex(const QVector& v) {
  CVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

CMatrix to_complex(const std::vector<QVector>& columns, std::size_t length) {
  CMatrix m(static_cast<Eigen::Index>(length), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < length; ++r)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = columns[c][r].get_d();
  return m;
}

}  // namespace nadon
