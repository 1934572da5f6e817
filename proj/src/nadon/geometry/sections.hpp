#pragma once

#include "nadon/algebra/section_space.hpp"
#include "nadon/geometry/hermitian.hpp"

namespace nadon {

// r x N evaluation matrix A(z) of the monomial basis in the chart y = 1.
CMatrix evaluation_matrix(const SectionSpace& space, cd z);
// dA/dz.
CMatrix evaluation_derivative(const SectionSpace& space, cd z);

// (1 + |z|^2)^(-k/2): converts sections of E(k) to the frame of E with the
// round metric on O(k) folded in.
double twist_scale(int k, cd z);

CVector to_complex(const QVector& v);
CMatrix to_complex(const std::vector<QVector>& columns, std::size_t length);

}  // namespace nadon
