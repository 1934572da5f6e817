#pragma once

#include "nadon/algebra/section_space.hpp"
#include "nadon/geometry/fubini_study.hpp"

namespace nadon {

// H_bc = integral of h(A_c, A_b) (1 + |z|^2)^{-k} omega over the grid, i.e. the
// unscaled L2 Gram of the monomial basis with the round metric on O(k).
CMatrix l2_form(const MetricField& h, const SectionSpace& space);

struct BergmanReport {
  double deviation;       // sup over nodes of |B_k - Id| in the h-norm
  double normalization;   // r / N, making the mean trace of B_k equal to r
};

// B_k(h) = sum_i s_i s_i^{*h} for an L2(h)-orthonormal basis, normalized so
// that its omega-mean trace is r.
BergmanReport bergman_kernel_deviation(const MetricField& h, const SectionSpace& space);

}  // namespace nadon
