#pragma once

#include <cstdint>

#include "nadon/algebra/saturation.hpp"
#include "nadon/geometry/curvature.hpp"

namespace nadon {

struct ChernWeilReport {
  double lhs = 0.0;                 // integral of tr(Lambda F pi_S) omega
  int rank = 0;
  long degree = 0;                  // deg of the saturation of S
  double gap = 0.0;                 // lhs - degree
  double second_fundamental = 0.0;  // directly integrated |II|^2
  std::size_t excluded_nodes = 0;   // rank-drop nodes left out
};

// Chern-Weil check for the subsheaf S generated by w: the integral of the
// curvature restricted to S exceeds deg(S') by the L2 norm of the second
// fundamental form. h must have an evaluator.
ChernWeilReport chern_weil_gap(const MetricField& h, const Subspace& w, const FdSettings& fd = {},
                               std::uint64_t seed = 0);

}  // namespace nadon
