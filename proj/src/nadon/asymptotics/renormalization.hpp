#pragma once

#include <functional>
#include <vector>

#include "nadon/asymptotics/one_parameter_subgroup.hpp"

namespace nadon {

// Frame at a node adapted to the fibres of the saturated filtration: columns
// are h_ref-orthonormal, block alpha spans E'_{<=q_alpha} modulo the earlier
// blocks. Stored in coordinates y = C x where h_ref = C* C.
struct AdaptedFrame {
  CMatrix chol;                        // C
  CMatrix basis;                       // r x r unitary, columns in block order
  std::vector<std::size_t> column_step;
  RVector column_weight;
};

// Renormalized limit of the 1-PS. It acts on the dual metric P = h^{-1}:
// in the adapted frame, P' = T^{-1} P T^{-*} and hhat = e^{-w t} P' e^{-w t},
// which converges to a block-diagonal positive limit as t grows.
//
// The frame metric picks the C-infinity splitting. With the 1-PS base metric
// itself, the off-diagonal blocks of a two-step limit vanish identically for
// all t; the round metric keeps them visible so their decay can be measured.
enum class FrameMetric { Base, Round };

class Renormalization {
 public:
  Renormalization(const BergmanOneParameterSubgroup& ops, const SheafInvariants& invariants,
                  FrameMetric frame_metric = FrameMetric::Round);

  // Throws SingularNode where a filtration fibre drops rank.
  AdaptedFrame adapted_frame(cd z) const;

  CMatrix renormalized(const AdaptedFrame& f, cd z, double t) const;
  // e^{w t} hhat e^{w t} carried back to the chart frame: the inverse metric.
  CMatrix reconstruct_inverse_metric(const AdaptedFrame& f, const CMatrix& hhat, double t) const;

  static double offdiagonal_norm(const AdaptedFrame& f, const CMatrix& hhat);

 private:
  const BergmanOneParameterSubgroup* ops_;
  std::function<CMatrix(cd)> frame_metric_;
  std::vector<int> graded_rank_;
};

}  // namespace nadon
