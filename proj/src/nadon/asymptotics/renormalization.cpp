#include "nadon/asymptotics/renormalization.hpp"

#include <algorithm>
#include <cmath>

#include "nadon/errors.hpp"
#include "nadon/geometry/sections.hpp"

namespace nadon {

Renormalization::Renormalization(const BergmanOneParameterSubgroup& ops,
                                 const SheafInvariants& invariants, FrameMetric frame_metric)
    : ops_(&ops) {
  if (frame_metric == FrameMetric::Base) {
    frame_metric_ = [fs = ops.metric(0.0)](cd z) { return fs.metric(z); };
  } else {
    frame_metric_ = [d = ops.space().bundle().degrees()](cd z) {
      CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
      for (std::size_t i = 0; i < d.size(); ++i)
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = std::pow(conformal(z), -d[i]);
      return h;
    };
  }
  if (invariants.graded.size() != ops.filtration().steps()) {
    throw Error(ErrorKind::InvariantViolation, "sheaf invariants do not match the filtration");
  }
  for (const auto& g : invariants.graded) graded_rank_.push_back(g.rank);
}

AdaptedFrame Renormalization::adapted_frame(cd z) const {
  const CMatrix href = frame_metric_(z);
  Eigen::LLT<CMatrix> llt(href);
  AdaptedFrame f;
  f.chol = llt.matrixU();
  const Eigen::Index r = href.rows();
  const CMatrix y = f.chol * evaluation_matrix(ops_->space(), z) * ops_->frame();
  const auto& col_step = ops_->column_step();

  f.basis = CMatrix::Zero(r, r);
  Eigen::Index filled = 0;
  for (std::size_t step = 0; step < graded_rank_.size(); ++step) {
    const int g = graded_rank_[step];
    if (g == 0) continue;
    std::vector<Eigen::Index> cols;
    for (std::size_t j = 0; j < col_step.size(); ++j)
      if (col_step[j] == step) cols.push_back(static_cast<Eigen::Index>(j));
    CMatrix block(r, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) block.col(static_cast<Eigen::Index>(c)) = y.col(cols[c]);
    // Earlier steps contribute to this fibre too; project onto the complement
    // of what is already spanned.
    for (std::size_t j = 0; j < col_step.size(); ++j) {
      if (col_step[j] < step) {
        block.conservativeResize(Eigen::NoChange, block.cols() + 1);
        block.col(block.cols() - 1) = y.col(static_cast<Eigen::Index>(j));
      }
    }
    const CMatrix q = f.basis.leftCols(filled);
    const CMatrix projected = block - q * (q.adjoint() * block);
    Eigen::JacobiSVD<CMatrix> svd(projected, Eigen::ComputeThinU);
    const RVector sv = svd.singularValues();
    const double scale = std::max(block.norm(), 1e-300);
    if (sv.size() < g || !(sv(g - 1) > 1e-8 * scale)) {
      throw Error(ErrorKind::SingularNode, "filtration fibre drops rank at this node");
    }
    f.basis.middleCols(filled, g) = svd.matrixU().leftCols(g);
    for (int c = 0; c < g; ++c) f.column_step.push_back(step);
    filled += g;
  }
  if (filled != r) throw Error(ErrorKind::InvariantViolation, "adapted frame does not span the fibre");
  f.column_weight.resize(r);
  for (Eigen::Index c = 0; c < r; ++c)
    f.column_weight(c) = ops_->step_weights()(static_cast<Eigen::Index>(f.column_step[static_cast<std::size_t>(c)]));
  return f;
}

CMatrix Renormalization::renormalized(const AdaptedFrame& f, cd z, double t) const {
  const SectionSpace& space = ops_->space();
  // X = T_y* C B with B = (1 + |z|^2)^{-k/2} A U; then P' = X e^{2wt} X*.
  const CMatrix x = f.basis.adjoint() * f.chol * (twist_scale(space.twist(), z) *
                                                  evaluation_matrix(space, z) * ops_->frame());
  const auto& col_step = ops_->column_step();
  const RVector& w = ops_->column_weights();
  CMatrix scaled(x.rows(), x.cols());
  for (Eigen::Index a = 0; a < x.rows(); ++a) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      // Sections of step i lie in the fibre spanned by blocks up to i.
      if (f.column_step[static_cast<std::size_t>(a)] > col_step[static_cast<std::size_t>(c)]) {
        scaled(a, c) = 0.0;
      } else {
        scaled(a, c) = x(a, c) * std::exp((w(c) - f.column_weight(a)) * t);
      }
    }
  }
  return hermitian_part(scaled * scaled.adjoint());
}

CMatrix Renormalization::reconstruct_inverse_metric(const AdaptedFrame& f, const CMatrix& hhat,
                                                    double t) const {
  const RVector e = (f.column_weight * t).array().exp();
  const CMatrix pprime = e.asDiagonal() * hhat * e.asDiagonal();
  const CMatrix cinv = f.chol.inverse();
  return hermitian_part(cinv * f.basis * pprime * f.basis.adjoint() * cinv.adjoint());
}

double Renormalization::offdiagonal_norm(const AdaptedFrame& f, const CMatrix& hhat) {
  double m = 0.0;
  for (Eigen::Index a = 0; a < hhat.rows(); ++a)
    for (Eigen::Index b = 0; b < hhat.cols(); ++b)
      if (f.column_step[static_cast<std::size_t>(a)] != f.column_step[static_cast<std::size_t>(b)])
        m = std::max(m, std::abs(hhat(a, b)));
  return m;
}

}  // namespace nadon
