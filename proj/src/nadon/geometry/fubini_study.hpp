#pragma once

#include <memory>

#include "nadon/algebra/section_space.hpp"
#include "nadon/geometry/metric_field.hpp"

namespace nadon {

// Pointwise data of FS(H) at a chart point. With L L* = H^{-1} and
// B = (1 + |z|^2)^{-k/2} A(z) L, the inverse metric is B B* and b* = q r.
struct FsLocal {
  CMatrix b;      // r x N
  CMatrix db;     // r x N, (1 + |z|^2)^{-k/2} A'(z) L
  CMatrix q;      // N x r, orthonormal basis of the row space of b
  CMatrix r;      // r x r upper triangular
  CMatrix perp;   // N x (N - r), orthonormal complement of q
};

// The Fubini-Study metric h = (A H^{-1} A*)^{-1} of a positive hermitian form
// H on H0(E(k)), written in monomial coordinates and untwisted by the round
// metric on O(k).
class FubiniStudy {
 public:
  static FubiniStudy from_form(const SectionSpace& space, const CMatrix& form);
  // Given a factor L of the dual form: H^{-1} = L L*.
  static FubiniStudy from_factor(const SectionSpace& space, CMatrix factor);

  const SectionSpace& space() const noexcept { return *space_; }
  const CMatrix& factor() const noexcept { return factor_; }
  CMatrix form() const;

  FsLocal local(cd z) const;
  CMatrix inverse_metric(cd z) const;
  CMatrix metric(cd z) const;
  // Lambda_omega F = -k Id + (1 + |z|^2)^2 (db perp)(db perp)* (B B*)^{-1}.
  CMatrix lambda_curvature(cd z) const;

  MetricField field(std::shared_ptr<const QuadratureGrid> grid) const;

 private:
  FubiniStudy(const SectionSpace& space, CMatrix factor);
  std::shared_ptr<const SectionSpace> space_;
  CMatrix factor_;
};

CMatrix metric_from_local(const FsLocal& l);
CMatrix lambda_curvature_from_local(const FsLocal& l, int k, cd z);

}  // namespace nadon
