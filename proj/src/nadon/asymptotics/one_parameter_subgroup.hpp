#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nadon/algebra/filtration.hpp"
#include "nadon/geometry/fubini_study.hpp"

namespace nadon {

enum class BaseFormKind { Round, Identity, Perturbed };

struct BaseFormSettings {
  BaseFormKind kind = BaseFormKind::Perturbed;
  double epsilon = 0.3;
  std::uint64_t seed = 1;
};

BaseFormKind parse_base_form_kind(const std::string& name);
const char* base_form_kind_name(BaseFormKind kind) noexcept;

CMatrix make_base_form(const SectionSpace& space, const BaseFormSettings& settings);

// Bergman 1-PS of a weighted filtration. The generator acts on the dual of
// H0(E(k)): with U an H0-orthonormal basis built by Gram-Schmidt along the
// flag of weight subspaces, the dual form is U e^{2 w t} U*, so
// H_t = U^{-*} e^{-2 w t} U^{-1}. Weights are shifted to be trace free, which
// changes h_t only by a constant factor.
class BergmanOneParameterSubgroup {
 public:
  BergmanOneParameterSubgroup(const WeightedFiltration& filtration, const CMatrix& base_form);

  const WeightedFiltration& filtration() const noexcept { return filtration_; }
  const SectionSpace& space() const noexcept { return filtration_.space(); }
  const CMatrix& base_form() const noexcept { return base_form_; }
  const CMatrix& frame() const noexcept { return frame_; }
  const RVector& column_weights() const noexcept { return weights_; }
  const std::vector<std::size_t>& column_step() const noexcept { return step_; }
  const RVector& step_weights() const noexcept { return step_weights_; }

  CMatrix factor(double t) const;  // U e^{w t}
  CMatrix form(double t) const;    // H_t
  FubiniStudy metric(double t) const;

 private:
  WeightedFiltration filtration_;
  CMatrix base_form_;
  CMatrix frame_;
  RVector weights_;
  RVector step_weights_;
  std::vector<std::size_t> step_;
};

}  // namespace nadon
