#include "nadon/asymptotics/one_parameter_subgroup.hpp"

#include "nadon/errors.hpp"
#include "nadon/geometry/sections.hpp"
#include "nadon/geometry/standard_metrics.hpp"

namespace nadon {

BaseFormKind parse_base_form_kind(const std::string& name) {
  if (name == "round") return BaseFormKind::Round;
  if (name == "identity") return BaseFormKind::Identity;
  if (name == "perturbed") return BaseFormKind::Perturbed;
  throw Error(ErrorKind::InvalidConfig,
              "base_form.kind: expected round, identity or perturbed, got '" + name + "'");
}

const char* base_form_kind_name(BaseFormKind kind) noexcept {
  switch (kind) {
    case BaseFormKind::Round: return "round";
    case BaseFormKind::Identity: return "identity";
    case BaseFormKind::Perturbed: return "perturbed";
  }
  return "unknown";
}

CMatrix make_base_form(const SectionSpace& space, const BaseFormSettings& settings) {
  const Eigen::Index n = static_cast<Eigen::Index>(space.dimension());
  switch (settings.kind) {
    case BaseFormKind::Round: return round_form(space);
    case BaseFormKind::Identity: return CMatrix::Identity(n, n);
    case BaseFormKind::Perturbed: return perturbed_round_form(space, settings.seed, settings.epsilon);
  }
  return CMatrix::Identity(n, n);
}

BergmanOneParameterSubgroup::BergmanOneParameterSubgroup(const WeightedFiltration& filtration,
                                                         const CMatrix& base_form)
    : filtration_(filtration), base_form_(hermitian_part(base_form)) {
  const std::size_t n = space().dimension();
  const QVector w = filtration_.trace_free_weights();
  std::vector<QVector> columns;
  step_weights_.resize(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < filtration_.steps(); ++i) {
    step_weights_(static_cast<Eigen::Index>(i)) = w[i].get_d();
    for (const auto& v : filtration_.subspaces()[i]) {
      columns.push_back(v);
      step_.push_back(i);
    }
  }
  const CMatrix c = to_complex(columns, n);
  // Gram-Schmidt in the H0 inner product: C* H0 C = R* R, U = C R^{-1}.
  Eigen::LLT<CMatrix> llt(hermitian_part(c.adjoint() * base_form_ * c));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidConfig, "base form is not positive definite");
  }
  frame_ = llt.matrixU().solve<Eigen::OnTheRight>(c);
  weights_.resize(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j)
    weights_(static_cast<Eigen::Index>(j)) = step_weights_(static_cast<Eigen::Index>(step_[j]));
}

CMatrix BergmanOneParameterSubgroup::factor(double t) const {
  return frame_ * (weights_ * t).array().exp().matrix().asDiagonal();
}

CMatrix BergmanOneParameterSubgroup::form(double t) const {
  const CMatrix uinv = frame_.inverse();
  return hermitian_part(uinv.adjoint() * (-2.0 * t * weights_).array().exp().matrix().asDiagonal() *
                        uinv);
}

FubiniStudy BergmanOneParameterSubgroup::metric(double t) const {
  return FubiniStudy::from_factor(space(), factor(t));
}

}  // namespace nadon
