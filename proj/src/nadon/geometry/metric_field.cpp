#include "nadon/geometry/metric_field.hpp"

#include <cmath>
#include <string>

#include "nadon/errors.hpp"

namespace nadon {

namespace {

void check_positive(const CMatrix& h, std::size_t node) {
  if (!h.allFinite() || !is_positive_definite(h)) {
    throw Error(ErrorKind::SingularEvaluation,
                "metric is not positive definite at node " + std::to_string(node));
  }
}

}  // namespace

MetricField::MetricField(std::shared_ptr<const QuadratureGrid> grid, std::vector<int> degrees,
                         MetricFunction evaluator, CurvatureFunction curvature)
    : grid_(std::move(grid)), degrees_(std::move(degrees)), evaluator_(std::move(evaluator)),
      curvature_(std::move(curvature)) {
  values_.reserve(grid_->size());
  for (std::size_t i = 0; i < grid_->size(); ++i) {
    values_.push_back(hermitian_part(evaluator_((*grid_)[i].z)));
    check_positive(values_.back(), i);
  }
}

MetricField::MetricField(std::shared_ptr<const QuadratureGrid> grid, std::vector<int> degrees,
                         std::vector<CMatrix> values)
    : grid_(std::move(grid)), degrees_(std::move(degrees)), values_(std::move(values)) {
  if (values_.size() != grid_->size()) {
    throw Error(ErrorKind::InvalidConfig, "metric samples do not match the grid");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) check_positive(values_[i], i);
}

CMatrix MetricField::evaluate(cd z) const {
  if (!evaluator_) throw Error(ErrorKind::InvalidConfig, "metric has no closed-form evaluator");
  return evaluator_(z);
}

MetricField MetricField::scaled(double c) const {
  const double f = std::exp(c);
  if (evaluator_) {
    auto ev = evaluator_;
    return MetricField(grid_, degrees_, [ev, f](cd z) { return CMatrix(f * ev(z)); }, curvature_);
  }
  std::vector<CMatrix> v;
  for (const auto& h : values_) v.push_back(f * h);
  return MetricField(grid_, degrees_, std::move(v));
}

}  // namespace nadon
