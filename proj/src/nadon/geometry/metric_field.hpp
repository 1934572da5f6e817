#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "nadon/geometry/hermitian.hpp"
#include "nadon/geometry/quadrature.hpp"

namespace nadon {

// h(z) in the chart frame of E, with <u, v> = v* h u.
using MetricFunction = std::function<CMatrix(cd)>;
// Lambda_omega F at a chart point.
using CurvatureFunction = std::function<CMatrix(cd)>;

// A hermitian metric sampled on a quadrature grid. Fields built from a
// closed-form evaluator keep it, so curvature can be taken by differentiation;
// an analytic curvature may be attached as well.
class MetricField {
 public:
  // degrees are those of the split bundle the metric lives on.
  MetricField(std::shared_ptr<const QuadratureGrid> grid, std::vector<int> degrees,
              MetricFunction evaluator, CurvatureFunction curvature = {});
  MetricField(std::shared_ptr<const QuadratureGrid> grid, std::vector<int> degrees,
              std::vector<CMatrix> values);

  const QuadratureGrid& grid() const noexcept { return *grid_; }
  const std::shared_ptr<const QuadratureGrid>& grid_ptr() const noexcept { return grid_; }
  int rank() const noexcept { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::vector<CMatrix>& values() const noexcept { return values_; }
  const CMatrix& operator[](std::size_t i) const { return values_[i]; }

  bool has_evaluator() const noexcept { return static_cast<bool>(evaluator_); }
  const MetricFunction& evaluator() const noexcept { return evaluator_; }
  CMatrix evaluate(cd z) const;

  bool has_analytic_curvature() const noexcept { return static_cast<bool>(curvature_); }
  const CurvatureFunction& analytic_curvature() const noexcept { return curvature_; }

  // e^c h; the curvature is unchanged.
  MetricField scaled(double c) const;

 private:
  std::shared_ptr<const QuadratureGrid> grid_;
  std::vector<int> degrees_;
  std::vector<CMatrix> values_;
  MetricFunction evaluator_;
  CurvatureFunction curvature_;
};

}  // namespace nadon
