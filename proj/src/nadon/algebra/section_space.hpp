#pragma once

#include <cstddef>
#include <vector>

#include "nadon/algebra/qlinalg.hpp"
#include "nadon/algebra/qpoly.hpp"
#include "nadon/algebra/split_bundle.hpp"

namespace nadon {

// x^p y^q on summand `factor`, p + q = a_factor + k. In the chart x = z, y = 1
// it evaluates to z^p in row `factor`.
struct Monomial {
  std::size_t factor;
  int x_power;
  int y_power;
};

// H^0(E(k)) with its monomial basis, ordered factor-major and then by
// descending power of x.
class SectionSpace {
 public:
  // Throws TwistTooSmall when k < bundle.regularity().
  SectionSpace(SplitBundle bundle, int k);

  const SplitBundle& bundle() const noexcept { return bundle_; }
  int twist() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }

  int factor_degree(std::size_t factor) const { return bundle_.degrees()[factor] + k_; }
  std::size_t factor_offset(std::size_t factor) const { return offsets_[factor]; }
  std::size_t factor_size(std::size_t factor) const;

  // Row polynomials (one per summand) of the section with these coefficients.
  std::vector<QPoly> polynomials(const QVector& coefficients) const;

  // r x m matrix whose column c holds the section `vectors[c]`.
  QPolyMatrix polynomial_matrix(const std::vector<QVector>& vectors) const;

  QMatrix evaluate(const std::vector<QVector>& vectors, const Rational& z) const;

  QVector unit_vector(std::size_t index) const;

 private:
  SplitBundle bundle_;
  int k_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> offsets_;
};

// A subspace of H^0(E(k)) given by spanning coefficient vectors.
struct Subspace {
  SectionSpace space;
  std::vector<QVector> vectors;
};

}  // namespace nadon
