#pragma once

#include <vector>

#include "nadon/algebra/rational.hpp"

namespace nadon {

// Univariate polynomial over Q in the affine chart coordinate z;
// coefficient i multiplies z^i.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(QVector coefficients);
  static QPoly monomial(const Rational& c, int power);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const noexcept { return c_.empty(); }
  const QVector& coefficients() const noexcept { return c_; }
  Rational coefficient(int i) const;

  Rational operator()(const Rational& z) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& p);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  QVector c_;
};

using QPolyMatrix = std::vector<std::vector<QPoly>>;  // row-major

// Determinant by cofactor expansion; intended for the small ranks used here.
QPoly determinant(const QPolyMatrix& m);

}  // namespace nadon
