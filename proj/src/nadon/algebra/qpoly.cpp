#include "nadon/algebra/qpoly.hpp"

#include <algorithm>
#include <utility>

namespace nadon {

QPoly::QPoly(QVector coefficients) : c_(std::move(coefficients)) { trim(); }

QPoly QPoly::monomial(const Rational& c, int power) {
  QVector v(static_cast<std::size_t>(power) + 1, Rational(0));
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational QPoly::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QVector out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const Rational& s, const QPoly& p) {
  QVector out = p.c_;
  for (auto& c : out) c *= s;
  return QPoly(std::move(out));
}

QPoly determinant(const QPolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return QPoly::monomial(1, 0);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];

  QPoly acc;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    QPolyMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QPoly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    QPoly term = m[0][col] * determinant(minor);
    if (col % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

}  // namespace nadon
