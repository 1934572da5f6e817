#include "nadon/algebra/qlinalg.hpp"

#include <utility>

namespace nadon {

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t length) {
  QMatrix m(length, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Echelon row_reduce(QMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nadon
