#pragma once

#include <cstddef>
#include <vector>

#include "nadon/algebra/rational.hpp"

namespace nadon {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Columns are the given vectors (all of equal length).
  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t length);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  QMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

Echelon row_reduce(QMatrix m);

std::size_t rank(const QMatrix& m);

// Basis of {x : m x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);

}  // namespace nadon
