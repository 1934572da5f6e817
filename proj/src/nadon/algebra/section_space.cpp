#include "nadon/algebra/section_space.hpp"

#include <string>

#include "nadon/errors.hpp"

namespace nadon {

SectionSpace::SectionSpace(SplitBundle bundle, int k) : bundle_(std::move(bundle)), k_(k) {
  if (k_ < bundle_.regularity()) {
    throw Error(ErrorKind::TwistTooSmall,
                "twist k=" + std::to_string(k_) + " is below the regularity " +
                    std::to_string(bundle_.regularity()) + " of the bundle");
  }
  for (std::size_t i = 0; i < bundle_.degrees().size(); ++i) {
    offsets_.push_back(basis_.size());
    const int d = factor_degree(i);
    for (int p = d; p >= 0; --p) basis_.push_back({i, p, d - p});
  }
}

std::size_t SectionSpace::factor_size(std::size_t factor) const {
  const int d = factor_degree(factor);
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1);
}

std::vector<QPoly> SectionSpace::polynomials(const QVector& coefficients) const {
  std::vector<QPoly> rows;
  rows.reserve(bundle_.degrees().size());
  for (std::size_t i = 0; i < bundle_.degrees().size(); ++i) {
    const int d = factor_degree(i);
    if (d < 0) {
      rows.emplace_back();
      continue;
    }
    QVector c(static_cast<std::size_t>(d) + 1, Rational(0));
    for (std::size_t l = 0; l < factor_size(i); ++l) {
      // basis entry l of this factor is x^{d-l} y^l -> z^{d-l}
      c[static_cast<std::size_t>(d) - l] = coefficients[offsets_[i] + l];
    }
    rows.emplace_back(std::move(c));
  }
  return rows;
}

QPolyMatrix SectionSpace::polynomial_matrix(const std::vector<QVector>& vectors) const {
  const std::size_t r = bundle_.degrees().size();
  QPolyMatrix m(r, std::vector<QPoly>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    auto rows = polynomials(vectors[c]);
    for (std::size_t i = 0; i < r; ++i) m[i][c] = std::move(rows[i]);
  }
  return m;
}

QMatrix SectionSpace::evaluate(const std::vector<QVector>& vectors, const Rational& z) const {
  const std::size_t r = bundle_.degrees().size();
  QMatrix m(r, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      Rational acc = 0;
      // Horner over descending powers of z, matching the basis order.
      for (std::size_t l = 0; l < factor_size(i); ++l) acc = acc * z + vectors[c][offsets_[i] + l];
      m(i, c) = acc;
    }
  }
  return m;
}

QVector SectionSpace::unit_vector(std::size_t index) const {
  QVector v(dimension(), Rational(0));
  v.at(index) = 1;
  return v;
}

}  // namespace nadon
