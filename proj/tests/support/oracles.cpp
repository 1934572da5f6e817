#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include "nadon/algebra/qlinalg.hpp"

namespace oracle {

using nadon::QPoly;
using nadon::Rational;

namespace {

QPoly poly_mod(QPoly a, const QPoly& b) {
  const Rational lead = b.coefficients().back();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rational c = a.coefficients().back() / lead;
    a -= QPoly::monomial(c, a.degree() - b.degree()) * b;
  }
  return a;
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  const Rational lead = p.coefficients().back();
  return (1 / lead) * p;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

}  // namespace

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

SaturationOracle saturation_oracle(const nadon::SectionSpace& space, const std::vector<QVector>& vectors) {
  const nadon::QPolyMatrix m = space.polynomial_matrix(vectors);
  const std::size_t r = m.size();
  const int k = space.twist();
  const auto& a = space.bundle().degrees();
  for (std::size_t rk = std::min(r, vectors.size()); rk >= 1; --rk) {
    for (const auto& cols : combinations(vectors.size(), rk)) {
      QPoly g;
      int at_infinity = 1 << 30;
      bool any = false;
      for (const auto& rows : combinations(r, rk)) {
        nadon::QPolyMatrix sub;
        for (auto i : rows) {
          std::vector<QPoly> row;
          for (auto c : cols) row.push_back(m[i][c]);
          sub.push_back(std::move(row));
        }
        const QPoly det = nadon::determinant(sub);
        if (det.is_zero()) continue;
        any = true;
        int homogeneous = 0;
        for (auto i : rows) homogeneous += a[i] + k;
        at_infinity = std::min(at_infinity, homogeneous - det.degree());
        g = poly_gcd(g, det);
      }
      if (any) {
        SaturationOracle out;
        out.rank = static_cast<int>(rk);
        out.degree = g.degree() + at_infinity - static_cast<long>(rk) * k;
        return out;
      }
    }
  }
  return {};
}

Rational two_step_mna(const nadon::SplitBundle& e, const std::vector<std::size_t>& summands) {
  const nadon::SplitBundle f = e.summands(summands);
  Rational out = 2 * f.rank() * (e.slope() - f.slope());
  out.canonicalize();
  return out;
}

double line_bundle_donaldson(double a1, double a2, double a3) { return (a1 * a1 + a2 * a2 + a3 * a3) / 3.0; }

nadon::WeightedFiltration random_filtration(const nadon::SectionSpace& space, std::mt19937_64& rng) {
  const std::size_t n = space.dimension();
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<QVector> basis;
  if (coin(rng) == 0) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto p : perm) basis.push_back(space.unit_vector(p));
  } else {
    std::uniform_int_distribution<int> entry(-1, 2);
    do {
      basis.clear();
      for (std::size_t c = 0; c < n; ++c) {
        QVector v(n);
        for (auto& x : v) x = entry(rng);
        basis.push_back(std::move(v));
      }
    } while (nadon::rank(nadon::QMatrix::from_columns(basis, n)) != n);
  }
  const std::size_t steps = std::min<std::size_t>(n, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
  // Cut points splitting the basis into `steps` nonempty groups.
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(steps - 1);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());

  std::vector<std::vector<QVector>> subspaces;
  std::size_t from = 0;
  for (auto to : cuts) {
    subspaces.emplace_back(basis.begin() + static_cast<long>(from), basis.begin() + static_cast<long>(to));
    from = to;
  }
  std::uniform_int_distribution<long> num(1, 5), den(1, 4);
  QVector w;
  Rational cur(num(rng), den(rng));
  cur.canonicalize();
  for (std::size_t i = 0; i < steps; ++i) {
    w.push_back(cur);
    Rational d(num(rng), den(rng));
    d.canonicalize();
    cur -= d;
  }
  return nadon::WeightedFiltration(space, std::move(w), std::move(subspaces));
}

std::vector<std::vector<QVector>> small_subspaces(const nadon::SectionSpace& space, std::size_t max_dim,
                                                  std::size_t random_count, std::mt19937_64& rng) {
  const std::size_t n = space.dimension();
  std::vector<std::vector<QVector>> out;
  for (std::size_t d = 1; d <= std::min(max_dim, n); ++d) {
    for (const auto& idx : combinations(n, d)) {
      std::vector<QVector> vs;
      for (auto i : idx) vs.push_back(space.unit_vector(i));
      out.push_back(std::move(vs));
    }
  }
  std::uniform_int_distribution<int> entry(-1, 2);
  std::uniform_int_distribution<std::size_t> dim(1, std::min(max_dim, n));
  for (std::size_t s = 0; s < random_count; ++s) {
    std::vector<QVector> vs;
    const std::size_t d = dim(rng);
    while (vs.size() < d) {
      QVector v(n);
      for (auto& x : v) x = entry(rng);
      if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; })) vs.push_back(std::move(v));
    }
    out.push_back(std::move(vs));
  }
  return out;
}

}  // namespace oracle
