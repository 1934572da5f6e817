#include "nadon/algebra/saturation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "nadon/errors.hpp"

namespace nadon {

namespace {

// All size-n subsets of {0..r-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t r, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < r; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool is_zero_vector(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void require_nonempty(const std::vector<QVector>& vectors, std::size_t n) {
  bool any = false;
  for (const auto& v : vectors) {
    if (v.size() != n) {
      throw Error(ErrorKind::InvalidConfig,
                  "coefficient vector of length " + std::to_string(v.size()) +
                      " does not match h0 = " + std::to_string(n));
    }
    any = any || !is_zero_vector(v);
  }
  if (!any) throw Error(ErrorKind::EmptySubspace, "subspace is zero");
}

}  // namespace

GenericRank generic_rank(const SectionSpace& space, const std::vector<QVector>& vectors,
                         std::uint64_t seed) {
  require_nonempty(vectors, space.dimension());
  const std::size_t r = static_cast<std::size_t>(space.bundle().rank());

  // Every minor is a polynomial of degree at most D, so it cannot vanish at
  // D + 1 distinct points unless it vanishes identically.
  long degree_bound = 0;
  for (std::size_t i = 0; i < r; ++i) degree_bound += std::max(space.factor_degree(i), 0);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-(10 * degree_bound + 50), 10 * degree_bound + 50);
  std::set<long> points;
  while (static_cast<long>(points.size()) < degree_bound + 1) points.insert(pick(rng));

  GenericRank best;
  QMatrix best_eval;
  for (long p : points) {
    const Rational z(p);
    QMatrix a = space.evaluate(vectors, z);
    Echelon e = row_reduce(a);
    if (e.pivots.size() > best.rank || best.frame.empty()) {
      best.rank = e.pivots.size();
      best.frame = e.pivots;
      best.witness_point = z;
      best_eval = std::move(a);
      if (best.rank == std::min(r, vectors.size())) break;
    }
  }

  // Independent rows of the frame columns at the witness point.
  std::vector<QVector> frame_cols;
  for (auto c : best.frame) {
    QVector col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = best_eval(i, c);
    frame_cols.push_back(std::move(col));
  }
  best.witness_rows = row_reduce(QMatrix::from_columns(frame_cols, r).transposed()).pivots;

  std::vector<QVector> frame_vectors;
  for (auto c : best.frame) frame_vectors.push_back(vectors[c]);
  const QPolyMatrix full = space.polynomial_matrix(frame_vectors);
  QPolyMatrix minor;
  for (auto row : best.witness_rows) minor.push_back(full[row]);
  if (determinant(minor).is_zero()) {
    throw Error(ErrorKind::InvariantViolation, "generic-rank certificate minor vanishes");
  }
  return best;
}

std::size_t generated_subsheaf_rank(const Subspace& w, std::uint64_t seed) {
  return generic_rank(w.space, w.vectors, seed).rank;
}

SaturationResult saturated_invariants(const Subspace& w, std::uint64_t seed) {
  const SectionSpace& space = w.space;
  const SplitBundle& bundle = space.bundle();
  const std::size_t r = static_cast<std::size_t>(bundle.rank());
  const GenericRank g = generic_rank(space, w.vectors, seed);
  const std::size_t rp = g.rank;

  std::vector<QVector> frame_vectors;
  for (auto c : g.frame) frame_vectors.push_back(w.vectors[c]);
  const QPolyMatrix wsel = space.polynomial_matrix(frame_vectors);

  // det of W_sel restricted to each rp-subset of rows.
  std::map<std::vector<std::size_t>, QPoly> minors;
  for (const auto& rows : subsets(r, rp)) {
    QPolyMatrix sub;
    for (auto i : rows) sub.push_back(wsel[i]);
    minors.emplace(rows, determinant(sub));
  }
  const auto augmented = subsets(r, rp + 1);

  long abs_sum = 0;
  for (int a : bundle.degrees()) abs_sum += std::abs(a);
  const int m_max = space.twist() + static_cast<int>(abs_sum) + bundle.rank() + 4;

  SaturationResult out;
  out.rank = static_cast<int>(rp);
  int stable_increments = 0;
  for (int m = 0; m <= m_max; ++m) {
    const SectionSpace big(bundle, space.twist() + m);
    const std::size_t n = big.dimension();
    long h0 = 0;
    if (rp == r) {
      h0 = static_cast<long>(n);
    } else {
      // Minor of [W_sel | s] on rows R, expanded along the s column; each
      // z-coefficient must vanish. Column b is the constraint image of basis
      // section b.
      std::vector<QVector> constraint_rows;
      for (const auto& rows : augmented) {
        std::vector<QPoly> per_basis(n);
        int max_deg = -1;
        for (std::size_t b = 0; b < n; ++b) {
          const Monomial& mono = big.basis()[b];
          auto pos = std::find(rows.begin(), rows.end(), mono.factor);
          if (pos == rows.end()) continue;
          const std::size_t p = static_cast<std::size_t>(pos - rows.begin());
          std::vector<std::size_t> rest;
          for (auto i : rows)
            if (i != mono.factor) rest.push_back(i);
          const Rational sign = ((p + rp) % 2 == 0) ? 1 : -1;
          per_basis[b] = QPoly::monomial(sign, mono.x_power) * minors.at(rest);
          max_deg = std::max(max_deg, per_basis[b].degree());
        }
        for (int d = 0; d <= max_deg; ++d) {
          QVector row(n);
          for (std::size_t b = 0; b < n; ++b) row[b] = per_basis[b].coefficient(d);
          constraint_rows.push_back(std::move(row));
        }
      }
      QMatrix c(constraint_rows.size(), n);
      for (std::size_t i = 0; i < constraint_rows.size(); ++i)
        for (std::size_t b = 0; b < n; ++b) c(i, b) = constraint_rows[i][b];
      h0 = static_cast<long>(n) - static_cast<long>(constraint_rows.empty() ? 0 : rank(c));
    }
    if (!out.trace.empty()) {
      const long inc = h0 - out.trace.back().h0;
      stable_increments = (inc == static_cast<long>(rp)) ? stable_increments + 1 : 0;
    }
    out.trace.push_back({m, h0});
    if (stable_increments >= 2) {
      out.degree = h0 - static_cast<long>(rp) * (space.twist() + m + 1);
      return out;
    }
  }
  throw Error(ErrorKind::NonStabilized,
              "h0 increments did not stabilize within m <= " + std::to_string(m_max));
}

}  // namespace nadon
