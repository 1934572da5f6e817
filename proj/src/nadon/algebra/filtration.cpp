#include "nadon/algebra/filtration.hpp"

#include <algorithm>
#include <string>

#include "nadon/errors.hpp"

namespace nadon {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidFiltration, what); }

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

WeightedFiltration::WeightedFiltration(SectionSpace space, QVector weights,
                                       std::vector<std::vector<QVector>> subspaces)
    : space_(std::move(space)), weights_(std::move(weights)), subspaces_(std::move(subspaces)) {
  if (weights_.empty()) invalid("weights: at least one weight is required");
  if (weights_.size() != subspaces_.size()) {
    invalid("subspaces: expected " + std::to_string(weights_.size()) + " weight subspaces, got " +
            std::to_string(subspaces_.size()));
  }
  for (std::size_t i = 1; i < weights_.size(); ++i) {
    if (!(weights_[i - 1] > weights_[i])) {
      invalid("weights: must be strictly descending (entry " + std::to_string(i) + ")");
    }
  }
  const std::size_t n = space_.dimension();
  std::vector<QVector> all;
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    if (subspaces_[i].empty()) invalid("subspaces[" + std::to_string(i) + "]: empty");
    for (const auto& v : subspaces_[i]) {
      if (v.size() != n) {
        invalid("subspaces[" + std::to_string(i) + "]: vector of length " +
                std::to_string(v.size()) + ", expected " + std::to_string(n));
      }
      all.push_back(v);
    }
    if (rank(QMatrix::from_columns(subspaces_[i], n)) != subspaces_[i].size()) {
      invalid("subspaces[" + std::to_string(i) + "]: vectors are linearly dependent");
    }
  }
  if (all.size() != n || rank(QMatrix::from_columns(all, n)) != n) {
    invalid("subspaces: weight subspaces must be complementary and span h0 = " +
            std::to_string(n));
  }
}

WeightedFiltration WeightedFiltration::trivial(const SectionSpace& space) {
  std::vector<QVector> basis;
  for (std::size_t b = 0; b < space.dimension(); ++b) basis.push_back(space.unit_vector(b));
  return WeightedFiltration(space, {Rational(0)}, {basis});
}

long WeightedFiltration::j() const { return lcm_of_denominators(weights_).get_num().get_si(); }

std::vector<long> WeightedFiltration::levels() const {
  const long jj = j();
  std::vector<long> q;
  for (const auto& w : weights_) {
    Rational v = -w * jj;
    v.canonicalize();
    q.push_back(v.get_num().get_si());
  }
  return q;
}

Rational WeightedFiltration::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) t += weights_[i] * static_cast<long>(dimension(i));
  return t;
}

Rational WeightedFiltration::max_abs_weight() const {
  Rational m = 0;
  for (const auto& w : weights_) m = std::max(m, Rational(abs(w)));
  return m;
}

QVector WeightedFiltration::trace_free_weights() const {
  const Rational shift = trace() / static_cast<long>(space_.dimension());
  QVector out;
  for (const auto& w : weights_) out.push_back(Rational(w - shift));
  return out;
}

WeightedFiltration WeightedFiltration::scaled(const Rational& c) const {
  if (sgn(c) <= 0) invalid("scale factor must be positive");
  QVector w;
  for (const auto& x : weights_) w.push_back(Rational(x * c));
  return WeightedFiltration(space_, std::move(w), subspaces_);
}

std::vector<QVector> WeightedFiltration::cumulative(std::size_t i) const {
  std::vector<QVector> out;
  for (std::size_t s = 0; s <= i; ++s) out.insert(out.end(), subspaces_[s].begin(), subspaces_[s].end());
  return out;
}

SheafInvariants filtration_invariants(const WeightedFiltration& f, std::uint64_t seed) {
  SheafInvariants inv;
  const auto q = f.levels();
  const SplitBundle& e = f.space().bundle();
  int prev_rank = 0;
  long prev_degree = 0;
  for (std::size_t i = 0; i < f.steps(); ++i) {
    FiltrationStep step{q[i], 0, 0};
    if (i + 1 == f.steps()) {
      step.rank = e.rank();
      step.degree = e.degree();
    } else {
      const auto sat = saturated_invariants({f.space(), f.cumulative(i)}, seed);
      step.rank = sat.rank;
      step.degree = sat.degree;
    }
    // An equal-rank step saturates to the previous one, so its graded piece
    // is zero.
    if (step.rank == prev_rank && (step.degree != prev_degree)) {
      throw Error(ErrorKind::InvariantViolation, "equal-rank filtration steps with different degrees");
    }
    inv.steps.push_back(step);
    inv.graded.push_back({f.weights()[i], step.rank - prev_rank, step.degree - prev_degree});
    prev_rank = step.rank;
    prev_degree = step.degree;
  }
  return inv;
}

Rational mna(const WeightedFiltration& f, const SheafInvariants& inv) {
  const Rational mu = f.space().bundle().slope();
  Rational sum = 0;
  for (std::size_t i = 0; i + 1 < inv.steps.size(); ++i) {
    const auto& s = inv.steps[i];
    const long span = inv.steps[i + 1].q - s.q;
    sum += Rational(span) * (mu * s.rank - s.degree);
  }
  Rational out = 2 * sum / f.j();
  out.canonicalize();
  return out;
}

Rational mna(const WeightedFiltration& f) { return mna(f, filtration_invariants(f)); }

Rational mna_weighted(const WeightedFiltration& f, const SheafInvariants& inv) {
  const Rational mu = f.space().bundle().slope();
  Rational sum = 0;
  for (const auto& g : inv.graded) sum += g.weight * (Rational(g.degree) - mu * g.rank);
  Rational out = -2 * sum;
  out.canonicalize();
  return out;
}

Rational mna_weighted(const WeightedFiltration& f) {
  return mna_weighted(f, filtration_invariants(f));
}

QVector round_gram_diagonal(const SectionSpace& space) {
  QVector g;
  for (const auto& m : space.basis()) {
    const long d = m.x_power + m.y_power;
    Rational v(factorial(m.x_power) * factorial(m.y_power), factorial(d + 1));
    v.canonicalize();
    g.push_back(v);
  }
  return g;
}

namespace {

WeightedFiltration two_step_from(const SectionSpace& space, std::vector<QVector> sub,
                                 std::vector<QVector> complement) {
  const long n = static_cast<long>(space.dimension());
  const long d = static_cast<long>(sub.size());
  if (complement.empty()) return WeightedFiltration::trivial(space);
  Rational w1(d, n), w2(-(n - d), n);
  w1.canonicalize();
  w2.canonicalize();
  return WeightedFiltration(space, {w1, w2}, {std::move(sub), std::move(complement)});
}

}  // namespace

WeightedFiltration two_step_filtration(const SectionSpace& space,
                                       const std::vector<std::size_t>& summands) {
  const auto& degrees = space.bundle().degrees();
  std::vector<bool> in_f(degrees.size(), false);
  for (auto i : summands) {
    if (i >= degrees.size()) {
      throw Error(ErrorKind::InvalidConfig, "summand index " + std::to_string(i) + " out of range");
    }
    in_f[i] = true;
  }
  // F must be regular at this twist too.
  SectionSpace(space.bundle().summands(summands), space.twist());

  std::vector<QVector> sub, complement;
  for (std::size_t b = 0; b < space.dimension(); ++b) {
    (in_f[space.basis()[b].factor] ? sub : complement).push_back(space.unit_vector(b));
  }
  if (sub.empty()) throw Error(ErrorKind::EmptySubspace, "H0(F(k)) is zero");
  return two_step_from(space, std::move(sub), std::move(complement));
}

WeightedFiltration two_step_filtration(const SectionSpace& space,
                                       const std::vector<QVector>& subspace) {
  const std::size_t n = space.dimension();
  for (const auto& v : subspace) {
    if (v.size() != n) throw Error(ErrorKind::InvalidConfig, "subspace vector has wrong length");
  }
  const QMatrix cols = QMatrix::from_columns(subspace, n);
  const Echelon e = row_reduce(cols.transposed());
  if (e.pivots.empty()) throw Error(ErrorKind::EmptySubspace, "subspace is zero");
  std::vector<QVector> sub;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    QVector v(n);
    for (std::size_t b = 0; b < n; ++b) v[b] = e.reduced(i, b);
    sub.push_back(std::move(v));
  }
  // Orthogonal complement: {x : sum_b g_b v_b x_b = 0 for all v in sub}.
  const QVector g = round_gram_diagonal(space);
  QMatrix constraints(sub.size(), n);
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t b = 0; b < n; ++b) constraints(i, b) = g[b] * sub[i][b];
  return two_step_from(space, std::move(sub), nullspace(constraints));
}

}  // namespace nadon
