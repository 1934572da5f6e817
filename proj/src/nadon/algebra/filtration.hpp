#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nadon/algebra/saturation.hpp"
#include "nadon/algebra/section_space.hpp"

namespace nadon {

// Weight decomposition of H0(E(k)): weights w_1 > ... > w_nu with mutually
// complementary subspaces. The sheaf filtration step i is generated by the
// span of subspaces 1..i.
class WeightedFiltration {
 public:
  // Throws InvalidFiltration on non-descending weights, empty or dependent
  // subspaces, or subspaces that do not span H0(E(k)).
  WeightedFiltration(SectionSpace space, QVector weights,
                     std::vector<std::vector<QVector>> subspaces);

  // Single weight 0 on all of H0(E(k)); also the zero generator.
  static WeightedFiltration trivial(const SectionSpace& space);

  const SectionSpace& space() const noexcept { return space_; }
  const QVector& weights() const noexcept { return weights_; }
  const std::vector<std::vector<QVector>>& subspaces() const noexcept { return subspaces_; }
  std::size_t steps() const noexcept { return weights_.size(); }
  std::size_t dimension(std::size_t i) const { return subspaces_[i].size(); }

  // Smallest positive j with j*w_i integral for all i.
  long j() const;
  // Integer levels q_i = -j*w_i, increasing in i.
  std::vector<long> levels() const;

  Rational trace() const;  // sum_i w_i dim V_i
  Rational max_abs_weight() const;
  bool within_unit_norm() const { return max_abs_weight() <= 1; }

  // Weights shifted by a constant so the trace vanishes.
  QVector trace_free_weights() const;

  WeightedFiltration scaled(const Rational& c) const;

  // Span of subspaces 0..i.
  std::vector<QVector> cumulative(std::size_t i) const;

 private:
  SectionSpace space_;
  QVector weights_;
  std::vector<std::vector<QVector>> subspaces_;
};

struct FiltrationStep {
  long q;
  int rank;
  long degree;
};

struct GradedPiece {
  Rational weight;
  int rank;
  long degree;
};

struct SheafInvariants {
  std::vector<FiltrationStep> steps;  // E'_{<=q_i}, one per weight
  std::vector<GradedPiece> graded;    // E'_{<=q_i} / E'_{<=q_{i-1}}
};

SheafInvariants filtration_invariants(const WeightedFiltration& f, std::uint64_t seed = 0);

// (2/j) sum_q rk(E'_{<=q}) (mu(E) - mu(E'_{<=q})).
Rational mna(const WeightedFiltration& f, const SheafInvariants& inv);
Rational mna(const WeightedFiltration& f);

// -2 sum_i w_i (deg gr_i - mu(E) rk gr_i); equals mna exactly.
Rational mna_weighted(const WeightedFiltration& f, const SheafInvariants& inv);
Rational mna_weighted(const WeightedFiltration& f);

// Two-step filtration H0(F(k)) in H0(E(k)) with weights h0(F)/h0(E) and
// -(h0(E) - h0(F))/h0(E). The second weight space is the orthogonal complement
// under the round L2 form. F = E gives the trivial filtration.
WeightedFiltration two_step_filtration(const SectionSpace& space,
                                       const std::vector<std::size_t>& summands);
WeightedFiltration two_step_filtration(const SectionSpace& space,
                                       const std::vector<QVector>& subspace);

// Round L2 Gram diagonal of the monomial basis: p!(d-p)!/(d+1)! for x^p y^(d-p).
QVector round_gram_diagonal(const SectionSpace& space);

}  // namespace nadon
