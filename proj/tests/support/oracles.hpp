#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nadon/algebra/filtration.hpp"

namespace oracle {

using nadon::QVector;

// Monic gcd over Q by the Euclidean algorithm.
nadon::QPoly poly_gcd(nadon::QPoly a, nadon::QPoly b);

struct SaturationOracle {
  int rank = 0;
  long degree = 0;
};

// Saturation invariants from minors alone. Pick r' sections whose r' x r'
// minors m_I are not all zero. They equal g u_I with (u_I) spanning the
// saturated line det S' in wedge^{r'} E, so deg det S' is the homogeneous
// degree of g minus r' k, and g = affine gcd of the m_I times the common
// vanishing order at infinity.
SaturationOracle saturation_oracle(const nadon::SectionSpace& space, const std::vector<QVector>& vectors);

// 2 rk(F) (mu(E) - mu(F)) for the two-step filtration by a sub-split-bundle.
nadon::Rational two_step_mna(const nadon::SplitBundle& e, const std::vector<std::size_t>& summands);

// M^Don(e^phi h, h) on a line bundle for phi = a1 x1 + a2 x2 + a3 x3 in the
// ambient coordinates of the unit sphere: the potential term vanishes since
// each x_i has mean zero, leaving the Dirichlet energy (a1^2+a2^2+a3^2)/3.
double line_bundle_donaldson(double a1, double a2, double a3);

// A random weighted filtration of H0(E(k)): 1 to 3 steps, random descending
// rational weights, subspaces cut from a random integer basis. Sometimes
// the basis is a permuted monomial basis, which produces degenerate steps.
nadon::WeightedFiltration random_filtration(const nadon::SectionSpace& space, std::mt19937_64& rng);

// Vectors spanning subspaces of dimension <= max_dim: all sets of monomial
// basis vectors, plus `random_count` random {-1,0,1,2} combinations.
std::vector<std::vector<QVector>> small_subspaces(const nadon::SectionSpace& space, std::size_t max_dim,
                                                  std::size_t random_count, std::mt19937_64& rng);

}  // namespace oracle
