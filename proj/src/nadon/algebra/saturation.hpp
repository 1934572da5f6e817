#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nadon/algebra/section_space.hpp"

namespace nadon {

struct GenericRank {
  std::size_t rank = 0;
  // Indices into the spanning vectors whose sections form a generic frame.
  std::vector<std::size_t> frame;
  // Rows of a nonvanishing rank x rank minor of the frame.
  std::vector<std::size_t> witness_rows;
  Rational witness_point;
};

// Rank over Q(z) of the evaluation matrix of the given sections. Sampling
// deg+1 distinct points makes the maximum exact; the frame minor is then
// certified symbolically. The seed picks the sample points.
GenericRank generic_rank(const SectionSpace& space, const std::vector<QVector>& vectors,
                         std::uint64_t seed = 0);

std::size_t generated_subsheaf_rank(const Subspace& w, std::uint64_t seed = 0);

struct SaturationSample {
  int m;      // auxiliary twist; sections of E'(k + m)
  long h0;
};

struct SaturationResult {
  int rank = 0;
  long degree = 0;
  std::vector<SaturationSample> trace;
};

// Rank and degree of the saturation of the subsheaf generated by w, read off
// from the eventual linear growth of h0(E'(k + m)).
SaturationResult saturated_invariants(const Subspace& w, std::uint64_t seed = 0);

}  // namespace nadon
