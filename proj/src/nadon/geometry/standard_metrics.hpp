#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "nadon/algebra/section_space.hpp"
#include "nadon/geometry/metric_field.hpp"

namespace nadon {

// diag((1 + |z|^2)^{-a_i}): the round metric on each summand.
MetricField round_metric(std::shared_ptr<const QuadratureGrid> grid, const std::vector<int>& degrees);

// The identity on O(0)^r.
MetricField flat_metric(std::shared_ptr<const QuadratureGrid> grid, int rank);

struct Perturbation {
  double amplitude = 0.3;   // size of the conformal factors e^{-psi_i}
  double coupling = 0.2;    // off-diagonal coupling between summands
  std::uint64_t seed = 1;
};

// A smooth non-FS metric: h_ii = e^{-psi_i} (1 + |z|^2)^{-a_i} with psi_i a
// seeded quadratic polynomial in the ambient coordinates of the sphere, and
// h_ij = c e^{i alpha_ij} (1 + |z|^2)^{-max(a_i, a_j)}, which is smooth at
// both poles.
MetricFunction perturbed_metric_function(const std::vector<int>& degrees, const Perturbation& p);
MetricField perturbed_metric(std::shared_ptr<const QuadratureGrid> grid,
                             const std::vector<int>& degrees, const Perturbation& p);

// Round L2 Gram of the monomial basis as a complex diagonal matrix.
CMatrix round_form(const SectionSpace& space);

// D^{1/2} exp(Y) D^{1/2} with D the round Gram and Y a random hermitian
// matrix of Frobenius norm `spread` (bounded condition number).
CMatrix random_form(const SectionSpace& space, std::mt19937_64& rng, double spread);

// D^{1/2} M M* D^{1/2} with M = I + epsilon X / sqrt(N), X complex Gaussian.
CMatrix perturbed_round_form(const SectionSpace& space, std::uint64_t seed, double epsilon);

}  // namespace nadon
