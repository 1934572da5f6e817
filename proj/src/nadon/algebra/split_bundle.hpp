#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nadon/algebra/rational.hpp"

namespace nadon {

// E = O(a_1) + ... + O(a_r) over P^1.
class SplitBundle {
 public:
  explicit SplitBundle(std::vector<int> degrees);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int rank() const noexcept { return static_cast<int>(degrees_.size()); }
  long degree() const noexcept;
  Rational slope() const;
  // E(k) has no higher cohomology and is globally generated for k >= regularity().
  int regularity() const noexcept;

  // Sub-split-bundle formed by the listed summands.
  SplitBundle summands(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  std::vector<int> degrees_;
};

// h^0(E(k)) = sum_i max(a_i + k + 1, 0).
long h0_dimension(const SplitBundle& bundle, int k);

enum class Stability {
  Stable,
  Polystable,
  // Unreachable for split bundles; kept so the verdict set is complete.
  StrictlySemistableNonPolystable,
  Unstable,
};

const char* stability_name(Stability s) noexcept;

struct StabilityVerdict {
  Stability verdict;
  // For unstable bundles: the summand O(max a_i) that destabilizes.
  std::optional<std::size_t> witness_summand;
  std::optional<int> witness_degree;
};

StabilityVerdict classify(const SplitBundle& bundle);

}  // namespace nadon
