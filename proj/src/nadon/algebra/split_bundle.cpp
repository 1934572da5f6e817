#include "nadon/algebra/split_bundle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nadon/errors.hpp"

namespace nadon {

SplitBundle::SplitBundle(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw Error(ErrorKind::InvalidConfig, "a split bundle needs at least one summand");
  }
}

long SplitBundle::degree() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0L);
}

Rational SplitBundle::slope() const {
  Rational mu(degree(), rank());
  mu.canonicalize();
  return mu;
}

int SplitBundle::regularity() const noexcept {
  return -*std::min_element(degrees_.begin(), degrees_.end());
}

SplitBundle SplitBundle::summands(const std::vector<std::size_t>& indices) const {
  std::vector<int> sub;
  for (auto i : indices) {
    if (i >= degrees_.size()) {
      throw Error(ErrorKind::InvalidConfig,
                  "summand index " + std::to_string(i) + " out of range for rank " +
                      std::to_string(rank()));
    }
    sub.push_back(degrees_[i]);
  }
  return SplitBundle(std::move(sub));
}

long h0_dimension(const SplitBundle& bundle, int k) {
  long n = 0;
  for (int a : bundle.degrees()) n += std::max(a + k + 1, 0);
  return n;
}

const char* stability_name(Stability s) noexcept {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Polystable: return "polystable";
    case Stability::StrictlySemistableNonPolystable: return "strictly-semistable-nonpolystable";
    case Stability::Unstable: return "unstable";
  }
  return "unknown";
}

StabilityVerdict classify(const SplitBundle& bundle) {
  const auto& d = bundle.degrees();
  if (bundle.rank() == 1) return {Stability::Stable, std::nullopt, std::nullopt};
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  if (*lo == *hi) return {Stability::Polystable, std::nullopt, std::nullopt};
  return {Stability::Unstable, static_cast<std::size_t>(hi - d.begin()), *hi};
}

}  // namespace nadon
