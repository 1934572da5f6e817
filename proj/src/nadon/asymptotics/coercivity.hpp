#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nadon/algebra/split_bundle.hpp"
#include "nadon/asymptotics/fit.hpp"
#include "nadon/asymptotics/one_parameter_subgroup.hpp"

namespace nadon {

struct ProbeSettings {
  int n_rho = 32;
  int n_theta = 32;
  double t_max = 6.0;
  double t_step = 0.5;
  int path_nodes = 32;
  BaseFormSettings base;
  std::uint64_t seed = 0;
  int calibration_sign = 1;
};

// Slopes with |s| below this count as zero.
constexpr double kZeroSlope = 0.05;

int sign_with_threshold(double x, double zero) noexcept;

struct ProbeEntry {
  std::vector<std::size_t> summands;  // F as a sub-split-bundle of E
  Rational mna = 0;
  double fitted_slope = 0.0;          // after the calibration sign
  int mna_sign = 0;
  int slope_sign = 0;
  bool agrees = false;
};

struct ProbeReport {
  SplitBundle bundle;
  int k = 0;
  StabilityVerdict verdict;
  bool vacuous = false;
  std::vector<ProbeEntry> entries;
  // Every entry agrees, and some mna is negative exactly when E is unstable.
  bool agrees = false;
};

// Runs every two-step filtration by a proper nonempty set of summands at
// k = regularity + 1.
ProbeReport coercivity_probe(const SplitBundle& bundle, const ProbeSettings& settings);

// Sign relating fitted slopes to mna, from the destabilizing two-step run on
// O(1)+O(-1) at k = 2 with the round base form on a coarse grid. Expected +1.
int calibration_sign(std::uint64_t seed = 0);

}  // namespace nadon
