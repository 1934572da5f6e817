#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nadon/algebra/rational.hpp"
#include "nadon/asymptotics/one_parameter_subgroup.hpp"
#include "nadon/geometry/standard_metrics.hpp"

namespace nadon {

struct GridConfig {
  int n_rho = 32;
  int n_theta = 32;
  double fd_step = 2e-3;
  int path_nodes = 32;
};

enum class FiltrationKind { TwoStep, Subspace, Explicit, File, Trivial };

struct FiltrationConfig {
  FiltrationKind kind = FiltrationKind::TwoStep;
  std::vector<std::size_t> summands{0};
  std::vector<QVector> subspace;
  QVector weights;                          // explicit
  std::vector<std::vector<QVector>> spaces; // explicit
  std::string file;                         // JSON filtration or corpus
};

enum class MetricKind { Round, Flat, Perturbed };

MetricKind parse_metric_kind(const std::string& name);
const char* metric_kind_name(MetricKind kind) noexcept;

struct ExperimentConfig {
  std::vector<int> bundle{1, -1};
  int k = 2;
  FiltrationConfig filtration;
  GridConfig grid;
  double t_max = 6.0;
  double t_step = 0.5;
  std::vector<double> t_values;  // explicit grid; overrides t_max/t_step
  std::string output_dir = "out";
  std::uint64_t seed = 0;
  BaseFormSettings base_form;

  std::vector<QVector> subspace;  // saturate, chern-weil
  MetricKind metric = MetricKind::Flat;
  Perturbation perturbation;

  std::vector<int> bergman_k{4, 8, 16, 32};
  MetricKind bergman_metric = MetricKind::Perturbed;

  std::vector<std::vector<int>> corpus_bundles;

  std::string source_name = "<config>";
  std::string source_text;

  std::vector<double> t_grid() const;
};

// YAML text. Errors are InvalidConfig (or TwistTooSmall) with "name:line:
// field: message" diagnostics.
ExperimentConfig parse_config(const std::string& text, const std::string& name = "<config>");
ExperimentConfig load_config(const std::string& path);

// Re-checks the invariants after command-line overrides.
void validate(const ExperimentConfig& config);

// Canonical form of the effective configuration; hashed into the manifest.
nlohmann::json config_to_json(const ExperimentConfig& config);

}  // namespace nadon
