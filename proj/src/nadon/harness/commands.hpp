#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nadon/harness/config.hpp"

namespace nadon {

// Each command writes its files into config.output_dir and returns the JSON
// report, which embeds the run manifest.
nlohmann::json cmd_mna(const ExperimentConfig& config);
nlohmann::json cmd_slope_fit(const ExperimentConfig& config);
nlohmann::json cmd_bergman_check(const ExperimentConfig& config);
nlohmann::json cmd_saturate(const ExperimentConfig& config);
nlohmann::json cmd_chern_weil(const ExperimentConfig& config);
nlohmann::json cmd_corpus(const ExperimentConfig& config);

const std::vector<std::string>& command_names();
nlohmann::json run_command(const std::string& name, const ExperimentConfig& config);

// The filtration selected by the config (a file may hold several).
std::vector<WeightedFiltration> configured_filtrations(const ExperimentConfig& config);

}  // namespace nadon
