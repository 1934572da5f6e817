#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nadon/harness/config.hpp"

namespace nadon {

const char* software_version() noexcept;

std::uint64_t fnv1a(std::string_view bytes) noexcept;

struct RunManifest {
  std::string command;
  std::string config_hash;  // FNV-1a of the canonical effective config, hex
  std::string started;      // UTC, ISO 8601
  std::string finished;
  int calibration_sign = 0;  // 0 when the command does not use it
  std::uint64_t seed = 0;
  nlohmann::json tolerances = nlohmann::json::object();
};

RunManifest begin_manifest(const std::string& command, const ExperimentConfig& config);
void finish_manifest(RunManifest& m);

nlohmann::json manifest_to_json(const RunManifest& m);

std::string utc_timestamp();

}  // namespace nadon
