#include "nadon/harness/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace nadon {

const char* software_version() noexcept { return NADON_VERSION; }

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunManifest begin_manifest(const std::string& command, const ExperimentConfig& config) {
  RunManifest m;
  m.command = command;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a(config_to_json(config).dump())));
  m.config_hash = hex;
  m.started = utc_timestamp();
  m.seed = config.seed;
  return m;
}

void finish_manifest(RunManifest& m) { m.finished = utc_timestamp(); }

nlohmann::json manifest_to_json(const RunManifest& m) {
  return {{"command", m.command},
          {"config_hash", m.config_hash},
          {"started", m.started},
          {"finished", m.finished},
          {"calibration_sign", m.calibration_sign},
          {"seed", m.seed},
          {"version", software_version()},
          {"tolerances", m.tolerances}};
}

}  // namespace nadon
