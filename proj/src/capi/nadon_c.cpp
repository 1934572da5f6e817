#include <algorithm>
#include "nadon/nadon.h"

#include <cstring>
#include <new>
#include <string>

#include "nadon/algebra/filtration_io.hpp"
#include "nadon/errors.hpp"
#include "nadon/harness/commands.hpp"
#include "nadon/harness/manifest.hpp"

struct nadon_config {
  nadon::ExperimentConfig config;
  std::string json;
};

struct nadon_report {
  std::string json;
};

namespace {

thread_local std::string last_error;

nadon_status status_of(nadon::ErrorKind kind) {
  if (kind == nadon::ErrorKind::Io) return NADON_IO;
  switch (nadon::exit_code(kind)) {
    case 3: return NADON_NUMERICAL;
    case 4: return NADON_INTERNAL;
    default: return NADON_VALIDATION;
  }
}

template <class F>
nadon_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return NADON_OK;
  } catch (const nadon::Error& e) {
    last_error = std::string(nadon::kind_name(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NADON_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return NADON_INTERNAL;
  }
}

nadon_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return NADON_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* nadon_version(void) { return nadon::software_version(); }

const char* nadon_last_error(void) { return last_error.c_str(); }

int nadon_exit_code(nadon_status status) {
  switch (status) {
    case NADON_OK: return 0;
    case NADON_NUMERICAL: return 3;
    case NADON_INTERNAL: return 4;
    default: return 2;
  }
}

nadon_status nadon_config_load(const char* path, nadon_config** out) {
  if (!path || !out) return null_argument("path/out");
  *out = nullptr;
  return guarded([&] { *out = new nadon_config{nadon::load_config(path), {}}; });
}

nadon_status nadon_config_parse(const char* yaml_text, nadon_config** out) {
  if (!yaml_text || !out) return null_argument("yaml_text/out");
  *out = nullptr;
  return guarded([&] { *out = new nadon_config{nadon::parse_config(yaml_text), {}}; });
}

void nadon_config_free(nadon_config* config) { delete config; }

nadon_status nadon_config_set_seed(nadon_config* config, uint64_t seed) {
  if (!config) return null_argument("config");
  config->config.seed = seed;
  return NADON_OK;
}

nadon_status nadon_config_set_t_max(nadon_config* config, double t_max) {
  if (!config) return null_argument("config");
  return guarded([&] {
    if (!(t_max >= 0)) throw nadon::Error(nadon::ErrorKind::InvalidConfig, "t_max: must be nonnegative");
    config->config.t_max = t_max;
    config->config.t_values.clear();
  });
}

nadon_status nadon_config_set_grid(nadon_config* config, int n_rho, int n_theta) {
  if (!config) return null_argument("config");
  return guarded([&] {
    if (n_rho <= 0 || n_theta <= 0) throw nadon::Error(nadon::ErrorKind::InvalidConfig, "grid: sizes must be positive");
    config->config.grid.n_rho = n_rho;
    config->config.grid.n_theta = n_theta;
  });
}

nadon_status nadon_config_set_output(nadon_config* config, const char* dir) {
  if (!config || !dir) return null_argument("config/dir");
  config->config.output_dir = dir;
  return NADON_OK;
}

const char* nadon_config_json(nadon_config* config) {
  if (!config) return nullptr;
  config->json = nadon::config_to_json(config->config).dump();
  return config->json.c_str();
}

int nadon_command_count(void) { return static_cast<int>(nadon::command_names().size()); }

const char* nadon_command_name(int index) {
  const auto& names = nadon::command_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<std::size_t>(index)].c_str();
}

nadon_status nadon_run(const nadon_config* config, const char* command, nadon_report** out) {
  if (!config || !command || !out) return null_argument("config/command/out");
  *out = nullptr;
  const auto& names = nadon::command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    last_error = std::string("InvalidArgument: unknown command '") + command + "'";
    return NADON_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = new nadon_report{nadon::run_command(command, config->config).dump(2)};
  });
}

const char* nadon_report_json(const nadon_report* report) { return report ? report->json.c_str() : nullptr; }

void nadon_report_free(nadon_report* report) { delete report; }

nadon_status nadon_mna_json(const char* filtration_json, char** out_json) {
  if (!filtration_json || !out_json) return null_argument("filtration_json/out_json");
  *out_json = nullptr;
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(filtration_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw nadon::Error(nadon::ErrorKind::InvalidConfig, std::string("filtration json: ") + e.what());
    }
    const auto f = nadon::filtration_from_json(j);
    const std::string s = nadon::invariants_to_json(f, nadon::filtration_invariants(f)).dump();
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out_json = buf;
  });
}

void nadon_string_free(char* s) { delete[] s; }

}  // extern "C"
