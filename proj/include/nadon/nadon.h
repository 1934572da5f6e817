#ifndef NADON_NADON_H
#define NADON_NADON_H

#include <stdint.h>

#if defined(NADON_BUILDING_LIBRARY)
#define NADON_API __attribute__((visibility("default")))
#else
#define NADON_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nadon_status {
  NADON_OK = 0,
  NADON_INVALID_ARGUMENT = 1,  /* null handle or pointer, unknown command */
  NADON_VALIDATION = 2,        /* config, filtration or twist errors */
  NADON_NUMERICAL = 3,         /* DivergedMetric, StepTooCoarse, singular nodes */
  NADON_INTERNAL = 4,          /* invariant violations, unexpected exceptions */
  NADON_IO = 5
} nadon_status;

typedef struct nadon_config nadon_config;
typedef struct nadon_report nadon_report;

NADON_API const char* nadon_version(void);

/* Message of the last failed call on this thread, "" if none. Prefixed with
   the error kind, e.g. "WindowTooShort: ...". */
NADON_API const char* nadon_last_error(void);

/* Process exit status for a status: 0, 2 validation, 3 numerical, 4 internal. */
NADON_API int nadon_exit_code(nadon_status status);

NADON_API nadon_status nadon_config_load(const char* path, nadon_config** out);
NADON_API nadon_status nadon_config_parse(const char* yaml_text, nadon_config** out);
NADON_API void nadon_config_free(nadon_config* config);

NADON_API nadon_status nadon_config_set_seed(nadon_config* config, uint64_t seed);
NADON_API nadon_status nadon_config_set_t_max(nadon_config* config, double t_max);
NADON_API nadon_status nadon_config_set_grid(nadon_config* config, int n_rho, int n_theta);
NADON_API nadon_status nadon_config_set_output(nadon_config* config, const char* dir);

/* Canonical JSON of the effective config; owned by the handle. */
NADON_API const char* nadon_config_json(nadon_config* config);

/* Number of commands and their names: mna, slope-fit, bergman-check,
   saturate, chern-weil, corpus. */
NADON_API int nadon_command_count(void);
NADON_API const char* nadon_command_name(int index);

NADON_API nadon_status nadon_run(const nadon_config* config, const char* command, nadon_report** out);
NADON_API const char* nadon_report_json(const nadon_report* report);
NADON_API void nadon_report_free(nadon_report* report);

/* M^NA of a filtration given as JSON
   {"bundle": [...], "k": n, "weights": [...], "subspaces": [...]}.
   *out_json receives the invariants report; free with nadon_string_free. */
NADON_API nadon_status nadon_mna_json(const char* filtration_json, char** out_json);
NADON_API void nadon_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
