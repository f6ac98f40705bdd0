/*
 * Copyright 2026 The lqt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the logical-qubit teleportation simulator.
 *
 * Handles are opaque and owned by the caller: every *_create or *_load that
 * returns LQT_OK hands out a handle that must be released with the matching
 * *_free. Functions return an lqt_status; on failure a description is kept
 * per thread and can be read with lqt_last_error(). Strings returned through
 * out-parameters are owned by the handle they came from and stay valid until
 * it is freed or modified.
 */

#ifndef LQT_LQT_H
#define LQT_LQT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LQT_API __declspec(dllexport)
#else
#define LQT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define LQT_ABI_VERSION 1u

typedef enum lqt_status {
    LQT_OK = 0,
    /* Null handle or pointer, or an unknown enumeration name. */
    LQT_ERR_INVALID_ARGUMENT = 1,
    /* Malformed or inconsistent configuration. */
    LQT_ERR_CONFIG = 2,
    /* Simulator domain error (bad qubit index, invalid channel, ...). */
    LQT_ERR_DOMAIN = 3,
    /* A projection or forced branch with vanishing probability. */
    LQT_ERR_ORTHOGONAL_SUBSPACE = 4,
    /* Code-space renormalization by a vanishing probability. */
    LQT_ERR_DEGENERATE_PROJECTION = 5,
    LQT_ERR_IO = 6,
    /* The requested value is not part of this report. */
    LQT_ERR_NOT_FOUND = 7,
    LQT_ERR_INTERNAL = 99
} lqt_status;

typedef struct lqt_config lqt_config;
typedef struct lqt_report lqt_report;

LQT_API uint32_t lqt_abi_version(void);
LQT_API const char *lqt_version_string(void);
LQT_API const char *lqt_status_name(lqt_status status);
/* Message of the last failed call on this thread; "" if none. */
LQT_API const char *lqt_last_error(void);

/* scenario: "characterize", "teleport", "fit" or "validate". */
LQT_API lqt_status lqt_config_create(const char *scenario, lqt_config **out);
LQT_API lqt_status lqt_config_parse(const char *json_text, lqt_config **out);
LQT_API lqt_status lqt_config_load(const char *path, lqt_config **out);
LQT_API void lqt_config_free(lqt_config *config);

/* Scenario name of the config, owned by the config. */
LQT_API lqt_status lqt_config_scenario(const lqt_config *config, const char **out);
LQT_API lqt_status lqt_config_set_seed(lqt_config *config, uint64_t seed);
/* Exact expectations instead of shot sampling. */
LQT_API lqt_status lqt_config_set_exact(lqt_config *config);
LQT_API lqt_status lqt_config_set_output_dir(lqt_config *config, const char *dir);
/* format: "json", "csv" or "both". */
LQT_API lqt_status lqt_config_set_format(lqt_config *config, const char *format);
/* Output directory of the config, owned by the config; "" for stdout. */
LQT_API lqt_status lqt_config_output_dir(const lqt_config *config, const char **out);

/* Runs the configured scenario. */
LQT_API lqt_status lqt_run(const lqt_config *config, lqt_report **out);
LQT_API void lqt_report_free(lqt_report *report);

LQT_API lqt_status lqt_report_json(const lqt_report *report, const char **out);
LQT_API lqt_status lqt_report_csv(const lqt_report *report, const char **out);
/* Plot series (series,x,y,yerr); "" when the scenario has none. */
LQT_API lqt_status lqt_report_plot_csv(const lqt_report *report, const char **out);
/* 1 unless a validation check failed. */
LQT_API int lqt_report_passed(const lqt_report *report);
/*
 * Headline value by name, e.g. "f_raw", "chsh_cs" or "teleport_avg_cs" for
 * characterize and teleport reports, "p_phys" or "objective" for fit reports.
 */
LQT_API lqt_status lqt_report_value(const lqt_report *report, const char *name, double *value, double *stderr_out);
/* Writes the report files using the format of the config it ran from. */
LQT_API lqt_status lqt_report_write(const lqt_report *report, const char *dir);

#ifdef __cplusplus
}
#endif

#endif
