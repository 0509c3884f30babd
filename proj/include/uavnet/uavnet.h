/*
 * Copyright (c) 2026 The uavnet authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef UAVNET_H
#define UAVNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UAVNET_API __declspec(dllexport)
#elif defined(__GNUC__)
#define UAVNET_API __attribute__((visibility("default")))
#else
#define UAVNET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface of the uavnet library. Every fallible call returns a status;
 * on failure uavnet_last_error() describes it until the next call on the
 * same thread. Handles are not shared between threads without external
 * locking, but distinct handles may be used concurrently.
 */

typedef enum uavnet_status
{
    UAVNET_OK = 0,
    UAVNET_ERR_INVALID_ARGUMENT = 1,
    UAVNET_ERR_INVALID_PARAMS = 2,
    UAVNET_ERR_PARSE = 3,
    UAVNET_ERR_UNKNOWN_KEY = 4,
    UAVNET_ERR_UNIT = 5,
    UAVNET_ERR_NON_CONVERGENCE = 6,
    UAVNET_ERR_NON_FINITE = 7,
    UAVNET_ERR_DEGENERATE_SUPPORT = 8,
    UAVNET_ERR_DEGENERATE_TIER = 9,
    UAVNET_ERR_INTERNAL = 10
} uavnet_status;

UAVNET_API const char* uavnet_status_name(uavnet_status status);
UAVNET_API const char* uavnet_last_error(void);
UAVNET_API const char* uavnet_version(void);

/* Parameters */

typedef struct uavnet_params uavnet_params;

/* Default parameter point. */
UAVNET_API uavnet_status uavnet_params_create(uavnet_params** out);
UAVNET_API uavnet_status uavnet_params_clone(const uavnet_params* params, uavnet_params** out);
UAVNET_API void uavnet_params_destroy(uavnet_params* params);

/* Applies a JSON object of config keys; the handle is unchanged on failure. */
UAVNET_API uavnet_status uavnet_params_apply_json(uavnet_params* params, const char* json);
UAVNET_API uavnet_status uavnet_params_set(uavnet_params* params, const char* key, double value);
UAVNET_API uavnet_status uavnet_params_get(const uavnet_params* params, const char* key, double* value);

/*
 * Quadrature tolerance used by uavnet_analyze and uavnet_validate on this
 * handle. Tight settings can make an evaluation fail with
 * UAVNET_ERR_NON_CONVERGENCE. Defaults: 1e-7, 1e-10, 60.
 */
UAVNET_API uavnet_status uavnet_params_set_quadrature(uavnet_params* params,
                                                      double rel_tol,
                                                      double abs_tol,
                                                      int max_depth);
UAVNET_API uavnet_status uavnet_params_get_quadrature(const uavnet_params* params,
                                                      double* rel_tol,
                                                      double* abs_tol,
                                                      int* max_depth);

/* UAVNET_ERR_INVALID_PARAMS with every issue in uavnet_last_error(). */
UAVNET_API uavnet_status uavnet_params_validate(const uavnet_params* params);

/* Canonical JSON; release with uavnet_string_free. */
UAVNET_API uavnet_status uavnet_params_to_json(const uavnet_params* params, char** out);
UAVNET_API void uavnet_string_free(char* text);

UAVNET_API size_t uavnet_config_key_count(void);
UAVNET_API const char* uavnet_config_key(size_t index);

/* Analysis */

typedef struct uavnet_report
{
    double a_g;
    double a_a;
    double a_los;
    double a_nlos;
    double s_backhaul;
    double p_cov_g;
    double p_cov_a;
    double p_cov;
    /* quadrature error estimates; NaN where not computed */
    double err_a_g;
    double err_a_los;
    double err_s_backhaul;
    double err_p_cov_g;
    double err_p_cov_a;
} uavnet_report;

/*
 * Every metric at the thresholds stored in @p params. On a numerical
 * failure the fields that could still be evaluated are filled and the
 * rest are NaN.
 */
UAVNET_API uavnet_status uavnet_analyze(const uavnet_params* params, uavnet_report* out);

/* Simulation */

typedef enum uavnet_sim_mode
{
    UAVNET_MODE_FULL = 0,
    UAVNET_MODE_CENTER_UAV = 1
} uavnet_sim_mode;

typedef struct uavnet_sim_options
{
    uint64_t trials;
    uint64_t seed;
    int jobs;           /* 0: hardware concurrency */
    int mode;           /* uavnet_sim_mode */
    double window_m;    /* 0: automatic */
    double window_scale;
} uavnet_sim_options;

UAVNET_API void uavnet_sim_options_init(uavnet_sim_options* opts);

typedef enum uavnet_metric
{
    UAVNET_METRIC_A_G = 0,
    UAVNET_METRIC_A_A,
    UAVNET_METRIC_A_LOS,
    UAVNET_METRIC_A_NLOS,
    UAVNET_METRIC_S_BACKHAUL,
    UAVNET_METRIC_P_COV_G,
    UAVNET_METRIC_P_COV_A,
    UAVNET_METRIC_P_COV,
    UAVNET_METRIC_INDEPENDENCE_GAP,
    UAVNET_METRIC_COUNT
} uavnet_metric;

UAVNET_API const char* uavnet_metric_name(uavnet_metric metric);

typedef struct uavnet_estimate
{
    int present; /* 0 when the mode does not produce this metric */
    int flagged; /* fewer than 100 conditioning events */
    double value;
    double half_width;
    uint64_t trials;
} uavnet_estimate;

typedef struct uavnet_sim_result
{
    uavnet_estimate metrics[UAVNET_METRIC_COUNT];
} uavnet_sim_result;

UAVNET_API uavnet_status uavnet_simulate(const uavnet_params* params,
                                         const uavnet_sim_options* opts,
                                         uavnet_sim_result* out);

/* Validation */

typedef struct uavnet_validation uavnet_validation;

typedef struct uavnet_validation_row
{
    const char* name; /* owned by the validation handle */
    const char* rule; /* "3sigma", "abs" or "max" */
    double analytic;
    double simulated;
    double half_width;
    double gap;
    double tolerance;
    int pass;
} uavnet_validation_row;

UAVNET_API uavnet_status uavnet_validate(const uavnet_params* params,
                                         const uavnet_sim_options* opts,
                                         int window_check,
                                         uavnet_validation** out);
UAVNET_API size_t uavnet_validation_row_count(const uavnet_validation* validation);
UAVNET_API uavnet_status uavnet_validation_row_at(const uavnet_validation* validation,
                                                  size_t index,
                                                  uavnet_validation_row* out);
UAVNET_API int uavnet_validation_passed(const uavnet_validation* validation);
UAVNET_API void uavnet_validation_destroy(uavnet_validation* validation);

#ifdef __cplusplus
}
#endif

#endif /* UAVNET_H */
