/* Copyright 2026 The muskat-bim Authors
 * SPDX-License-Identifier: Apache-2.0 */

#ifndef MUSKAT_MUSKAT_H
#define MUSKAT_MUSKAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define MK_API __attribute__((visibility("default")))
#else
#define MK_API
#endif

typedef enum mk_status
{
  MK_OK = 0,
  MK_ERR_INVALID_ARGUMENT = 1,
  MK_ERR_SELF_INTERSECTION = 2,
  MK_ERR_CURVE_CONTACT = 3,
  MK_ERR_NO_CONVERGENCE = 4,
  MK_ERR_DEGENERATE_PARAMETRIZATION = 5,
  MK_ERR_STEP_REJECTED = 6,
  MK_ERR_INSUFFICIENT_DATA = 7,
  MK_ERR_VALIDATION = 8,
  MK_ERR_IO = 9,
  MK_ERR_PARSE = 10,
  MK_ERR_INTERNAL = 99
} mk_status;

typedef enum mk_exit_reason
{
  MK_EXIT_COMPLETED = 0,
  MK_EXIT_RT_VIOLATED = 1,
  MK_EXIT_ARC_CHORD_BLOWUP = 2,
  MK_EXIT_CURVE_CONTACT = 3,
  MK_EXIT_STEP_REJECTED = 4
} mk_exit_reason;

typedef struct mk_config mk_config;
typedef struct mk_curve mk_curve;

typedef struct mk_fluid_params
{
  double mu1, mu2, kappa1, kappa2, rho1, rho2, g;
} mk_fluid_params;

typedef struct mk_run_summary
{
  mk_exit_reason exit_reason;
  double t_final;
  double dt;
  size_t steps;
  size_t records;
  double sigma_min_final;
} mk_run_summary;

/* Per-check verification report. */
typedef void (*mk_check_callback)(const char *name, int passed, const char *detail, void *user);
/* Spectral-radius estimate after each power iteration. */
typedef void (*mk_trace_callback)(int iteration, double estimate, void *user);

/* Message of the last failed call on this thread; empty when none. */
MK_API const char *mk_last_error(void);
MK_API const char *mk_status_string(mk_status status);
MK_API const char *mk_exit_reason_string(mk_exit_reason reason);
MK_API const char *mk_version(void);

/* Strings returned through char** are released with mk_string_free. */
MK_API void mk_string_free(char *text);

MK_API mk_status mk_config_load(const char *path, mk_config **out);
MK_API mk_status mk_config_parse(const char *json_text, mk_config **out);
MK_API void mk_config_free(mk_config *config);
/* Replaces the output directory. */
MK_API mk_status mk_config_set_output_dir(mk_config *config, const char *dir);
/* Configuration echo including the derived gamma1, gamma2 and N. */
MK_API mk_status mk_config_describe(const mk_config *config, char **out);
MK_API mk_status mk_config_fluid_params(const mk_config *config, mk_fluid_params *out);
/* Initial z and h of the configuration. */
MK_API mk_status mk_config_curves(const mk_config *config, mk_curve **z, mk_curve **h);

MK_API mk_status mk_curve_from_samples(size_t n, const double *p1, const double *p2,
                                       mk_curve **out);
MK_API mk_status mk_curve_from_json(const char *json_text, mk_curve **out);
MK_API mk_status mk_curve_to_json(const mk_curve *curve, char **out);
MK_API void mk_curve_free(mk_curve *curve);
MK_API size_t mk_curve_size(const mk_curve *curve);
/* Copies the periodic parts at the nodes into caller buffers of size n. */
MK_API mk_status mk_curve_samples(const mk_curve *curve, double *p1, double *p2);
MK_API mk_status mk_curve_arc_chord(const mk_curve *curve, double *out);
MK_API mk_status mk_curve_separation(const mk_curve *z, const mk_curve *h, double *out);
MK_API mk_status mk_curve_parametrization_defect(const mk_curve *curve, double *out);
MK_API mk_status mk_curve_resample_uniform(const mk_curve *curve, mk_curve **out);

/* Dominant eigenvalue of M T* for the curve pair; trace may be NULL. */
MK_API mk_status mk_spectral_radius(const mk_curve *z, const mk_curve *h,
                                    const mk_fluid_params *params, int n_probe,
                                    double *estimate, int *converged,
                                    mk_trace_callback trace, void *user);

/* Full run writing series.csv, snapshots and frames to the output directory.
 * Guard exits are reported in summary->exit_reason with status MK_OK. */
MK_API mk_status mk_run(const mk_config *config, mk_run_summary *summary);

/* Runs the verification suites; *n_failed receives the number of failures. */
MK_API mk_status mk_verify(const mk_config *config, uint64_t seed, mk_check_callback report,
                           void *user, int *n_failed);

/* Spectral radius for the configured geometry. */
MK_API mk_status mk_spectrum(const mk_config *config, int n_probe, double *estimate,
                             int *converged, mk_trace_callback trace, void *user);

#ifdef __cplusplus
}
#endif

#endif /* MUSKAT_MUSKAT_H */
