/* Copyright 2026 the subcomp authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C surface of the subcomp shared library: subordinated-compensator
 * evaluation and Monte Carlo verification behind opaque handles and error
 * codes. All functions return a subcomp_status; on failure,
 * subcomp_last_error() describes the problem for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * subcomp_string_free(). */

#ifndef SUBCOMP_SUBCOMP_H_
#define SUBCOMP_SUBCOMP_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subcomp_status {
  SUBCOMP_OK = 0,
  SUBCOMP_ERR_INVALID_ARGUMENT = 1, /* bad parameter or config value */
  SUBCOMP_ERR_PARSE = 2,            /* malformed config text */
  SUBCOMP_ERR_IO = 3,               /* unreadable config file */
  SUBCOMP_ERR_NUMERIC = 4,          /* quadrature/sampler convergence failure */
  SUBCOMP_ERR_INTERNAL = 5
} subcomp_status;

typedef enum subcomp_format {
  SUBCOMP_FORMAT_CSV = 0,
  SUBCOMP_FORMAT_JSON = 1
} subcomp_format;

typedef struct subcomp_config subcomp_config;
typedef struct subcomp_report subcomp_report;

const char* subcomp_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* subcomp_last_error(void);

void subcomp_string_free(char* s);

/* ----- configuration (flat key-value text, dotted section keys) ----- */

subcomp_status subcomp_config_parse(const char* text, subcomp_config** out);
subcomp_status subcomp_config_load(const char* path, subcomp_config** out);
subcomp_status subcomp_config_set(subcomp_config* cfg, const char* key,
                                  const char* value);
/* Returns SUBCOMP_ERR_INVALID_ARGUMENT when the key is absent. */
subcomp_status subcomp_config_get(const subcomp_config* cfg, const char* key,
                                  char** value_out);
subcomp_status subcomp_config_serialize(const subcomp_config* cfg,
                                        char** text_out);
void subcomp_config_free(subcomp_config* cfg);

/* ----- direct numeric evaluations ----- */

/* Modified Bessel function of the second kind, order v in (0, 2), x > 0. */
subcomp_status subcomp_bessel_k(double v, double x, double* out);

/* Closed-form compensator density at pre-jump state x and jump size y for
 * skew Brownian X (skewness beta) and a tempered-stable Z (c, lambda, alpha). */
subcomp_status subcomp_skew_ts_density(double x, double y, double beta,
                                       double c, double lambda, double alpha,
                                       double* out);

/* Gamma-subordinator (alpha = 0) closed form. */
subcomp_status subcomp_skew_gamma_density(double x, double y, double beta,
                                          double c, double lambda, double* out);

/* Variance Gamma Levy density c exp(-sqrt(2 lambda)|y|)/|y|. */
subcomp_status subcomp_vg_levy_density(double y, double c, double lambda,
                                       double* out);

/* Same density as subcomp_skew_ts_density, but evaluated by adaptive
 * quadrature of the transition kernel against the Levy density. */
subcomp_status subcomp_skew_ts_density_quadrature(double x, double y,
                                                  double beta, double c,
                                                  double lambda, double alpha,
                                                  double* out);

/* ----- runs ----- */

/* Monte Carlo verification of the compensator identity for the configured
 * scenario. The report handle outlives the config. */
subcomp_status subcomp_run_verify(const subcomp_config* cfg,
                                  subcomp_report** out);

double subcomp_report_empirical_mean(const subcomp_report* r);
double subcomp_report_empirical_se(const subcomp_report* r);
double subcomp_report_predicted(const subcomp_report* r);
double subcomp_report_predicted_se(const subcomp_report* r);
double subcomp_report_z_score(const subcomp_report* r);
double subcomp_report_bias_bound(const subcomp_report* r);
double subcomp_report_runtime_seconds(const subcomp_report* r);
int subcomp_report_pass(const subcomp_report* r);
subcomp_status subcomp_report_render(const subcomp_report* r,
                                     subcomp_format format, char** text_out);
void subcomp_report_free(subcomp_report* r);

/* Density table over the configured grid; *within_tolerance_out reports the
 * table's tolerance gate. */
subcomp_status subcomp_run_density(const subcomp_config* cfg,
                                   subcomp_format format, char** text_out,
                                   int* within_tolerance_out);

/* Simulated jump records of the time-changed process, one row per jump. */
subcomp_status subcomp_run_simulate(const subcomp_config* cfg,
                                    subcomp_format format, char** text_out);

/* Analytic invariant suite with fixed seeds. perturb_bessel is a debug hook
 * (pass 0 for a real run); *all_pass_out is 1 iff every row passed. */
subcomp_status subcomp_run_selftest(double perturb_bessel, char** table_out,
                                    int* all_pass_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUBCOMP_SUBCOMP_H_ */
