/* Copyright 2026 The idrec Authors.
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

#ifndef IDREC_H
#define IDREC_H

/* C interface to the idrec library.
 *
 * Every function returns an idrec_status. On failure the message of the
 * last error on the calling thread is available from idrec_last_error().
 * Handles are opaque; each *_create has a matching *_destroy, and destroy
 * accepts NULL. Time arguments are dimensionless gamma*t. */

#include <stddef.h>
#include <stdint.h>

#if defined(IDREC_BUILDING)
#define IDREC_API __attribute__((visibility("default")))
#else
#define IDREC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum idrec_status {
  IDREC_OK = 0,
  IDREC_ERR_DOMAIN = 1,
  IDREC_ERR_CONTRACT = 2,
  IDREC_ERR_ZERO_NORM = 3,
  IDREC_ERR_POSTSELECTION = 4,
  IDREC_ERR_NUMERICAL = 5,
  IDREC_ERR_IO = 6,
  IDREC_ERR_INVALID_ARGUMENT = 7, /* NULL pointer, bad enum, short buffer */
  IDREC_ERR_VALIDATION = 8,       /* oracle comparison exceeded threshold */
  IDREC_ERR_INTERNAL = 9
} idrec_status;

typedef enum idrec_channel { IDREC_ADC = 0, IDREC_PDC = 1, IDREC_DEP = 2 } idrec_channel;
typedef enum idrec_statistics { IDREC_FERMION = -1, IDREC_BOSON = 1 } idrec_statistics;
typedef enum idrec_regime {
  IDREC_MARKOVIAN = 0,    /* lambda = 5 gamma */
  IDREC_NONMARKOVIAN = 1, /* lambda = 0.01 gamma */
  IDREC_CUSTOM = 2
} idrec_regime;

/* Bit flags for sweep outputs. */
enum {
  IDREC_OUT_CONCURRENCE = 1,
  IDREC_OUT_DELTA_C = 2,
  IDREC_OUT_PROBABILITY = 4,
  IDREC_OUT_P_OF_T = 8,
  IDREC_OUT_ALL = 15
};

typedef struct idrec_complex {
  double re;
  double im;
} idrec_complex;

typedef struct idrec_spec idrec_spec;
typedef struct idrec_bath idrec_bath;
typedef struct idrec_sweep idrec_sweep;

typedef struct idrec_record {
  double p;
  double indistinguishability;
  double concurrence;
  double delta_c;
  double probability;
} idrec_record;

typedef struct idrec_validation {
  uint64_t seed;
  int cases;
  int failures;
  int worst_case;
  double threshold;
  double max_abs_dc;
  double max_abs_dp;
} idrec_validation;

IDREC_API const char* idrec_last_error(void);
IDREC_API const char* idrec_status_string(idrec_status s);
IDREC_API const char* idrec_version(void);

IDREC_API idrec_status idrec_parse_channel(const char* name, idrec_channel* out);
IDREC_API idrec_status idrec_parse_statistics(const char* name, idrec_statistics* out);
IDREC_API idrec_status idrec_parse_regime(const char* name, idrec_regime* out);
IDREC_API const char* idrec_channel_name(idrec_channel c);
IDREC_API const char* idrec_statistics_name(idrec_statistics s);

/* Deformation spec: psi1 = l|L> + r|R>, psi2 = lp|L> + rp|R>. */
IDREC_API idrec_status idrec_spec_create(idrec_complex l, idrec_complex r, idrec_complex lp,
                                         idrec_complex rp, idrec_statistics stats, idrec_spec** out);
/* Real positive family member with the requested indistinguishability. */
IDREC_API idrec_status idrec_spec_from_target(double target_i, idrec_statistics stats,
                                              idrec_spec** out);
/* Fermions: as from_target. Bosons: statistics dual of the fermion member. */
IDREC_API idrec_status idrec_spec_preset(double target_i, idrec_statistics stats, idrec_spec** out);
IDREC_API idrec_status idrec_spec_dual(const idrec_spec* spec, idrec_spec** out);
IDREC_API void idrec_spec_destroy(idrec_spec* spec);
IDREC_API idrec_status idrec_spec_indistinguishability(const idrec_spec* spec, double* out);
/* out[4] = {l, r, lp, rp} */
IDREC_API idrec_status idrec_spec_coefficients(const idrec_spec* spec, idrec_complex out[4],
                                               idrec_statistics* stats);

IDREC_API idrec_status idrec_bath_create(double gamma, double lambda, idrec_bath** out);
IDREC_API idrec_status idrec_bath_preset(idrec_regime regime, double gamma, idrec_bath** out);
IDREC_API void idrec_bath_destroy(idrec_bath* bath);
IDREC_API idrec_status idrec_p_analytic(const idrec_bath* bath, double gamma_t, double* out);
IDREC_API idrec_status idrec_p_numeric(const idrec_bath* bath, double gamma_t, double* out);

IDREC_API idrec_status idrec_concurrence(idrec_channel c, const idrec_spec* spec, double p,
                                         double* out);
IDREC_API idrec_status idrec_delta_c(idrec_channel c, const idrec_spec* spec, double p, double* out);
IDREC_API idrec_status idrec_success_probability(idrec_channel c, const idrec_spec* spec, double p,
                                                 double* out);
IDREC_API idrec_status idrec_c_infinity(idrec_channel c, const idrec_spec* spec, double* out);

/* Full state-level pipeline (no-label algebra) and the labeled oracle at p.
 * rho_lr may be NULL; otherwise 16 entries, row-major, basis uu,ud,du,dd. */
IDREC_API idrec_status idrec_pipeline(idrec_channel c, const idrec_spec* spec, double p,
                                      double* concurrence, double* probability,
                                      idrec_complex* rho_lr);
IDREC_API idrec_status idrec_oracle(idrec_channel c, const idrec_spec* spec, double p,
                                    double* concurrence, double* probability);

IDREC_API idrec_status idrec_eval(idrec_channel c, const idrec_bath* bath, double gamma_t,
                                  const idrec_spec* spec, idrec_record* out);
IDREC_API idrec_status idrec_eval_at_p(idrec_channel c, double p, const idrec_spec* spec,
                                       idrec_record* out);
/* Writes a NUL-terminated one-line record; *needed gets the required size. */
IDREC_API idrec_status idrec_record_format(const idrec_record* r, char* buf, size_t len,
                                           size_t* needed);

IDREC_API idrec_status idrec_sweep_create(idrec_sweep** out);
IDREC_API void idrec_sweep_destroy(idrec_sweep* sweep);
IDREC_API idrec_status idrec_sweep_set_channel(idrec_sweep* s, idrec_channel c);
IDREC_API idrec_status idrec_sweep_set_bath(idrec_sweep* s, idrec_regime regime, double gamma,
                                            double lambda);
IDREC_API idrec_status idrec_sweep_set_statistics(idrec_sweep* s, idrec_statistics stats);
IDREC_API idrec_status idrec_sweep_set_i_values(idrec_sweep* s, const double* values, size_t n);
IDREC_API idrec_status idrec_sweep_set_time_grid(idrec_sweep* s, double t_max, int n_points);
IDREC_API idrec_status idrec_sweep_set_outputs(idrec_sweep* s, unsigned flags);
IDREC_API idrec_status idrec_sweep_set_threads(idrec_sweep* s, unsigned threads);
/* Preset for figure id ("fig2".."fig9") in the given regime. */
IDREC_API idrec_status idrec_sweep_from_figure(const char* id, idrec_regime regime,
                                               idrec_sweep** out);
IDREC_API idrec_status idrec_sweep_write_csv(const idrec_sweep* s, const char* path);
IDREC_API idrec_status idrec_sweep_write_gnuplot(const idrec_sweep* s, const char* csv_path,
                                                 const char* title, const char* script_path);
IDREC_API size_t idrec_figure_count(void);
IDREC_API const char* idrec_figure_id(size_t index);
IDREC_API const char* idrec_figure_title(size_t index);

/* Returns IDREC_ERR_VALIDATION when any case exceeds the threshold; *out is
 * filled either way. */
IDREC_API idrec_status idrec_validate(uint64_t seed, int cases, double threshold,
                                      idrec_validation* out);
IDREC_API idrec_status idrec_validation_format(const idrec_validation* v, char* buf, size_t len,
                                               size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* IDREC_H */
