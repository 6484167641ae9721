#ifndef CUTOFFLAB_H
#define CUTOFFLAB_H

/* C interface to the cutofflab library.
 *
 * Conventions:
 *  - Every function returns a cl_status; CL_OK means success.
 *  - On failure, cl_last_error() returns a message for the calling thread.
 *  - Functions producing structured results write a NUL-terminated JSON
 *    document into *json_out; release it with cl_free().
 *  - Weights are passed as comma-separated true values, e.g. "2,1,0" or
 *    "1/2,1/2". A leading '-' on the last part selects the minus sign of a
 *    type-D label.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(CUTOFFLAB_BUILDING)
#  define CL_API __attribute__((visibility("default")))
#else
#  define CL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_UNKNOWN_FAMILY = 1,
  CL_ERR_INVALID_RANK = 2,
  CL_ERR_WEIGHT_KIND_MISMATCH = 3,
  CL_ERR_DEGENERATE_ALPHABET = 4,
  CL_ERR_TAIL_NOT_CONTROLLABLE = 5,
  CL_ERR_UNSUPPORTED_SPACE = 6,
  CL_ERR_TOO_LARGE = 7,
  CL_ERR_UNSUPPORTED_PATTERN = 8,
  CL_ERR_UNSUPPORTED_STATISTIC = 9,
  CL_ERR_FIELD_MISMATCH = 10,
  CL_ERR_HALF_PARTITION_UNSUPPORTED = 11,
  CL_ERR_INVALID_ARGUMENT = 12,
  CL_ERR_INTERNAL = 13
} cl_status;

typedef struct cl_space cl_space;
typedef struct cl_moments cl_moments;

CL_API const char* cl_status_name(cl_status status);
CL_API const char* cl_last_error(void);
CL_API void cl_free(char* ptr);
CL_API const char* cl_version(void);

/* Spaces. q <= 0 means "absent" (required only for Grassmannians). */
CL_API cl_status cl_space_create(const char* family, int n, int q, cl_space** out);
CL_API void cl_space_destroy(cl_space* space);
CL_API cl_status cl_space_describe(const cl_space* space, char** json_out);
CL_API cl_status cl_space_indexing_set(const cl_space* space, char** json_out);
CL_API cl_status cl_space_minimal_weight(const cl_space* space, char** json_out);

/* Partitions and representation data. */
CL_API cl_status cl_enumerate(const cl_space* space, int max_size, char** json_out);
CL_API cl_status cl_growth_path(const char* weight, char** json_out);
CL_API cl_status cl_dimension(const cl_space* space, const char* weight, char** rational_out);
CL_API cl_status cl_casimir_exponent(const cl_space* space, const char* weight, char** rational_out);
/* type is one of 'A','B','C','D'; alphabet given as interleaved (re, im). */
CL_API cl_status cl_schur(char type, const char* weight, const double* alphabet_re_im,
                          size_t alphabet_len, double* value_re, double* value_im);
CL_API cl_status cl_square_identity(char type, const double* alphabet_re_im,
                                    size_t alphabet_len, double* residual);

/* Heat-kernel series. */
CL_API cl_status cl_dominating_series(const cl_space* space, double t, int size_cap,
                                      char** json_out);
CL_API cl_status cl_tv_upper_bound(const cl_space* space, double t, double* value);
CL_API cl_status cl_bound_sweep(const cl_space* space, int size_cap, char** json_out);
/* t0 = NaN selects the family's cut-off time. */
CL_API cl_status cl_eta(const cl_space* space, const char* base_weight, int l, int k,
                        double t0, double* value);
/* Group density at an eigenvalue alphabet given by angles (rank many). */
CL_API cl_status cl_density(const cl_space* space, const double* angles, size_t count,
                            double t, int size_cap, double* value);
CL_API cl_status cl_density_circle(double theta, double t, int size_cap, double* value);
/* Rank-one quotient density with caller-supplied zonal values phi_0..phi_{count-1}. */
CL_API cl_status cl_density_rank_one(const cl_space* space, const double* zonal_values,
                                     size_t count, double t, double* value);

/* Moments. */
CL_API cl_status cl_moments_create(const char* algebra, int n, int k, int l, cl_moments** out);
CL_API void cl_moments_destroy(cl_moments* engine);
CL_API cl_status cl_moments_expect(const cl_moments* engine, const char* pattern, double t,
                                   double* value_re, double* value_im);
CL_API cl_status cl_moment(const char* algebra, int n, const char* pattern, double t,
                           double* value_re, double* value_im);
CL_API cl_status cl_eigentable(const char* algebra, int n, int k, int l, char** json_out);
CL_API cl_status cl_zonal_expansion(const cl_space* space, char** json_out);

/* Monte Carlo. t < 0 requests Haar sampling; steps <= 0 and threads <= 0 select
 * the defaults. For the statistic "indicator" the threshold argument is used. */
CL_API cl_status cl_simulate(const cl_space* space, double t, int steps, uint64_t seed,
                             char** json_out);
CL_API cl_status cl_estimate(const cl_space* space, const char* statistic, double t, int steps,
                             int paths, uint64_t seed, int threads, double threshold,
                             char** json_out);

/* Cut-off profile. count = 0 selects the default grid around the cut-off time. */
CL_API cl_status cl_mean_variance(const cl_space* space, double t, double* mean,
                                  double* variance);
CL_API cl_status cl_lower_bound(const cl_space* space, double t, double* value);
CL_API cl_status cl_profile(const cl_space* space, const double* times, size_t count,
                            char** json_out);

/* Acceptance suite. *all_passed receives 1 when every criterion passed. */
CL_API cl_status cl_verify_all(int threads, char** json_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
