#ifndef RKFORGE_H
#define RKFORGE_H

/* Generated by cbindgen from rkforge-ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RkfStatus {
  RKF_STATUS_OK = 0,
  RKF_STATUS_NULL_POINTER = 1,
  RKF_STATUS_INVALID_ARGUMENT = 2,
  RKF_STATUS_UNKNOWN_METHOD = 3,
  RKF_STATUS_UNKNOWN_PROBLEM = 4,
  RKF_STATUS_PARSE_ERROR = 5,
  RKF_STATUS_VALIDATION_ERROR = 6,
  RKF_STATUS_INTEGRATION_ERROR = 7,
  RKF_STATUS_BUFFER_TOO_SMALL = 8,
  RKF_STATUS_PANIC = 9,
} RkfStatus;

/**
 * Times and row-major states of an integration.
 */
typedef struct RkfTrajectory RkfTrajectory;

/**
 * Right-hand side callback: writes `f(t, y)` into `dydt`, both of length `dim`.
 */
typedef void (*RkfRhs)(void *user_data, double t, const double *y, double *dydt, size_t dim);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Number of generated methods.
 */
size_t rkf_method_count(void);

/**
 * Name of method `index`, or null when out of range. The string is static.
 */
const char *rkf_method_name(size_t index);

/**
 * Adaptive integration of a user right-hand side from `t0` to `t1`.
 *
 * # Safety
 * `method_name` must be a NUL-terminated string, `y0` must point to `dim`
 * doubles and `out` must be writable. `rhs` must not unwind.
 */
enum RkfStatus rkf_solve_adaptive(const char *method_name,
                                  RkfRhs rhs,
                                  void *user_data,
                                  size_t dim,
                                  const double *y0,
                                  double t0,
                                  double t1,
                                  double atol,
                                  double rtol,
                                  struct RkfTrajectory **out);

/**
 * Fixed-step integration of a user right-hand side with step `h`.
 *
 * # Safety
 * As for [`rkf_solve_adaptive`].
 */
enum RkfStatus rkf_solve_fixed(const char *method_name,
                               RkfRhs rhs,
                               void *user_data,
                               size_t dim,
                               const double *y0,
                               double t0,
                               double t1,
                               double h,
                               struct RkfTrajectory **out);

/**
 * Adaptive integration of a built-in problem (`vdp`, `rigid-body`,
 * `brusselator`, `arenstorf:1..3`) over its default interval.
 *
 * # Safety
 * `method_name` and `problem` must be NUL-terminated strings and `out`
 * must be writable.
 */
enum RkfStatus rkf_solve_problem(const char *method_name,
                                 const char *problem,
                                 double atol,
                                 double rtol,
                                 struct RkfTrajectory **out);

/**
 * Number of stored points; 0 for a null handle.
 *
 * # Safety
 * `traj` must be null or a live handle.
 */
size_t rkf_trajectory_len(const struct RkfTrajectory *traj);

/**
 * State dimension; 0 for a null handle.
 *
 * # Safety
 * `traj` must be null or a live handle.
 */
size_t rkf_trajectory_dimension(const struct RkfTrajectory *traj);

/**
 * `len` times, valid until the handle is freed.
 *
 * # Safety
 * `traj` must be null or a live handle.
 */
const double *rkf_trajectory_times(const struct RkfTrajectory *traj);

/**
 * `len * dimension` states in row-major order, valid until the handle is freed.
 *
 * # Safety
 * `traj` must be null or a live handle.
 */
const double *rkf_trajectory_states(const struct RkfTrajectory *traj);

/**
 * Releases a trajectory. Null is ignored.
 *
 * # Safety
 * `traj` must be null or a handle not yet freed.
 */
void rkf_trajectory_free(struct RkfTrajectory *traj);

/**
 * Copies the calling thread's last error message into `buf`, truncated
 * and NUL-terminated, and returns its full length without the NUL.
 * Pass a null `buf` to query the length.
 *
 * # Safety
 * `buf` must be null or point to `cap` writable bytes.
 */
size_t rkf_last_error_message(char *buf, size_t cap);

/**
 * Parses and validates a method file held in memory. `invalid_count`,
 * when not null, receives the number of tableaus with violations.
 *
 * # Safety
 * `json` must point to `len` readable bytes.
 */
enum RkfStatus rkf_validate_methods_json(const char *json, size_t len, size_t *invalid_count);

/**
 * Writes the 17-significant-digit literal of `numer/denom` into `buf`.
 * `written`, when not null, receives the literal's length without the NUL;
 * a buffer shorter than that plus one gives `BufferTooSmall`.
 *
 * # Safety
 * `buf` must be null or point to `cap` writable bytes.
 */
enum RkfStatus rkf_render_coefficient_literal(int64_t numer,
                                              int64_t denom,
                                              char *buf,
                                              size_t cap,
                                              size_t *written);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RKFORGE_H */
