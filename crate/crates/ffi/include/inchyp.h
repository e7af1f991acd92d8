/* C interface to the inchyp incomplete-hypergeometric library. */

#ifndef INCHYP_H
#define INCHYP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Evaluation strategy selector.
enum InchypMethod
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  INCHYP_METHOD_AUTO = 0,
  INCHYP_METHOD_SERIES = 1,
  INCHYP_METHOD_INTEGRAL = 2,
};
#ifndef __cplusplus
typedef int32_t InchypMethod;
#endif // __cplusplus

// Status code returned by every function in this interface.
enum InchypStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  // Output is valid and met the requested tolerance.
  INCHYP_STATUS_OK = 0,
  // Arguments violate the operation's domain; output is NaN-filled.
  INCHYP_STATUS_DOMAIN_ERROR = 1,
  // Budget exhausted: output holds the best partial value with its
  // (large) error estimate and `converged == false`.
  INCHYP_STATUS_DID_NOT_CONVERGE = 2,
  // A required pointer argument was null.
  INCHYP_STATUS_NULL_ARGUMENT = 3,
  // A `variant`/`method` selector is out of range.
  INCHYP_STATUS_INVALID_ENUM = 4,
  // An internal panic was caught at the boundary.
  INCHYP_STATUS_PANIC = 5,
};
#ifndef __cplusplus
typedef int32_t InchypStatus;
#endif // __cplusplus

// Integration range selector: `[0, y]` (lower) or `[y, 1]` (upper).
enum InchypVariant
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  INCHYP_VARIANT_LOWER = 0,
  INCHYP_VARIANT_UPPER = 1,
};
#ifndef __cplusplus
typedef int32_t InchypVariant;
#endif // __cplusplus

// Opaque evaluation-options handle; create with [`inchyp_options_new`],
// release with [`inchyp_options_free`].
typedef struct InchypOptions InchypOptions;

// Evaluation outcome: value, absolute error estimate, work counter, and
// whether the tolerance was certified.
typedef struct InchypResult {
  double value;
  double abs_err_est;
  uint64_t effort;
  bool converged;
} InchypResult;

// Operand callback for [`inchyp_frac_apply`]: maps `t` (and the caller's
// context pointer) to `f(t)`.
typedef double (*InchypFunction)(double t, void *ctx);

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Allocates an options handle initialized to the library defaults.
// Never returns null. Release with [`inchyp_options_free`].
struct InchypOptions *inchyp_options_new(void);

// Frees an options handle. Null is accepted and ignored.
//
// # Safety
// `opts` must be null or a pointer obtained from [`inchyp_options_new`]
// that has not already been freed.
void inchyp_options_free(struct InchypOptions *opts);

// Sets the relative tolerance target (must be finite and > 0).
//
// # Safety
// `opts` must be a live pointer from [`inchyp_options_new`].
InchypStatus inchyp_options_set_rel_tol(struct InchypOptions *opts, double rel_tol);

// Sets the series term budget (must be ≥ 1).
//
// # Safety
// `opts` must be a live pointer from [`inchyp_options_new`].
InchypStatus inchyp_options_set_max_terms(struct InchypOptions *opts, uint64_t max_terms);

// Sets the base quadrature node count (must be ≥ 2).
//
// # Safety
// `opts` must be a live pointer from [`inchyp_options_new`].
InchypStatus inchyp_options_set_quad_nodes(struct InchypOptions *opts, uint64_t quad_nodes);

// Incomplete beta integral `B_y(x, z)` over `[0, y]`.
//
// # Safety
// `out` must be valid for writing one `double`.
InchypStatus inchyp_incomplete_beta(double y, double x, double z, double *out);

// Regularized incomplete beta `I_y(x, z) = B_y(x, z)/B(x, z)`.
//
// # Safety
// `out` must be valid for writing one `double`.
InchypStatus inchyp_regularized_incomplete_beta(double y, double x, double z, double *out);

// Incomplete Pochhammer ratio of order `n` for the parameter pair
// `(b, c)` at cutoff `y`.
//
// # Safety
// `out` must be valid for writes; `opts` null or live.
InchypStatus inchyp_ratio(int32_t variant,
                          double b,
                          double c,
                          uint32_t n,
                          double y,
                          const struct InchypOptions *opts,
                          struct InchypResult *out);

// Incomplete Gauss hypergeometric function with parameter pair `(b, c)`
// replaced by the cutoff ratio family.
//
// # Safety
// `out` must be valid for writes; `opts` null or live.
InchypStatus inchyp_hyp2f1(int32_t variant,
                           int32_t method,
                           double a,
                           double b,
                           double c,
                           double y,
                           double x,
                           const struct InchypOptions *opts,
                           struct InchypResult *out);

// Incomplete confluent hypergeometric function.
//
// # Safety
// `out` must be valid for writes; `opts` null or live.
InchypStatus inchyp_hyp1f1(int32_t variant,
                           int32_t method,
                           double a,
                           double b,
                           double y,
                           double x,
                           const struct InchypOptions *opts,
                           struct InchypResult *out);

// Incomplete Gauss function at unit argument (requires `c - a - b > 0`).
//
// # Safety
// `out` must be valid for writes.
InchypStatus inchyp_hyp2f1_at_one(int32_t variant,
                                  double a,
                                  double b,
                                  double c,
                                  double y,
                                  struct InchypResult *out);

// Incomplete Appell F1 function (joint ratio pair `(a, d)`).
//
// # Safety
// `out` must be valid for writes; `opts` null or live.
InchypStatus inchyp_appell_f1(int32_t variant,
                              int32_t method,
                              double a,
                              double b,
                              double c,
                              double d,
                              double x,
                              double z,
                              double y,
                              const struct InchypOptions *opts,
                              struct InchypResult *out);

// Incomplete Appell F2 function (ratio pairs `(b, d)` and `(c, e)`).
//
// # Safety
// `out` must be valid for writes; `opts` null or live.
InchypStatus inchyp_appell_f2(int32_t variant,
                              int32_t method,
                              double a,
                              double b,
                              double c,
                              double d,
                              double e,
                              double x,
                              double z,
                              double y,
                              const struct InchypOptions *opts,
                              struct InchypResult *out);

// Incomplete fractional operator of order `mu < 0` applied to the power
// `t^lambda` (`lambda > -1`), evaluated at `z > 0` with cutoff `y`.
//
// # Safety
// `out` must be valid for writes.
InchypStatus inchyp_frac_power(int32_t variant,
                               double lambda,
                               double mu,
                               double y,
                               double z,
                               struct InchypResult *out);

// Incomplete fractional operator of order `mu < 0` applied to a
// caller-supplied operand `f(t, ctx)` sampled on `(0, z)`.
//
// The callback must be pure for the duration of the call; `ctx` is
// passed through untouched and may be null.
//
// # Safety
// `f` must be a valid function pointer (non-null); `ctx` must satisfy
// whatever `f` requires of it; `out` must be valid for writes; `opts`
// null or live. The callback must not unwind.
InchypStatus inchyp_frac_apply(int32_t variant,
                               double mu,
                               double y,
                               double z,
                               InchypFunction f,
                               void *ctx,
                               const struct InchypOptions *opts,
                               struct InchypResult *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INCHYP_H */
