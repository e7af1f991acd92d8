//! C ABI over the incomplete-hypergeometric library.
//!
//! Conventions:
//! - Every evaluation writes its output through a caller-supplied pointer
//!   and returns an [`InchypStatus`]; `INCHYP_STATUS_OK` means the output
//!   is valid *and* converged. On any other status the output is still
//!   written (NaN-filled on hard failure) so it is never uninitialized.
//! - `variant` and `method` parameters are plain `int32_t` taking the
//!   `InchypVariant` / `InchypMethod` constants; out-of-range values
//!   yield `INCHYP_STATUS_INVALID_ENUM` rather than undefined behavior.
//! - Options handles from [`inchyp_options_new`] are opaque; a null
//!   options pointer selects the defaults everywhere one is accepted.
//! - No global state; all functions are thread-safe. Panics are caught
//!   at the boundary and reported as `INCHYP_STATUS_PANIC`.

use std::ffi::c_void;
use std::panic::{catch_unwind, AssertUnwindSafe};

use inchyp::appell::{appell_f1, appell_f2, AppellF1Params, AppellF2Params};
use inchyp::fracderiv::{ifrac, ifrac_power, FracOpSpec};
use inchyp::hyp::{ihyp_1f1, ihyp_2f1, ihyp_2f1_at_one, Hyp1F1Params, Hyp2F1Params};
use inchyp::kernels::{incomplete_beta, regularized_incomplete_beta};
use inchyp::ratios::{ratio, RatioSpec};
use inchyp::{Error, EvalOptions, EvalResult, Method, Variant};

/// Status code returned by every function in this interface.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InchypStatus {
    /// Output is valid and met the requested tolerance.
    Ok = 0,
    /// Arguments violate the operation's domain; output is NaN-filled.
    DomainError = 1,
    /// Budget exhausted: output holds the best partial value with its
    /// (large) error estimate and `converged == false`.
    DidNotConverge = 2,
    /// A required pointer argument was null.
    NullArgument = 3,
    /// A `variant`/`method` selector is out of range.
    InvalidEnum = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

/// Integration range selector: `[0, y]` (lower) or `[y, 1]` (upper).
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InchypVariant {
    Lower = 0,
    Upper = 1,
}

/// Evaluation strategy selector.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InchypMethod {
    Auto = 0,
    Series = 1,
    Integral = 2,
}

/// Evaluation outcome: value, absolute error estimate, work counter, and
/// whether the tolerance was certified.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct InchypResult {
    pub value: f64,
    pub abs_err_est: f64,
    pub effort: u64,
    pub converged: bool,
}

/// Opaque evaluation-options handle; create with [`inchyp_options_new`],
/// release with [`inchyp_options_free`].
pub struct InchypOptions(EvalOptions);

/// Operand callback for [`inchyp_frac_apply`]: maps `t` (and the caller's
/// context pointer) to `f(t)`.
pub type InchypFunction = Option<unsafe extern "C" fn(t: f64, ctx: *mut c_void) -> f64>;

fn variant_from(v: i32) -> Option<Variant> {
    match v {
        0 => Some(Variant::Lower),
        1 => Some(Variant::Upper),
        _ => None,
    }
}

fn method_from(m: i32) -> Option<Method> {
    match m {
        0 => Some(Method::Auto),
        1 => Some(Method::Series),
        2 => Some(Method::Integral),
        _ => None,
    }
}

/// Reads options behind a possibly-null handle.
///
/// # Safety
/// `opts` must be null or a live pointer from [`inchyp_options_new`].
unsafe fn opts_from(opts: *const InchypOptions) -> EvalOptions {
    if opts.is_null() {
        EvalOptions::default()
    } else {
        (*opts).0
    }
}

/// Reports an out-of-range selector value. Like every other failure path
/// the output is NaN-filled first, so callers never read stale data.
///
/// # Safety
/// `out` must be null or valid for writes.
unsafe fn invalid_enum(out: *mut InchypResult) -> InchypStatus {
    if !out.is_null() {
        *out = InchypResult {
            value: f64::NAN,
            abs_err_est: f64::NAN,
            effort: 0,
            converged: false,
        };
    }
    InchypStatus::InvalidEnum
}

/// Runs `body` with panic containment and writes its outcome to `out`.
///
/// # Safety
/// `out` must be valid for writes (checked for null here).
unsafe fn run_into(
    out: *mut InchypResult,
    body: impl FnOnce() -> Result<EvalResult, Error>,
) -> InchypStatus {
    if out.is_null() {
        return InchypStatus::NullArgument;
    }
    let nan_result = InchypResult {
        value: f64::NAN,
        abs_err_est: f64::NAN,
        effort: 0,
        converged: false,
    };
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(r)) => {
            *out = InchypResult {
                value: r.value,
                abs_err_est: r.abs_err_est,
                effort: r.effort,
                converged: r.converged,
            };
            if r.converged {
                InchypStatus::Ok
            } else {
                InchypStatus::DidNotConverge
            }
        }
        Ok(Err(Error::Domain(_))) => {
            *out = nan_result;
            InchypStatus::DomainError
        }
        Ok(Err(Error::NoConvergence(_))) => {
            *out = nan_result;
            InchypStatus::DidNotConverge
        }
        Err(_) => {
            *out = nan_result;
            InchypStatus::Panic
        }
    }
}

/// Allocates an options handle initialized to the library defaults.
/// Never returns null. Release with [`inchyp_options_free`].
#[no_mangle]
pub extern "C" fn inchyp_options_new() -> *mut InchypOptions {
    Box::into_raw(Box::new(InchypOptions(EvalOptions::default())))
}

/// Frees an options handle. Null is accepted and ignored.
///
/// # Safety
/// `opts` must be null or a pointer obtained from [`inchyp_options_new`]
/// that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn inchyp_options_free(opts: *mut InchypOptions) {
    if !opts.is_null() {
        drop(Box::from_raw(opts));
    }
}

/// Sets the relative tolerance target (must be finite and > 0).
///
/// # Safety
/// `opts` must be a live pointer from [`inchyp_options_new`].
#[no_mangle]
pub unsafe extern "C" fn inchyp_options_set_rel_tol(
    opts: *mut InchypOptions,
    rel_tol: f64,
) -> InchypStatus {
    if opts.is_null() {
        return InchypStatus::NullArgument;
    }
    if !(rel_tol > 0.0 && rel_tol.is_finite()) {
        return InchypStatus::DomainError;
    }
    (*opts).0.rel_tol = rel_tol;
    InchypStatus::Ok
}

/// Sets the series term budget (must be ≥ 1).
///
/// # Safety
/// `opts` must be a live pointer from [`inchyp_options_new`].
#[no_mangle]
pub unsafe extern "C" fn inchyp_options_set_max_terms(
    opts: *mut InchypOptions,
    max_terms: u64,
) -> InchypStatus {
    if opts.is_null() {
        return InchypStatus::NullArgument;
    }
    if max_terms == 0 || max_terms > usize::MAX as u64 {
        return InchypStatus::DomainError;
    }
    (*opts).0.max_terms = max_terms as usize;
    InchypStatus::Ok
}

/// Sets the base quadrature node count (must be ≥ 2).
///
/// # Safety
/// `opts` must be a live pointer from [`inchyp_options_new`].
#[no_mangle]
pub unsafe extern "C" fn inchyp_options_set_quad_nodes(
    opts: *mut InchypOptions,
    quad_nodes: u64,
) -> InchypStatus {
    if opts.is_null() {
        return InchypStatus::NullArgument;
    }
    if quad_nodes < 2 || quad_nodes > usize::MAX as u64 {
        return InchypStatus::DomainError;
    }
    (*opts).0.quad_nodes = quad_nodes as usize;
    InchypStatus::Ok
}

/// Incomplete beta integral `B_y(x, z)` over `[0, y]`.
///
/// # Safety
/// `out` must be valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn inchyp_incomplete_beta(
    y: f64,
    x: f64,
    z: f64,
    out: *mut f64,
) -> InchypStatus {
    if out.is_null() {
        return InchypStatus::NullArgument;
    }
    let mut holder = InchypResult {
        value: f64::NAN,
        abs_err_est: f64::NAN,
        effort: 0,
        converged: false,
    };
    let status = run_into(&mut holder, || {
        incomplete_beta(y, x, z).map(EvalResult::exact)
    });
    *out = holder.value;
    status
}

/// Regularized incomplete beta `I_y(x, z) = B_y(x, z)/B(x, z)`.
///
/// # Safety
/// `out` must be valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn inchyp_regularized_incomplete_beta(
    y: f64,
    x: f64,
    z: f64,
    out: *mut f64,
) -> InchypStatus {
    if out.is_null() {
        return InchypStatus::NullArgument;
    }
    let mut holder = InchypResult {
        value: f64::NAN,
        abs_err_est: f64::NAN,
        effort: 0,
        converged: false,
    };
    let status = run_into(&mut holder, || {
        regularized_incomplete_beta(y, x, z).map(EvalResult::exact)
    });
    *out = holder.value;
    status
}

/// Incomplete Pochhammer ratio of order `n` for the parameter pair
/// `(b, c)` at cutoff `y`.
///
/// # Safety
/// `out` must be valid for writes; `opts` null or live.
#[no_mangle]
pub unsafe extern "C" fn inchyp_ratio(
    variant: i32,
    b: f64,
    c: f64,
    n: u32,
    y: f64,
    opts: *const InchypOptions,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    let o = opts_from(opts);
    run_into(out, || {
        ratio(
            &RatioSpec {
                b,
                c,
                n,
                y,
                variant,
            },
            &o,
        )
    })
}

/// Incomplete Gauss hypergeometric function with parameter pair `(b, c)`
/// replaced by the cutoff ratio family.
///
/// # Safety
/// `out` must be valid for writes; `opts` null or live.
#[no_mangle]
#[allow(clippy::too_many_arguments)] // mirrors the mathematical signature
pub unsafe extern "C" fn inchyp_hyp2f1(
    variant: i32,
    method: i32,
    a: f64,
    b: f64,
    c: f64,
    y: f64,
    x: f64,
    opts: *const InchypOptions,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    let Some(method) = method_from(method) else {
        return invalid_enum(out);
    };
    let o = opts_from(opts);
    run_into(out, || {
        ihyp_2f1(
            &Hyp2F1Params {
                a,
                b,
                c,
                y,
                x,
                variant,
            },
            method,
            &o,
        )
    })
}

/// Incomplete confluent hypergeometric function.
///
/// # Safety
/// `out` must be valid for writes; `opts` null or live.
#[no_mangle]
#[allow(clippy::too_many_arguments)] // mirrors the mathematical signature
pub unsafe extern "C" fn inchyp_hyp1f1(
    variant: i32,
    method: i32,
    a: f64,
    b: f64,
    y: f64,
    x: f64,
    opts: *const InchypOptions,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    let Some(method) = method_from(method) else {
        return invalid_enum(out);
    };
    let o = opts_from(opts);
    run_into(out, || {
        ihyp_1f1(
            &Hyp1F1Params {
                a,
                b,
                y,
                x,
                variant,
            },
            method,
            &o,
        )
    })
}

/// Incomplete Gauss function at unit argument (requires `c - a - b > 0`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn inchyp_hyp2f1_at_one(
    variant: i32,
    a: f64,
    b: f64,
    c: f64,
    y: f64,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    run_into(out, || ihyp_2f1_at_one(variant, a, b, c, y))
}

/// Incomplete Appell F1 function (joint ratio pair `(a, d)`).
///
/// # Safety
/// `out` must be valid for writes; `opts` null or live.
#[no_mangle]
#[allow(clippy::too_many_arguments)] // mirrors the mathematical signature
pub unsafe extern "C" fn inchyp_appell_f1(
    variant: i32,
    method: i32,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    x: f64,
    z: f64,
    y: f64,
    opts: *const InchypOptions,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    let Some(method) = method_from(method) else {
        return invalid_enum(out);
    };
    let o = opts_from(opts);
    run_into(out, || {
        appell_f1(
            &AppellF1Params {
                a,
                b,
                c,
                d,
                x,
                z,
                y,
                variant,
            },
            method,
            &o,
        )
    })
}

/// Incomplete Appell F2 function (ratio pairs `(b, d)` and `(c, e)`).
///
/// # Safety
/// `out` must be valid for writes; `opts` null or live.
#[no_mangle]
#[allow(clippy::too_many_arguments)] // mirrors the mathematical signature
pub unsafe extern "C" fn inchyp_appell_f2(
    variant: i32,
    method: i32,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    x: f64,
    z: f64,
    y: f64,
    opts: *const InchypOptions,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    let Some(method) = method_from(method) else {
        return invalid_enum(out);
    };
    let o = opts_from(opts);
    run_into(out, || {
        appell_f2(
            &AppellF2Params {
                a,
                b,
                c,
                d,
                e,
                x,
                z,
                y,
                variant,
            },
            method,
            &o,
        )
    })
}

/// Incomplete fractional operator of order `mu < 0` applied to the power
/// `t^lambda` (`lambda > -1`), evaluated at `z > 0` with cutoff `y`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn inchyp_frac_power(
    variant: i32,
    lambda: f64,
    mu: f64,
    y: f64,
    z: f64,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    run_into(out, || {
        ifrac_power(lambda, &FracOpSpec { mu, y, z, variant })
    })
}

/// Incomplete fractional operator of order `mu < 0` applied to a
/// caller-supplied operand `f(t, ctx)` sampled on `(0, z)`.
///
/// The callback must be pure for the duration of the call; `ctx` is
/// passed through untouched and may be null.
///
/// # Safety
/// `f` must be a valid function pointer (non-null); `ctx` must satisfy
/// whatever `f` requires of it; `out` must be valid for writes; `opts`
/// null or live. The callback must not unwind.
#[no_mangle]
#[allow(clippy::too_many_arguments)] // mirrors the mathematical signature
pub unsafe extern "C" fn inchyp_frac_apply(
    variant: i32,
    mu: f64,
    y: f64,
    z: f64,
    f: InchypFunction,
    ctx: *mut c_void,
    opts: *const InchypOptions,
    out: *mut InchypResult,
) -> InchypStatus {
    let Some(variant) = variant_from(variant) else {
        return invalid_enum(out);
    };
    let Some(f) = f else {
        return InchypStatus::NullArgument;
    };
    let o = opts_from(opts);
    run_into(out, || {
        ifrac(|t| f(t, ctx), &FracOpSpec { mu, y, z, variant }, &o)
    })
}
