//! Incomplete Appell double hypergeometric functions F1 and F2.
//!
//! Both series carry incomplete Pochhammer ratios from [`crate::ratios`]
//! in place of complete ones: F1 weights the *joint* order `m + n` with a
//! single ratio, F2 weights each summation index with its own ratio.
//! Lower and upper variants recombine to the complete double series, and
//! each function again has an independent integral representation — 1-D
//! for F1, a 2-D tensor integral for F2.
//!
//! | Item | Purpose |
//! |------|---------|
//! | [`appell_f1`], [`appell_f2`] | the incomplete functions, series/integral/auto |
//! | [`complete_f1`], [`complete_f2`] | classical double series (reduction targets) |
//! | [`AppellF1Params`], [`AppellF2Params`] | validated parameter sets |

use crate::error::{ensure_domain, Result};
use crate::kernels::beta::ln_beta;
use crate::kernels::quad::{gj_doubling, gj_doubling_2d};
use crate::kernels::sum_series;
use crate::options::{EvalOptions, EvalResult, Method, Variant};
use crate::ratios::{complete_ratio, ratio, RatioSpec};

/// Parameters of the incomplete Appell function
/// `F1(⟨a, d; y⟩, b, c; x, z)` — the series
/// `Σ Rₘ₊ₙ (b)ₘ (c)ₙ xᵐ zⁿ / (m! n!)` with `R` the incomplete ratio of
/// the pair `(a, d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppellF1Params {
    /// Ratio numerator parameter; `a > 0`.
    pub a: f64,
    /// First free numerator parameter (any finite real).
    pub b: f64,
    /// Second free numerator parameter (any finite real).
    pub c: f64,
    /// Ratio denominator parameter; `d > a`.
    pub d: f64,
    /// First argument; `|x| < 1`.
    pub x: f64,
    /// Second argument; `|z| < 1`.
    pub z: f64,
    /// Cutoff in `[0, 1)`.
    pub y: f64,
    /// Which incomplete ratio weights the series.
    pub variant: Variant,
}

impl AppellF1Params {
    /// Checks `d > a > 0`, `max(|x|, |z|) < 1`, `0 ≤ y < 1`.
    pub fn validate(&self) -> Result<()> {
        f1_domain(self.a, self.b, self.c, self.d, self.x, self.z)?;
        ensure_domain(
            (0.0..1.0).contains(&self.y),
            "appell_f1 requires 0 <= y < 1",
        )
    }
}

fn f1_domain(a: f64, b: f64, c: f64, d: f64, x: f64, z: f64) -> Result<()> {
    ensure_domain(
        [a, b, c, d, x, z].iter().all(|v| v.is_finite()),
        "appell_f1 requires finite parameters",
    )?;
    ensure_domain(a > 0.0, "appell_f1 requires a > 0")?;
    ensure_domain(d > a, "appell_f1 requires d > a")?;
    ensure_domain(
        x.abs() < 1.0 && z.abs() < 1.0,
        "appell_f1 requires |x| < 1 and |z| < 1",
    )
}

/// Parameters of the incomplete Appell function
/// `F2(a, ⟨b, d; y⟩, ⟨c, e; y⟩; x, z)` — the series
/// `Σ (a)ₘ₊ₙ Rᵐ R'ₙ xᵐ zⁿ / (m! n!)` with per-index incomplete ratios of
/// the pairs `(b, d)` and `(c, e)` at the shared cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppellF2Params {
    /// Free numerator parameter (any finite real).
    pub a: f64,
    /// First ratio numerator parameter; `b > 0`.
    pub b: f64,
    /// Second ratio numerator parameter; `c > 0`.
    pub c: f64,
    /// First ratio denominator parameter; `d > b`.
    pub d: f64,
    /// Second ratio denominator parameter; `e > c`.
    pub e: f64,
    /// First argument; `|x| + |z| < 1`.
    pub x: f64,
    /// Second argument; `|x| + |z| < 1`.
    pub z: f64,
    /// Cutoff in `[0, 1)`, shared by both ratios.
    pub y: f64,
    /// Which incomplete ratio weights the series (both indices).
    pub variant: Variant,
}

impl AppellF2Params {
    /// Checks `d > b > 0`, `e > c > 0`, `|x| + |z| < 1`, `0 ≤ y < 1`.
    pub fn validate(&self) -> Result<()> {
        f2_domain(self.a, self.b, self.c, self.d, self.e, self.x, self.z)?;
        ensure_domain(
            (0.0..1.0).contains(&self.y),
            "appell_f2 requires 0 <= y < 1",
        )
    }
}

fn f2_domain(a: f64, b: f64, c: f64, d: f64, e: f64, x: f64, z: f64) -> Result<()> {
    ensure_domain(
        [a, b, c, d, e, x, z].iter().all(|v| v.is_finite()),
        "appell_f2 requires finite parameters",
    )?;
    ensure_domain(b > 0.0, "appell_f2 requires b > 0")?;
    ensure_domain(d > b, "appell_f2 requires d > b")?;
    ensure_domain(c > 0.0, "appell_f2 requires c > 0")?;
    ensure_domain(e > c, "appell_f2 requires e > c")?;
    ensure_domain(x.abs() + z.abs() < 1.0, "appell_f2 requires |x| + |z| < 1")
}

/// Sums the F1 double series along diagonals `k = m + n`: the joint-order
/// weight `ratio_at(k)` multiplies the Cauchy-product coefficient of the
/// two single-index factor series.
fn f1_series(
    mut ratio_at: impl FnMut(usize) -> f64,
    b: f64,
    c: f64,
    x: f64,
    z: f64,
    opts: &EvalOptions,
) -> EvalResult {
    let mut u: Vec<f64> = Vec::new(); // (b)_m x^m / m!
    let mut v: Vec<f64> = Vec::new(); // (c)_n z^n / n!
    sum_series(
        |k| {
            if k == 0 {
                u.push(1.0);
                v.push(1.0);
            } else {
                let m = (k - 1) as f64;
                u.push(u[k - 1] * (b + m) * x / (m + 1.0));
                v.push(v[k - 1] * (c + m) * z / (m + 1.0));
            }
            let conv: f64 = (0..=k).map(|m| u[m] * v[k - m]).sum();
            ratio_at(k) * conv
        },
        opts,
    )
}

/// Sums the F2 double series along anti-diagonals `k = m + n`, where the
/// shared factor `(a)ₖ/k!` multiplies a binomially-weighted convolution of
/// the two per-index ratio sequences.
fn f2_series(
    mut ratio_b: impl FnMut(usize) -> f64,
    mut ratio_c: impl FnMut(usize) -> f64,
    a: f64,
    x: f64,
    z: f64,
    opts: &EvalOptions,
) -> EvalResult {
    // The Pascal row overflows f64 near k = 1030 even though each product
    // binom·|x|^m|z|^(k-m) stays below (|x|+|z|)^k; cap the diagonal count
    // so exhausting it reports converged = false instead of overflowing.
    const DIAG_CAP: usize = 900;
    let capped = EvalOptions {
        max_terms: opts.max_terms.min(DIAG_CAP),
        ..*opts
    };
    let mut aa: Vec<f64> = Vec::new(); // ratio_b(m)·x^m
    let mut bb: Vec<f64> = Vec::new(); // ratio_c(n)·z^n
    let mut binom: Vec<f64> = vec![1.0];
    let mut xp = 1.0;
    let mut zp = 1.0;
    let mut poch = 1.0; // (a)_k / k!
    sum_series(
        |k| {
            if k > 0 {
                poch *= (a + (k as f64 - 1.0)) / k as f64;
                xp *= x;
                zp *= z;
                // Update the Pascal row in place, high index first.
                binom.push(1.0);
                for m in (1..k).rev() {
                    binom[m] += binom[m - 1];
                }
            }
            aa.push(ratio_b(k) * xp);
            bb.push(ratio_c(k) * zp);
            let s: f64 = (0..=k).map(|m| binom[m] * aa[m] * bb[k - m]).sum();
            poch * s
        },
        &capped,
    )
}

fn f1_ratio_closure<'a>(
    a: f64,
    d: f64,
    y: f64,
    variant: Variant,
    opts: &'a EvalOptions,
) -> impl FnMut(usize) -> f64 + 'a {
    move |k| {
        let spec = RatioSpec {
            b: a,
            c: d,
            n: k as u32,
            y,
            variant,
        };
        // Validated parameters cannot produce a domain error; a NaN would
        // poison the sum into an honest nonsense result, not a wrong one.
        ratio(&spec, opts).map(|r| r.value).unwrap_or(f64::NAN)
    }
}

fn integral_f1(p: &AppellF1Params, opts: &EvalOptions) -> Result<EvalResult> {
    let AppellF1Params {
        a,
        b,
        c,
        d,
        x,
        z,
        y,
        variant,
    } = *p;
    match variant {
        Variant::Lower => {
            // ∫₀^y t^(a-1)(1-t)^(d-a-1)(1-xt)^(-b)(1-zt)^(-c) dt / B(a,d-a)
            // under t = y·u, with the u^(a-1) factor as GJ weight.
            let ln_front = a * y.ln() - ln_beta(a, d - a);
            let g = move |u: f64| {
                (1.0 - y * u).powf(d - a - 1.0)
                    * (1.0 - x * y * u).powf(-b)
                    * (1.0 - z * y * u).powf(-c)
            };
            Ok(gj_doubling(a - 1.0, 0.0, g, opts)?.scaled(ln_front.exp()))
        }
        Variant::Upper => {
            // Same integrand over [y, 1] under t = 1-(1-y)·u.
            let onemy = 1.0 - y;
            let ln_front = (d - a) * (-y).ln_1p() - ln_beta(a, d - a);
            let g = move |u: f64| {
                let t = 1.0 - onemy * u;
                t.powf(a - 1.0) * (1.0 - x * t).powf(-b) * (1.0 - z * t).powf(-c)
            };
            Ok(gj_doubling(d - a - 1.0, 0.0, g, opts)?.scaled(ln_front.exp()))
        }
    }
}

fn integral_f2(p: &AppellF2Params, opts: &EvalOptions) -> Result<EvalResult> {
    let AppellF2Params {
        a,
        b,
        c,
        d,
        e,
        x,
        z,
        y,
        variant,
    } = *p;
    match variant {
        Variant::Lower => {
            // Double integral over [0,y]² under t = y·u, s = y·v.
            let ln_front = (b + c) * y.ln() - ln_beta(b, d - b) - ln_beta(c, e - c);
            let g = move |u: f64, v: f64| {
                (1.0 - y * u).powf(d - b - 1.0)
                    * (1.0 - y * v).powf(e - c - 1.0)
                    * (1.0 - x * y * u - z * y * v).powf(-a)
            };
            Ok(gj_doubling_2d(b - 1.0, c - 1.0, g, opts)?.scaled(ln_front.exp()))
        }
        Variant::Upper => {
            // Over [y,1]² under t = 1-(1-y)·u, s = 1-(1-y)·v.
            let onemy = 1.0 - y;
            let ln_front = (d - b + e - c) * (-y).ln_1p() - ln_beta(b, d - b) - ln_beta(c, e - c);
            let g = move |u: f64, v: f64| {
                let t = 1.0 - onemy * u;
                let s = 1.0 - onemy * v;
                t.powf(b - 1.0) * s.powf(c - 1.0) * (1.0 - x * t - z * s).powf(-a)
            };
            Ok(gj_doubling_2d(d - b - 1.0, e - c - 1.0, g, opts)?.scaled(ln_front.exp()))
        }
    }
}

/// Evaluates the incomplete Appell F1 function.
///
/// * `Method::Series` — diagonal summation of the double series; valid on
///   the whole parameter domain (`max(|x|,|z|) < 1`).
/// * `Method::Integral` — the single Euler-type integral with three power
///   factors, via Gauss–Jacobi rules.
/// * `Method::Auto` — series while `max(|x|,|z|) ≤ 0.95`, else integral.
///
/// At `y = 0` the lower variant is exactly 0 and the upper variant equals
/// [`complete_f1`].
pub fn appell_f1(p: &AppellF1Params, method: Method, opts: &EvalOptions) -> Result<EvalResult> {
    opts.validate()?;
    p.validate()?;
    if p.y == 0.0 {
        return match p.variant {
            Variant::Lower => Ok(EvalResult::exact(0.0)),
            Variant::Upper => complete_f1(p.a, p.b, p.c, p.d, p.x, p.z, opts),
        };
    }
    let method = match method {
        Method::Auto => {
            if p.x.abs().max(p.z.abs()) <= 0.95 {
                Method::Series
            } else {
                Method::Integral
            }
        }
        m => m,
    };
    match method {
        Method::Series => Ok(f1_series(
            f1_ratio_closure(p.a, p.d, p.y, p.variant, opts),
            p.b,
            p.c,
            p.x,
            p.z,
            opts,
        )),
        Method::Integral => integral_f1(p, opts),
        Method::Auto => unreachable!("auto resolved above"),
    }
}

/// Evaluates the incomplete Appell F2 function.
///
/// * `Method::Series` — anti-diagonal summation; valid on the whole
///   parameter domain (`|x| + |z| < 1`).
/// * `Method::Integral` — the 2-D tensor Gauss–Jacobi integral.
/// * `Method::Auto` — series while `|x| + |z| ≤ 0.95`, else integral.
///
/// At `y = 0` the lower variant is exactly 0 and the upper variant equals
/// [`complete_f2`].
pub fn appell_f2(p: &AppellF2Params, method: Method, opts: &EvalOptions) -> Result<EvalResult> {
    opts.validate()?;
    p.validate()?;
    if p.y == 0.0 {
        return match p.variant {
            Variant::Lower => Ok(EvalResult::exact(0.0)),
            Variant::Upper => complete_f2(p.a, p.b, p.c, p.d, p.e, p.x, p.z, opts),
        };
    }
    let method = match method {
        Method::Auto => {
            if p.x.abs() + p.z.abs() <= 0.95 {
                Method::Series
            } else {
                Method::Integral
            }
        }
        m => m,
    };
    match method {
        Method::Series => Ok(f2_series(
            f1_ratio_closure(p.b, p.d, p.y, p.variant, opts),
            f1_ratio_closure(p.c, p.e, p.y, p.variant, opts),
            p.a,
            p.x,
            p.z,
            opts,
        )),
        Method::Integral => integral_f2(p, opts),
        Method::Auto => unreachable!("auto resolved above"),
    }
}

/// Classical Appell F1 as a double series (diagonal summation with the
/// complete Pochhammer ratio). Reduction target for the incomplete
/// variants: lower + upper recombine to this value.
pub fn complete_f1(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    x: f64,
    z: f64,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    opts.validate()?;
    f1_domain(a, b, c, d, x, z)?;
    // d > a > 0 is validated above, so the ratio cannot fail.
    Ok(f1_series(
        |k| complete_ratio(a, d, k as u32).unwrap_or(f64::NAN),
        b,
        c,
        x,
        z,
        opts,
    ))
}

/// Classical Appell F2 as a double series (anti-diagonal summation with
/// complete Pochhammer ratios).
#[allow(clippy::too_many_arguments)] // F2 genuinely has five parameters and two arguments
pub fn complete_f2(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    x: f64,
    z: f64,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    opts.validate()?;
    f2_domain(a, b, c, d, e, x, z)?;
    Ok(f2_series(
        |k| complete_ratio(b, d, k as u32).unwrap_or(f64::NAN),
        |k| complete_ratio(c, e, k as u32).unwrap_or(f64::NAN),
        a,
        x,
        z,
        opts,
    ))
}
