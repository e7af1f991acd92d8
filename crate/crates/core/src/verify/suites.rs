//! Suite bodies: one function per registered suite.
//!
//! Each body samples its grid sequentially from the shared [`Grid`]
//! (so the grid is a pure function of the seed), then evaluates the
//! per-case residuals in parallel and returns them in case order.
//! Residuals are absolute values; relative residuals divide by a
//! denominator the grid keeps bounded away from zero.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Grid, SuiteData};
use crate::appell::{
    appell_f1, appell_f2, complete_f1, complete_f2, AppellF1Params, AppellF2Params,
};
use crate::error::Result;
use crate::fracderiv::{
    classical_rl, closed_form_residual, genrel_bilinear_residual, genrel_linear_residual, ifrac,
    ifrac_power, ClosedFormKind, ClosedFormParams, FracOpSpec, GenRelKind, GenRelSpec,
};
use crate::hyp::{
    derivative_shift_1f1, derivative_shift_2f1, difference_relation_residual,
    difference_relation_residual_repaired, ihyp_1f1, ihyp_2f1, ihyp_2f1_at_one, transform_1f1,
    transform_2f1, transform_map_2f1, y_moment_residual, Hyp1F1Params, Hyp2F1Params, MomentKind,
    TransformKind,
};
use crate::kernels::{beta, complete_1f1, complete_2f1, incomplete_beta};
use crate::options::{EvalOptions, Method, Variant};
use crate::ratios::{
    complete_ratio, decomposition_residual, derivative_identity_residual, ratio, ratio_via_2f1,
    RatioSpec,
};

/// Evaluates `f` over the cases in parallel, collecting in case order.
fn par_residuals<C: Sync>(
    cases: &[C],
    f: impl Fn(&C) -> Result<f64> + Send + Sync,
) -> Result<Vec<f64>> {
    cases.par_iter().map(f).collect()
}

fn no_extra(residuals: Vec<f64>) -> SuiteData {
    (residuals, BTreeMap::new())
}

fn pick_variant(g: &mut Grid) -> Variant {
    if g.flip() {
        Variant::Upper
    } else {
        Variant::Lower
    }
}

/// `B_y(x,z) + B_{1-y}(z,x) = B(x,z)`, relative to `B(x,z)`.
pub(super) fn beta_decomposition(g: &mut Grid, _opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = (0..500)
        .map(|_| {
            (
                g.uniform(0.2, 8.0),
                g.uniform(0.2, 8.0),
                g.uniform(0.02, 0.98),
            )
        })
        .collect();
    let res = par_residuals(&cases, |&(x, z, y)| {
        let full = beta(x, z)?;
        let lower = incomplete_beta(y, x, z)?;
        let upper = incomplete_beta(1.0 - y, z, x)?;
        Ok(((lower + upper - full) / full).abs())
    })?;
    Ok(no_extra(res))
}

fn ratio_grid(g: &mut Grid, n_cases: usize) -> Vec<(f64, f64, u32, f64)> {
    (0..n_cases)
        .map(|_| {
            let b = g.uniform(0.3, 5.0);
            let c = b + g.uniform(0.3, 5.0);
            (b, c, g.int(0, 20), g.uniform(0.05, 0.95))
        })
        .collect()
}

/// Lower + upper Pochhammer ratio = `(b)_n/(c)_n`, relative.
pub(super) fn ratio_decomposition(g: &mut Grid, _opts: &EvalOptions) -> Result<SuiteData> {
    let cases = ratio_grid(g, 100);
    let res = par_residuals(&cases, |&(b, c, n, y)| {
        Ok((decomposition_residual(b, c, n, y)? / complete_ratio(b, c, n)?).abs())
    })?;
    Ok(no_extra(res))
}

/// Direct (incomplete-beta) ratio path vs. its Gauss-function closed form.
pub(super) fn ratio_dual_path(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = ratio_grid(g, 100)
        .into_iter()
        .zip(std::iter::repeat_with(|| pick_variant(g)).take(100))
        .collect();
    let res = par_residuals(&cases, |&((b, c, n, y), variant)| {
        let spec = RatioSpec {
            b,
            c,
            n,
            y,
            variant,
        };
        let direct = ratio(&spec, opts)?.value;
        let closed = ratio_via_2f1(&spec, opts)?.value;
        Ok(((direct - closed) / direct).abs())
    })?;
    Ok(no_extra(res))
}

fn gauss_grid(g: &mut Grid, n_cases: usize) -> Vec<(f64, f64, f64, f64, f64)> {
    (0..n_cases)
        .map(|_| {
            let a = g.uniform(0.2, 3.0);
            let b = g.uniform(0.3, 4.0);
            let c = b + g.uniform(0.3, 4.0);
            (a, b, c, g.uniform(0.05, 0.95), g.uniform(-0.9, 0.9))
        })
        .collect()
}

/// Lower + upper incomplete Gauss function = classical ₂F₁, relative.
pub(super) fn decomposition_2f1(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases = gauss_grid(g, 200);
    let res = par_residuals(&cases, |&(a, b, c, y, x)| {
        let lower = Hyp2F1Params {
            a,
            b,
            c,
            y,
            x,
            variant: Variant::Lower,
        };
        let upper = Hyp2F1Params {
            variant: Variant::Upper,
            ..lower
        };
        let lo = ihyp_2f1(&lower, Method::Auto, opts)?.value;
        let up = ihyp_2f1(&upper, Method::Auto, opts)?.value;
        let full = complete_2f1(a, b, c, x, opts)?.value;
        Ok(((lo + up - full) / full).abs())
    })?;
    Ok(no_extra(res))
}

fn confluent_grid(g: &mut Grid, n_cases: usize) -> Vec<(f64, f64, f64, f64)> {
    (0..n_cases)
        .map(|_| {
            let a = g.uniform(0.3, 4.0);
            let b = a + g.uniform(0.3, 4.0);
            (a, b, g.uniform(0.05, 0.95), g.uniform(-5.0, 5.0))
        })
        .collect()
}

/// Lower + upper incomplete Kummer function = classical ₁F₁, relative.
pub(super) fn decomposition_1f1(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases = confluent_grid(g, 200);
    let res = par_residuals(&cases, |&(a, b, y, x)| {
        let lower = Hyp1F1Params {
            a,
            b,
            y,
            x,
            variant: Variant::Lower,
        };
        let upper = Hyp1F1Params {
            variant: Variant::Upper,
            ..lower
        };
        let lo = ihyp_1f1(&lower, Method::Auto, opts)?.value;
        let up = ihyp_1f1(&upper, Method::Auto, opts)?.value;
        let full = complete_1f1(a, b, x, opts)?.value;
        Ok(((lo + up - full) / full).abs())
    })?;
    Ok(no_extra(res))
}

/// Damped series vs. Euler integral for the incomplete Gauss function.
pub(super) fn dual_path_2f1(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = gauss_grid(g, 100)
        .into_iter()
        .zip(std::iter::repeat_with(|| pick_variant(g)).take(100))
        .collect();
    let res = par_residuals(&cases, |&((a, b, c, y, x), variant)| {
        let p = Hyp2F1Params {
            a,
            b,
            c,
            y,
            x,
            variant,
        };
        let s = ihyp_2f1(&p, Method::Series, opts)?.value;
        let i = ihyp_2f1(&p, Method::Integral, opts)?.value;
        Ok(((s - i) / s).abs())
    })?;
    Ok(no_extra(res))
}

/// Damped series vs. Euler integral for the incomplete Kummer function.
pub(super) fn dual_path_1f1(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = confluent_grid(g, 100)
        .into_iter()
        .zip(std::iter::repeat_with(|| pick_variant(g)).take(100))
        .collect();
    let res = par_residuals(&cases, |&((a, b, y, x), variant)| {
        let p = Hyp1F1Params {
            a,
            b,
            y,
            x,
            variant,
        };
        let s = ihyp_1f1(&p, Method::Series, opts)?.value;
        let i = ihyp_1f1(&p, Method::Integral, opts)?.value;
        Ok(((s - i) / s).abs())
    })?;
    Ok(no_extra(res))
}

/// Elementary closed forms: the unit-parameter lower Gauss function is
/// `-ln(1-xy)/x` and the unit-parameter lower Kummer function is
/// `(e^{xy}-1)/x`.
pub(super) fn closed_form_spot(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let gauss: Vec<_> = (0..10)
        .map(|_| (g.uniform(-0.9, 0.9), g.uniform(0.05, 0.95)))
        .collect();
    let kummer: Vec<_> = (0..10)
        .map(|_| (g.uniform(-3.0, 3.0), g.uniform(0.05, 0.95)))
        .collect();
    let mut res = par_residuals(&gauss, |&(x, y)| {
        let p = Hyp2F1Params {
            a: 1.0,
            b: 1.0,
            c: 2.0,
            y,
            x,
            variant: Variant::Lower,
        };
        let got = ihyp_2f1(&p, Method::Auto, opts)?.value;
        let want = -(-x * y).ln_1p() / x;
        Ok(((got - want) / want).abs())
    })?;
    res.extend(par_residuals(&kummer, |&(x, y)| {
        let p = Hyp1F1Params {
            a: 1.0,
            b: 2.0,
            y,
            x,
            variant: Variant::Lower,
        };
        let got = ihyp_1f1(&p, Method::Auto, opts)?.value;
        let want = (x * y).exp_m1() / x;
        Ok(((got - want) / want).abs())
    })?);
    Ok(no_extra(res))
}

/// Unit-argument closed forms vs. direct quadrature of the Euler
/// integral at `x = 1` (convergent when `c - a - b > 0`).
///
/// The lower side is compared head-on. The *upper* integral at `x = 1`
/// has an endpoint singularity the quadrature weight does not absorb, so
/// the upper closed form is instead compared against
/// `classical value - lower quadrature` — the same decomposition the
/// rest of the crate is built on.
pub(super) fn gauss_value(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = (0..50)
        .map(|_| {
            let a = g.uniform(0.2, 1.5);
            let b = g.uniform(0.3, 2.0);
            let c = a + b + g.uniform(0.3, 2.5);
            (a, b, c, g.uniform(0.05, 0.95))
        })
        .collect();
    let mut res = par_residuals(&cases, |&(a, b, c, y)| {
        let closed = ihyp_2f1_at_one(Variant::Lower, a, b, c, y)?.value;
        let p = Hyp2F1Params {
            a,
            b,
            c,
            y,
            x: 1.0,
            variant: Variant::Lower,
        };
        let quad = ihyp_2f1(&p, Method::Integral, opts)?.value;
        Ok(((closed - quad) / closed).abs())
    })?;
    res.extend(par_residuals(&cases, |&(a, b, c, y)| {
        let closed = ihyp_2f1_at_one(Variant::Upper, a, b, c, y)?.value;
        let p = Hyp2F1Params {
            a,
            b,
            c,
            y,
            x: 1.0,
            variant: Variant::Lower,
        };
        let quad_lower = ihyp_2f1(&p, Method::Integral, opts)?.value;
        let full = complete_2f1(a, b, c, 1.0, opts)?.value;
        Ok(((closed - (full - quad_lower)) / closed).abs())
    })?);
    Ok(no_extra(res))
}

/// Argument transformations, both sides evaluated independently.
///
/// The left side is forced onto the integral path so the check cannot
/// collapse into the transformation evaluating itself. Each Pfaff case
/// also exercises the round trip: mapping lower→upper→lower must restore
/// the parameters and have unit combined prefactor.
pub(super) fn transforms(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let pfaff: Vec<_> = (0..26)
        .map(|_| {
            let a = g.uniform(0.2, 2.5);
            let b = g.uniform(0.3, 3.0);
            let c = b + g.uniform(0.3, 3.0);
            let kind = if g.flip() {
                TransformKind::PfUpper
            } else {
                TransformKind::PfLower
            };
            (a, b, c, g.uniform(0.05, 0.95), g.uniform(-0.9, 0.9), kind)
        })
        .collect();
    let kummer: Vec<_> = (0..24)
        .map(|_| {
            let a = g.uniform(0.3, 2.5);
            let b = a + g.uniform(0.3, 3.0);
            let kind = if g.flip() {
                TransformKind::KummerUpper
            } else {
                TransformKind::KummerLower
            };
            (a, b, g.uniform(0.05, 0.95), g.uniform(-3.0, 3.0), kind)
        })
        .collect();
    let mut res = par_residuals(&pfaff, |&(a, b, c, y, x, kind)| {
        let variant = match kind {
            TransformKind::PfLower => Variant::Lower,
            _ => Variant::Upper,
        };
        let p = Hyp2F1Params {
            a,
            b,
            c,
            y,
            x,
            variant,
        };
        let lhs = ihyp_2f1(&p, Method::Integral, opts)?.value;
        let rhs = transform_2f1(kind, &p, opts)?.value;
        let mut r: f64 = ((lhs - rhs) / lhs).abs();
        // Round trip: applying the mirror transformation to the mapped
        // parameters must undo the map exactly.
        let (f1, q) = transform_map_2f1(kind, &p)?;
        let back = match kind {
            TransformKind::PfLower => TransformKind::PfUpper,
            _ => TransformKind::PfLower,
        };
        let (f2, q2) = transform_map_2f1(back, &q)?;
        r = r.max((f1 * f2 - 1.0).abs());
        r = r.max((q2.a - p.a).abs());
        r = r.max((q2.b - p.b).abs());
        r = r.max((q2.c - p.c).abs());
        r = r.max((q2.y - p.y).abs());
        r = r.max((q2.x - p.x).abs());
        Ok(r)
    })?;
    res.extend(par_residuals(&kummer, |&(a, b, y, x, kind)| {
        let variant = match kind {
            TransformKind::KummerLower => Variant::Lower,
            _ => Variant::Upper,
        };
        let p = Hyp1F1Params {
            a,
            b,
            y,
            x,
            variant,
        };
        let lhs = ihyp_1f1(&p, Method::Integral, opts)?.value;
        let rhs = transform_1f1(kind, &p, opts)?.value;
        Ok(((lhs - rhs) / lhs).abs())
    })?);
    Ok(no_extra(res))
}

/// Finite-difference check of the y-derivative representations of the
/// Pochhammer ratios at `n = 1, 2`.
pub(super) fn derivative_ratio(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = (0..20)
        .map(|_| {
            let n = g.int(1, 2);
            let b = g.uniform(0.5, 2.5);
            // The upper form needs c - b - n > 0; build that in.
            let c = b + n as f64 + g.uniform(0.5, 2.5);
            (b, c, n, g.uniform(0.15, 0.85), pick_variant(g))
        })
        .collect();
    let res = par_residuals(&cases, |&(b, c, n, y, variant)| {
        let spec = RatioSpec {
            b,
            c,
            n,
            y,
            variant,
        };
        Ok(derivative_identity_residual(&spec, 1e-3, opts)?.abs())
    })?;
    Ok(no_extra(res))
}

/// Order-2 central first derivative with one Richardson step (O(h⁴)
/// truncation), so the shift check clears its tolerance with margin even
/// where the function's higher derivatives are large.
fn richardson_dx(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let d = |s: f64| -> Result<f64> { Ok((f(x + s)? - f(x - s)?) / (2.0 * s)) };
    Ok((4.0 * d(h / 2.0)? - d(h)?) / 3.0)
}

/// Central-difference check of the x-derivative parameter shifts, plus
/// the exact two-step composition at order 2.
pub(super) fn derivative_shift(g: &mut Grid, _opts: &EvalOptions) -> Result<SuiteData> {
    // Differencing divides the evaluation noise by h, so the operands
    // are evaluated to a tighter tolerance than the default.
    let tight = EvalOptions {
        rel_tol: 1e-14,
        ..EvalOptions::default()
    };
    let gauss: Vec<_> = (0..15)
        .map(|_| {
            let a = g.uniform(0.3, 2.0);
            let b = g.uniform(0.3, 2.0);
            let c = b + g.uniform(0.3, 2.0);
            let x = g.uniform(0.1, 0.6) * if g.flip() { 1.0 } else { -1.0 };
            (a, b, c, g.uniform(0.05, 0.95), x, pick_variant(g))
        })
        .collect();
    let kummer: Vec<_> = (0..15)
        .map(|_| {
            let a = g.uniform(0.3, 2.0);
            let b = a + g.uniform(0.3, 2.0);
            let x = g.uniform(0.1, 2.0) * if g.flip() { 1.0 } else { -1.0 };
            (a, b, g.uniform(0.05, 0.95), x, pick_variant(g))
        })
        .collect();
    let mut res = par_residuals(&gauss, |&(a, b, c, y, x, variant)| {
        let p = Hyp2F1Params {
            a,
            b,
            c,
            y,
            x,
            variant,
        };
        let h = 1e-3 * (1.0 + x.abs());
        let fd = richardson_dx(
            |u| Ok(ihyp_2f1(&Hyp2F1Params { x: u, ..p }, Method::Series, &tight)?.value),
            x,
            h,
        )?;
        let (coeff, shifted) = derivative_shift_2f1(&p, 1)?;
        let closed = coeff * ihyp_2f1(&shifted, Method::Series, &tight)?.value;
        let mut r: f64 = ((fd - closed) / closed).abs();
        // Order 2 by composition: shifting twice must equal the n = 2
        // shift exactly (same Pochhammer algebra).
        let (c2, p2) = derivative_shift_2f1(&p, 2)?;
        let (c1a, p1) = derivative_shift_2f1(&p, 1)?;
        let (c1b, p1b) = derivative_shift_2f1(&p1, 1)?;
        r = r.max(((c1a * c1b - c2) / c2).abs());
        r = r.max((p1b.a - p2.a).abs() + (p1b.b - p2.b).abs() + (p1b.c - p2.c).abs());
        Ok(r)
    })?;
    res.extend(par_residuals(&kummer, |&(a, b, y, x, variant)| {
        let p = Hyp1F1Params {
            a,
            b,
            y,
            x,
            variant,
        };
        let h = 1e-3 * (1.0 + x.abs());
        let fd = richardson_dx(
            |u| Ok(ihyp_1f1(&Hyp1F1Params { x: u, ..p }, Method::Series, &tight)?.value),
            x,
            h,
        )?;
        let (coeff, shifted) = derivative_shift_1f1(&p, 1)?;
        let closed = coeff * ihyp_1f1(&shifted, Method::Series, &tight)?.value;
        let mut r: f64 = ((fd - closed) / closed).abs();
        let (c2, _) = derivative_shift_1f1(&p, 2)?;
        let (c1a, p1) = derivative_shift_1f1(&p, 1)?;
        let (c1b, _) = derivative_shift_1f1(&p1, 1)?;
        r = r.max(((c1a * c1b - c2) / c2).abs());
        Ok(r)
    })?);
    Ok(no_extra(res))
}

/// Cutoff-moment identities: integrating the incomplete Gauss function
/// against the appropriate y-weight reproduces classical ₂F₁ values with
/// shifted denominator parameter.
pub(super) fn y_moment(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let mut cases = Vec::with_capacity(40);
    for kind in [
        MomentKind::LoweredC,
        MomentKind::LoweredCK1,
        MomentKind::RaisedC,
        MomentKind::RaisedCK1,
    ] {
        for _ in 0..10 {
            let k = match kind {
                MomentKind::LoweredC | MomentKind::RaisedC => g.int(1, 3),
                _ => 1,
            };
            let a = g.uniform(0.3, 2.5);
            let b = g.uniform(0.3, 2.0);
            // The lowered forms need c - k > b.
            let c = match kind {
                MomentKind::LoweredC | MomentKind::LoweredCK1 => b + k as f64 + g.uniform(0.5, 2.0),
                _ => b + g.uniform(0.3, 2.5),
            };
            cases.push((kind, k, a, b, c, g.uniform(-0.8, 0.8)));
        }
    }
    let res = par_residuals(&cases, |&(kind, k, a, b, c, x)| {
        Ok(y_moment_residual(kind, k, a, b, c, x, opts)?.abs())
    })?;
    Ok(no_extra(res))
}

/// Incomplete Appell F1: series vs. integral, lower + upper vs.
/// classical, and the three reduction identities.
pub(super) fn appell_f1_suite(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let base: Vec<_> = (0..35)
        .map(|_| {
            let a = g.uniform(0.3, 2.0);
            let d = a + g.uniform(0.3, 2.5);
            let b = g.uniform(0.3, 2.0);
            let c = g.uniform(0.3, 2.0);
            (
                a,
                b,
                c,
                d,
                g.uniform(-0.7, 0.7),
                g.uniform(-0.7, 0.7),
                g.uniform(0.05, 0.95),
                pick_variant(g),
            )
        })
        .collect();
    // 25 dual-path cases, then 10 decompositions over the same pool.
    let mut res = par_residuals(&base[..25], |&(a, b, c, d, x, z, y, variant)| {
        let p = AppellF1Params {
            a,
            b,
            c,
            d,
            x,
            z,
            y,
            variant,
        };
        let s = appell_f1(&p, Method::Series, opts)?.value;
        let i = appell_f1(&p, Method::Integral, opts)?.value;
        Ok(((s - i) / s).abs())
    })?;
    res.extend(par_residuals(&base[25..], |&(a, b, c, d, x, z, y, _)| {
        let lower = AppellF1Params {
            a,
            b,
            c,
            d,
            x,
            z,
            y,
            variant: Variant::Lower,
        };
        let upper = AppellF1Params {
            variant: Variant::Upper,
            ..lower
        };
        let lo = appell_f1(&lower, Method::Auto, opts)?.value;
        let up = appell_f1(&upper, Method::Auto, opts)?.value;
        let full = complete_f1(a, b, c, d, x, z, opts)?.value;
        Ok(((lo + up - full) / full).abs())
    })?);
    // Reductions to the incomplete Gauss function: second argument zero,
    // second exponent zero, and equal arguments (row-sum collapse).
    let reductions: Vec<_> = (0..12)
        .map(|i| {
            let a = g.uniform(0.3, 2.0);
            let d = a + g.uniform(0.3, 2.5);
            (
                i % 3,
                a,
                g.uniform(0.3, 2.0),
                g.uniform(0.3, 2.0),
                d,
                g.uniform(-0.7, 0.7),
                g.uniform(-0.7, 0.7),
                g.uniform(0.05, 0.95),
                pick_variant(g),
            )
        })
        .collect();
    res.extend(par_residuals(
        &reductions,
        |&(form, a, b, c, d, x, z, y, variant)| {
            let (p, free, x_eff) = match form {
                // z = 0: only the m-row survives.
                0 => (
                    AppellF1Params {
                        a,
                        b,
                        c,
                        d,
                        x,
                        z: 0.0,
                        y,
                        variant,
                    },
                    b,
                    x,
                ),
                // c = 0: (0)_n kills every n > 0 term regardless of z.
                1 => (
                    AppellF1Params {
                        a,
                        b,
                        c: 0.0,
                        d,
                        x,
                        z,
                        y,
                        variant,
                    },
                    b,
                    x,
                ),
                // x = z: Vandermonde row sum merges the exponents.
                _ => (
                    AppellF1Params {
                        a,
                        b,
                        c,
                        d,
                        x,
                        z: x,
                        y,
                        variant,
                    },
                    b + c,
                    x,
                ),
            };
            let f1 = appell_f1(&p, Method::Auto, opts)?.value;
            let q = Hyp2F1Params {
                a: free,
                b: a,
                c: d,
                y,
                x: x_eff,
                variant,
            };
            let gauss = ihyp_2f1(&q, Method::Auto, opts)?.value;
            Ok(((f1 - gauss) / gauss).abs())
        },
    )?);
    Ok(no_extra(res))
}

/// Incomplete Appell F2: series vs. integral, the zero-argument
/// reduction (which keeps the order-0 ratio of the silent pair as a
/// factor), and the strict bilinear bounds.
pub(super) fn appell_f2_suite(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let dual: Vec<_> = (0..20)
        .map(|_| {
            let b = g.uniform(0.3, 1.8);
            let d = b + g.uniform(0.3, 2.0);
            let c = g.uniform(0.3, 1.8);
            let e = c + g.uniform(0.3, 2.0);
            (
                g.uniform(0.3, 2.0),
                b,
                c,
                d,
                e,
                g.uniform(-0.45, 0.45),
                g.uniform(-0.45, 0.45),
                g.uniform(0.05, 0.95),
                pick_variant(g),
            )
        })
        .collect();
    let mut res = par_residuals(&dual, |&(a, b, c, d, e, x, z, y, variant)| {
        let p = AppellF2Params {
            a,
            b,
            c,
            d,
            e,
            x,
            z,
            y,
            variant,
        };
        let s = appell_f2(&p, Method::Series, opts)?.value;
        let i = appell_f2(&p, Method::Integral, opts)?.value;
        Ok(((s - i) / s).abs())
    })?;
    // z = 0: the n-sum collapses to its first term, leaving the order-0
    // incomplete ratio of the (c, e) pair as a prefactor.
    let zero: Vec<_> = (0..6)
        .map(|_| {
            let b = g.uniform(0.3, 1.8);
            let d = b + g.uniform(0.3, 2.0);
            let c = g.uniform(0.3, 1.8);
            let e = c + g.uniform(0.3, 2.0);
            (
                g.uniform(0.3, 2.0),
                b,
                c,
                d,
                e,
                g.uniform(-0.6, 0.6),
                g.uniform(0.05, 0.95),
                pick_variant(g),
            )
        })
        .collect();
    res.extend(par_residuals(&zero, |&(a, b, c, d, e, x, y, variant)| {
        let p = AppellF2Params {
            a,
            b,
            c,
            d,
            e,
            x,
            z: 0.0,
            y,
            variant,
        };
        let f2 = appell_f2(&p, Method::Auto, opts)?.value;
        let r0 = ratio(
            &RatioSpec {
                b: c,
                c: e,
                n: 0,
                y,
                variant,
            },
            opts,
        )?
        .value;
        let q = Hyp2F1Params {
            a,
            b,
            c: d,
            y,
            x,
            variant,
        };
        let gauss = ihyp_2f1(&q, Method::Auto, opts)?.value;
        Ok(((f2 - r0 * gauss) / f2).abs())
    })?);
    // Bilinear structure: with positive arguments each part stays below
    // the classical value and so does their sum (the cross products the
    // per-index truncation drops are positive). The residual is the
    // bound violation, which must be zero.
    let bounds: Vec<_> = (0..6)
        .map(|_| {
            let b = g.uniform(0.3, 1.8);
            let d = b + g.uniform(0.3, 2.0);
            let c = g.uniform(0.3, 1.8);
            let e = c + g.uniform(0.3, 2.0);
            (
                g.uniform(0.3, 2.0),
                b,
                c,
                d,
                e,
                g.uniform(0.05, 0.45),
                g.uniform(0.05, 0.45),
                g.uniform(0.1, 0.9),
            )
        })
        .collect();
    res.extend(par_residuals(&bounds, |&(a, b, c, d, e, x, z, y)| {
        let lower = AppellF2Params {
            a,
            b,
            c,
            d,
            e,
            x,
            z,
            y,
            variant: Variant::Lower,
        };
        let upper = AppellF2Params {
            variant: Variant::Upper,
            ..lower
        };
        let lo = appell_f2(&lower, Method::Auto, opts)?.value;
        let up = appell_f2(&upper, Method::Auto, opts)?.value;
        let full = complete_f2(a, b, c, d, e, x, z, opts)?.value;
        let violation = (lo - full).max(up - full).max(lo + up - full);
        Ok(violation.max(0.0))
    })?);
    Ok(no_extra(res))
}

/// Black-box operator on `t^λ` vs. the incomplete-beta power rule, and
/// the exact recombination of the two power-rule halves.
pub(super) fn fracderiv_power(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = (0..30)
        .map(|_| {
            (
                g.uniform(-0.5, 3.0),
                g.uniform(-2.5, -0.1),
                g.uniform(0.05, 0.95),
                g.uniform(0.3, 3.0),
                pick_variant(g),
            )
        })
        .collect();
    let res = par_residuals(&cases, |&(lambda, mu, y, z, variant)| {
        let spec = FracOpSpec { mu, y, z, variant };
        let direct = ifrac(|t| t.powf(lambda), &spec, opts)?.value;
        let closed = ifrac_power(lambda, &spec)?.value;
        let mut r: f64 = ((direct - closed) / closed).abs();
        let lo = ifrac_power(
            lambda,
            &FracOpSpec {
                variant: Variant::Lower,
                ..spec
            },
        )?
        .value;
        let up = ifrac_power(
            lambda,
            &FracOpSpec {
                variant: Variant::Upper,
                ..spec
            },
        )?
        .value;
        let classical = (crate::kernels::log_gamma(lambda + 1.0)?
            - crate::kernels::log_gamma(lambda + 1.0 - mu)?)
        .exp()
            * z.powf(lambda - mu);
        r = r.max(((lo + up - classical) / classical).abs());
        Ok(r)
    })?;
    Ok(no_extra(res))
}

/// Operator applied to the three structured operands vs. their
/// hypergeometric images (Gauss, Appell F1, Appell F2).
pub(super) fn fracderiv_closed_forms(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let mut cases = Vec::with_capacity(12);
    for i in 0..12 {
        let kind = match i % 3 {
            0 => ClosedFormKind::TwoF1,
            1 => ClosedFormKind::AppellF1,
            _ => ClosedFormKind::AppellF2,
        };
        let lambda = g.uniform(0.5, 1.5);
        let mu = lambda + g.uniform(0.5, 1.5);
        let alpha = g.uniform(0.3, 1.5);
        let beta_e = g.uniform(0.3, 1.5);
        let gamma = beta_e + g.uniform(0.3, 2.0);
        let pole_a = g.uniform(-0.8, 0.8);
        let pole_b = g.uniform(-0.8, 0.8);
        let t_arg = g.uniform(0.05, 0.35);
        let z = match kind {
            ClosedFormKind::AppellF2 => g.uniform(0.2, 0.5),
            _ => g.uniform(0.2, 0.8),
        };
        let y = g.uniform(0.1, 0.9);
        cases.push((
            kind,
            ClosedFormParams {
                lambda,
                mu,
                alpha,
                beta: beta_e,
                gamma,
                pole_a,
                pole_b,
                t_arg,
                z,
                y,
                variant: pick_variant(g),
            },
        ));
    }
    let res = par_residuals(&cases, |(kind, p)| {
        Ok(closed_form_residual(*kind, p, opts)?.abs())
    })?;
    Ok(no_extra(res))
}

/// Lower + upper operator = classical operator on smooth non-power
/// operands.
pub(super) fn fracderiv_decomposition(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases: Vec<_> = (0..15)
        .map(|_| {
            (
                g.uniform(0.0, 2.0),
                g.uniform(0.0, 1.5),
                g.uniform(-2.2, -0.2),
                g.uniform(0.4, 2.5),
                g.uniform(0.1, 0.9),
            )
        })
        .collect();
    let res = par_residuals(&cases, |&(sigma, rho, mu, z, y)| {
        let f = |t: f64| (1.0 + t).powf(-sigma) * (-rho * t).exp();
        let classical = classical_rl(f, mu, z, opts)?.value;
        let lo = ifrac(
            f,
            &FracOpSpec {
                mu,
                y,
                z,
                variant: Variant::Lower,
            },
            opts,
        )?
        .value;
        let up = ifrac(
            f,
            &FracOpSpec {
                mu,
                y,
                z,
                variant: Variant::Upper,
            },
            opts,
        )?
        .value;
        Ok(((lo + up - classical) / classical).abs())
    })?;
    Ok(no_extra(res))
}

fn genrel_grid(g: &mut Grid, n_cases: usize, bilinear: bool) -> Vec<(GenRelKind, GenRelSpec)> {
    (0..n_cases)
        .map(|i| {
            let alpha = g.uniform(0.3, 1.5);
            let beta = alpha + g.uniform(0.3, 2.0);
            let gamma = g.uniform(0.3, 1.2);
            let delta = gamma + g.uniform(0.3, 1.5);
            let kind = if i % 2 == 0 {
                GenRelKind::Shift
            } else {
                GenRelKind::NegShift
            };
            let spec = GenRelSpec {
                lambda: g.uniform(0.3, 1.8),
                rho: g.uniform(0.8, 2.0),
                alpha,
                beta,
                gamma,
                delta,
                t: g.uniform(-0.2, 0.2),
                x: if bilinear { g.uniform(0.1, 0.5) } else { 0.0 },
                z: g.uniform(0.2, 0.6),
                y: g.uniform(0.1, 0.9),
                n_max: 300,
                variant: pick_variant(g),
            };
            (kind, spec)
        })
        .collect()
}

/// Linear generating relations: partial sums vs. their resummed closed
/// forms, with the geometric tail bound subtracted from the defect.
pub(super) fn genrel_linear(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases = genrel_grid(g, 12, false);
    let res = par_residuals(&cases, |(kind, spec)| {
        let (defect, tail) = genrel_linear_residual(*kind, spec, opts)?;
        Ok((defect - tail).max(0.0))
    })?;
    Ok(no_extra(res))
}

/// Bilinear generating relation (truncated factor times shifted factor)
/// vs. its Appell F2 resummation.
pub(super) fn genrel_bilinear(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let cases = genrel_grid(g, 8, true);
    let res = par_residuals(&cases, |(_, spec)| {
        let (defect, tail) = genrel_bilinear_residual(spec, opts)?;
        Ok((defect - tail).max(0.0))
    })?;
    Ok(no_extra(res))
}

/// Report-only: the printed form of the three-term difference relation
/// does not hold (the residual is O(1)), while an independently derived
/// repaired form holds to quadrature accuracy. The report carries both:
/// `max_residual` documents the printed form, and the extra field
/// `max_repaired_residual` shows the repaired form passing.
pub(super) fn difference_relation(g: &mut Grid, opts: &EvalOptions) -> Result<SuiteData> {
    let mut cases = vec![(1.0, 2.0, 2.0, 0.5, 0.3), (0.5, 3.0, 1.5, 0.25, 0.5)];
    cases.extend((0..6).map(|_| {
        (
            g.uniform(0.3, 1.5),
            g.uniform(1.2, 3.0),
            g.uniform(1.2, 3.0),
            g.uniform(0.1, 0.8),
            g.uniform(-0.7, 0.7),
        )
    }));
    let stated = par_residuals(&cases, |&(a, b, h, y, x)| {
        Ok(difference_relation_residual(a, b, h, y, x, opts)?.abs())
    })?;
    let repaired = par_residuals(&cases, |&(a, b, h, y, x)| {
        Ok(difference_relation_residual_repaired(a, b, h, y, x, opts)?.abs())
    })?;
    let mut extra = BTreeMap::new();
    extra.insert(
        "max_repaired_residual".to_string(),
        repaired.iter().fold(0.0_f64, |m, &v| m.max(v)),
    );
    Ok((stated, extra))
}

#[cfg(test)]
mod tests {
    use super::super::{run_suite, VerifyConfig};

    // Fast spot checks that a few structurally different suites run and
    // pass; the full registry sweep lives in the integration tests.

    #[test]
    fn foundation_suites_pass() {
        let cfg = VerifyConfig::default();
        for name in [
            "beta-decomposition",
            "ratio-decomposition",
            "closed-form-spot",
        ] {
            let r = run_suite(name, &cfg).unwrap();
            assert!(r.pass, "{name}: max residual {}", r.max_residual);
        }
    }

    #[test]
    fn difference_relation_reports_without_gating() {
        let r = run_suite("difference-relation", &VerifyConfig::default()).unwrap();
        assert!(r.report_only);
        assert!(!r.pass, "the printed form should not verify");
        assert!(r.max_residual > 1.0, "printed-form residual is O(1)");
        let repaired = r.extra["max_repaired_residual"];
        assert!(
            repaired < 1e-9,
            "repaired form should verify, got {repaired}"
        );
    }
}
