//! Incomplete Riemann–Liouville fractional operators.
//!
//! The classical operator of (negative) order `μ` is the weighted average
//! `D^μ f(z) = (1/Γ(-μ)) ∫₀^z f(t) (z-t)^{-μ-1} dt`. Substituting
//! `t = u·z` and truncating the unit interval at a cutoff `y` splits it
//! into a lower part (over `[0, y]`) and an upper part (over `[y, 1]`)
//! that recombine exactly to the classical value — the same split that
//! defines every incomplete function in this crate, which is why applying
//! the incomplete operator to power-law operands lands on them.
//!
//! | Item | Purpose |
//! |------|---------|
//! | [`ifrac`] | incomplete operator applied to a black-box operand |
//! | [`classical_rl`] | the classical operator (recombination target) |
//! | [`ifrac_power`] | closed-form action on `t^λ` (incomplete beta) |
//! | [`closed_form_residual`] | operator vs. hypergeometric closed forms |
//! | [`genrel_linear_residual`], [`genrel_bilinear_residual`] | generating-relation partial-sum checks |

use crate::appell::{appell_f1, appell_f2, AppellF1Params, AppellF2Params};
use crate::error::{ensure_domain, Error, Result};
use crate::hyp::{ihyp_2f1, Hyp2F1Params};
use crate::kernels::beta::ln_beta;
use crate::kernels::gamma::ln_gamma;
use crate::kernels::quad::gj_doubling;
use crate::kernels::{adaptive_integrate_parts, incomplete_beta};
use crate::options::{EvalOptions, EvalResult, Method, Variant};

/// One incomplete fractional operator: order, cutoff, evaluation point,
/// and which side of the cutoff it integrates over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOpSpec {
    /// Operator order; `mu < 0` (the integral form of the operator).
    pub mu: f64,
    /// Cutoff in `[0, 1]`; the lower part covers `t ∈ [0, y·z]`.
    pub y: f64,
    /// Evaluation point; `z > 0`.
    pub z: f64,
    /// Which side of the cutoff.
    pub variant: Variant,
}

impl FracOpSpec {
    /// Checks `mu < 0`, `0 ≤ y ≤ 1`, `z > 0`.
    pub fn validate(&self) -> Result<()> {
        ensure_domain(
            self.mu < 0.0 && self.mu.is_finite(),
            "fractional operator requires mu < 0",
        )?;
        ensure_domain(
            (0.0..=1.0).contains(&self.y),
            "fractional operator requires 0 <= y <= 1",
        )?;
        ensure_domain(
            self.z > 0.0 && self.z.is_finite(),
            "fractional operator requires z > 0",
        )
    }
}

/// Applies the incomplete fractional operator to a black-box operand.
///
/// The lower part integrates `f(u·z)(1-u)^{-mu-1}` over `u ∈ [0, y]` by
/// tanh-sinh (the kernel factor is computed from the exact distance to
/// the endpoint, so `y = 1` — where it is singular — costs no accuracy);
/// the upper part maps `[y, 1]` onto a Gauss–Jacobi rule whose weight
/// absorbs the `(1-u)^{-mu-1}` endpoint factor exactly. Empty ranges
/// (`y = 0` lower, `y = 1` upper) return exactly 0.
///
/// `f` must be finite on `(0, z)`; integrable endpoint growth is fine on
/// the lower path, while the upper path assumes `f` smooth near `u = 1`.
pub fn ifrac(f: impl Fn(f64) -> f64, spec: &FracOpSpec, opts: &EvalOptions) -> Result<EvalResult> {
    opts.validate()?;
    spec.validate()?;
    let FracOpSpec { mu, y, z, variant } = *spec;
    match variant {
        Variant::Lower => {
            if y == 0.0 {
                return Ok(EvalResult::exact(0.0));
            }
            let ln_front = -mu * z.ln() - ln_gamma(-mu);
            let onemy = 1.0 - y;
            // 1 - u = (1 - y) + (y - u), assembled from the exact
            // endpoint distance so the kernel survives y = 1.
            let r = adaptive_integrate_parts(
                |u, _d_lo, d_hi| f(u * z) * (onemy + d_hi).powf(-mu - 1.0),
                0.0,
                y,
                opts,
            )?;
            Ok(r.scaled(ln_front.exp()))
        }
        Variant::Upper => {
            if y == 1.0 {
                return Ok(EvalResult::exact(0.0));
            }
            // u = y + (1-y)w pulls the singular endpoint factor into the
            // rule weight: (1-u)^{-mu-1} du = (1-y)^{-mu} (1-w)^{-mu-1} dw.
            let onemy = 1.0 - y;
            let ln_front = -mu * (z.ln() + (-y).ln_1p()) - ln_gamma(-mu);
            let g = move |w: f64| f((y + onemy * w) * z);
            Ok(gj_doubling(0.0, -mu - 1.0, g, opts)?.scaled(ln_front.exp()))
        }
    }
}

/// The classical (untruncated) operator
/// `D^μ f(z) = (1/Γ(-μ)) ∫₀^z f(t)(z-t)^{-mu-1} dt`, `mu < 0`.
///
/// Evaluated by tanh-sinh with the kernel computed from the exact
/// distance to `z`. This is the recombination target: the lower and upper
/// incomplete parts at any cutoff sum to this value.
pub fn classical_rl(
    f: impl Fn(f64) -> f64,
    mu: f64,
    z: f64,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    opts.validate()?;
    ensure_domain(mu < 0.0 && mu.is_finite(), "classical_rl requires mu < 0")?;
    ensure_domain(z > 0.0 && z.is_finite(), "classical_rl requires z > 0")?;
    let r = adaptive_integrate_parts(|t, _d_lo, d_hi| f(t) * d_hi.powf(-mu - 1.0), 0.0, z, opts)?;
    Ok(r.scaled((-ln_gamma(-mu)).exp()))
}

/// Closed-form action of the incomplete operator on the power `t^λ`:
///
/// * lower: `B_y(λ+1, -μ) / Γ(-μ) · z^{λ-μ}`
/// * upper: `B_{1-y}(-μ, λ+1) / Γ(-μ) · z^{λ-μ}`
///
/// Requires `λ > -1`. The two parts recombine to the classical power rule
/// `Γ(λ+1)/Γ(λ-μ+1) · z^{λ-μ}` because the two incomplete betas are
/// mirror halves of `B(λ+1, -μ)`.
pub fn ifrac_power(lambda: f64, spec: &FracOpSpec) -> Result<EvalResult> {
    spec.validate()?;
    ensure_domain(
        lambda > -1.0 && lambda.is_finite(),
        "ifrac_power requires lambda > -1",
    )?;
    let FracOpSpec { mu, y, z, variant } = *spec;
    let b = match variant {
        // incomplete_beta stops short of the endpoint where its second
        // slot could diverge; both slots are safe here (-mu > 0), so the
        // endpoint values are the complete beta / zero.
        Variant::Lower => {
            if y == 1.0 {
                ln_beta(lambda + 1.0, -mu).exp()
            } else {
                incomplete_beta(y, lambda + 1.0, -mu)?
            }
        }
        Variant::Upper => {
            if y == 0.0 {
                ln_beta(-mu, lambda + 1.0).exp()
            } else if y == 1.0 {
                0.0
            } else {
                incomplete_beta(1.0 - y, -mu, lambda + 1.0)?
            }
        }
    };
    let value = b * ((lambda - mu) * z.ln() - ln_gamma(-mu)).exp();
    Ok(EvalResult {
        value,
        abs_err_est: value.abs() * 4.0 * f64::EPSILON + 1e-300,
        effort: 1,
        converged: true,
    })
}

/// Which hypergeometric closed form [`closed_form_residual`] checks the
/// operator against. Field names in [`ClosedFormParams`] that a kind does
/// not use are ignored by it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormKind {
    /// Operand `t^{λ-1}(1-t)^{-α}`; the image is an incomplete Gauss
    /// function of argument `z`.
    TwoF1,
    /// Operand `t^{λ-1}(1-a·t)^{-α}(1-b·t)^{-β}`; the image is an
    /// incomplete Appell F1 of arguments `(a·z, b·z)`.
    AppellF1,
    /// Operand `t^{λ-1}(1-t)^{-α}·₂F₁(α,⟨β,γ;y⟩; τ/(1-t))` with the inner
    /// function taken at the *same* cutoff and variant as the operator;
    /// the image is an incomplete Appell F2 of arguments `(τ, z)`.
    AppellF2,
}

/// Flat parameter set shared by the three closed-form checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormParams {
    /// Operand power exponent offset; `0 < lambda < mu`.
    pub lambda: f64,
    /// Image power exponent offset; the operator order is `lambda - mu`.
    pub mu: f64,
    /// First pole/series exponent `α`.
    pub alpha: f64,
    /// Second exponent `β` (`AppellF1`: second pole; `AppellF2`: inner
    /// ratio numerator). Unused by `TwoF1`.
    pub beta: f64,
    /// Inner ratio denominator `γ` (`AppellF2` only).
    pub gamma: f64,
    /// Pole scales of the `AppellF1` operand (`1/pole_a`, `1/pole_b`).
    pub pole_a: f64,
    /// See `pole_a`.
    pub pole_b: f64,
    /// Inner argument scale `τ` (`AppellF2` only).
    pub t_arg: f64,
    /// Evaluation point; `z > 0` (and within each kind's radius).
    pub z: f64,
    /// Cutoff in `[0, 1)`, shared by the operator and the image.
    pub y: f64,
    /// Operator side; the image function inherits it.
    pub variant: Variant,
}

/// Residual `(direct operator value) - (closed form)` for the three
/// operator identities, both sides at the same cutoff and variant.
///
/// The direct side runs [`ifrac`] of order `lambda - mu < 0` on the
/// operand; the closed side is `Γ(λ)/Γ(μ)·z^{μ-1}` times the named
/// incomplete hypergeometric function. Quadrature accuracy dominates the
/// residual (the operand's interior endpoint factors are not absorbed by
/// the rule weights), so expect agreement near the integration tolerance
/// rather than machine precision.
pub fn closed_form_residual(
    kind: ClosedFormKind,
    p: &ClosedFormParams,
    opts: &EvalOptions,
) -> Result<f64> {
    opts.validate()?;
    ensure_domain(
        p.lambda > 0.0 && p.mu > p.lambda && p.mu.is_finite(),
        "closed forms require mu > lambda > 0",
    )?;
    ensure_domain((0.0..1.0).contains(&p.y), "closed forms require 0 <= y < 1")?;
    ensure_domain(p.z > 0.0 && p.z.is_finite(), "closed forms require z > 0")?;
    let spec = FracOpSpec {
        mu: p.lambda - p.mu,
        y: p.y,
        z: p.z,
        variant: p.variant,
    };
    let ln_scale = ln_gamma(p.lambda) - ln_gamma(p.mu) + (p.mu - 1.0) * p.z.ln();
    let (direct, closed) = match kind {
        ClosedFormKind::TwoF1 => {
            ensure_domain(p.z < 1.0, "the Gauss closed form requires z < 1")?;
            let (lambda, alpha) = (p.lambda, p.alpha);
            let direct = ifrac(
                |t| t.powf(lambda - 1.0) * (1.0 - t).powf(-alpha),
                &spec,
                opts,
            )?;
            let image = Hyp2F1Params {
                a: p.alpha,
                b: p.lambda,
                c: p.mu,
                y: p.y,
                x: p.z,
                variant: p.variant,
            };
            (direct.value, ihyp_2f1(&image, Method::Auto, opts)?.value)
        }
        ClosedFormKind::AppellF1 => {
            let (lambda, alpha, beta, pa, pb) = (p.lambda, p.alpha, p.beta, p.pole_a, p.pole_b);
            let direct = ifrac(
                |t| t.powf(lambda - 1.0) * (1.0 - pa * t).powf(-alpha) * (1.0 - pb * t).powf(-beta),
                &spec,
                opts,
            )?;
            let image = AppellF1Params {
                a: p.lambda,
                b: p.alpha,
                c: p.beta,
                d: p.mu,
                x: p.pole_a * p.z,
                z: p.pole_b * p.z,
                y: p.y,
                variant: p.variant,
            };
            (direct.value, appell_f1(&image, Method::Auto, opts)?.value)
        }
        ClosedFormKind::AppellF2 => {
            let inner = Hyp2F1Params {
                a: p.alpha,
                b: p.beta,
                c: p.gamma,
                y: p.y,
                x: 0.0, // placeholder; set per node below
                variant: p.variant,
            };
            let (lambda, alpha, t_arg) = (p.lambda, p.alpha, p.t_arg);
            let direct = ifrac(
                |t| {
                    let arg = t_arg / (1.0 - t);
                    let f = ihyp_2f1(&Hyp2F1Params { x: arg, ..inner }, Method::Auto, opts)
                        .map(|r| r.value)
                        .unwrap_or(f64::NAN);
                    t.powf(lambda - 1.0) * (1.0 - t).powf(-alpha) * f
                },
                &spec,
                opts,
            )?;
            let image = AppellF2Params {
                a: p.alpha,
                b: p.beta,
                c: p.lambda,
                d: p.gamma,
                e: p.mu,
                x: p.t_arg,
                z: p.z,
                y: p.y,
                variant: p.variant,
            };
            (direct.value, appell_f2(&image, Method::Auto, opts)?.value)
        }
    };
    Ok(direct - ln_scale.exp() * closed)
}

/// Which generating relation [`genrel_linear_residual`] checks: the
/// parameter of the n-th summand either climbs with n or descends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenRelKind {
    /// `Σ (λ)ₙ/n!·F(λ+n,⟨α,β;y⟩;z)·tⁿ = (1-t)^{-λ}·F(λ,⟨α,β;y⟩;z/(1-t))`.
    Shift,
    /// `Σ (λ)ₙ/n!·F(ρ-n,⟨α,β;y⟩;z)·tⁿ = (1-t)^{-λ}·F1(⟨α,β;y⟩,ρ,λ; z, -zt/(1-t))`.
    NegShift,
}

impl std::fmt::Display for GenRelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GenRelKind::Shift => "shift",
            GenRelKind::NegShift => "neg-shift",
        })
    }
}

impl std::str::FromStr for GenRelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shift" => Ok(GenRelKind::Shift),
            "neg-shift" => Ok(GenRelKind::NegShift),
            other => Err(Error::domain(format!(
                "unknown generating-relation kind '{other}' (expected shift or neg-shift)"
            ))),
        }
    }
}

/// Parameters of a generating-relation check. The linear relations ignore
/// `gamma`, `delta`, and `x` (and `Shift` also ignores `rho`); the
/// bilinear relation ignores `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenRelSpec {
    /// Exponent of the `(1-t)^{-λ}` resummation factor.
    pub lambda: f64,
    /// Descending numerator parameter (`NegShift` only).
    pub rho: f64,
    /// Ratio numerator of the main function; `beta > alpha > 0`.
    pub alpha: f64,
    /// Ratio denominator of the main function.
    pub beta: f64,
    /// Ratio numerator of the second (truncating) function; `delta > gamma > 0`.
    pub gamma: f64,
    /// Ratio denominator of the second function.
    pub delta: f64,
    /// Generating variable; the partial sums converge for small `|t| < 1`.
    pub t: f64,
    /// Argument of the second function (bilinear only).
    pub x: f64,
    /// Argument of the main function.
    pub z: f64,
    /// Cutoff in `[0, 1)`, shared by every function in the relation.
    pub y: f64,
    /// Hard ceiling on the number of partial-sum terms.
    pub n_max: usize,
    /// Variant shared by every function in the relation.
    pub variant: Variant,
}

impl GenRelSpec {
    fn validate_common(&self) -> Result<()> {
        ensure_domain(
            self.lambda.is_finite() && self.t.is_finite() && self.t.abs() < 1.0,
            "generating relations require finite lambda and |t| < 1",
        )?;
        ensure_domain(
            (1..=10_000).contains(&self.n_max),
            "generating relations require 1 <= n_max <= 10000",
        )?;
        ensure_domain(
            (0.0..1.0).contains(&self.y),
            "generating relations require 0 <= y < 1",
        )
    }
}

/// Accumulates `Σ coeff(n)·F(n)·tⁿ` until three consecutive terms fall
/// below `rel_tol`, returning the partial sum and a geometric tail bound
/// from the last observed term ratio.
fn partial_sum(
    mut term: impl FnMut(usize) -> Result<f64>,
    n_max: usize,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    let mut sum = 0.0;
    let mut prev_abs = 0.0;
    let mut ratio = f64::NAN;
    let mut small_run = 0;
    for n in 0..n_max {
        let t = term(n)?;
        sum += t;
        let at = t.abs();
        if at > 0.0 && prev_abs > 0.0 {
            ratio = at / prev_abs;
        }
        if at > 0.0 {
            prev_abs = at;
        }
        if at <= rel_tol * sum.abs() + 1e-300 {
            small_run += 1;
            if small_run >= 3 && n >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    let tail = if ratio.is_finite() && ratio < 1.0 {
        prev_abs * ratio / (1.0 - ratio)
    } else {
        prev_abs
    };
    Ok((sum, tail))
}

/// Checks a linear generating relation by partial summation.
///
/// Returns `(|lhs - rhs|, tail)`: the absolute defect of the partial sum
/// against the resummed right-hand side, and the geometric tail bound
/// accounting for the unsummed remainder. A passing check has
/// `residual ≤ tail + tolerance`.
pub fn genrel_linear_residual(
    kind: GenRelKind,
    spec: &GenRelSpec,
    opts: &EvalOptions,
) -> Result<(f64, f64)> {
    opts.validate()?;
    spec.validate_common()?;
    let GenRelSpec {
        lambda,
        rho,
        alpha,
        beta,
        t,
        z,
        y,
        n_max,
        variant,
        ..
    } = *spec;
    let f_at = |a: f64| -> Result<f64> {
        let p = Hyp2F1Params {
            a,
            b: alpha,
            c: beta,
            y,
            x: z,
            variant,
        };
        Ok(ihyp_2f1(&p, Method::Auto, opts)?.value)
    };
    // c_n = (λ)_n t^n / n!, built incrementally.
    let mut c = 1.0;
    let lhs = partial_sum(
        |n| {
            if n > 0 {
                let nf = n as f64;
                c *= (lambda + nf - 1.0) * t / nf;
            }
            let a = match kind {
                GenRelKind::Shift => lambda + n as f64,
                GenRelKind::NegShift => rho - n as f64,
            };
            Ok(c * f_at(a)?)
        },
        n_max,
        opts.rel_tol,
    )?;
    let resum = (1.0 - t).powf(-lambda);
    let rhs = match kind {
        GenRelKind::Shift => {
            let p = Hyp2F1Params {
                a: lambda,
                b: alpha,
                c: beta,
                y,
                x: z / (1.0 - t),
                variant,
            };
            resum * ihyp_2f1(&p, Method::Auto, opts)?.value
        }
        GenRelKind::NegShift => {
            let p = AppellF1Params {
                a: alpha,
                b: rho,
                c: lambda,
                d: beta,
                x: z,
                z: -z * t / (1.0 - t),
                y,
                variant,
            };
            resum * appell_f1(&p, Method::Auto, opts)?.value
        }
    };
    Ok(((lhs.0 - rhs).abs(), lhs.1))
}

/// Checks the bilinear generating relation
///
/// `Σ (λ)ₙ/n!·F(-n,⟨γ,δ;y⟩;x)·F(λ+n,⟨α,β;y⟩;z)·tⁿ
///   = (1-t)^{-λ}·F2(λ; ⟨α,β⟩,⟨γ,δ⟩; z/(1-t), -xt/(1-t); y)`
///
/// where the first factor truncates at order n. Returns
/// `(|lhs - rhs|, tail)` as in [`genrel_linear_residual`].
pub fn genrel_bilinear_residual(spec: &GenRelSpec, opts: &EvalOptions) -> Result<(f64, f64)> {
    opts.validate()?;
    spec.validate_common()?;
    let GenRelSpec {
        lambda,
        alpha,
        beta,
        gamma,
        delta,
        t,
        x,
        z,
        y,
        n_max,
        variant,
        ..
    } = *spec;
    let mut c = 1.0;
    let lhs = partial_sum(
        |n| {
            if n > 0 {
                let nf = n as f64;
                c *= (lambda + nf - 1.0) * t / nf;
            }
            let trunc = Hyp2F1Params {
                a: -(n as f64),
                b: gamma,
                c: delta,
                y,
                x,
                variant,
            };
            let main = Hyp2F1Params {
                a: lambda + n as f64,
                b: alpha,
                c: beta,
                y,
                x: z,
                variant,
            };
            Ok(c * ihyp_2f1(&trunc, Method::Auto, opts)?.value
                * ihyp_2f1(&main, Method::Auto, opts)?.value)
        },
        n_max,
        opts.rel_tol,
    )?;
    let p = AppellF2Params {
        a: lambda,
        b: alpha,
        c: gamma,
        d: beta,
        e: delta,
        x: z / (1.0 - t),
        z: -x * t / (1.0 - t),
        y,
        variant,
    };
    let rhs = (1.0 - t).powf(-lambda) * appell_f2(&p, Method::Auto, opts)?.value;
    Ok(((lhs.0 - rhs).abs(), lhs.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratios::pochhammer;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    // Reference values in this module were computed with mpmath at
    // 40-digit working precision.

    #[test]
    fn power_rule_closed_form() {
        let spec = FracOpSpec {
            mu: -0.7,
            y: 0.3,
            z: 1.5,
            variant: Variant::Upper,
        };
        let r = ifrac_power(0.5, &spec).unwrap();
        assert!(((r.value - 1.1624723335428030) / r.value).abs() < 1e-13);
        // Lower + upper recombine to the classical power rule.
        let lower = ifrac_power(
            0.5,
            &FracOpSpec {
                variant: Variant::Lower,
                ..spec
            },
        )
        .unwrap();
        let classical = (ln_gamma(1.5) - ln_gamma(1.5 + 0.7)).exp() * 1.5f64.powf(0.5 + 0.7);
        assert!(((lower.value + r.value - classical) / classical).abs() < 1e-13);
        // Cutoff endpoints collapse to classical / zero.
        let at_zero = ifrac_power(0.5, &FracOpSpec { y: 0.0, ..spec }).unwrap();
        assert!(((at_zero.value - classical) / classical).abs() < 1e-13);
        let at_one = ifrac_power(0.5, &FracOpSpec { y: 1.0, ..spec }).unwrap();
        assert_eq!(at_one.value, 0.0);
    }

    #[test]
    fn operator_matches_power_rule() {
        // The black-box operator against the closed form, both variants,
        // including an interior-singular order (mu in (-1, 0)).
        for (lambda, mu, y, z) in [
            (0.5, -0.7, 0.3, 1.5),
            (1.2, -0.4, 0.65, 0.8),
            (2.0, -1.6, 0.5, 2.0),
        ] {
            for variant in [Variant::Lower, Variant::Upper] {
                let spec = FracOpSpec { mu, y, z, variant };
                let direct = ifrac(|t| t.powf(lambda), &spec, &opts()).unwrap();
                let closed = ifrac_power(lambda, &spec).unwrap();
                assert!(
                    ((direct.value - closed.value) / closed.value).abs() < 1e-10,
                    "({lambda},{mu},{y},{z},{variant:?}): {} vs {}",
                    direct.value,
                    closed.value
                );
            }
        }
    }

    #[test]
    fn decomposition_to_classical() {
        // Lower + upper = classical for a non-power operand.
        let f = |t: f64| (1.0 + t).ln() * (-t).exp();
        let (mu, z) = (-0.8, 1.3);
        let classical = classical_rl(f, mu, z, &opts()).unwrap().value;
        for y in [0.15, 0.5, 0.85] {
            let lo = ifrac(
                f,
                &FracOpSpec {
                    mu,
                    y,
                    z,
                    variant: Variant::Lower,
                },
                &opts(),
            )
            .unwrap()
            .value;
            let up = ifrac(
                f,
                &FracOpSpec {
                    mu,
                    y,
                    z,
                    variant: Variant::Upper,
                },
                &opts(),
            )
            .unwrap()
            .value;
            assert!(
                ((lo + up - classical) / classical).abs() < 1e-9,
                "y={y}: {lo} + {up} vs {classical}"
            );
        }
        // Classical power rule sanity: D^mu t^2 at z.
        let direct = classical_rl(|t| t * t, mu, z, &opts()).unwrap().value;
        let want = (ln_gamma(3.0) - ln_gamma(3.0 - mu)).exp() * z.powf(2.0 - mu);
        assert!(((direct - want) / want).abs() < 1e-11);
    }

    #[test]
    fn gauss_closed_form_identity() {
        let p = ClosedFormParams {
            lambda: 0.8,
            mu: 1.9,
            alpha: 1.1,
            beta: 0.0,
            gamma: 0.0,
            pole_a: 0.0,
            pole_b: 0.0,
            t_arg: 0.0,
            z: 0.55,
            y: 0.4,
            variant: Variant::Lower,
        };
        let r = closed_form_residual(ClosedFormKind::TwoF1, &p, &opts()).unwrap();
        assert!(r.abs() < 1e-8, "lower residual {r}");
        let p = ClosedFormParams {
            variant: Variant::Upper,
            ..p
        };
        let r = closed_form_residual(ClosedFormKind::TwoF1, &p, &opts()).unwrap();
        assert!(r.abs() < 1e-8, "upper residual {r}");
    }

    #[test]
    fn appell_f1_closed_form_identity() {
        let p = ClosedFormParams {
            lambda: 1.1,
            mu: 2.4,
            alpha: 0.9,
            beta: 0.7,
            gamma: 0.0,
            pole_a: 0.5,
            pole_b: -0.8,
            t_arg: 0.0,
            z: 0.75,
            y: 0.6,
            variant: Variant::Lower,
        };
        let r = closed_form_residual(ClosedFormKind::AppellF1, &p, &opts()).unwrap();
        assert!(r.abs() < 1e-8, "lower residual {r}");
        let p = ClosedFormParams {
            variant: Variant::Upper,
            ..p
        };
        let r = closed_form_residual(ClosedFormKind::AppellF1, &p, &opts()).unwrap();
        assert!(r.abs() < 1e-8, "upper residual {r}");
    }

    #[test]
    fn appell_f2_closed_form_identity() {
        let p = ClosedFormParams {
            lambda: 0.9,
            mu: 2.1,
            alpha: 0.8,
            beta: 1.0,
            gamma: 2.3,
            pole_a: 0.0,
            pole_b: 0.0,
            t_arg: 0.35,
            z: 0.4,
            y: 0.5,
            variant: Variant::Lower,
        };
        let r = closed_form_residual(ClosedFormKind::AppellF2, &p, &opts()).unwrap();
        assert!(r.abs() < 1e-7, "lower residual {r}");
        let p = ClosedFormParams {
            variant: Variant::Upper,
            ..p
        };
        let r = closed_form_residual(ClosedFormKind::AppellF2, &p, &opts()).unwrap();
        assert!(r.abs() < 1e-7, "upper residual {r}");
    }

    #[test]
    fn linear_generating_relations() {
        let spec = GenRelSpec {
            lambda: 0.9,
            rho: 1.4,
            alpha: 1.1,
            beta: 2.7,
            gamma: 0.0,
            delta: 0.0,
            t: 0.15,
            x: 0.0,
            z: 0.45,
            y: 0.55,
            n_max: 200,
            variant: Variant::Lower,
        };
        let (res, tail) = genrel_linear_residual(GenRelKind::Shift, &spec, &opts()).unwrap();
        assert!(res <= tail + 1e-9, "shift: residual {res} vs tail {tail}");
        let (res, tail) = genrel_linear_residual(GenRelKind::NegShift, &spec, &opts()).unwrap();
        assert!(
            res <= tail + 1e-9,
            "neg-shift: residual {res} vs tail {tail}"
        );
        let upper = GenRelSpec {
            variant: Variant::Upper,
            ..spec
        };
        let (res, tail) = genrel_linear_residual(GenRelKind::Shift, &upper, &opts()).unwrap();
        assert!(
            res <= tail + 1e-9,
            "upper shift: residual {res} vs tail {tail}"
        );
    }

    #[test]
    fn bilinear_generating_relation() {
        let spec = GenRelSpec {
            lambda: 0.8,
            rho: 0.0,
            alpha: 1.0,
            beta: 2.4,
            gamma: 0.9,
            delta: 2.1,
            t: -0.12,
            x: 0.3,
            z: 0.35,
            y: 0.6,
            n_max: 200,
            variant: Variant::Lower,
        };
        let (res, tail) = genrel_bilinear_residual(&spec, &opts()).unwrap();
        assert!(
            res <= tail + 1e-8,
            "bilinear: residual {res} vs tail {tail}"
        );
    }

    #[test]
    fn truncating_parameter_is_exact() {
        // (λ)_n with λ a nonpositive integer cuts the sum; the partial-sum
        // helper must see the zero run and stop without a tail.
        let spec = GenRelSpec {
            lambda: -3.0,
            rho: 0.0,
            alpha: 1.1,
            beta: 2.7,
            gamma: 0.0,
            delta: 0.0,
            t: 0.4,
            x: 0.0,
            z: 0.45,
            y: 0.55,
            n_max: 50,
            variant: Variant::Lower,
        };
        let (res, tail) = genrel_linear_residual(GenRelKind::Shift, &spec, &opts()).unwrap();
        // (1-t)^{3} ₂F₁(-3,⟨α,β⟩;z/(1-t)) is an exact polynomial identity.
        assert!(
            res <= tail + 1e-10,
            "truncating: residual {res} vs tail {tail}"
        );
        assert_eq!(pochhammer(-3.0, 4), 0.0);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let good = FracOpSpec {
            mu: -0.7,
            y: 0.3,
            z: 1.5,
            variant: Variant::Lower,
        };
        assert!(good.validate().is_ok());
        assert!(FracOpSpec { mu: 0.3, ..good }.validate().is_err());
        assert!(FracOpSpec { y: 1.5, ..good }.validate().is_err());
        assert!(FracOpSpec { z: 0.0, ..good }.validate().is_err());
        assert!(ifrac_power(-1.5, &good).is_err());
        let p = ClosedFormParams {
            lambda: 2.0,
            mu: 1.0, // mu < lambda
            alpha: 1.0,
            beta: 0.0,
            gamma: 0.0,
            pole_a: 0.0,
            pole_b: 0.0,
            t_arg: 0.0,
            z: 0.5,
            y: 0.4,
            variant: Variant::Lower,
        };
        assert!(closed_form_residual(ClosedFormKind::TwoF1, &p, &opts()).is_err());
    }
}
