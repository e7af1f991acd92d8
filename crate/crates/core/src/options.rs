//! Evaluation budgets, results, and the lower/upper + method selectors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_domain, Error, Result};

/// Budget and tolerance knobs shared by every evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    /// Target relative tolerance for series and quadrature refinement.
    pub rel_tol: f64,
    /// Hard cap on series terms (per series).
    pub max_terms: usize,
    /// Base Gauss–Jacobi node count (doubled as needed for error control).
    pub quad_nodes: usize,
    /// Maximum refinement level of the adaptive (tanh-sinh) integrator.
    pub adaptive_max_depth: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            rel_tol: 1e-12,
            max_terms: 10_000,
            quad_nodes: 64,
            adaptive_max_depth: 30,
        }
    }
}

impl EvalOptions {
    /// Checks the invariants `rel_tol > 0`, `max_terms ≥ 1`, `quad_nodes ≥ 2`.
    pub fn validate(&self) -> Result<()> {
        ensure_domain(
            self.rel_tol > 0.0 && self.rel_tol.is_finite(),
            "rel_tol must be finite and > 0",
        )?;
        ensure_domain(self.max_terms >= 1, "max_terms must be >= 1")?;
        ensure_domain(self.quad_nodes >= 2, "quad_nodes must be >= 2")?;
        Ok(())
    }
}

/// Outcome of a single evaluation.
///
/// When `converged` is `false` the `value` still carries the best partial
/// result and `abs_err_est` its (possibly large) error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    /// Computed value (best available even on non-convergence).
    pub value: f64,
    /// Absolute error estimate; always ≥ 0.
    pub abs_err_est: f64,
    /// Series terms or quadrature nodes consumed.
    pub effort: u64,
    /// Whether the requested tolerance was certified.
    pub converged: bool,
}

impl EvalResult {
    /// Wraps a value known to working precision (closed forms, short-circuits).
    pub fn exact(value: f64) -> Self {
        EvalResult {
            value,
            abs_err_est: value.abs() * 4.0 * f64::EPSILON,
            effort: 0,
            converged: true,
        }
    }

    /// Rescales value and error estimate by a constant factor.
    pub(crate) fn scaled(self, factor: f64) -> Self {
        EvalResult {
            value: self.value * factor,
            abs_err_est: self.abs_err_est * factor.abs(),
            effort: self.effort,
            converged: self.converged,
        }
    }
}

/// Which part of the truncated integral a quantity refers to.
///
/// `Lower` integrates over `[0, y]` (bracket forms `[b,c;y]_n`),
/// `Upper` over `[y, 1]` (brace forms `{b,c;y}_n`). The two variants of any
/// quantity sum to its classical (complete) value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Lower,
    Upper,
}

impl Variant {
    /// The complementary variant.
    pub fn flip(self) -> Self {
        match self {
            Variant::Lower => Variant::Upper,
            Variant::Upper => Variant::Lower,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Lower => "lower",
            Variant::Upper => "upper",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Variant::Lower),
            "upper" => Ok(Variant::Upper),
            other => Err(Error::domain(format!(
                "unknown variant {other:?} (expected \"lower\" or \"upper\")"
            ))),
        }
    }
}

/// Evaluation-path selector for functions with dual series/integral routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Pick the series when its convergence radius holds with margin, else
    /// the integral path.
    Auto,
    Series,
    Integral,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Series => "series",
            Method::Integral => "integral",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "series" => Ok(Method::Series),
            "integral" => Ok(Method::Integral),
            other => Err(Error::domain(format!(
                "unknown method {other:?} (expected \"auto\", \"series\" or \"integral\")"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        EvalOptions::default().validate().unwrap();
    }

    #[test]
    fn invalid_options_are_rejected() {
        let o = EvalOptions {
            rel_tol: 0.0,
            ..EvalOptions::default()
        };
        assert!(o.validate().is_err());
        let o = EvalOptions {
            quad_nodes: 1,
            ..EvalOptions::default()
        };
        assert!(o.validate().is_err());
        let o = EvalOptions {
            max_terms: 0,
            ..EvalOptions::default()
        };
        assert!(o.validate().is_err());
    }

    #[test]
    fn variant_round_trips_through_str() {
        for v in [Variant::Lower, Variant::Upper] {
            assert_eq!(v.to_string().parse::<Variant>().unwrap(), v);
        }
        assert!("middle".parse::<Variant>().is_err());
    }

    #[test]
    fn method_round_trips_through_str() {
        for m in [Method::Auto, Method::Series, Method::Integral] {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("magic".parse::<Method>().is_err());
    }
}
