//! Foundation numerics used by every higher module.
//!
//! | Item | Purpose |
//! |------|---------|
//! | [`log_gamma`] | ln Γ(x) by Lanczos approximation (g = 7, 9 terms) |
//! | [`beta`], [`log_beta`] | complete beta function in linear / log space |
//! | [`incomplete_beta`] | `B_y(x,z) = ∫₀^y t^{x-1}(1-t)^{z-1} dt`, any real `z` |
//! | [`regularized_incomplete_beta`] | `I_y(x,z) = B_y(x,z)/B(x,z)` by continued fraction |
//! | [`complete_2f1`], [`complete_1f1`] | classical reference hypergeometric functions |
//! | [`gauss_jacobi_rule`] | nodes/weights for `∫₀¹ u^p (1-u)^q f(u) du` |
//! | [`adaptive_integrate`] | tanh-sinh integration, robust to endpoint singularities |
//! | [`sum_series`] | guarded term-by-term summation with tail estimate |
//!
//! All routines are pure and reentrant; rules returned by
//! [`gauss_jacobi_rule`] are immutable after construction.

pub(crate) mod beta;
mod classical;
pub(crate) mod gamma;
pub(crate) mod quad;
mod series;
mod tanhsinh;

pub use beta::{beta, incomplete_beta, log_beta, regularized_incomplete_beta};
pub use classical::{complete_1f1, complete_2f1};
pub use gamma::{ln_gamma_signed, log_gamma};
pub use quad::{gauss_jacobi_rule, QuadratureRule};
pub use series::sum_series;
pub use tanhsinh::adaptive_integrate;

pub(crate) use tanhsinh::adaptive_integrate_parts;
