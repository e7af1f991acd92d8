//! Guarded term-by-term series summation.

use crate::options::{EvalOptions, EvalResult};

/// Sums `Σₙ term(n)` until three consecutive terms are negligible.
///
/// `term(n)` is called once per index, in order, starting at `n = 0`.
/// A term is negligible when `|term| ≤ rel_tol·|partial| + 1e-300`; the
/// three-in-a-row rule guards against accidental zero terms (alternating
/// signs, truncating Pochhammer factors). The reported error estimate is a
/// geometric tail bound from the last observed term ratio. Hitting
/// `max_terms` returns the partial sum with `converged == false`.
///
/// ```
/// use inchyp::kernels::sum_series;
/// use inchyp::EvalOptions;
/// let opts = EvalOptions::default();
/// // Geometric series Σ 0.5^n = 2.
/// let r = sum_series(|n| 0.5f64.powi(n as i32), &opts);
/// assert!(r.converged);
/// assert!((r.value - 2.0).abs() < 1e-11);
/// ```
pub fn sum_series<F: FnMut(usize) -> f64>(mut term: F, opts: &EvalOptions) -> EvalResult {
    let mut sum = 0.0;
    let mut small_run = 0;
    let mut run_max = 0.0f64;
    let mut prev_abs = 0.0;
    let mut ratio = f64::NAN;
    let mut last_abs = 0.0;

    for n in 0..opts.max_terms {
        let t = term(n);
        sum += t;
        let at = t.abs();
        if at > 0.0 && prev_abs > 0.0 {
            ratio = at / prev_abs;
        }
        if at > 0.0 {
            prev_abs = at;
        }
        last_abs = at;
        if at <= opts.rel_tol * sum.abs() + 1e-300 {
            small_run += 1;
            run_max = run_max.max(at);
            if small_run >= 3 && n >= 2 {
                // The tail bound comes from the stopping run itself, so a
                // series that truncates to exact zeros reports a zero tail
                // rather than its last nonzero term.
                let tail = if ratio.is_finite() && ratio < 1.0 {
                    run_max * ratio / (1.0 - ratio)
                } else {
                    run_max
                };
                return EvalResult {
                    value: sum,
                    abs_err_est: tail + f64::EPSILON * sum.abs(),
                    effort: (n + 1) as u64,
                    converged: true,
                };
            }
        } else {
            small_run = 0;
            run_max = 0.0;
        }
    }
    EvalResult {
        value: sum,
        abs_err_est: last_abs.max(prev_abs),
        effort: opts.max_terms as u64,
        converged: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_series() {
        let opts = EvalOptions::default();
        let mut t = 1.0;
        let r = sum_series(
            |n| {
                if n > 0 {
                    t /= n as f64;
                }
                t
            },
            &opts,
        );
        assert!(r.converged);
        assert!((r.value - std::f64::consts::E).abs() < 1e-12);
        assert!(r.abs_err_est < 1e-12);
    }

    #[test]
    fn alternating_series() {
        // Σ (-1)^n / n! = 1/e.
        let opts = EvalOptions::default();
        let mut t = 1.0;
        let r = sum_series(
            |n| {
                if n > 0 {
                    t *= -1.0 / n as f64;
                }
                t
            },
            &opts,
        );
        assert!(r.converged);
        assert!((r.value - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn all_zero_terms_converge_to_zero() {
        let opts = EvalOptions::default();
        let r = sum_series(|_| 0.0, &opts);
        assert!(r.converged);
        assert_eq!(r.value, 0.0);
        assert!(r.effort <= 4);
    }

    #[test]
    fn exact_truncation_reports_tiny_error() {
        // A polynomial in series clothing: one term, then exact zeros. The
        // error estimate must reflect the zero tail, not the lone term.
        let opts = EvalOptions::default();
        let r = sum_series(|n| if n == 0 { 0.25 } else { 0.0 }, &opts);
        assert!(r.converged);
        assert_eq!(r.value, 0.25);
        assert!(r.abs_err_est < 1e-15);
    }

    #[test]
    fn zero_gap_does_not_stop_early() {
        // Terms 1, 0, 0, 5, then zeros: the two-zero gap must not trigger
        // convergence before the 5 arrives.
        let opts = EvalOptions::default();
        let r = sum_series(
            |n| [1.0, 0.0, 0.0, 5.0][n.min(3)] * if n > 3 { 0.0 } else { 1.0 },
            &opts,
        );
        assert!(r.converged);
        assert_eq!(r.value, 6.0);
    }

    #[test]
    fn budget_exhaustion_flags_nonconvergence() {
        let opts = EvalOptions {
            max_terms: 10,
            ..EvalOptions::default()
        };
        let r = sum_series(|_| 1.0, &opts);
        assert!(!r.converged);
        assert_eq!(r.value, 10.0);
        assert_eq!(r.effort, 10);
    }
}
