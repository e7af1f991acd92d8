//! Gauss–Jacobi quadrature on `[0, 1]` with endpoint weight
//! `u^p (1-u)^q`, built by the Golub–Welsch eigenvalue method.

use crate::error::{ensure_domain, Error, Result};
use crate::kernels::beta::ln_beta;
use crate::options::{EvalOptions, EvalResult};

/// Nodes and weights for `∫₀¹ u^p (1-u)^q f(u) du ≈ Σ wᵢ f(uᵢ)`.
///
/// The endpoint exponents are part of the rule: the quadrature integrates
/// the *smooth factor* `f`, with `u^p (1-u)^q` absorbed into the weights.
/// Immutable after construction and freely shareable across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    /// Strictly increasing nodes in (0, 1).
    pub nodes: Vec<f64>,
    /// Positive weights, same length as `nodes`.
    pub weights: Vec<f64>,
    /// Exponent `p > -1` of the `u^p` factor at `u = 0`.
    pub exponent_at_zero: f64,
    /// Exponent `q > -1` of the `(1-u)^q` factor at `u = 1`.
    pub exponent_at_one: f64,
}

impl QuadratureRule {
    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Whether the rule is empty (never true for constructed rules).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Applies the rule to the smooth factor `f`:
    /// returns `Σ wᵢ f(uᵢ) ≈ ∫₀¹ u^p (1-u)^q f(u) du`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&u, &w)| w * f(u))
            .sum()
    }
}

/// Symmetric tridiagonal QL with implicit shifts.
///
/// Diagonalizes the matrix with diagonal `d` and off-diagonal `e[..n-1]`
/// (`e` must have length `n`; its last element is scratch space for the
/// rotation sweep), accumulating the rotations into `z`, which enters as
/// `(1, 0, …, 0)` and leaves holding the first component of each
/// eigenvector. Eigenvalues land in `d`.
fn tridiag_ql(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 1 {
        return Ok(());
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            // Look for a negligible off-diagonal element.
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::NoConvergence(
                    "tridiagonal eigenvalue iteration stalled".into(),
                ));
            }
            // Implicit shift from the 2x2 block at l.
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Deflate: recover and restart this eigenvalue.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // Rotate the tracked first-row eigenvector components.
                let t = z[i + 1];
                z[i + 1] = s * z[i] + c * t;
                z[i] = c * z[i] - s * t;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Builds an `n`-node Gauss–Jacobi rule for weight `u^p (1-u)^q` on `[0,1]`.
///
/// Exact for polynomial smooth factors of degree ≤ 2n-1. Requires `n ≥ 1`
/// and `p, q > -1` (integrability of the endpoint factors).
///
/// ```
/// use inchyp::kernels::gauss_jacobi_rule;
/// // Legendre special case: one node is the midpoint rule.
/// let r = gauss_jacobi_rule(1, 0.0, 0.0).unwrap();
/// assert!((r.nodes[0] - 0.5).abs() < 1e-15);
/// assert!((r.weights[0] - 1.0).abs() < 1e-15);
/// // Two nodes integrate cubics exactly: ∫₀¹ u³ du = 1/4.
/// let r = gauss_jacobi_rule(2, 0.0, 0.0).unwrap();
/// assert!((r.integrate(|u| u * u * u) - 0.25).abs() < 1e-14);
/// // The weights alone sum to the weight-function integral B(p+1, q+1).
/// let r = gauss_jacobi_rule(16, -0.5, 0.0).unwrap();
/// assert!((r.integrate(|_| 1.0) - 2.0).abs() < 1e-13);
/// ```
pub fn gauss_jacobi_rule(n: usize, p: f64, q: f64) -> Result<QuadratureRule> {
    ensure_domain(n >= 1, "gauss_jacobi_rule requires n >= 1")?;
    ensure_domain(
        p > -1.0 && q > -1.0 && p.is_finite() && q.is_finite(),
        "gauss_jacobi_rule requires exponents > -1",
    )?;
    // Standard Jacobi weight (1-X)^alpha (1+X)^beta on [-1,1]; the map
    // u = (1+X)/2 sends X=1 to u=1 and X=-1 to u=0, so alpha=q, beta=p.
    let alpha = q;
    let beta = p;
    let ab = alpha + beta;

    // Three-term recurrence coefficients for monic Jacobi polynomials.
    let mut d = vec![0.0; n]; // diagonal: a_k
    let mut e = vec![0.0; n]; // off-diagonal: sqrt(b_k), last slot scratch
    d[0] = (beta - alpha) / (ab + 2.0);
    for k in 1..n {
        let k2 = 2.0 * k as f64 + ab;
        d[k] = (beta * beta - alpha * alpha) / (k2 * (k2 + 2.0));
        let bk = if k == 1 {
            4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0))
        } else {
            let kf = k as f64;
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (k2 * k2 * (k2 + 1.0) * (k2 - 1.0))
        };
        e[k - 1] = bk.sqrt();
    }

    let mut z = vec![0.0; n];
    z[0] = 1.0;
    tridiag_ql(&mut d, &mut e, &mut z)?;

    // Sort ascending by node and map to [0,1]. Total weight is
    // ∫₀¹ u^p(1-u)^q du = B(p+1, q+1).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("finite eigenvalues"));
    let total = ln_beta(p + 1.0, q + 1.0).exp();
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &j in &order {
        nodes.push((1.0 + d[j]) / 2.0);
        weights.push(total * z[j] * z[j]);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        exponent_at_zero: p,
        exponent_at_one: q,
    })
}

/// Integrates `u^p (1-u)^q g(u)` by Gauss–Jacobi rules of doubling size
/// until two successive sizes agree to `rel_tol` (at most three doublings
/// from `opts.quad_nodes`).
pub(crate) fn gj_doubling(
    p_exp: f64,
    q_exp: f64,
    g: impl Fn(f64) -> f64,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    let mut n = opts.quad_nodes.max(8);
    let mut effort = n as u64;
    let mut prev = gauss_jacobi_rule(n, p_exp, q_exp)?.integrate(&g);
    let mut err = f64::INFINITY;
    for _ in 0..3 {
        n *= 2;
        effort += n as u64;
        let cur = gauss_jacobi_rule(n, p_exp, q_exp)?.integrate(&g);
        err = (cur - prev).abs();
        prev = cur;
        if err <= opts.rel_tol * cur.abs() + 1e-300 {
            return Ok(EvalResult {
                value: cur,
                abs_err_est: err.max(f64::EPSILON * cur.abs()),
                effort,
                converged: true,
            });
        }
    }
    Ok(EvalResult {
        value: prev,
        abs_err_est: err,
        effort,
        converged: false,
    })
}

/// Tensor-product analogue of [`gj_doubling`] for
/// `∫₀¹∫₀¹ u^p v^r g(u, v) du dv` (no endpoint weight at 1 on either
/// axis). Effort counts integrand evaluations, so the doubling budget is
/// shorter: two rounds from `opts.quad_nodes` per axis.
pub(crate) fn gj_doubling_2d(
    p_u: f64,
    p_v: f64,
    g: impl Fn(f64, f64) -> f64,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    let tensor = |n: usize| -> Result<f64> {
        let ru = gauss_jacobi_rule(n, p_u, 0.0)?;
        let rv = gauss_jacobi_rule(n, p_v, 0.0)?;
        let mut acc = 0.0;
        for (&u, &wu) in ru.nodes.iter().zip(&ru.weights) {
            let mut inner = 0.0;
            for (&v, &wv) in rv.nodes.iter().zip(&rv.weights) {
                inner += wv * g(u, v);
            }
            acc += wu * inner;
        }
        Ok(acc)
    };
    let mut n = opts.quad_nodes.max(8);
    let mut effort = (n * n) as u64;
    let mut prev = tensor(n)?;
    let mut err = f64::INFINITY;
    for _ in 0..2 {
        n *= 2;
        effort += (n * n) as u64;
        let cur = tensor(n)?;
        err = (cur - prev).abs();
        prev = cur;
        if err <= opts.rel_tol * cur.abs() + 1e-300 {
            return Ok(EvalResult {
                value: cur,
                abs_err_est: err.max(f64::EPSILON * cur.abs()),
                effort,
                converged: true,
            });
        }
    }
    Ok(EvalResult {
        value: prev,
        abs_err_est: err,
        effort,
        converged: false,
    })
}
