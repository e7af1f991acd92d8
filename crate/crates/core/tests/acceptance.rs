//! Acceptance gate: one test per shipping criterion, each printing a
//! single `criterion NN: PASS/FAIL — …` line (visible under
//! `cargo test --test acceptance -- --nocapture`).
//!
//! The criteria pin residual ceilings, grid sizes, runtime budgets, the
//! trivially-known spot values, and the determinism contract. Everything
//! runs through the public library API with the default seed.

use std::time::Instant;

use inchyp::appell::{appell_f1, AppellF1Params};
use inchyp::hyp::{ihyp_2f1, ihyp_2f1_at_one, Hyp2F1Params};
use inchyp::kernels::adaptive_integrate;
use inchyp::verify::{run_suite, suite_names, VerifyConfig};
use inchyp::{EvalOptions, Method, Variant};

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

/// Runs one suite and folds its outcome into `ok`, collecting a short
/// summary fragment.
fn suite_check(name: &str, max_tol: f64, min_cases: usize, ok: &mut bool, notes: &mut Vec<String>) {
    match run_suite(name, &cfg()) {
        Ok(r) => {
            let good = r.pass && r.tolerance <= max_tol && r.cases >= min_cases;
            *ok &= good;
            notes.push(format!("{name} {:.2e}", r.max_residual));
        }
        Err(e) => {
            *ok = false;
            notes.push(format!("{name} errored: {e}"));
        }
    }
}

fn report(number: u32, ok: bool, desc: &str) {
    println!(
        "criterion {number:02}: {} — {desc}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {number:02} failed: {desc}");
}

#[test]
fn criterion_01_beta_decomposition() {
    let t0 = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("beta-decomposition", 1e-11, 500, &mut ok, &mut notes);
    let dt = t0.elapsed();
    ok &= dt.as_secs_f64() < 5.0;
    report(
        1,
        ok,
        &format!(
            "incomplete-beta decomposition, 500-point grid ({}, {:.3} s < 5 s)",
            notes.join(", "),
            dt.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_02_ratio_decomposition_and_dual_path() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("ratio-decomposition", 1e-10, 100, &mut ok, &mut notes);
    suite_check("ratio-dual-path", 1e-10, 100, &mut ok, &mut notes);
    report(
        2,
        ok,
        &format!(
            "Pochhammer-ratio decomposition and dual-path agreement, n up to 20 ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_03_hypergeometric_decompositions_and_dual_path() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("decomposition-2f1", 1e-10, 200, &mut ok, &mut notes);
    suite_check("decomposition-1f1", 1e-10, 200, &mut ok, &mut notes);
    suite_check("dual-path-2f1", 1e-9, 100, &mut ok, &mut notes);
    suite_check("dual-path-1f1", 1e-9, 100, &mut ok, &mut notes);
    report(
        3,
        ok,
        &format!(
            "2F1/1F1 decompositions and series-vs-integral agreement ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_04_closed_form_spot_values() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("closed-form-spot", 1e-10, 20, &mut ok, &mut notes);
    report(
        4,
        ok,
        &format!(
            "log and expm1 closed forms at 20 (x,y) points ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_05_values_at_unit_argument() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("gauss-value", 1e-8, 50, &mut ok, &mut notes);
    // Derived exact case: (a,b,c) = (1,1,3) gives lower = 2y, upper = 2-2y.
    for y in [0.1, 0.3, 0.7, 0.9] {
        let lo = ihyp_2f1_at_one(Variant::Lower, 1.0, 1.0, 3.0, y)
            .unwrap()
            .value;
        let up = ihyp_2f1_at_one(Variant::Upper, 1.0, 1.0, 3.0, y)
            .unwrap()
            .value;
        ok &= (lo - 2.0 * y).abs() < 1e-13 && (up - (2.0 - 2.0 * y)).abs() < 1e-13;
    }
    report(
        5,
        ok,
        &format!(
            "x = 1 values vs quadrature, including the exact 2y case ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_06_transformation_formulas() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("transforms", 1e-9, 50, &mut ok, &mut notes);
    report(
        6,
        ok,
        &format!(
            "argument-map and exponential-map transforms with round-trip invariance ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_07_derivative_formulas() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("derivative-ratio", 1e-5, 20, &mut ok, &mut notes);
    suite_check("derivative-shift", 1e-6, 30, &mut ok, &mut notes);
    report(
        7,
        ok,
        &format!(
            "cutoff-derivative identity at n = 1,2 and argument-derivative parameter shift ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_08_cutoff_moment_relations() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("y-moment", 1e-7, 40, &mut ok, &mut notes);
    // Analytic case: integrating the lower Gauss function over the cutoff
    // at (a,b,c,x) = (1,1,2,0.5) gives 2 - 2 ln 2 = 0.6137056389….
    let opts = EvalOptions::default();
    let lhs = adaptive_integrate(
        |y| {
            let p = Hyp2F1Params {
                a: 1.0,
                b: 1.0,
                c: 2.0,
                y,
                x: 0.5,
                variant: Variant::Lower,
            };
            ihyp_2f1(&p, Method::Auto, &opts)
                .map(|r| r.value)
                .unwrap_or(f64::NAN)
        },
        0.0,
        1.0,
        &opts,
    )
    .unwrap()
    .value;
    ok &= (lhs - 0.6137056389).abs() < 1e-7;
    ok &= (lhs - (2.0 - 2.0 * std::f64::consts::LN_2)).abs() < 1e-9;
    report(
        8,
        ok,
        &format!(
            "cutoff-moment relations, analytic value {lhs:.10} vs 0.6137056389 ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_09_appell_dual_path_and_reductions() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("appell-f1", 1e-8, 40, &mut ok, &mut notes);
    suite_check("appell-f2", 1e-7, 30, &mut ok, &mut notes);
    // Direct reduction spot: F1 with z = 0 collapses to the Gauss
    // function with the same joint ratio pair, term for term.
    let opts = EvalOptions::default();
    let f1 = AppellF1Params {
        a: 0.9,
        b: 1.2,
        c: 0.7,
        d: 2.8,
        x: 0.3,
        z: 0.0,
        y: 0.6,
        variant: Variant::Lower,
    };
    let reduced = Hyp2F1Params {
        a: 1.2,
        b: 0.9,
        c: 2.8,
        y: 0.6,
        x: 0.3,
        variant: Variant::Lower,
    };
    let lhs = appell_f1(&f1, Method::Series, &opts).unwrap().value;
    let rhs = ihyp_2f1(&reduced, Method::Series, &opts).unwrap().value;
    ok &= ((lhs - rhs) / rhs).abs() < 1e-12;
    report(
        9,
        ok,
        &format!(
            "Appell F1/F2 dual path and z=0, c=0, x=z reductions ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_10_fractional_operator() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("fracderiv-power", 1e-9, 30, &mut ok, &mut notes);
    suite_check("fracderiv-closed-forms", 1e-7, 12, &mut ok, &mut notes);
    suite_check("fracderiv-decomposition", 1e-8, 15, &mut ok, &mut notes);
    report(
        10,
        ok,
        &format!(
            "fractional operator: power rule, closed-form images, classical decomposition ({})",
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_11_generating_relations_within_time_budget() {
    let mut ok = true;
    let mut notes = Vec::new();
    suite_check("genrel-linear", 1e-7, 12, &mut ok, &mut notes);
    suite_check("genrel-bilinear", 1e-7, 8, &mut ok, &mut notes);
    // The whole registry must clear its runtime budget in one process.
    let t0 = Instant::now();
    for name in suite_names() {
        let _ = run_suite(name, &cfg()).unwrap();
    }
    let dt = t0.elapsed();
    ok &= dt.as_secs_f64() < 60.0;
    report(
        11,
        ok,
        &format!(
            "generating relations vs truncation tail; full registry in {:.2} s < 60 s ({})",
            dt.as_secs_f64(),
            notes.join(", ")
        ),
    );
}

#[test]
fn criterion_12_difference_relation_report() {
    // The three-term difference relation is tracked, not gated: the
    // verifier must produce its residual report deterministically, and
    // the report must carry the near-zero rebalanced residual alongside
    // the O(1) residuals of the conjectured grouping.
    let a = run_suite("difference-relation", &cfg()).unwrap();
    let b = run_suite("difference-relation", &cfg()).unwrap();
    let mut ok = a.report_only && !a.pass;
    ok &= serde_json::to_string(&a).unwrap() == serde_json::to_string(&b).unwrap();
    ok &= a.max_residual > 1.0;
    ok &= a
        .extra
        .get("max_repaired_residual")
        .is_some_and(|r| *r < 1e-9);
    report(
        12,
        ok,
        &format!(
            "difference relation reported deterministically (stated residual {:.3}, rebalanced {:.2e}; open question, pass not required)",
            a.max_residual,
            a.extra.get("max_repaired_residual").copied().unwrap_or(f64::NAN)
        ),
    );
}
