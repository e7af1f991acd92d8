//! Command-line front-end: point evaluation, sweep tables, the
//! incomplete fractional operator on named operands, and the
//! identity-verification suites.
//!
//! Exit codes: 0 success / suites passed; 1 a verification suite failed;
//! 2 domain violation, unknown name, or bad usage; 3 the evaluation ran
//! but could not certify convergence (the partial result is still
//! printed).
//!
//! Machine output (JSON objects, JSON lines, CSV) goes to stdout and is
//! byte-identical across repeated identical invocations; timing notes go
//! to stderr. `INCHYP_THREADS` caps worker parallelism without affecting
//! output.

mod output;
mod table;

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use inchyp::appell::{appell_f1, appell_f2, AppellF1Params, AppellF2Params};
use inchyp::error::{ensure_domain, Error};
use inchyp::fracderiv::{ifrac, ifrac_power, FracOpSpec};
use inchyp::hyp::{ihyp_1f1, ihyp_2f1, ihyp_2f1_at_one, Hyp1F1Params, Hyp2F1Params};
use inchyp::kernels::{incomplete_beta, regularized_incomplete_beta};
use inchyp::ratios::{ratio, RatioSpec};
use inchyp::verify::{is_report_only, run_suite, suite_names, VerifyConfig};
use inchyp::{EvalOptions, EvalResult, Method, Result, Variant};

#[derive(Parser)]
#[command(
    name = "inchyp",
    version,
    about = "Incomplete hypergeometric functions and fractional operators"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Relative evaluation tolerance; for `verify`, overrides the
    /// suite's pass tolerance instead.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Series term budget.
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Base quadrature node count.
    #[arg(long, global = true)]
    quad_nodes: Option<usize>,
    /// Table output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Seed for verification parameter grids.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one function at one point; prints a JSON object.
    Eval(EvalArgs),
    /// Evaluate a function over parameter sweeps; prints CSV or JSON lines.
    Table(TableArgs),
    /// Run an identity-verification suite by name, or `all`.
    Verify(VerifyArgs),
    /// Apply the incomplete fractional operator to a named operand.
    Fracderiv(FracArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// One of: beta, reg-beta, ratio, 2f1, 1f1, 2f1-at-1, f1, f2,
    /// fracderiv-power.
    function: String,
    #[arg(long)]
    variant: Option<Variant>,
    #[arg(long)]
    method: Option<Method>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    d: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    e: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    z: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    /// Function id, as for `eval`.
    function: String,
    /// Fixed parameter `name=value` (repeatable). `variant=` and
    /// `method=` take their enum names.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
    /// Sweep axis `name=start:stop:steps` (repeatable; the row order is
    /// the cartesian product with the first axis outermost).
    #[arg(long = "sweep", value_name = "NAME=START:STOP:STEPS")]
    sweep: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Registered suite name, or `all`.
    suite: String,
    /// With `all`: skip suites quarantined as report-only.
    #[arg(long)]
    strict: bool,
}

#[derive(Args)]
struct FracArgs {
    /// Operand form: power (t^lambda), binomial ((1-scale*t)^-alpha),
    /// powbinomial (t^lambda*(1-scale*t)^-alpha), exp (e^(x*t)).
    operand: String,
    #[arg(long)]
    variant: Option<Variant>,
    /// Operator order (< 0).
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Cutoff in [0, 1].
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    /// Evaluation point (> 0).
    #[arg(long, allow_negative_numbers = true)]
    z: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Pole scale of the binomial factor.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    scale: f64,
    /// Exponent rate of the exp operand.
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
}

/// Named parameters a function evaluation draws from. Float parameters
/// live in one map so sweeps can address them by name.
#[derive(Clone)]
pub struct ParamBag {
    pub floats: BTreeMap<String, f64>,
    pub variant: Option<Variant>,
    pub method: Option<Method>,
}

impl ParamBag {
    fn float(&self, name: &str) -> Result<f64> {
        self.floats
            .get(name)
            .copied()
            .ok_or_else(|| Error::domain(format!("missing required parameter '{name}'")))
    }

    fn int(&self, name: &str) -> Result<u32> {
        let v = self.float(name)?;
        ensure_domain(
            v.fract() == 0.0 && (0.0..=u32::MAX as f64).contains(&v),
            "parameter 'n' must be a small non-negative integer",
        )?;
        Ok(v as u32)
    }

    fn variant(&self) -> Result<Variant> {
        self.variant
            .ok_or_else(|| Error::domain("missing required parameter 'variant'"))
    }

    fn method(&self) -> Method {
        self.method.unwrap_or(Method::Auto)
    }
}

/// Float parameter names each function understands (for table
/// validation; `variant` and `method` are handled separately).
pub fn param_names(function: &str) -> Result<&'static [&'static str]> {
    Ok(match function {
        "beta" | "reg-beta" => &["y", "x", "z"],
        "ratio" => &["b", "c", "n", "y"],
        "2f1" => &["a", "b", "c", "y", "x"],
        "1f1" => &["a", "b", "y", "x"],
        "2f1-at-1" => &["a", "b", "c", "y"],
        "f1" => &["a", "b", "c", "d", "x", "z", "y"],
        "f2" => &["a", "b", "c", "d", "e", "x", "z", "y"],
        "fracderiv-power" => &["lambda", "mu", "y", "z"],
        other => {
            return Err(Error::domain(format!(
                "unknown function '{other}' (expected beta, reg-beta, ratio, 2f1, 1f1, \
                 2f1-at-1, f1, f2, or fracderiv-power)"
            )))
        }
    })
}

/// Evaluates one function from named parameters.
pub fn eval_function(function: &str, p: &ParamBag, opts: &EvalOptions) -> Result<EvalResult> {
    match function {
        "beta" => Ok(EvalResult::exact(incomplete_beta(
            p.float("y")?,
            p.float("x")?,
            p.float("z")?,
        )?)),
        "reg-beta" => Ok(EvalResult::exact(regularized_incomplete_beta(
            p.float("y")?,
            p.float("x")?,
            p.float("z")?,
        )?)),
        "ratio" => {
            let spec = RatioSpec {
                b: p.float("b")?,
                c: p.float("c")?,
                n: p.int("n")?,
                y: p.float("y")?,
                variant: p.variant()?,
            };
            ratio(&spec, opts)
        }
        "2f1" => {
            let q = Hyp2F1Params {
                a: p.float("a")?,
                b: p.float("b")?,
                c: p.float("c")?,
                y: p.float("y")?,
                x: p.float("x")?,
                variant: p.variant()?,
            };
            ihyp_2f1(&q, p.method(), opts)
        }
        "1f1" => {
            let q = Hyp1F1Params {
                a: p.float("a")?,
                b: p.float("b")?,
                y: p.float("y")?,
                x: p.float("x")?,
                variant: p.variant()?,
            };
            ihyp_1f1(&q, p.method(), opts)
        }
        "2f1-at-1" => ihyp_2f1_at_one(
            p.variant()?,
            p.float("a")?,
            p.float("b")?,
            p.float("c")?,
            p.float("y")?,
        ),
        "f1" => {
            let q = AppellF1Params {
                a: p.float("a")?,
                b: p.float("b")?,
                c: p.float("c")?,
                d: p.float("d")?,
                x: p.float("x")?,
                z: p.float("z")?,
                y: p.float("y")?,
                variant: p.variant()?,
            };
            appell_f1(&q, p.method(), opts)
        }
        "f2" => {
            let q = AppellF2Params {
                a: p.float("a")?,
                b: p.float("b")?,
                c: p.float("c")?,
                d: p.float("d")?,
                e: p.float("e")?,
                x: p.float("x")?,
                z: p.float("z")?,
                y: p.float("y")?,
                variant: p.variant()?,
            };
            appell_f2(&q, p.method(), opts)
        }
        "fracderiv-power" => {
            let spec = FracOpSpec {
                mu: p.float("mu")?,
                y: p.float("y")?,
                z: p.float("z")?,
                variant: p.variant()?,
            };
            ifrac_power(p.float("lambda")?, &spec)
        }
        other => Err(Error::domain(format!("unknown function '{other}'"))),
    }
}

fn build_options(cli: &Cli) -> Result<EvalOptions> {
    let mut opts = EvalOptions::default();
    // For `verify` the --tol flag overrides the pass tolerance instead
    // of the evaluation tolerance; the dispatcher handles that case.
    if let Some(t) = cli.tol {
        opts.rel_tol = t;
    }
    if let Some(m) = cli.max_terms {
        opts.max_terms = m;
    }
    if let Some(q) = cli.quad_nodes {
        opts.quad_nodes = q;
    }
    opts.validate()?;
    Ok(opts)
}

/// Worker-thread cap from the environment (`INCHYP_THREADS`).
fn thread_cap() -> Option<usize> {
    let raw = std::env::var("INCHYP_THREADS").ok()?;
    match raw.parse::<usize>() {
        Ok(n) if n > 0 => Some(n),
        _ => {
            eprintln!("ignoring INCHYP_THREADS='{raw}' (expected a positive integer)");
            None
        }
    }
}

fn eval_args_to_bag(a: &EvalArgs) -> ParamBag {
    let mut floats = BTreeMap::new();
    for (name, v) in [
        ("a", a.a),
        ("b", a.b),
        ("c", a.c),
        ("d", a.d),
        ("e", a.e),
        ("n", a.n),
        ("x", a.x),
        ("y", a.y),
        ("z", a.z),
        ("lambda", a.lambda),
        ("mu", a.mu),
    ] {
        if let Some(v) = v {
            floats.insert(name.to_string(), v);
        }
    }
    ParamBag {
        floats,
        variant: a.variant,
        method: a.method,
    }
}

fn parse_set(bag: &mut ParamBag, spec: &str, known: &[&str]) -> Result<()> {
    let (name, value) = spec
        .split_once('=')
        .ok_or_else(|| Error::domain(format!("--set '{spec}' is not name=value")))?;
    match name {
        "variant" => bag.variant = Some(value.parse()?),
        "method" => bag.method = Some(value.parse()?),
        _ => {
            ensure_domain(
                known.contains(&name),
                &format!("'{name}' is not a parameter of this function"),
            )?;
            let v: f64 = value
                .parse()
                .map_err(|_| Error::domain(format!("--set value '{value}' is not a number")))?;
            bag.floats.insert(name.to_string(), v);
        }
    }
    Ok(())
}

fn run_fracderiv(args: &FracArgs, opts: &EvalOptions) -> Result<EvalResult> {
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| Error::domain(format!("missing required parameter '--{name}'")))
    };
    let spec = FracOpSpec {
        mu: need(args.mu, "mu")?,
        y: need(args.y, "y")?,
        z: need(args.z, "z")?,
        variant: args
            .variant
            .ok_or_else(|| Error::domain("missing required parameter '--variant'"))?,
    };
    // Keep poles and endpoint singularities out of the integration range
    // up front so failures are diagnostics, not NaNs.
    let check_scale = |scale: f64| {
        ensure_domain(
            scale <= 0.0 || scale * spec.z < 1.0,
            "binomial operand requires scale*z < 1",
        )
    };
    let check_lambda =
        |lambda: f64| ensure_domain(lambda > -1.0, "power operand requires lambda > -1");
    match args.operand.as_str() {
        "power" => {
            let lambda = need(args.lambda, "lambda")?;
            check_lambda(lambda)?;
            ifrac(|t| t.powf(lambda), &spec, opts)
        }
        "binomial" => {
            let alpha = need(args.alpha, "alpha")?;
            let scale = args.scale;
            check_scale(scale)?;
            ifrac(|t| (1.0 - scale * t).powf(-alpha), &spec, opts)
        }
        "powbinomial" => {
            let lambda = need(args.lambda, "lambda")?;
            let alpha = need(args.alpha, "alpha")?;
            let scale = args.scale;
            check_lambda(lambda)?;
            check_scale(scale)?;
            ifrac(
                |t| t.powf(lambda) * (1.0 - scale * t).powf(-alpha),
                &spec,
                opts,
            )
        }
        "exp" => {
            let x = need(args.x, "x")?;
            ensure_domain(x.is_finite(), "exp operand requires finite x")?;
            ifrac(|t| (x * t).exp(), &spec, opts)
        }
        other => Err(Error::domain(format!(
            "unknown operand '{other}' (expected power, binomial, powbinomial, or exp)"
        ))),
    }
}

fn run_verify(args: &VerifyArgs, cli: &Cli) -> Result<i32> {
    let cfg = VerifyConfig {
        seed: cli.seed,
        tolerance_override: cli.tol,
        threads: thread_cap(),
    };
    if args.suite == "all" {
        let names = suite_names();
        let selected: Vec<&str> = if args.strict {
            names.into_iter().filter(|n| !is_report_only(n)).collect()
        } else {
            names
        };
        let mut failed = false;
        for name in selected {
            let t0 = Instant::now();
            let report = run_suite(name, &cfg)?;
            eprintln!(
                "{name}: {} in {} ms",
                if report.report_only {
                    "report"
                } else if report.pass {
                    "pass"
                } else {
                    "FAIL"
                },
                t0.elapsed().as_millis()
            );
            output::print_report(&report);
            failed |= !report.pass && !report.report_only;
        }
        Ok(if failed { 1 } else { 0 })
    } else {
        let t0 = Instant::now();
        let report = run_suite(&args.suite, &cfg)?;
        eprintln!(
            "{}: {} in {} ms",
            report.suite,
            if report.report_only {
                "report"
            } else if report.pass {
                "pass"
            } else {
                "FAIL"
            },
            t0.elapsed().as_millis()
        );
        output::print_report(&report);
        Ok(if report.pass || report.report_only {
            0
        } else {
            1
        })
    }
}

fn run(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::Eval(args) => {
            let opts = build_options(cli)?;
            let bag = eval_args_to_bag(args);
            param_names(&args.function)?; // reject unknown ids early
            let r = eval_function(&args.function, &bag, &opts)?;
            output::print_eval(&r);
            Ok(if r.converged { 0 } else { 3 })
        }
        Cmd::Table(args) => {
            let opts = build_options(cli)?;
            let known = param_names(&args.function)?;
            let mut bag = ParamBag {
                floats: BTreeMap::new(),
                variant: None,
                method: None,
            };
            for spec in &args.set {
                parse_set(&mut bag, spec, known)?;
            }
            let sweeps: Vec<table::SweepAxis> = args
                .sweep
                .iter()
                .map(|s| {
                    let axis = table::parse_sweep(s)?;
                    ensure_domain(
                        known.contains(&axis.name.as_str()),
                        &format!("'{}' is not a parameter of this function", axis.name),
                    )?;
                    Ok(axis)
                })
                .collect::<Result<_>>()?;
            table::run_table(
                &args.function,
                &bag,
                &sweeps,
                cli.format,
                &opts,
                thread_cap(),
            )
        }
        Cmd::Verify(args) => run_verify(args, cli),
        Cmd::Fracderiv(args) => {
            let opts = build_options(cli)?;
            let r = run_fracderiv(args, &opts)?;
            output::print_eval(&r);
            Ok(if r.converged { 0 } else { 3 })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(match e {
                Error::Domain(_) => 2,
                Error::NoConvergence(_) => 3,
            });
        }
    }
}
