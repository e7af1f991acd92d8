//! Parameter-sweep tables.
//!
//! A table request is a function id, fixed parameters, and one or more
//! sweep axes. Rows are the cartesian product of the axes in declared
//! order (first axis outermost), evaluated concurrently but emitted in
//! that deterministic order. Per-row domain failures become rows with a
//! populated `error` column instead of aborting the table.

use inchyp::error::{Error, Result};
use inchyp::{EvalOptions, EvalResult};
use rayon::prelude::*;

use crate::output::fmt_float;
use crate::{eval_function, Format, ParamBag};

/// One sweep axis: parameter name and the evaluation points.
pub struct SweepAxis {
    pub name: String,
    pub values: Vec<f64>,
}

/// Parses `name=start:stop:steps` into an inclusive linear grid.
pub fn parse_sweep(spec: &str) -> Result<SweepAxis> {
    let (name, rest) = spec
        .split_once('=')
        .ok_or_else(|| Error::domain(format!("sweep '{spec}' is not name=start:stop:steps")))?;
    let parts: Vec<&str> = rest.split(':').collect();
    let [start, stop, steps] = parts.as_slice() else {
        return Err(Error::domain(format!(
            "sweep '{spec}' is not name=start:stop:steps"
        )));
    };
    let start: f64 = start
        .parse()
        .map_err(|_| Error::domain(format!("sweep start '{start}' is not a number")))?;
    let stop: f64 = stop
        .parse()
        .map_err(|_| Error::domain(format!("sweep stop '{stop}' is not a number")))?;
    let steps: usize = steps
        .parse()
        .map_err(|_| Error::domain(format!("sweep steps '{steps}' is not a count")))?;
    if steps < 1 {
        return Err(Error::domain("sweep needs at least 1 step"));
    }
    let values = if steps == 1 {
        vec![start]
    } else {
        (0..steps)
            .map(|i| start + i as f64 * (stop - start) / (steps - 1) as f64)
            .collect()
    };
    Ok(SweepAxis {
        name: name.to_string(),
        values,
    })
}

/// Evaluates and prints the table; returns the process exit code
/// (0 normally, 2 when every row failed).
pub fn run_table(
    function: &str,
    fixed: &ParamBag,
    sweeps: &[SweepAxis],
    format: Format,
    opts: &EvalOptions,
    threads: Option<usize>,
) -> Result<i32> {
    if sweeps.is_empty() {
        return Err(Error::domain("table needs at least one --sweep axis"));
    }
    // Cartesian product in lexicographic order, first axis outermost.
    let mut rows: Vec<Vec<f64>> = vec![vec![]];
    for axis in sweeps {
        rows = rows
            .iter()
            .flat_map(|prefix| {
                axis.values.iter().map(move |&v| {
                    let mut r = prefix.clone();
                    r.push(v);
                    r
                })
            })
            .collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::domain(format!("could not start worker pool: {e}")))?;
    // Concurrent evaluation, order-preserving collect.
    let results: Vec<std::result::Result<EvalResult, Error>> = pool.install(|| {
        rows.par_iter()
            .map(|point| {
                let mut bag = fixed.clone();
                for (axis, &v) in sweeps.iter().zip(point) {
                    bag.floats.insert(axis.name.clone(), v);
                }
                eval_function(function, &bag, opts)
            })
            .collect()
    });
    match format {
        Format::Csv => emit_csv(sweeps, &rows, &results)?,
        Format::Json => emit_jsonl(sweeps, &rows, &results),
    }
    let all_failed = results.iter().all(|r| r.is_err());
    Ok(if all_failed { 2 } else { 0 })
}

fn emit_csv(
    sweeps: &[SweepAxis],
    rows: &[Vec<f64>],
    results: &[std::result::Result<EvalResult, Error>],
) -> Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    let mut header: Vec<String> = sweeps.iter().map(|a| a.name.clone()).collect();
    header.extend(["value", "abs_err_est", "effort", "converged", "error"].map(str::to_string));
    let io_err = |e: csv::Error| Error::domain(format!("could not write table: {e}"));
    w.write_record(&header).map_err(io_err)?;
    for (point, res) in rows.iter().zip(results) {
        let mut record: Vec<String> = point.iter().map(|&v| fmt_float(v)).collect();
        match res {
            Ok(r) => record.extend([
                fmt_float(r.value),
                fmt_float(r.abs_err_est),
                r.effort.to_string(),
                r.converged.to_string(),
                String::new(),
            ]),
            Err(e) => record.extend([
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                e.to_string(),
            ]),
        }
        w.write_record(&record).map_err(io_err)?;
    }
    w.flush()
        .map_err(|e| Error::domain(format!("could not flush table: {e}")))
}

fn emit_jsonl(
    sweeps: &[SweepAxis],
    rows: &[Vec<f64>],
    results: &[std::result::Result<EvalResult, Error>],
) {
    for (point, res) in rows.iter().zip(results) {
        let mut obj = serde_json::Map::new();
        for (axis, &v) in sweeps.iter().zip(point) {
            obj.insert(axis.name.clone(), serde_json::json!(v));
        }
        match res {
            Ok(r) => {
                obj.insert("value".into(), serde_json::json!(r.value));
                obj.insert("abs_err_est".into(), serde_json::json!(r.abs_err_est));
                obj.insert("effort".into(), serde_json::json!(r.effort));
                obj.insert("converged".into(), serde_json::json!(r.converged));
            }
            Err(e) => {
                obj.insert("error".into(), serde_json::json!(e.to_string()));
            }
        }
        println!("{}", serde_json::Value::Object(obj));
    }
}
