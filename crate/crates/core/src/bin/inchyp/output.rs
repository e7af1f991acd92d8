//! Serialization helpers shared by the subcommands.
//!
//! Everything machine-readable goes to stdout; progress and timing notes
//! go to stderr so identical invocations stay byte-identical on stdout.
//! Floats are printed by the shortest representation that re-parses to
//! the same double (serde_json's formatter), in JSON and CSV alike.

use inchyp::verify::VerifyReport;
use inchyp::EvalResult;

/// Prints an evaluation result as a single JSON object.
pub fn print_eval(r: &EvalResult) {
    println!(
        "{}",
        serde_json::to_string(r).expect("EvalResult serializes")
    );
}

/// Prints a verification report as a single JSON object.
pub fn print_report(r: &VerifyReport) {
    println!(
        "{}",
        serde_json::to_string(r).expect("VerifyReport serializes")
    );
}

/// A float as it appears in machine output (shortest round-trip form).
pub fn fmt_float(v: f64) -> String {
    serde_json::to_string(&v).expect("f64 serializes")
}
