//! The committed C header must stand on its own: accepted by a C99
//! compiler, exposing the selector constants, and declaring every
//! exported symbol.

use std::process::Command;

fn crate_dir() -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_compiles_as_c99() {
    let snippet = r#"
#include "inchyp.h"

int check(void) {
    InchypOptions *opts = inchyp_options_new();
    InchypResult r;
    InchypStatus st = inchyp_hyp2f1(
        INCHYP_VARIANT_LOWER, INCHYP_METHOD_AUTO,
        0.7, 1.3, 3.1, 0.4, 0.6, opts, &r);
    inchyp_options_free(opts);
    return st == INCHYP_STATUS_OK && r.converged;
}
"#;
    let dir = std::env::temp_dir().join("inchyp-header-check");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use_header.c");
    std::fs::write(&src, snippet).unwrap();

    let out = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-fsyntax-only")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&src)
        .output()
        .expect("a C compiler is available");
    assert!(
        out.status.success(),
        "header failed C99 syntax check:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn header_declares_every_exported_symbol() {
    let header = std::fs::read_to_string(crate_dir().join("include/inchyp.h")).unwrap();
    for symbol in [
        "inchyp_options_new",
        "inchyp_options_free",
        "inchyp_options_set_rel_tol",
        "inchyp_options_set_max_terms",
        "inchyp_options_set_quad_nodes",
        "inchyp_incomplete_beta",
        "inchyp_regularized_incomplete_beta",
        "inchyp_ratio",
        "inchyp_hyp2f1",
        "inchyp_hyp1f1",
        "inchyp_hyp2f1_at_one",
        "inchyp_appell_f1",
        "inchyp_appell_f2",
        "inchyp_frac_power",
        "inchyp_frac_apply",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
    for constant in [
        "INCHYP_VARIANT_LOWER",
        "INCHYP_VARIANT_UPPER",
        "INCHYP_METHOD_AUTO",
        "INCHYP_METHOD_SERIES",
        "INCHYP_METHOD_INTEGRAL",
        "INCHYP_STATUS_OK",
        "INCHYP_STATUS_PANIC",
    ] {
        assert!(header.contains(constant), "header lacks {constant}");
    }
}
