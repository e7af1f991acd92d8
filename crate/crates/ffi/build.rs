//! Regenerates `include/inchyp.h` from the exported items.
//!
//! The header is committed; the build script rewrites it only when the
//! generated text differs, so clean builds never touch the file and a
//! drifted header shows up as a dirty working tree.

use std::path::Path;

fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets CARGO_MANIFEST_DIR");
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    println!("cargo:rerun-if-changed=include/inchyp.h");

    let config = cbindgen::Config::from_file(Path::new(&crate_dir).join("cbindgen.toml"))
        .expect("cbindgen.toml parses");
    let mut generated = Vec::new();
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("header generation succeeds")
        .write(&mut generated);

    let header_path = Path::new(&crate_dir).join("include/inchyp.h");
    let current = std::fs::read(&header_path).unwrap_or_default();
    if current != generated {
        std::fs::create_dir_all(header_path.parent().unwrap()).expect("include/ exists");
        std::fs::write(&header_path, &generated).expect("header is writable");
    }
}
