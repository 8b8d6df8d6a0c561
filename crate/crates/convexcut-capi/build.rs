//! Generates the C header from the exported API.  The committed copy at
//! `include/convexcut.h` is compared against this output by a test, so a
//! stale header fails the build's test suite rather than silently drifting.

use std::path::PathBuf;

fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets CARGO_MANIFEST_DIR");
    let out =
        PathBuf::from(std::env::var("OUT_DIR").expect("cargo sets OUT_DIR")).join("convexcut.h");
    cbindgen::generate(&crate_dir)
        .expect("the exported API renders as a C header")
        .write_to_file(&out);
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
