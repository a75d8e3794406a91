//! The bundled example library.
//!
//! Examples are generated from the library constructors rather than stored
//! as files, so they can never drift from the staircase and tensor code
//! paths they are meant to exercise. The `examples` subcommand prints them;
//! any file argument that does not name a real file falls back to this
//! library (optionally routed through `UPSILON_EXAMPLES_DIR`), so commands
//! like `upsilon eval examples/t37.json --t 4/5` work out of the box.

use upsilon_core::algebra::tensor;
use upsilon_core::complex::Complex;

pub const NAMES: [&str; 5] = ["unknot", "t23", "t25", "t37", "t23_sum_t23"];

/// Looks up a bundled example by name. The display name of the connected
/// sum is `t23#t23`; its lookup key is `t23_sum_t23`.
pub fn get(name: &str) -> Option<(String, Complex)> {
    let t23 = || Complex::staircase(&[1, 1]).expect("trefoil staircase");
    match name {
        "unknot" => Some(("unknot".to_string(), Complex::unknot())),
        "t23" => Some(("t23".to_string(), t23())),
        "t25" => Some((
            "t25".to_string(),
            Complex::staircase(&[1, 1, 1, 1]).expect("t25 staircase"),
        )),
        "t37" => Some((
            "t37".to_string(),
            Complex::staircase(&[1, 2, 1, 2, 2, 1, 2, 1]).expect("t37 staircase"),
        )),
        "t23_sum_t23" => Some(("t23#t23".to_string(), tensor(&t23(), &t23()))),
        _ => None,
    }
}

/// Strips a path argument down to the bundled-example key it would fall
/// back to: final component, `.json` removed.
pub fn key_from_path(path: &str) -> &str {
    let base = path.rsplit(['/', '\\']).next().unwrap_or(path);
    base.strip_suffix(".json").unwrap_or(base)
}
