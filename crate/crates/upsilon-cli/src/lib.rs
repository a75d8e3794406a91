//! IO companion for `upsilon-core`: the JSON complex format, exact result
//! documents, the bundled example library, and the `upsilon` command-line
//! tool.
//!
//! All numeric output is exact: rationals travel as `"p/q"` strings (plain
//! integers when the denominator is one), never as floats. The only decimal
//! in any output is the approximation column of the CSV emitter, which
//! exists for plotting.

pub mod document;
pub mod emit;
pub mod examples;

mod cli;

pub use cli::run;

use upsilon_core::Rational;

/// Renders a rational exactly: `"p/q"`, or just `"p"` when `q == 1`.
pub fn format_rational(r: Rational) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses an exact rational written as `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let parse_int = |part: &str| {
        part.trim()
            .parse::<i64>()
            .map_err(|_| format!("\"{part}\" is not an integer"))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den == 0 {
                return Err(format!("\"{s}\" has denominator zero"));
            }
            Ok(Rational::new(num, den))
        }
    }
}
