//! Command-line surface.
//!
//! Exit codes: 0 on success (and on checks that hold), 1 when a verified
//! property fails to hold, 2 on input errors (including files that fail
//! validation). Clap itself exits with 2 on unknown commands or flags.

use std::env;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use upsilon_core::algebra::{dual, tensor};
use upsilon_core::altdef::{transform_check, upsilon_alt};
use upsilon_core::complex::Complex;
use upsilon_core::pl::jump_spectrum;
use upsilon_core::upsilon::{
    check_crossing_change, genus_bounds, nu_minus, tau, upsilon_at, upsilon_pl,
};
use upsilon_core::{rational, Rational};

use crate::document::{emit_complex, parse_complex, parse_unvalidated, DocumentError};
use crate::emit::{bounds_result, emit_pl, pl_result, PlFormat};
use crate::{examples, format_rational, parse_rational};

#[derive(Parser)]
#[command(
    name = "upsilon",
    version,
    about = "Exact knot concordance invariants from bifiltered chain complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a complex file against every admissibility axiom
    Validate { file: String },
    /// Compute the upsilon function as an exact piecewise-linear function
    Upsilon {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate upsilon at one rational parameter in [0, 2]
    Eval {
        file: String,
        /// Parameter as p/q, for example 4/5
        #[arg(long)]
        t: String,
    },
    /// Compute tau (slope method, cross-checked against the region method)
    Tau { file: String },
    /// Compute nu-minus
    NuMinus { file: String },
    /// Genus lower bounds extracted from the upsilon function
    Bounds { file: String },
    /// Tensor two complexes (connected sum) and print the resulting document
    Sum { file_a: String, file_b: String },
    /// Dualize a complex (mirror) and print the resulting document
    Mirror { file: String },
    /// Verify that upsilon of the tensor equals the sum of the upsilons
    CheckAdditivity { file_a: String, file_b: String },
    /// Cross-check the two upsilon definitions at one or more parameters
    AltCheck {
        file: String,
        /// Parameter as p/q in (0, 2]
        #[arg(long)]
        t: String,
        /// Additional deterministically sampled parameters to check
        #[arg(long)]
        samples: Option<u32>,
    },
    /// Verify the crossing-change inequalities between two upsilon functions
    CrossingCheck {
        file_minus: String,
        file_plus: String,
    },
    /// Construct a staircase complex from comma-separated step lengths
    Staircase {
        #[arg(long, value_delimiter = ',', required = true)]
        steps: Vec<i64>,
    },
    /// List bundled examples, or print one as a complex document
    Examples { name: Option<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    /// Unusable input: exit 2.
    Input(String),
    /// A property check that ran and failed: exit 1.
    Check(String),
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses the process arguments, runs one command, and returns the exit
/// code. Clap prints usage and exits by itself on malformed invocations.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

/// Writes a line to stdout. A closed pipe (for example `| head`) is a
/// normal way for consumers to stop reading, so it ends the process quietly
/// instead of panicking.
fn puts(text: impl core::fmt::Display) {
    let mut out = io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

/// Like [`puts`] for text that already carries its final newline.
fn puts_raw(text: &str) {
    let mut out = io::stdout().lock();
    if write!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

enum Loaded {
    Text(String),
    Bundled(String, Complex),
}

/// Resolution order for file arguments: the literal path, then
/// `$UPSILON_EXAMPLES_DIR/<basename>`, then the bundled example library
/// keyed by basename without `.json`.
fn resolve(file: &str) -> Result<Loaded, Failure> {
    let read = |p: &Path| {
        fs::read_to_string(p)
            .map(Loaded::Text)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))
    };
    if Path::new(file).is_file() {
        return read(Path::new(file));
    }
    if let Ok(dir) = env::var("UPSILON_EXAMPLES_DIR") {
        let base = file.rsplit(['/', '\\']).next().unwrap_or(file);
        let candidate = PathBuf::from(dir).join(base);
        if candidate.is_file() {
            return read(&candidate);
        }
    }
    let key = examples::key_from_path(file);
    if let Some((name, complex)) = examples::get(key) {
        return Ok(Loaded::Bundled(name, complex));
    }
    Err(Failure::Input(format!(
        "cannot read {file}: no such file and no bundled example named \"{key}\""
    )))
}

fn load(file: &str) -> Result<(String, Complex), Failure> {
    match resolve(file)? {
        Loaded::Text(text) => Ok(parse_complex(&text)?),
        Loaded::Bundled(name, complex) => Ok((name, complex)),
    }
}

fn parse_t(raw: &str) -> Result<Rational, Failure> {
    parse_rational(raw).map_err(|e| Failure::Input(format!("invalid parameter t: {e}")))
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { file } => {
            let report = match resolve(&file)? {
                Loaded::Text(text) => {
                    let (_, complex) = parse_unvalidated(&text)?;
                    complex.validate()
                }
                Loaded::Bundled(_, complex) => complex.validate(),
            };
            puts(&report);
            if report.is_admissible() {
                Ok(())
            } else {
                Err(Failure::Input(format!("{file} is not admissible")))
            }
        }
        Command::Upsilon { file, format } => {
            let (name, complex) = load(&file)?;
            let f = upsilon_pl(&complex);
            match format {
                Format::Json => {
                    let doc = pl_result(&name, &f);
                    puts(serde_json::to_string_pretty(&doc).expect("result serialization"));
                }
                Format::Csv => puts_raw(&emit_pl(&f, PlFormat::Csv)),
            }
            Ok(())
        }
        Command::Eval { file, t } => {
            let (_, complex) = load(&file)?;
            let t = parse_t(&t)?;
            if t < rational(0) || t > rational(2) {
                return Err(Failure::Input(format!("t = {t} outside [0, 2]")));
            }
            puts(format_rational(upsilon_at(&complex, t)));
            Ok(())
        }
        Command::Tau { file } => {
            let (_, complex) = load(&file)?;
            let value = tau(&complex).map_err(|e| Failure::Check(e.to_string()))?;
            puts(value);
            Ok(())
        }
        Command::NuMinus { file } => {
            let (_, complex) = load(&file)?;
            puts(nu_minus(&complex));
            Ok(())
        }
        Command::Bounds { file } => {
            let (name, complex) = load(&file)?;
            let f = upsilon_pl(&complex);
            let bounds = genus_bounds(&f, &jump_spectrum(&f));
            let doc = bounds_result(&name, &bounds);
            puts(serde_json::to_string_pretty(&doc).expect("result serialization"));
            Ok(())
        }
        Command::Sum { file_a, file_b } => {
            let (name_a, a) = load(&file_a)?;
            let (name_b, b) = load(&file_b)?;
            puts(emit_complex(&format!("{name_a}#{name_b}"), &tensor(&a, &b)));
            Ok(())
        }
        Command::Mirror { file } => {
            let (name, complex) = load(&file)?;
            puts(emit_complex(&format!("-{name}"), &dual(&complex)));
            Ok(())
        }
        Command::CheckAdditivity { file_a, file_b } => {
            let (name_a, a) = load(&file_a)?;
            let (name_b, b) = load(&file_b)?;
            let sum = upsilon_pl(&tensor(&a, &b));
            let expected = upsilon_pl(&a).add(&upsilon_pl(&b));
            if sum == expected {
                puts(format!(
                    "additivity holds: upsilon({name_a} # {name_b}) = upsilon({name_a}) + upsilon({name_b})"
                ));
                Ok(())
            } else {
                Err(Failure::Check(format!(
                    "upsilon({name_a} # {name_b}) differs from upsilon({name_a}) + upsilon({name_b})"
                )))
            }
        }
        Command::AltCheck { file, t, samples } => {
            let (_, complex) = load(&file)?;
            let t = parse_t(&t)?;
            if t <= rational(0) || t > rational(2) {
                return Err(Failure::Input(format!("t = {t} outside (0, 2]")));
            }
            let mut ts = vec![t];
            ts.extend(sampled_parameters(samples.unwrap_or(0)));
            for t in ts {
                let main = upsilon_at(&complex, t);
                let alt = upsilon_alt(&complex, t).map_err(|e| Failure::Input(e.to_string()))?;
                if main != alt {
                    return Err(Failure::Check(format!(
                        "definitions disagree at t = {t}: {} vs {}",
                        format_rational(main),
                        format_rational(alt)
                    )));
                }
                if !transform_check(&complex, t) {
                    return Err(Failure::Check(format!(
                        "coordinate transformation check failed at t = {t}"
                    )));
                }
                puts(format!(
                    "t = {}: upsilon = {} (definitions agree, transformation ok)",
                    format_rational(t),
                    format_rational(main)
                ));
            }
            Ok(())
        }
        Command::CrossingCheck {
            file_minus,
            file_plus,
        } => {
            let (name_minus, minus) = load(&file_minus)?;
            let (name_plus, plus) = load(&file_plus)?;
            let f_minus = upsilon_pl(&minus);
            let f_plus = upsilon_pl(&plus);
            if check_crossing_change(&f_minus, &f_plus) {
                puts(format!(
                    "crossing-change inequalities hold on [0, 1] for {name_minus} / {name_plus}"
                ));
                Ok(())
            } else {
                Err(Failure::Check(format!(
                    "crossing-change inequalities violated for {name_minus} / {name_plus}"
                )))
            }
        }
        Command::Staircase { steps } => {
            let complex =
                Complex::staircase(&steps).map_err(|e| Failure::Input(e.to_string()))?;
            let label: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
            puts(emit_complex(
                &format!("staircase[{}]", label.join(",")),
                &complex,
            ));
            Ok(())
        }
        Command::Examples { name } => match name {
            None => {
                for name in examples::NAMES {
                    puts(name);
                }
                Ok(())
            }
            Some(name) => {
                let (display, complex) = examples::get(&name).ok_or_else(|| {
                    Failure::Input(format!("no bundled example named \"{name}\""))
                })?;
                puts(emit_complex(&display, &complex));
                Ok(())
            }
        },
    }
}

/// Deterministic parameter sample in (0, 2]: reproducible across runs, no
/// external randomness.
fn sampled_parameters(n: u32) -> Vec<Rational> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..n)
        .map(|_| {
            let q = (next() % 12 + 1) as i64;
            let p = (next() % (2 * q as u64) + 1) as i64;
            Rational::new(p, q)
        })
        .collect()
}
