use alloc::string::String;

use crate::Rational;

/// Errors surfaced by constructors and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A staircase step list was empty, had odd length, or contained a
    /// non-positive step.
    #[error("invalid staircase steps: {0}")]
    Staircase(String),

    /// A complex could not be assembled from its raw parts.
    #[error("malformed complex: {0}")]
    Build(String),

    /// The interpolation parameter lies outside its admissible range.
    #[error("parameter t = {t} out of range {range}")]
    ParameterRange { t: Rational, range: &'static str },

    /// The two independent tau computations disagree; this indicates a bug
    /// or a non-admissible input.
    #[error("internal inconsistency computing tau: slope method gives {slope}, region method gives {region}")]
    TauMismatch { slope: Rational, region: i64 },

    /// A computation that requires an admissible complex detected that the
    /// grading-zero homology is not one-dimensional.
    #[error("complex has no rank-one grading-zero homology; run validate() on the input")]
    NotAdmissible,
}
