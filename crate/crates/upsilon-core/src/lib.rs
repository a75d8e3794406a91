//! Exact computation of knot Floer concordance invariants from bifiltered
//! chain complexes.
//!
//! The input is a finite model of a knot Floer complex: finitely many
//! generators over `F_2[U, U^-1]`, each carrying a Maslov grading and a pair
//! of integer filtration levels (algebraic and Alexander), together with a
//! filtered differential. From this data the crate computes, in exact
//! rational arithmetic:
//!
//! - the upsilon function `Υ(t)` on `[0, 2]`, both pointwise and as an exact
//!   piecewise-linear function ([`upsilon::upsilon_pl`]),
//! - the tau invariant, by two independent methods ([`upsilon::tau`]),
//! - the nu-minus invariant ([`upsilon::nu_minus`]),
//! - lower bounds on the three-genus, smooth four-genus, and concordance
//!   genus ([`upsilon::genus_bounds`]),
//! - connected sums and mirrors at the complex level ([`algebra`]),
//! - an independent cross-check of `Υ(t)` through the t-modified complex
//!   construction ([`altdef`]).
//!
//! Everything is computed over the two-element field with exact rational
//! bookkeeping; no floating point is used anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the command
//! line live in the companion `upsilon-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod altdef;
pub mod complex;
pub mod gf2;
pub mod pl;
pub mod upsilon;

mod error;

pub use error::Error;

/// Exact rational scalar used for all filtration levels, parameter values,
/// and invariant values. Always stored in reduced form with a positive
/// denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Shorthand for a rational with denominator one.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Shorthand for the reduced rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}
