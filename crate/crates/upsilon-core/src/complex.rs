//! The data model for knot Floer complexes.
//!
//! A [`Complex`] holds finitely many bifiltered generators over
//! `F_2[U, U^-1]`, one per `U`-orbit, together with the differential. The
//! `U`-translates are virtual: a fixed-grading slice of the full module is
//! reconstructed on demand as a finite set of [`SliceElement`]s, which keeps
//! every homology computation finite without any truncation window.
//!
//! Conventions baked into this module:
//!
//! - `U` shifts the bifiltration by `(-1, -1)` and the Maslov grading by
//!   `-2`.
//! - The filtration level of a chain is the maximum level over its support;
//!   equivalently, the stored generators form a filtered basis, and every
//!   sublevel subspace is spanned by a subset of them.
//! - An admissible complex has the homology of the unknot complex: rank one
//!   in every even grading, rank zero in odd gradings, normalized so that
//!   the grading-zero class is supported at algebraic and Alexander levels
//!   reaching down to zero and no further.
//!
//! [`validate`](Complex::validate) checks all of the above and reports every
//! violation rather than failing on the first.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::gf2::{self, GF2Matrix, GF2Vector};
use crate::{rational, Error, Rational};

/// A bifiltered, graded basis element of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    /// Name, unique within a complex.
    pub id: String,
    /// Maslov (homological) grading.
    pub maslov: i64,
    /// Algebraic filtration level (first coordinate).
    pub alg: i64,
    /// Alexander filtration level (second coordinate).
    pub alex: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, maslov: i64, alg: i64, alex: i64) -> Self {
        Self {
            id: id.into(),
            maslov,
            alg,
            alex,
        }
    }
}

/// A `U`-translate `U^k x` of a stored generator: the basis element of a
/// fixed-grading slice. The effective bifiltration `(alg, alex)` is the
/// generator's level shifted down by `upower`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceElement {
    /// Index of the underlying generator.
    pub gen: usize,
    /// Exponent `k` in `U^k x`; may be negative.
    pub upower: i64,
    /// Effective algebraic level `alg(x) - k`.
    pub alg: i64,
    /// Effective Alexander level `alex(x) - k`.
    pub alex: i64,
}

/// A finitely generated bifiltered complex over `F_2[U, U^-1]`, stored as
/// one generator per `U`-orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    generators: Vec<Generator>,
    /// Target index sets: `differential[i]` holds the summands of the
    /// boundary of generator `i`.
    differential: Vec<BTreeSet<usize>>,
}

impl Complex {
    /// Assembles a complex from generators and id-level arrows.
    ///
    /// Fails on duplicate generator ids, arrows referencing unknown ids,
    /// repeated `from` entries, and repeated targets within one boundary.
    /// Axioms beyond well-formedness are checked by [`validate`](Self::validate).
    pub fn new(
        generators: Vec<Generator>,
        arrows: Vec<(String, Vec<String>)>,
    ) -> Result<Self, Error> {
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.id.as_str(), i).is_some() {
                return Err(Error::Build(format!("duplicate generator id \"{}\"", g.id)));
            }
        }
        let mut differential = alloc::vec![BTreeSet::new(); generators.len()];
        let mut seen_sources = BTreeSet::new();
        for (from, targets) in &arrows {
            let &from_idx = index
                .get(from.as_str())
                .ok_or_else(|| Error::Build(format!("unknown id \"{from}\" in differential")))?;
            if !seen_sources.insert(from_idx) {
                return Err(Error::Build(format!(
                    "differential lists \"{from}\" more than once"
                )));
            }
            for to in targets {
                let &to_idx = index
                    .get(to.as_str())
                    .ok_or_else(|| Error::Build(format!("unknown id \"{to}\" in differential")))?;
                if !differential[from_idx].insert(to_idx) {
                    return Err(Error::Build(format!(
                        "duplicate target \"{to}\" in boundary of \"{from}\""
                    )));
                }
            }
        }
        Ok(Self {
            generators,
            differential,
        })
    }

    /// Assembles a complex from parts already expressed in indices. Callers
    /// must supply in-bounds target sets.
    pub(crate) fn from_parts(
        generators: Vec<Generator>,
        differential: Vec<BTreeSet<usize>>,
    ) -> Self {
        debug_assert_eq!(generators.len(), differential.len());
        debug_assert!(differential
            .iter()
            .flat_map(|t| t.iter())
            .all(|&t| t < generators.len()));
        Self {
            generators,
            differential,
        }
    }

    /// The one-generator complex of the unknot: a single cycle at the
    /// origin, grading zero.
    pub fn unknot() -> Self {
        Self::from_parts(
            alloc::vec![Generator::new("b0", 0, 0, 0)],
            alloc::vec![BTreeSet::new()],
        )
    }

    /// Builds a staircase complex from alternating step lengths.
    ///
    /// Steps are read from the topmost vertex, alternating rightward then
    /// downward moves; the topmost grading-zero corner is placed at
    /// `(0, total vertical drop)`. Grading-zero generators (`b0, b1, ...`)
    /// sit at the outer corners, grading-one generators (`w0, w1, ...`) at
    /// the inner corners, and each inner corner's boundary hits its two
    /// neighbors.
    ///
    /// Rejects empty or odd-length step lists and non-positive steps.
    pub fn staircase(steps: &[i64]) -> Result<Self, Error> {
        if steps.is_empty() {
            return Err(Error::Staircase("step list is empty".to_string()));
        }
        if !steps.len().is_multiple_of(2) {
            return Err(Error::Staircase(format!(
                "step list has odd length {}",
                steps.len()
            )));
        }
        if let Some(bad) = steps.iter().find(|&&s| s <= 0) {
            return Err(Error::Staircase(format!("non-positive step {bad}")));
        }

        let drop: i64 = steps.iter().skip(1).step_by(2).sum();
        let mut generators = Vec::with_capacity(steps.len() + 1);
        let mut differential = Vec::with_capacity(steps.len() + 1);
        let (mut x, mut y) = (0i64, drop);
        generators.push(Generator::new("b0", 0, x, y));
        differential.push(BTreeSet::new());
        for (corner, pair) in steps.chunks(2).enumerate() {
            x += pair[0];
            generators.push(Generator::new(format!("w{corner}"), 1, x, y));
            y -= pair[1];
            generators.push(Generator::new(format!("b{}", corner + 1), 0, x, y));
            // The white at index 2*corner+1 hits the blacks on either side.
            differential.push(BTreeSet::from([2 * corner, 2 * corner + 2]));
            differential.push(BTreeSet::new());
        }
        Ok(Self::from_parts(generators, differential))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    /// Target indices of the boundary of generator `i`.
    pub fn boundary_of(&self, i: usize) -> &BTreeSet<usize> {
        &self.differential[i]
    }

    pub fn find(&self, id: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.id == id)
    }

    /// Genus width: the largest `|alex - alg|` over all generators. For a
    /// staircase model of a knot this equals the three-genus.
    pub fn width(&self) -> i64 {
        self.generators
            .iter()
            .map(|g| (g.alex - g.alg).abs())
            .max()
            .unwrap_or(0)
    }

    /// The finite basis of the grading-`g` slice of the full module: one
    /// element `U^((M(x)-g)/2) x` per generator whose Maslov grading has the
    /// parity of `g`, in generator order.
    pub fn grading_slice(&self, g: i64) -> Vec<SliceElement> {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, gen)| (gen.maslov - g).rem_euclid(2) == 0)
            .map(|(i, gen)| {
                let upower = (gen.maslov - g) / 2;
                SliceElement {
                    gen: i,
                    upower,
                    alg: gen.alg - upower,
                    alex: gen.alex - upower,
                }
            })
            .collect()
    }

    /// Matrix of the boundary map from the grading-`g` slice to the
    /// grading-`g-1` slice, in the canonical slice orderings. By
    /// `U`-equivariance the matrix depends only on the parity of `g`.
    pub fn boundary_matrix(&self, g: i64) -> GF2Matrix {
        let sources = self.grading_slice(g);
        let targets = self.grading_slice(g - 1);
        let row_of: BTreeMap<usize, usize> = targets
            .iter()
            .enumerate()
            .map(|(row, e)| (e.gen, row))
            .collect();
        let mut m = GF2Matrix::zeros(targets.len(), sources.len());
        for (col, e) in sources.iter().enumerate() {
            for &t in &self.differential[e.gen] {
                m.set(row_of[&t], col, true);
            }
        }
        m
    }

    /// Checks every admissibility axiom and reports all violations. The
    /// complex is admissible exactly when the report is empty.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        for (i, targets) in self.differential.iter().enumerate() {
            let from = &self.generators[i];
            for &t in targets {
                let to = &self.generators[t];
                if to.maslov != from.maslov - 1 {
                    violations.push(Violation::GradingStep {
                        from: from.id.clone(),
                        to: to.id.clone(),
                    });
                }
                if to.alg > from.alg || to.alex > from.alex {
                    violations.push(Violation::FiltrationRaise {
                        from: from.id.clone(),
                        to: to.id.clone(),
                    });
                }
            }
        }
        if !violations.is_empty() {
            // Without a graded, filtered differential the homological checks
            // below are not meaningful.
            return ValidationReport { violations };
        }

        // ∂∘∂ = 0, generator by generator (each generator spans its slice
        // coordinate, so this is the slice-by-slice check).
        for (i, targets) in self.differential.iter().enumerate() {
            let mut square = BTreeSet::new();
            for &t in targets {
                for &tt in &self.differential[t] {
                    if !square.insert(tt) {
                        square.remove(&tt);
                    }
                }
            }
            if !square.is_empty() {
                violations.push(Violation::DifferentialSquare {
                    gen: self.generators[i].id.clone(),
                });
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }

        // Slice homology must match F[U, U^-1]: rank one in even gradings,
        // zero in odd.
        let from_even = self.boundary_matrix(0);
        let from_odd = self.boundary_matrix(1);
        let n_even = from_even.cols();
        let n_odd = from_odd.cols();
        let r_even = gf2::rank(&from_even);
        let r_odd = gf2::rank(&from_odd);
        let h_even = n_even - r_even - r_odd;
        let h_odd = n_odd - r_odd - r_even;
        if h_even != 1 {
            violations.push(Violation::HomologyRank {
                grading: 0,
                expected: 1,
                found: h_even,
            });
        }
        if h_odd != 0 {
            violations.push(Violation::HomologyRank {
                grading: 1,
                expected: 0,
                found: h_odd,
            });
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }

        // Normalization: the grading-zero class must be reachable at
        // algebraic level exactly zero, and likewise for Alexander.
        let slice0 = self.grading_slice(0);
        let boundaries: Vec<GF2Vector> = (0..from_odd.cols())
            .map(|c| from_odd.column(c).clone())
            .collect();
        let alg_levels: Vec<Rational> = slice0.iter().map(|e| rational(e.alg)).collect();
        let alex_levels: Vec<Rational> = slice0.iter().map(|e| rational(e.alex)).collect();
        for (name, levels) in [("algebraic", alg_levels), ("Alexander", alex_levels)] {
            let found = min_escape_level(&from_even, &boundaries, &levels);
            if found != Some(rational(0)) {
                violations.push(Violation::Normalization {
                    filtration: name,
                    found,
                });
            }
        }

        ValidationReport { violations }
    }
}

/// Smallest level whose sublevel cycle space escapes the boundary space.
///
/// `out` maps the slice holding the class of interest one grading down;
/// `boundaries` span the image of the boundary map into that slice;
/// `levels[c]` is the filtration level of column `c`. For each candidate
/// level (in increasing order) the kernel of the column-restricted matrix is
/// computed outright and compared against the boundary span; the first level
/// with a non-boundary cycle is returned.
///
/// This is the direct, definition-shaped computation. The engine module has
/// an incremental equivalent used on hot paths; this one backs validation
/// and serves as its independent cross-check.
pub(crate) fn min_escape_level(
    out: &GF2Matrix,
    boundaries: &[GF2Vector],
    levels: &[Rational],
) -> Option<Rational> {
    assert_eq!(out.cols(), levels.len());
    let mut candidates: Vec<Rational> = levels.to_vec();
    candidates.sort();
    candidates.dedup();
    for s in candidates {
        let cols: Vec<usize> = (0..levels.len()).filter(|&c| levels[c] <= s).collect();
        let mut sub = GF2Matrix::zeros(out.rows(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in out.column(c).support() {
                sub.set(r, j, true);
            }
        }
        let sublevel_cycles: Vec<GF2Vector> = gf2::kernel_basis(&sub)
            .into_iter()
            .map(|k| {
                let mut full = GF2Vector::zeros(levels.len());
                for j in k.support() {
                    full.set(cols[j], true);
                }
                full
            })
            .collect();
        if gf2::quotient_dim(&sublevel_cycles, boundaries) > 0 {
            return Some(s);
        }
    }
    None
}

/// One violated admissibility axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An arrow does not lower the Maslov grading by exactly one.
    GradingStep { from: String, to: String },
    /// An arrow raises the algebraic or Alexander filtration.
    FiltrationRaise { from: String, to: String },
    /// The boundary of the boundary of a generator is nonzero.
    DifferentialSquare { gen: String },
    /// A grading slice has the wrong homology rank.
    HomologyRank {
        grading: i64,
        expected: usize,
        found: usize,
    },
    /// The grading-zero class is not reachable at filtration level zero.
    Normalization {
        filtration: &'static str,
        found: Option<Rational>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::GradingStep { from, to } => write!(
                f,
                "differential does not drop the Maslov grading by one on {from} -> {to}"
            ),
            Violation::FiltrationRaise { from, to } => {
                write!(f, "differential not filtered on {from} -> {to}")
            }
            Violation::DifferentialSquare { gen } => {
                write!(f, "differential does not square to zero at {gen}")
            }
            Violation::HomologyRank {
                grading,
                expected,
                found,
            } => write!(
                f,
                "homology rank at grading {grading} is {found}, expected {expected}"
            ),
            Violation::Normalization { filtration, found } => match found {
                Some(level) => write!(
                    f,
                    "grading-zero class first appears at {filtration} level {level}, expected 0"
                ),
                None => write!(
                    f,
                    "grading-zero class not reachable through the {filtration} filtration"
                ),
            },
        }
    }
}

/// The outcome of [`Complex::validate`]: empty means admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_admissible() {
            write!(f, "admissible")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}
