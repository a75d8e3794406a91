//! The invariant engine: the interpolated filtration, pointwise and
//! piecewise-linear upsilon, tau, nu-minus, jump data, and genus bounds.
//!
//! For a parameter `t` in `[0, 2]` the interpolated filtration level of a
//! slice element at bifiltration `(alg, alex)` is
//! `(t/2) * alex + (1 - t/2) * alg`. The invariant `nu(t)` is the least
//! level `s` at which the sublevel part of the grading-zero slice carries a
//! cycle that is not a boundary, and `upsilon(t) = -2 nu(t)`.
//!
//! The escape computation is incremental: slice elements are inserted in
//! level order while two echelon bases track the rank of the restricted
//! boundary matrix with and without one extra functional row. The functional
//! is chosen to vanish on boundaries but not on the generating cycle class,
//! so a sublevel cycle escapes the boundary space exactly when the two ranks
//! separate. Each query therefore costs a single elimination pass.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::complex::Complex;
use crate::gf2::{self, Echelon, GF2Matrix, GF2Vector};
use crate::pl::{JumpRecord, PLFunction};
use crate::{rational, ratio, Error, Rational};

/// Level of the bifiltration point `(alg, alex)` in the interpolated
/// filtration at parameter `t`: exactly `(t/2) alex + (1 - t/2) alg`.
///
/// Panics if `t` lies outside `[0, 2]`.
pub fn ft_level(alg: i64, alex: i64, t: Rational) -> Rational {
    assert!(
        t >= rational(0) && t <= rational(2),
        "parameter t = {t} outside [0, 2]"
    );
    let half = t / rational(2);
    half * rational(alex) + (rational(1) - half) * rational(alg)
}

/// Sublevel escape over a fixed slice: decides, for growing support sets,
/// when the cycles supported there stop being boundaries.
pub(crate) struct EscapeEngine {
    out: GF2Matrix,
    /// Vanishes on the boundary space, nonzero on the generating cycle
    /// class; a cycle is a non-boundary exactly when paired nontrivially.
    phi: GF2Vector,
}

impl EscapeEngine {
    /// `out` is the boundary map leaving the slice, `inn` the boundary map
    /// arriving into it. Returns `None` when the slice carries no homology
    /// class at all (then no escape is possible).
    ///
    /// Correctness of the rank test requires the homology of the slice to
    /// have dimension exactly one, which holds for every admissible complex.
    pub fn new(out: &GF2Matrix, inn: &GF2Matrix) -> Option<Self> {
        let cycles = gf2::kernel_basis(out);
        let cofunctionals = gf2::kernel_basis(&inn.transpose());
        let phi = cofunctionals
            .into_iter()
            .find(|kappa| cycles.iter().any(|z| kappa.dot(z)))?;
        Some(Self {
            out: out.clone(),
            phi,
        })
    }

    /// Inserts columns in the given order and returns the key of the column
    /// whose arrival first lets a supported cycle escape the boundary space.
    ///
    /// A span of equal keys is a single sublevel set; since escape is
    /// monotone in the support, reporting the triggering column's key gives
    /// the correct level either way.
    pub fn escape_key<K: Clone>(
        &self,
        order: impl IntoIterator<Item = (usize, K)>,
    ) -> Option<K> {
        let rows = self.out.rows();
        let mut plain = Echelon::new();
        let mut extended = Echelon::new();
        for (col, key) in order {
            plain.insert(self.out.column(col).clone());
            let mut ext = self.out.column(col).extended(rows + 1);
            if self.phi.get(col) {
                ext.set(rows, true);
            }
            extended.insert(ext);
            if extended.rank() == plain.rank() + 1 {
                return Some(key);
            }
        }
        None
    }
}

/// The grading-zero slice of a complex together with its escape engine.
pub(crate) struct SliceEngine {
    pub elements: Vec<crate::complex::SliceElement>,
    engine: EscapeEngine,
}

impl SliceEngine {
    /// Panics if the grading-zero slice carries no homology class; run
    /// [`Complex::validate`] on untrusted inputs first.
    pub fn new(c: &Complex) -> Self {
        let out = c.boundary_matrix(0);
        let inn = c.boundary_matrix(1);
        let engine = EscapeEngine::new(&out, &inn)
            .expect("complex carries no grading-zero homology class; it is not admissible");
        Self {
            elements: c.grading_slice(0),
            engine,
        }
    }

    /// Least interpolated-filtration level at which a non-boundary
    /// grading-zero cycle exists.
    pub fn nu(&self, t: Rational) -> Rational {
        let mut order: Vec<(usize, Rational)> = self
            .elements
            .iter()
            .enumerate()
            .map(|(col, e)| (col, ft_level(e.alg, e.alex, t)))
            .collect();
        order.sort_by_key(|&(_, level)| level);
        self.engine
            .escape_key(order)
            .expect("admissible complex must reach its grading-zero class at a finite level")
    }

    pub fn escape_key<K: Clone>(&self, order: impl IntoIterator<Item = (usize, K)>) -> Option<K> {
        self.engine.escape_key(order)
    }
}

/// Least level `s` such that the sublevel subcomplex at parameter `t`
/// carries a grading-zero class of the total homology.
///
/// Only the levels of grading-zero slice elements are candidate values,
/// since sublevel spaces change exactly when crossing an element's level.
///
/// Panics if `t` lies outside `[0, 2]` or the complex is not admissible.
pub fn nu_at(c: &Complex, t: Rational) -> Rational {
    SliceEngine::new(c).nu(t)
}

/// The upsilon invariant at one parameter: `-2 nu(t)`.
pub fn upsilon_at(c: &Complex, t: Rational) -> Rational {
    -rational(2) * nu_at(c, t)
}

/// The full upsilon function on `[0, 2]` as an exact piecewise-linear
/// function.
///
/// Slope changes can occur only where a line of slope `1 - 2/t` passes
/// through two distinct grading-zero lattice points, i.e. at
/// `t = 2(i - i') / ((i - i') - (j - j'))`. All such parameters are
/// generated, upsilon is evaluated exactly at each of them and at the
/// midpoint of every gap (the midpoints certify that no breakpoint was
/// missed), and collinear samples are normalized away.
pub fn upsilon_pl(c: &Complex) -> PLFunction {
    let engine = SliceEngine::new(c);
    let points: BTreeSet<(i64, i64)> = engine.elements.iter().map(|e| (e.alg, e.alex)).collect();
    let points: Vec<(i64, i64)> = points.into_iter().collect();

    let mut ts: BTreeSet<Rational> = BTreeSet::new();
    ts.insert(rational(0));
    ts.insert(rational(2));
    for (a, &(i, j)) in points.iter().enumerate() {
        for &(i2, j2) in &points[a + 1..] {
            let di = i - i2;
            let dj = j - j2;
            if di == dj {
                continue;
            }
            let t = ratio(2 * di, di - dj);
            if t > rational(0) && t < rational(2) {
                ts.insert(t);
            }
        }
    }

    let ts: Vec<Rational> = ts.into_iter().collect();
    let value = |t: Rational| -rational(2) * engine.nu(t);
    let samples: Vec<(Rational, Rational)> = ts.iter().map(|&t| (t, value(t))).collect();
    for w in samples.windows(2) {
        let (a, va) = w[0];
        let (b, vb) = w[1];
        let mid = (a + b) / rational(2);
        assert_eq!(
            value(mid),
            (va + vb) / rational(2),
            "upsilon is not affine between candidate breakpoints {a} and {b}"
        );
    }
    PLFunction::from_samples(samples)
}

/// The tau invariant, computed two independent ways: as the negated initial
/// slope of the upsilon function, and as the least `m` for which the region
/// of points with `alg <= 0, alex <= m` together with all of `alg < 0`
/// supports a non-boundary grading-zero cycle.
///
/// Returns an internal-inconsistency error when the two disagree.
pub fn tau(c: &Complex) -> Result<i64, Error> {
    let pl = upsilon_pl(c);
    let slope_tau = -pl.slopes()[0];

    let engine = SliceEngine::new(c);
    let mut order: Vec<(usize, Option<i64>)> = Vec::new();
    let mut at_zero: Vec<(usize, i64)> = Vec::new();
    for (col, e) in engine.elements.iter().enumerate() {
        if e.alg < 0 {
            order.push((col, None));
        } else if e.alg == 0 {
            at_zero.push((col, e.alex));
        }
    }
    at_zero.sort_by_key(|&(_, alex)| alex);
    order.extend(at_zero.into_iter().map(|(col, alex)| (col, Some(alex))));

    let region_tau = engine
        .escape_key(order)
        .expect("admissible complex must reach its grading-zero class within the tau region")
        .expect("grading-zero class reached below algebraic level zero; complex is not normalized");

    if slope_tau == rational(region_tau) {
        Ok(region_tau)
    } else {
        Err(Error::TauMismatch {
            slope: slope_tau,
            region: region_tau,
        })
    }
}

/// Least integer `m` such that the region `alg <= 0, alex <= m` supports a
/// grading-zero cycle that is not a boundary.
///
/// Panics when the complex is not admissible.
pub fn nu_minus(c: &Complex) -> i64 {
    let engine = SliceEngine::new(c);
    let mut order: Vec<(usize, i64)> = engine
        .elements
        .iter()
        .enumerate()
        .filter(|(_, e)| e.alg <= 0)
        .map(|(col, e)| (col, e.alex))
        .collect();
    order.sort_by_key(|&(_, alex)| alex);
    engine
        .escape_key(order)
        .expect("admissible complex must reach its grading-zero class in the quadrant region")
}

/// Lower bounds on the three-genus, smooth four-genus, and concordance
/// genus extracted from an upsilon function and its jump spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    /// Three-genus is at least this.
    pub g3: i64,
    /// Smooth four-genus is at least this.
    pub g4: i64,
    /// Concordance genus is at least this.
    pub gc: i64,
}

/// Genus bounds from one complex's upsilon data.
///
/// Slopes bound the three-genus directly. A jump at `t = p/q` in lowest
/// terms forces `q <= g3` for odd `p` and `q <= 2 g3` for even `p`. The
/// four-genus obeys `|upsilon(t)| <= t * g4`, sharpest at the vertices. The
/// concordance genus obeys the same bounds as the three-genus.
pub fn genus_bounds(f: &PLFunction, jumps: &[JumpRecord]) -> BoundsReport {
    let slope_bound = f
        .slopes()
        .iter()
        .map(|s| s.abs().ceil().to_integer())
        .max()
        .unwrap_or(0);
    let jump_bound = jumps
        .iter()
        .map(|j| {
            let p = *j.t.numer();
            let q = *j.t.denom();
            if p % 2 != 0 {
                q
            } else {
                (q + 1) / 2
            }
        })
        .max()
        .unwrap_or(0);
    let g3 = slope_bound.max(jump_bound);

    let g4 = f
        .vertices()
        .iter()
        .filter(|&&(t, _)| t > rational(0))
        .map(|&(t, v)| (v.abs() / t).ceil().to_integer())
        .max()
        .unwrap_or(0);

    BoundsReport { g3, g4, gc: g3 }
}

/// Checks the crossing-change inequalities on `[0, 1]`: everywhere there,
/// `f_plus(t) <= f_minus(t) <= f_plus(t) + t`.
///
/// All three functions are affine between breakpoints, so comparison at the
/// union of the vertices (capped at 1) decides the inequality exactly.
pub fn check_crossing_change(f_minus: &PLFunction, f_plus: &PLFunction) -> bool {
    let one = rational(1);
    let mut ts: BTreeSet<Rational> = f_minus
        .vertices()
        .iter()
        .chain(f_plus.vertices())
        .map(|&(t, _)| t)
        .filter(|&t| t <= one)
        .collect();
    ts.insert(one);
    ts.into_iter().all(|t| {
        let lo = f_plus.eval(t);
        let hi = lo + t;
        let v = f_minus.eval(t);
        lo <= v && v <= hi
    })
}
