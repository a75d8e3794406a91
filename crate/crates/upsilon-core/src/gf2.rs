//! Sparse linear algebra over the two-element field.
//!
//! Every homology question in this crate reduces to ranks, kernels, and
//! subspace-membership queries over GF(2). The public interface speaks in
//! terms of position sets (which entries of a matrix or vector are one);
//! internally vectors are packed into 64-bit words so that elimination is
//! word-parallel.
//!
//! All operations are pure functions of immutable inputs and are
//! deterministic: the same input always produces the same basis vectors, in
//! the same order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A vector over GF(2), stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Builds a vector from the set of positions holding one.
    ///
    /// Panics if any position is out of range.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range (len {})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range (len {})", self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Flips entry `i` (addition of the standard basis vector `e_i`).
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range (len {})", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place addition over GF(2).
    ///
    /// Panics if the lengths differ.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in GF(2) addition");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// The standard bilinear pairing: parity of the common support.
    ///
    /// Panics if the lengths differ.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in GF(2) pairing");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Index of the lowest set position, or `None` for the zero vector.
    pub fn lowest_one(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates over the positions holding one, in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let base = w * 64;
            // Strip the lowest set bit on each step.
            core::iter::successors(Some(word), |&x| Some(x & x.wrapping_sub(1)))
                .take_while(|&x| x != 0)
                .map(move |x| base + x.trailing_zeros() as usize)
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Copies `self` into the first `self.len()` coordinates of a longer
    /// vector. Used to append bookkeeping coordinates during elimination.
    pub fn extended(&self, new_len: usize) -> Self {
        assert!(new_len >= self.len);
        let mut v = Self::zeros(new_len);
        for i in self.support() {
            v.set(i, true);
        }
        v
    }
}

impl fmt::Debug for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF2Vector({}; ", self.len)?;
        f.debug_set().entries(self.support()).finish()?;
        write!(f, ")")
    }
}

/// A matrix over GF(2), stored column-major.
///
/// Boundary matrices are assembled one source element (column) at a time,
/// and every algorithm here consumes columns, so columns are the native
/// axis. The entry set view ([`GF2Matrix::entries`]) is the interface
/// contract; the packed layout is an implementation detail.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    columns: Vec<GF2Vector>,
}

impl GF2Matrix {
    /// The zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![GF2Vector::zeros(rows); cols],
        }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from its set of one-entries, given as `(row, col)`
    /// positions.
    ///
    /// Panics if a position is out of bounds or listed twice.
    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize)]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for &(r, c) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) out of bounds");
            assert!(!m.get(r, c), "duplicate entry ({r}, {c})");
            m.set(r, c, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.columns[c].get(r)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.columns[c].set(r, value);
    }

    pub fn column(&self, c: usize) -> &GF2Vector {
        &self.columns[c]
    }

    /// The set of `(row, col)` positions holding one, in column-major order.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (c, col) in self.columns.iter().enumerate() {
            for r in col.support() {
                out.push((r, c));
            }
        }
        out
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut t = GF2Matrix::zeros(self.cols(), self.rows);
        for (c, col) in self.columns.iter().enumerate() {
            for r in col.support() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix-vector product `m * v`.
    pub fn apply(&self, v: &GF2Vector) -> GF2Vector {
        assert_eq!(v.len(), self.cols(), "dimension mismatch in apply");
        let mut out = GF2Vector::zeros(self.rows);
        for c in v.support() {
            out.xor_assign(&self.columns[c]);
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols(), other.rows(), "dimension mismatch in compose");
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        GF2Matrix {
            rows: self.rows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(GF2Vector::is_zero)
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix({} x {})", self.rows, self.cols())?;
        for r in 0..self.rows {
            for c in 0..self.cols() {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The GF(2) rank.
pub fn rank(m: &GF2Matrix) -> usize {
    let mut ech = Echelon::new();
    m.columns.iter().filter(|c| ech.insert((*c).clone())).count()
}

/// A basis of the right kernel `{v : m v = 0}`.
///
/// Column elimination with an identity tracker: each column is reduced
/// against the pivots found so far, and a column that reduces to zero yields
/// the tracked combination as a kernel vector. The basis size is always
/// `cols - rank(m)`.
pub fn kernel_basis(m: &GF2Matrix) -> Vec<GF2Vector> {
    let cols = m.cols();
    let mut pivots: Vec<(usize, GF2Vector, GF2Vector)> = Vec::new();
    let mut kernel = Vec::new();
    for c in 0..cols {
        let mut col = m.column(c).clone();
        let mut tracker = GF2Vector::zeros(cols);
        tracker.set(c, true);
        for (pivot_row, pivot_col, pivot_tracker) in &pivots {
            if col.get(*pivot_row) {
                col.xor_assign(pivot_col);
                tracker.xor_assign(pivot_tracker);
            }
        }
        match col.lowest_one() {
            None => kernel.push(tracker),
            Some(row) => pivots.push((row, col, tracker)),
        }
    }
    kernel
}

/// Dimension of `span(space) / (span(space) ∩ span(sub))`.
///
/// Zero exactly when every vector of `space` lies in the span of `sub`.
/// Panics if the vectors do not all share one length.
pub fn quotient_dim(space: &[GF2Vector], sub: &[GF2Vector]) -> usize {
    let mut ech = Echelon::new();
    for v in sub {
        ech.insert(v.clone());
    }
    space.iter().filter(|v| ech.insert((*v).clone())).count()
}

/// An incrementally grown echelon basis.
///
/// Vectors are inserted one at a time; each is reduced against the pivots
/// found so far and kept only if independent. All vectors must share one
/// length (enforced on insertion).
pub struct Echelon {
    pivots: Vec<(usize, GF2Vector)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self { pivots: Vec::new() }
    }

    /// Reduces `v` against the basis and inserts the remainder if nonzero.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, mut v: GF2Vector) -> bool {
        if let Some((_, first)) = self.pivots.first() {
            assert_eq!(first.len(), v.len(), "length mismatch in echelon insert");
        }
        for (pivot_pos, pivot) in &self.pivots {
            if v.get(*pivot_pos) {
                v.xor_assign(pivot);
            }
        }
        match v.lowest_one() {
            None => false,
            Some(pos) => {
                self.pivots.push((pos, v));
                true
            }
        }
    }

    /// Whether `v` lies in the span of the inserted vectors. Does not grow
    /// the basis.
    pub fn contains(&self, v: &GF2Vector) -> bool {
        let mut v = v.clone();
        for (pivot_pos, pivot) in &self.pivots {
            if v.get(*pivot_pos) {
                v.xor_assign(pivot);
            }
        }
        v.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Default for Echelon {
    fn default() -> Self {
        Self::new()
    }
}
