//! Exact piecewise-linear functions on the parameter interval `[0, 2]`.
//!
//! A [`PLFunction`] is stored as its vertex list in exact rationals and is
//! kept in canonical form: vertices strictly sorted by parameter, endpoints
//! at 0 and 2, and no collinear interior vertices. Canonical form makes
//! structural equality coincide with pointwise equality, so identities like
//! additivity under connected sum can be asserted with `==`.

use alloc::vec::Vec;

use crate::{rational, Rational};

/// An exact piecewise-linear function on `[0, 2]`, as a canonical vertex
/// list with linear interpolation between vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLFunction {
    vertices: Vec<(Rational, Rational)>,
}

impl PLFunction {
    /// Builds the function through a list of exact samples.
    ///
    /// The samples must be strictly sorted by parameter, start at 0, end at
    /// 2, and include every breakpoint of the intended function (between
    /// consecutive samples the function is taken to be affine). Redundant
    /// collinear samples are dropped to reach canonical form.
    ///
    /// Panics if the sample list is unsorted or does not span `[0, 2]`.
    pub fn from_samples(samples: Vec<(Rational, Rational)>) -> Self {
        assert!(samples.len() >= 2, "need samples at both endpoints");
        assert!(
            samples.windows(2).all(|w| w[0].0 < w[1].0),
            "samples must be strictly sorted by parameter"
        );
        assert_eq!(samples.first().unwrap().0, rational(0), "domain starts at 0");
        assert_eq!(samples.last().unwrap().0, rational(2), "domain ends at 2");

        let slope = |a: &(Rational, Rational), b: &(Rational, Rational)| (b.1 - a.1) / (b.0 - a.0);
        let mut vertices = Vec::with_capacity(samples.len());
        vertices.push(samples[0]);
        for k in 1..samples.len() - 1 {
            if slope(&samples[k - 1], &samples[k]) != slope(&samples[k], &samples[k + 1]) {
                vertices.push(samples[k]);
            }
        }
        vertices.push(*samples.last().unwrap());
        Self { vertices }
    }

    /// The zero function.
    pub fn zero() -> Self {
        Self {
            vertices: alloc::vec![(rational(0), rational(0)), (rational(2), rational(0))],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.iter().all(|&(_, v)| v == rational(0))
    }

    /// The canonical vertex list: strictly increasing parameters from 0 to
    /// 2, no collinear interior vertices.
    pub fn vertices(&self) -> &[(Rational, Rational)] {
        &self.vertices
    }

    /// Exact evaluation. Panics outside `[0, 2]`.
    pub fn eval(&self, t: Rational) -> Rational {
        assert!(
            t >= rational(0) && t <= rational(2),
            "evaluation point {t} outside [0, 2]"
        );
        let k = self.vertices.partition_point(|&(vt, _)| vt <= t);
        if k == self.vertices.len() {
            return self.vertices.last().unwrap().1;
        }
        let (t0, v0) = self.vertices[k - 1];
        let (t1, v1) = self.vertices[k];
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }

    /// Slope of each segment, in order. One fewer entry than vertices.
    pub fn slopes(&self) -> Vec<Rational> {
        self.vertices
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect()
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut ts: Vec<Rational> = self
            .vertices
            .iter()
            .chain(&other.vertices)
            .map(|&(t, _)| t)
            .collect();
        ts.sort();
        ts.dedup();
        Self::from_samples(
            ts.into_iter()
                .map(|t| (t, self.eval(t) + other.eval(t)))
                .collect(),
        )
    }

    /// Pointwise scalar multiple.
    pub fn scale(&self, factor: Rational) -> Self {
        // Scaling by zero merges all segments into one.
        Self::from_samples(self.vertices.iter().map(|&(t, v)| (t, v * factor)).collect())
    }

    /// Pointwise negation.
    pub fn neg(&self) -> Self {
        self.scale(rational(-1))
    }
}

/// A singularity of the derivative: at parameter `t` the slope jumps by
/// `delta` (right slope minus left slope).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpRecord {
    pub t: Rational,
    pub delta: Rational,
}

/// All interior vertices where the left and right slopes differ. On a
/// canonical [`PLFunction`] that is every interior vertex.
pub fn jump_spectrum(f: &PLFunction) -> Vec<JumpRecord> {
    let slopes = f.slopes();
    let mut jumps = Vec::new();
    for (k, w) in slopes.windows(2).enumerate() {
        let delta = w[1] - w[0];
        debug_assert_ne!(
            delta,
            rational(0),
            "canonical vertex list may not contain collinear interior vertices"
        );
        if delta != rational(0) {
            jumps.push(JumpRecord {
                t: f.vertices()[k + 1].0,
                delta,
            });
        }
    }
    jumps
}
