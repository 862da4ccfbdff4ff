//! Greedy harmonic closure of a point set.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use super::harmonic::{harmonic_from_z, ShapeParameter};
use super::similar::{find_similar_triangles, LabeledTriangle, Orientation, PointSet};
use super::{GaussianRational as G, Rational};
use crate::{Error, Result};

/// One point added by [`harmonic_closure`], with the triangles that vouched
/// for it at the time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureStep {
    pub point: G,
    pub triangles: Vec<LabeledTriangle>,
}

#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub closure: PointSet,
    pub delta: Rational,
    /// `delta * n`, the number of triangles a point needs.
    pub threshold: Rational,
    pub triangle_count: usize,
    pub steps: Vec<ClosureStep>,
    /// `(c / delta + 1) n`.
    pub size_bound: Rational,
}

impl ClosureResult {
    pub fn within_bound(&self) -> bool {
        Rational::from_integer(self.closure.len().into()) <= self.size_bound
    }
}

/// Starting from `U = S`, repeatedly adds the lexicographically least point
/// outside `U` that is the harmonic point (opposite `C`) of at least
/// `eps^6 * n` directly similar triangles of `S`.
pub fn harmonic_closure(s: &PointSet, z: &ShapeParameter, c: &Rational, eps: &Rational) -> Result<ClosureResult> {
    if !eps.is_positive() {
        return Err(Error::Argument("eps must be positive".into()));
    }
    if c.is_negative() {
        return Err(Error::Argument("c must be non-negative".into()));
    }
    let n = Rational::from_integer(s.len().into());
    let delta = num::pow(eps.clone(), 6);
    let threshold = &delta * &n;
    let triangles = find_similar_triangles(s, z, Orientation::Direct)?;
    let mut by_point: BTreeMap<G, Vec<LabeledTriangle>> = BTreeMap::new();
    for t in &triangles {
        let h = harmonic_from_z(s.point(t.a), s.point(t.b), z)?;
        by_point.entry(h).or_default().push(*t);
    }
    let mut closure = s.clone();
    let mut steps = Vec::new();
    // Triangles of S never change, so candidates can be taken in order.
    for (point, tris) in by_point {
        if closure.contains(&point) {
            continue;
        }
        if Rational::from_integer(tris.len().into()) >= threshold {
            closure = closure.with_point(point.clone()).expect("point is new");
            steps.push(ClosureStep { point, triangles: tris });
        }
    }
    let size_bound = (c / &delta + Rational::one()) * &n;
    debug_assert!(!delta.is_zero());
    Ok(ClosureResult {
        closure,
        delta,
        threshold,
        triangle_count: triangles.len(),
        steps,
        size_bound,
    })
}
