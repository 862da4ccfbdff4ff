//! Similar copies of a triangle inside a finite point set, random
//! tripartitions, and the triple systems they induce.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::RngCore;
use rayon::prelude::*;

use super::harmonic::{three_harmonic_points, ShapeParameter};
use super::GaussianRational as G;
use crate::{rng, Error, Result, Triple, TripleSystem};

/// A finite set of distinct points with dense ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<G>,
    index: HashMap<G, usize>,
}

impl PointSet {
    pub fn new(points: Vec<G>) -> Result<Self> {
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::Structural(format!("point ({p}) listed twice")));
            }
        }
        Ok(PointSet { points, index })
    }

    /// The integer grid `{0..w} x {0..h}`, row by row.
    pub fn grid(w: i64, h: i64) -> Self {
        let pts = (0..h).flat_map(|y| (0..w).map(move |x| G::from_ints(x, y))).collect();
        PointSet::new(pts).expect("grid points are distinct")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, id: usize) -> &G {
        &self.points[id]
    }

    pub fn points(&self) -> &[G] {
        &self.points
    }

    pub fn id_of(&self, p: &G) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &G) -> bool {
        self.index.contains_key(p)
    }

    /// A new set with `p` appended. Returns `None` if `p` is already present.
    pub fn with_point(&self, p: G) -> Option<PointSet> {
        if self.contains(&p) {
            return None;
        }
        let mut next = self.clone();
        next.index.insert(p.clone(), next.points.len());
        next.points.push(p);
        Some(next)
    }
}

/// A triangle given by point ids in the roles `A`, `B`, `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTriangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl LabeledTriangle {
    pub fn vertex_set(&self) -> Triple {
        let mut t = [self.a, self.b, self.c];
        t.sort_unstable();
        t
    }

    pub fn role_of(&self, v: usize) -> Option<Part> {
        if v == self.a {
            Some(Part::A)
        } else if v == self.b {
            Some(Part::B)
        } else if v == self.c {
            Some(Part::C)
        } else {
            None
        }
    }

    pub fn vertex(&self, role: Part) -> usize {
        match role {
            Part::A => self.a,
            Part::B => self.b,
            Part::C => self.c,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Same orientation as the target shape.
    Direct,
    /// Reflected copies only (shape `conj(z)`).
    Mirror,
    Both,
}

fn triangles_with_shape(s: &PointSet, z: &ShapeParameter) -> Vec<LabeledTriangle> {
    let n = s.len();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let pa = s.point(a);
            (0..n).filter(move |&b| b != a).filter_map(move |b| {
                let c = s.id_of(&z.apex(pa, s.point(b)))?;
                Some(LabeledTriangle { a, b, c })
            })
        })
        .collect()
}

/// Every labeled triangle `(A, B, C)` of `s` whose shape is `z` (direct),
/// `conj(z)` (mirror), or either, sorted by role ids.
pub fn find_similar_triangles(
    s: &PointSet,
    z: &ShapeParameter,
    orientation: Orientation,
) -> Result<Vec<LabeledTriangle>> {
    if z.is_degenerate() {
        return Err(Error::Degenerate("real shape parameter describes a collinear triple"));
    }
    let mut found = BTreeSet::new();
    if orientation != Orientation::Mirror {
        found.extend(triangles_with_shape(s, z));
    }
    if orientation != Orientation::Direct {
        found.extend(triangles_with_shape(s, &z.mirrored()));
    }
    Ok(found.into_iter().collect())
}

/// Class of a point in a tripartition, matching the role it may play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    A,
    B,
    C,
}

impl Part {
    pub fn index(self) -> usize {
        self as usize
    }
}

/// Assigns each point independently and uniformly to one of three classes.
/// Deterministic in the seed and the order of `s`.
pub fn tripartition(s: &PointSet, seed: u64) -> Vec<Part> {
    let mut rng = rng::seeded(seed);
    (0..s.len())
        .map(|_| match ((rng.next_u64() as u128 * 3) >> 64) as u8 {
            0 => Part::A,
            1 => Part::B,
            _ => Part::C,
        })
        .collect()
}

/// The 3-partite triple system of directly similar triangles that respect a
/// tripartition, together with the role labeling of every edge.
#[derive(Debug, Clone)]
pub struct SimilaritySystem {
    pub system: TripleSystem,
    pub triangles: Vec<LabeledTriangle>,
    by_edge: HashMap<Triple, usize>,
}

impl SimilaritySystem {
    /// The role labeling of a triple of the system.
    pub fn triangle_of(&self, edge: &Triple) -> Option<&LabeledTriangle> {
        let mut key = *edge;
        key.sort_unstable();
        self.by_edge.get(&key).map(|&i| &self.triangles[i])
    }
}

pub fn similarity_system(s: &PointSet, z: &ShapeParameter, labels: &[Part]) -> Result<SimilaritySystem> {
    if labels.len() != s.len() {
        return Err(Error::Argument(format!(
            "{} labels for {} points",
            labels.len(),
            s.len()
        )));
    }
    let triangles: Vec<LabeledTriangle> = find_similar_triangles(s, z, Orientation::Direct)?
        .into_iter()
        .filter(|t| labels[t.a] == Part::A && labels[t.b] == Part::B && labels[t.c] == Part::C)
        .collect();
    let system = TripleSystem::new(s.len(), triangles.iter().map(LabeledTriangle::vertex_set))
        .map_err(|e| Error::Internal(format!("similarity system: {e}")))?;
    if let Err(e) = system.require_linear() {
        return Err(Error::Internal(format!("similarity system: {e}")));
    }
    let by_edge = triangles.iter().enumerate().map(|(i, t)| (t.vertex_set(), i)).collect();
    Ok(SimilaritySystem {
        system,
        triangles,
        by_edge,
    })
}

/// Two similar triangles with a common harmonic point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedHarmonic {
    pub first: LabeledTriangle,
    pub second: LabeledTriangle,
    pub point: G,
    pub vertex_disjoint: bool,
}

/// Buckets the similar copies of `z` (one per vertex set) by each of their
/// three harmonic points and reports every pair sharing a bucket.
pub fn shared_harmonic_search(
    s: &PointSet,
    z: &ShapeParameter,
    orientation: Orientation,
) -> Result<Vec<SharedHarmonic>> {
    let mut seen = BTreeSet::new();
    let triangles: Vec<LabeledTriangle> = find_similar_triangles(s, z, orientation)?
        .into_iter()
        .filter(|t| seen.insert(t.vertex_set()))
        .collect();
    let harmonic: Vec<Vec<G>> = triangles
        .par_iter()
        .map(|t| {
            let h = three_harmonic_points(s.point(t.a), s.point(t.b), s.point(t.c))
                .expect("similar copies of a non-real shape are non-degenerate");
            let set: BTreeSet<G> = h.as_array().into_iter().cloned().collect();
            set.into_iter().collect()
        })
        .collect();
    let mut buckets: BTreeMap<&G, Vec<usize>> = BTreeMap::new();
    for (i, hs) in harmonic.iter().enumerate() {
        for p in hs {
            buckets.entry(p).or_default().push(i);
        }
    }
    let mut out = Vec::new();
    for (p, ids) in buckets {
        for (x, &i) in ids.iter().enumerate() {
            for &j in &ids[x + 1..] {
                let (t1, t2) = (triangles[i], triangles[j]);
                let vs = t1.vertex_set();
                out.push(SharedHarmonic {
                    first: t1,
                    second: t2,
                    point: p.clone(),
                    vertex_disjoint: !t2.vertex_set().iter().any(|v| vs.contains(v)),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> G {
        G::from_ints(re, im)
    }

    fn shape(re: i64, im: i64) -> ShapeParameter {
        ShapeParameter::new(g(re, im)).unwrap()
    }

    #[test]
    fn point_sets_reject_repeats() {
        assert!(PointSet::new(vec![g(0, 0), g(0, 0)]).is_err());
        let s = PointSet::grid(3, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s.id_of(&g(2, 1)), Some(5));
        assert!(s.with_point(g(1, 1)).is_none());
        assert_eq!(s.with_point(g(9, 9)).unwrap().len(), 7);
    }

    #[test]
    fn single_triangle_direct_and_mirror() {
        let s = PointSet::new(vec![g(0, 0), g(2, 0), g(1, 1)]).unwrap();
        let direct = find_similar_triangles(&s, &shape(0, -1), Orientation::Direct).unwrap();
        assert_eq!(direct, vec![LabeledTriangle { a: 0, b: 1, c: 2 }]);
        let mirror = find_similar_triangles(&s, &shape(0, -1), Orientation::Mirror).unwrap();
        assert_eq!(mirror, vec![LabeledTriangle { a: 1, b: 0, c: 2 }]);
        assert_eq!(
            find_similar_triangles(&s, &shape(0, -1), Orientation::Both)
                .unwrap()
                .len(),
            2
        );
        assert!(find_similar_triangles(&s, &shape(2, 0), Orientation::Both).is_err());
    }

    #[test]
    fn no_matching_apex() {
        let s = PointSet::new(vec![g(0, 0), g(5, 0), g(1, 3)]).unwrap();
        assert!(find_similar_triangles(&s, &shape(0, 1), Orientation::Both)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn tripartition_is_deterministic() {
        let s = PointSet::grid(6, 6);
        assert_eq!(tripartition(&s, 42), tripartition(&s, 42));
        assert_ne!(tripartition(&s, 42), tripartition(&s, 43));
        assert!(tripartition(&PointSet::new(vec![]).unwrap(), 1).is_empty());
    }

    #[test]
    fn similarity_system_edges_respect_parts() {
        let s = PointSet::new(vec![g(0, 0), g(2, 0), g(1, 1)]).unwrap();
        let sys = similarity_system(&s, &shape(0, -1), &[Part::A, Part::B, Part::C]).unwrap();
        assert_eq!(sys.system.edge_count(), 1);
        assert_eq!(sys.triangle_of(&[2, 0, 1]), Some(&LabeledTriangle { a: 0, b: 1, c: 2 }));
        let grid = PointSet::grid(5, 5);
        let sys = similarity_system(&grid, &shape(0, 1), &[Part::A; 25]).unwrap();
        assert_eq!(sys.system.edge_count(), 0);
    }

    #[test]
    fn scaled_copy_about_a_harmonic_point_shares_it() {
        // (0, 2, 1+i) has harmonic point 1-i opposite C; doubling about
        // 1-i gives a disjoint copy with the same harmonic point.
        let s = PointSet::new(vec![g(0, 0), g(2, 0), g(1, 1), g(-1, 1), g(3, 1), g(1, 3)]).unwrap();
        let hits = shared_harmonic_search(&s, &shape(0, -1), Orientation::Direct).unwrap();
        let hit = hits.iter().find(|h| h.point == g(1, -1)).expect("shared point found");
        assert!(hit.vertex_disjoint);
        assert_eq!(hit.first.vertex_set(), [0, 1, 2]);
        assert_eq!(hit.second.vertex_set(), [3, 4, 5]);
    }
}
