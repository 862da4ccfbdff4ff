//! Five similar triangles glued into a loose pentagon, and the formula that
//! recovers a harmonic point of the fifth from the other four.

use super::harmonic::{harmonic_from_z, shape_z, ShapeParameter};
use super::similar::{LabeledTriangle, Part, PointSet, SimilaritySystem};
use super::GaussianRational as G;
use crate::census::LooseCycleCopy;
use crate::{Error, Result};

/// Triangles `T1..T5` in cyclic order with
/// `A1 = A5`, `B1 = B2`, `A2 = A3`, `C3 = C4`, `B4 = B5`.
///
/// Ids refer to a [`PointSet`]. The roles may be a cyclic relabeling of the
/// roles in the ambient similarity system; `z` is the shape in the roles
/// stored here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonWitness {
    pub triangles: [LabeledTriangle; 5],
    pub z: ShapeParameter,
}

impl PentagonWitness {
    pub fn new(triangles: [LabeledTriangle; 5], z: ShapeParameter) -> Result<Self> {
        let w = PentagonWitness { triangles, z };
        w.check_pattern()?;
        Ok(w)
    }

    fn check_pattern(&self) -> Result<()> {
        let t = &self.triangles;
        let glued = [
            (t[0].a, t[4].a, "A1 = A5"),
            (t[0].b, t[1].b, "B1 = B2"),
            (t[1].a, t[2].a, "A2 = A3"),
            (t[2].c, t[3].c, "C3 = C4"),
            (t[3].b, t[4].b, "B4 = B5"),
        ];
        for (x, y, what) in glued {
            if x != y {
                return Err(Error::Verification(format!("pentagon identification {what} fails")));
            }
        }
        let mut all: Vec<usize> = self.cycle_vertices().into_iter().chain(self.free_vertices()).collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Verification(
                "pentagon vertices are not ten distinct points".into(),
            ));
        }
        Ok(())
    }

    /// `A1, B1, A2, C3, B4`.
    pub fn cycle_vertices(&self) -> [usize; 5] {
        let t = &self.triangles;
        [t[0].a, t[0].b, t[1].a, t[2].c, t[3].b]
    }

    /// The points that lie in one triangle only: `C1, C2, B3, A4, C5`.
    pub fn free_vertices(&self) -> [usize; 5] {
        let t = &self.triangles;
        [t[0].c, t[1].c, t[2].b, t[3].a, t[4].c]
    }

    /// Checks that every triangle has shape `z` at the given coordinates.
    pub fn check_shapes(&self, s: &PointSet) -> Result<()> {
        for (j, t) in self.triangles.iter().enumerate() {
            let zj = shape_z(s.point(t.a), s.point(t.b), s.point(t.c))?;
            if zj != self.z {
                return Err(Error::Verification(format!(
                    "triangle T{} has shape {}",
                    j + 1,
                    zj.value()
                )));
            }
        }
        Ok(())
    }

    /// Reads a loose pentagon of a similarity system as a witness.
    ///
    /// The cycle vertices always split into role classes of sizes 2, 2, 1;
    /// roles are rotated so the singleton class plays `C`, and the cycle is
    /// walked from that vertex towards a `B` vertex.
    pub fn from_cycle(sys: &SimilaritySystem, s: &PointSet, cycle: &LooseCycleCopy) -> Result<Self> {
        if cycle.edges.len() != 5 {
            return Err(Error::Argument("a pentagon witness needs a loose C5".into()));
        }
        let tri: Vec<LabeledTriangle> = cycle
            .edges
            .iter()
            .map(|e| {
                sys.triangle_of(e)
                    .copied()
                    .ok_or_else(|| Error::Argument(format!("edge {e:?} is not in the similarity system")))
            })
            .collect::<Result<_>>()?;
        // cycle_vertices[i] is shared by edges i-1 and i.
        let roles: Vec<Part> = (0..5)
            .map(|i| {
                tri[i]
                    .role_of(cycle.cycle_vertices[i])
                    .expect("vertex lies in its edge")
            })
            .collect();
        let count = |p: Part| roles.iter().filter(|&&r| r == p).count();
        let single = [Part::A, Part::B, Part::C]
            .into_iter()
            .find(|&p| count(p) == 1)
            .ok_or_else(|| Error::Internal(format!("cycle roles {roles:?} are not split 2, 2, 1")))?;
        // new role -> old role, a cyclic shift that sends `single` to C.
        let rot: [Part; 3] = match single {
            Part::C => [Part::A, Part::B, Part::C],
            Part::A => [Part::B, Part::C, Part::A],
            Part::B => [Part::C, Part::A, Part::B],
        };
        let relabel = |t: &LabeledTriangle| LabeledTriangle {
            a: t.vertex(rot[0]),
            b: t.vertex(rot[1]),
            c: t.vertex(rot[2]),
        };
        let tri: Vec<LabeledTriangle> = tri.iter().map(relabel).collect();
        let start = (0..5).find(|&i| roles[i] == single).expect("singleton exists");
        // Edge `start` holds C and the next cycle vertex; edge `start - 1`
        // holds C and the previous one.
        let forward_b = tri[start].role_of(cycle.cycle_vertices[(start + 1) % 5]) == Some(Part::B);
        let order: Vec<usize> = if forward_b {
            // T4, T5, T1, T2, T3 = edges start, start+1, ..., start+4.
            (0..5).map(|j| (start + j) % 5).collect()
        } else {
            (0..5).map(|j| (start + 5 - 1 - j) % 5).collect()
        };
        let triangles = [
            tri[order[2]],
            tri[order[3]],
            tri[order[4]],
            tri[order[0]],
            tri[order[1]],
        ];
        let t0 = &triangles[0];
        let z = shape_z(s.point(t0.a), s.point(t0.b), s.point(t0.c))?;
        let w = PentagonWitness::new(triangles, z)?;
        w.check_shapes(s)?;
        Ok(w)
    }

    /// `(A4 + B3)/2 + (A4 - B3)/(2z) + (C1 - C2)/z`.
    ///
    /// With `B1 = B2`, `C1 - C2 = (A1 - A2)(1 + z)/2`, while the harmonic
    /// points differ by `(A1 - A2)(1 + 1/z)/2`; hence the `1/z` on the last
    /// term. Without it the sum is off by `(C1 - C2)(1/z - 1)`.
    pub fn fifth_harmonic(&self, s: &PointSet) -> Result<G> {
        let t = &self.triangles;
        let (a4, b3) = (s.point(t[3].a), s.point(t[2].b));
        let (c1, c2) = (s.point(t[0].c), s.point(t[1].c));
        let shift = (c1 - c2)
            .checked_div(self.z.value())
            .ok_or(Error::Degenerate("zero shape parameter"))?;
        Ok(harmonic_from_z(a4, b3, &self.z)? + shift)
    }

    /// The harmonic point of `T5` opposite `C5`, computed directly.
    pub fn direct_harmonic(&self, s: &PointSet) -> Result<G> {
        let t5 = &self.triangles[4];
        harmonic_from_z(s.point(t5.a), s.point(t5.b), &self.z)
    }
}

/// The four-triangle formula for the harmonic point of `T5`.
pub fn pentagon_fifth_harmonic(p: &PentagonWitness, s: &PointSet) -> Result<G> {
    p.fifth_harmonic(s)
}
