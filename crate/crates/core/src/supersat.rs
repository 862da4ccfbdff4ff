//! Auxiliary graphs of a linear triple system and the counting identities
//! and inequalities behind the pentagon supersaturation bound.
//!
//! For a vertex `v`, `G_v` joins `y` and `z` whenever `v w x` and `x y z` are
//! edges. Three-edge paths `w x y z` of `G_v` are *good* when their witness
//! edges close up into a loose pentagon through `v`; the rest are *bad*.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, BigUint, Signed, Zero};
use rayon::prelude::*;

use crate::census::{count_loose_cycles, Limits, LooseCycleCopy};
use crate::graph::Multigraph;
use crate::hypergraph::others;
use crate::{Error, LinearPath, Result, SimpleGraph, Triple, TripleSystem, VertexId};

/// Edge-count hypothesis of the pentagon bound: `m > 100 n^{3/2}`.
pub const C5_EDGE_THRESHOLD: u64 = 100;
/// A vertex is useful when `e(G_v) > 1000 n`.
pub const USEFUL_THRESHOLD: u64 = 1000;
/// Degree cut-off of the pruning step.
pub const PRUNE_DEGREE: usize = 100;

/// `G_v`, stored on the full vertex set with `v` isolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxGraph {
    pub base: VertexId,
    pub graph: SimpleGraph,
}

fn aux_pairs(h: &TripleSystem, v: VertexId) -> Vec<(VertexId, VertexId)> {
    let mut pairs = Vec::new();
    for &e in h.incident(v) {
        let (p, q) = others(&h.edge(e), v);
        for x in [p, q] {
            for &f in h.incident(x) {
                if f != e {
                    pairs.push(others(&h.edge(f), x));
                }
            }
        }
    }
    pairs
}

pub fn build_gv(h: &TripleSystem, v: VertexId) -> Result<AuxGraph> {
    h.require_linear()?;
    if v >= h.n() {
        return Err(Error::Argument(format!("vertex {v} out of range")));
    }
    Ok(AuxGraph {
        base: v,
        graph: SimpleGraph::from_pairs_dedup(h.n(), aux_pairs(h, v))?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: u128,
    pub rhs: u128,
    pub equal: bool,
}

impl IdentityCheck {
    fn new(lhs: u128, rhs: u128) -> Self {
        IdentityCheck {
            lhs,
            rhs,
            equal: lhs == rhs,
        }
    }
}

/// `sum_v e(G_v)` against `4 sum_x C(d(x), 2)`.
pub fn gv_edge_identity(h: &TripleSystem) -> Result<IdentityCheck> {
    h.require_linear()?;
    let lhs: u128 = (0..h.n())
        .into_par_iter()
        .map(|v| build_gv(h, v).map(|g| g.graph.edge_count() as u128))
        .sum::<Result<u128>>()?;
    let rhs: u128 = h
        .degree_sequence()
        .iter()
        .map(|&d| 4 * (d as u128) * (d as u128).saturating_sub(1) / 2)
        .sum();
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The certificate that `w x y z` is a good path of `G_u`: the six edges
/// `u a a'`, `a w x`, `x y b`, `u b b'`, `y z c`, `u c c'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoodPathWitness {
    pub u: VertexId,
    pub w: VertexId,
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub a_prime: VertexId,
    pub b_prime: VertexId,
    pub c_prime: VertexId,
}

fn sorted(mut t: Triple) -> Triple {
    t.sort_unstable();
    t
}

impl GoodPathWitness {
    /// The six witness edges in the order listed above.
    pub fn edges(&self) -> [Triple; 6] {
        let s = self;
        [
            sorted([s.u, s.a, s.a_prime]),
            sorted([s.a, s.w, s.x]),
            sorted([s.x, s.y, s.b]),
            sorted([s.u, s.b, s.b_prime]),
            sorted([s.y, s.z, s.c]),
            sorted([s.u, s.c, s.c_prime]),
        ]
    }

    /// `u a a'`, `a w x`, `x y b`, `y z c`, `u c c'` in cyclic order.
    pub fn pentagon(&self) -> [Triple; 5] {
        let e = self.edges();
        [e[0], e[1], e[2], e[4], e[5]]
    }

    /// Checks the distinctness conditions and that all six edges are in `h`.
    pub fn validate(&self, h: &TripleSystem) -> Result<()> {
        let mut all = [
            self.u,
            self.w,
            self.x,
            self.y,
            self.z,
            self.a,
            self.b,
            self.c,
            self.a_prime,
            self.c_prime,
        ];
        all.sort_unstable();
        if all.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::Verification(format!("witness {self:?} repeats a vertex")));
        }
        for e in self.edges() {
            if !h.contains_edge(e) {
                return Err(Error::Verification(format!("witness edge {e:?} is not in H")));
            }
        }
        Ok(())
    }
}

/// Good paths of one `G_v` with one witness each, plus the bad-path count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathClassification {
    pub base: VertexId,
    pub good: Vec<GoodPathWitness>,
    pub bad_count: u64,
    pub total: u64,
}

/// Finds the witness of `w x y z`. In a linear system each pair of `G_u`
/// lies in a unique edge, so the witness is forced and only the
/// distinctness conditions remain to be checked.
fn witness(h: &TripleSystem, u: VertexId, [w, x, y, z]: [VertexId; 4]) -> Option<GoodPathWitness> {
    let a = h.third_vertex(w, x)?;
    let b = h.third_vertex(x, y)?;
    let c = h.third_vertex(y, z)?;
    let a_prime = h.third_vertex(u, a)?;
    let b_prime = h.third_vertex(u, b)?;
    let c_prime = h.third_vertex(u, c)?;
    let wit = GoodPathWitness {
        u,
        w,
        x,
        y,
        z,
        a,
        b,
        c,
        a_prime,
        b_prime,
        c_prime,
    };
    let mut all = [u, w, x, y, z, a, b, c, a_prime, c_prime];
    all.sort_unstable();
    if all.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some(wit)
    }
}

fn classify_in(h: &TripleSystem, gv: &AuxGraph) -> PathClassification {
    let g = &gv.graph;
    let mut good = Vec::new();
    let (mut bad, mut total) = (0u64, 0u64);
    for (x, y) in g.edges() {
        for &w in g.neighbors(x) {
            if w == y {
                continue;
            }
            for &z in g.neighbors(y) {
                if z == x || z == w {
                    continue;
                }
                total += 1;
                match witness(h, gv.base, [w, x, y, z]) {
                    Some(wit) => good.push(wit),
                    None => bad += 1,
                }
            }
        }
    }
    PathClassification {
        base: gv.base,
        good,
        bad_count: bad,
        total,
    }
}

/// Classifies every three-edge path of `G_v`.
pub fn classify_paths(h: &TripleSystem, v: VertexId) -> Result<PathClassification> {
    let gv = build_gv(h, v)?;
    Ok(classify_in(h, &gv))
}

/// `sum over edges xy of G_v of 12 (d(x) + d(y) - 2)`.
pub fn claim_bound(g: &SimpleGraph) -> u64 {
    g.edges()
        .map(|(x, y)| 12 * (g.degree(x) + g.degree(y) - 2) as u64)
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimRow {
    pub v: VertexId,
    pub edges: usize,
    pub paths: u64,
    pub good: u64,
    pub bad: u64,
    pub bound: u64,
    pub holds: bool,
}

/// The bad-path inequality for every vertex.
pub fn claim_check(h: &TripleSystem) -> Result<Vec<ClaimRow>> {
    h.require_linear()?;
    (0..h.n())
        .into_par_iter()
        .map(|v| {
            let gv = build_gv(h, v)?;
            let cls = classify_in(h, &gv);
            let bound = claim_bound(&gv.graph);
            Ok(ClaimRow {
                v,
                edges: gv.graph.edge_count(),
                paths: cls.total,
                good: cls.good.len() as u64,
                bad: cls.bad_count,
                bound,
                holds: cls.bad_count <= bound,
            })
        })
        .collect()
}

/// Every pentagon produced by a good path, with the number of `(v, path)`
/// pairs producing it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PentagonTally {
    pub multiplicity: BTreeMap<Vec<Triple>, usize>,
    pub good_paths: u64,
}

impl PentagonTally {
    pub fn max_multiplicity(&self) -> usize {
        self.multiplicity.values().copied().max().unwrap_or(0)
    }
}

pub fn pentagons_from_good_paths(h: &TripleSystem) -> Result<PentagonTally> {
    h.require_linear()?;
    let per_vertex: Vec<Vec<GoodPathWitness>> = (0..h.n())
        .into_par_iter()
        .map(|v| classify_paths(h, v).map(|c| c.good))
        .collect::<Result<_>>()?;
    let mut tally = PentagonTally::default();
    for wit in per_vertex.into_iter().flatten() {
        wit.validate(h).map_err(|e| Error::Internal(e.to_string()))?;
        let copy = LooseCycleCopy::from_sequence(&wit.pentagon())
            .map_err(|e| Error::Internal(format!("good path {wit:?} gives no pentagon: {e}")))?;
        *tally.multiplicity.entry(copy.edge_set()).or_insert(0) += 1;
        tally.good_paths += 1;
    }
    Ok(tally)
}

/// Exact value of a lower bound together with whether its hypothesis holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: BigUint,
    pub m: BigUint,
    pub k: u32,
    pub threshold_ok: bool,
    pub bound: BigRational,
}

fn ratio_pow(num: &BigInt, num_exp: u32, den: &BigInt, den_exp: u32) -> BigRational {
    BigRational::new(num.pow(num_exp), den.pow(den_exp))
}

/// `m^6 / n^7`, with hypothesis `m > 100 n^{3/2}` decided as
/// `m^2 > 10^4 n^3`.
pub fn c5_bound(n: &BigUint, m: &BigUint) -> Result<BoundReport> {
    if *n <= BigUint::from(10u32) {
        return Err(Error::Argument("the pentagon bound needs n > 10".into()));
    }
    let (ni, mi) = (BigInt::from(n.clone()), BigInt::from(m.clone()));
    let t = BigInt::from(C5_EDGE_THRESHOLD);
    Ok(BoundReport {
        n: n.clone(),
        m: m.clone(),
        k: 2,
        threshold_ok: mi.pow(2) > t.pow(2) * ni.pow(3),
        bound: ratio_pow(&mi, 6, &ni, 7),
    })
}

/// `m^{3k} / n^{4k-1}` for `C_{2k+1}`, with hypothesis
/// `m > C n^{2 - 1/(3k)}` decided as `m^{3k} > C^{3k} n^{6k-1}`.
pub fn ck_bound(n: &BigUint, m: &BigUint, k: u32, c: &BigRational) -> Result<BoundReport> {
    if k < 2 {
        return Err(Error::Argument("k must be at least 2".into()));
    }
    if !c.is_positive() {
        return Err(Error::Argument("the constant C must be positive".into()));
    }
    if n.is_zero() {
        return Err(Error::Argument("n must be positive".into()));
    }
    let (ni, mi) = (BigInt::from(n.clone()), BigInt::from(m.clone()));
    let (p, q) = (c.numer(), c.denom());
    let lhs = (&mi * q).pow(3 * k);
    let rhs = p.pow(3 * k) * ni.pow(6 * k - 1);
    Ok(BoundReport {
        n: n.clone(),
        m: m.clone(),
        k,
        threshold_ok: lhs > rhs,
        bound: ratio_pow(&mi, 3 * k, &ni, 4 * k - 1),
    })
}

/// `G_u` for `k`-edge paths: one edge per linear path `P` with `k` edges
/// that has `u` as a degree-one vertex of its first edge, joining the two
/// degree-one vertices of its last edge. Labels are the paths read from `u`.
pub type KPathMultigraph = Multigraph<LinearPath>;

pub fn build_gu_multigraph(h: &TripleSystem, u: VertexId, k: usize) -> Result<KPathMultigraph> {
    if k < 2 {
        return Err(Error::Argument("k must be at least 2".into()));
    }
    h.require_linear()?;
    if u >= h.n() {
        return Err(Error::Argument(format!("vertex {u} out of range")));
    }
    let mut mg = Multigraph::new(h.n());
    for &first in h.incident(u) {
        h.walk_paths_from(first, k, Some(u), &mut |p| {
            let last = h.edge(p[k - 1]);
            let prev = h.edge(p[k - 2]);
            let entry = crate::hypergraph::single_common(&prev, &last).expect("consecutive path edges meet");
            mg.push_unchecked(others(&last, entry), LinearPath { edges: p.to_vec() });
        });
    }
    Ok(mg)
}

/// `sum_u |E(G_u)|` against `4` times the number of `k`-edge linear paths.
pub fn kpath_identity(h: &TripleSystem, k: usize) -> Result<IdentityCheck> {
    h.require_linear()?;
    let lhs: u128 = (0..h.n())
        .into_par_iter()
        .map(|u| build_gu_multigraph(h, u, k).map(|g| g.edge_count() as u128))
        .sum::<Result<u128>>()?;
    let rhs = 4 * h.linear_paths(k)? as u128;
    Ok(IdentityCheck::new(lhs, rhs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Usefulness {
    pub v: VertexId,
    pub edges: usize,
    pub useful: bool,
}

/// Splits vertices by `e(G_v) > 1000 n`.
pub fn usefulness(h: &TripleSystem) -> Result<Vec<Usefulness>> {
    h.require_linear()?;
    let limit = USEFUL_THRESHOLD as u128 * h.n() as u128;
    (0..h.n())
        .into_par_iter()
        .map(|v| {
            let e = build_gv(h, v)?.graph.edge_count();
            Ok(Usefulness {
                v,
                edges: e,
                useful: e as u128 > limit,
            })
        })
        .collect()
}

/// Loose pentagon count of `h` next to `m^6 / n^7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonRatio {
    pub count: u64,
    pub bound: BigRational,
    /// `count / bound`, absent when the bound is zero.
    pub ratio: Option<BigRational>,
    pub threshold_ok: bool,
}

impl PentagonRatio {
    /// The lower bound can only be claimed under its hypothesis; otherwise
    /// the comparison is vacuously fine.
    pub fn lower_bound_holds(&self) -> bool {
        !self.threshold_ok || BigRational::from_integer(self.count.into()) >= self.bound
    }
}

pub fn pentagon_ratio(h: &TripleSystem, limits: &Limits) -> Result<PentagonRatio> {
    let count = count_loose_cycles(h, 5, limits)?;
    let rep = c5_bound(&BigUint::from(h.n()), &BigUint::from(h.edge_count()))?;
    let ratio = if rep.bound.is_zero() {
        None
    } else {
        Some(BigRational::from_integer(count.into()) / &rep.bound)
    };
    Ok(PentagonRatio {
        count,
        bound: rep.bound,
        ratio,
        threshold_ok: rep.threshold_ok,
    })
}

/// Three-edge path count of a graph next to `e^3 / (10 n^2)`, where `n`
/// counts non-isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFloor {
    pub paths: u64,
    pub floor: BigRational,
    /// Average degree above [`PRUNE_DEGREE`].
    pub applies: bool,
}

impl PathFloor {
    pub fn holds(&self) -> bool {
        !self.applies || BigRational::from_integer(self.paths.into()) >= self.floor
    }
}

pub fn three_path_floor(g: &SimpleGraph) -> PathFloor {
    let e = g.edge_count() as u64;
    let n = (0..g.n()).filter(|&v| g.degree(v) > 0).count() as u64;
    let floor = if n == 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::from(e).pow(3), BigInt::from(10 * n * n))
    };
    PathFloor {
        paths: g.count_three_edge_paths(),
        floor,
        applies: n > 0 && 2 * e > PRUNE_DEGREE as u64 * n,
    }
}
