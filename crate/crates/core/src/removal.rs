//! Greedy edge-disjoint triangle packings and the farness bounds they give.
//!
//! Deleting every edge of a maximal packing of `m` triangles destroys all
//! triangles, and any triangle-free subgraph must lose at least one edge of
//! each packed triangle, so the triangle edit distance lies in `[m, 3m]`.

use std::collections::HashSet;

use num::{BigInt, BigRational, Zero};
use rand::seq::SliceRandom;

use crate::census::{count_graph_cycles, Limits};
use crate::{rng, Error, Result, SimpleGraph, TripleSystem, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PackingOrder {
    /// Triangles `(i, j, k)`, `i < j < k`, in lexicographic order.
    #[default]
    Lexicographic,
    /// The lexicographic list shuffled with the given seed.
    Random(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingResult {
    /// The packed triangles as a (linear) triple system on `V(G)`.
    pub packing: TripleSystem,
    /// `G` minus the edges of the packed triangles.
    pub leftover: SimpleGraph,
}

impl PackingResult {
    pub fn size(&self) -> usize {
        self.packing.edge_count()
    }
}

pub fn greedy_triangle_packing(g: &SimpleGraph, order: PackingOrder) -> PackingResult {
    let mut triangles = g.triangles();
    if let PackingOrder::Random(seed) = order {
        triangles.shuffle(&mut rng::seeded(seed));
    }
    let mut used: HashSet<(VertexId, VertexId)> = HashSet::new();
    let mut packed = Vec::new();
    for t in triangles {
        let [i, j, k] = t;
        let sides = [(i, j), (i, k), (j, k)];
        if sides.iter().any(|s| used.contains(s)) {
            continue;
        }
        used.extend(sides);
        packed.push(t);
    }
    let leftover = g.without_edges(used.iter().copied());
    let packing = TripleSystem::new(g.n(), packed).expect("packed triangles are distinct triples");
    PackingResult { packing, leftover }
}

/// Bounds on `dist / n^2`, where `dist` is the least number of edge
/// deletions that make `G` triangle-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarnessCertificate {
    pub n: usize,
    pub m_pack: usize,
    /// `m_pack / n^2`.
    pub eps_lower: BigRational,
    /// `3 m_pack / n^2`.
    pub eps_upper: BigRational,
}

fn over_n_squared(x: usize, n: usize) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    BigRational::new(BigInt::from(x), BigInt::from(n) * BigInt::from(n))
}

pub fn certificate_from_packing(n: usize, m_pack: usize) -> FarnessCertificate {
    FarnessCertificate {
        n,
        m_pack,
        eps_lower: over_n_squared(m_pack, n),
        eps_upper: over_n_squared(3 * m_pack, n),
    }
}

/// Certificate from the lexicographic greedy packing.
pub fn farness_certificate(g: &SimpleGraph) -> FarnessCertificate {
    let p = greedy_triangle_packing(g, PackingOrder::Lexicographic);
    certificate_from_packing(g.n(), p.size())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleReport {
    pub length: usize,
    pub count: u64,
    pub eps_lower: BigRational,
    /// `c eps^{3l} n^{2l+1}`.
    pub required: BigRational,
    pub holds: bool,
}

/// Compares the number of `(2l+1)`-cycles of `G` with
/// `c eps^{3l} n^{2l+1}`, where `eps` is the certified lower bound.
pub fn odd_cycle_check(g: &SimpleGraph, l: usize, c: &BigRational, limits: &Limits) -> Result<OddCycleReport> {
    if l < 2 {
        return Err(Error::Argument("l must be at least 2".into()));
    }
    let cert = farness_certificate(g);
    let length = 2 * l + 1;
    let count = count_graph_cycles(g, length, limits)?;
    let n = BigRational::from_integer(BigInt::from(g.n()));
    let required = c * num::pow(cert.eps_lower.clone(), 3 * l) * num::pow(n, length);
    Ok(OddCycleReport {
        length,
        count,
        holds: BigRational::from_integer(count.into()) >= required,
        eps_lower: cert.eps_lower,
        required,
    })
}
