//! Generators for the explicit triple systems and point sets.

mod ruzsa;

pub use ruzsa::{
    gen_ruzsa, ruzsa_stats, ruzsa_verify, RuzsaInstance, RuzsaReport, RuzsaRow, RuzsaTriangle, RUZSA_EXPONENT_LIMIT,
};

use std::collections::HashSet;

use rand::Rng;

use crate::geometry::{GaussianRational, PointSet};
use crate::{rng, Error, Result, SimpleGraph, TripleSystem};

/// The triple system on the three coordinate planes of `[n]^3`: vertices are
/// the pairs `xy`, `yz`, `xz`, and each point `(x, y, z)` contributes the
/// edge `{xy, yz, xz}`.
///
/// Vertex ids: `xy -> x n + y`, `yz -> n^2 + y n + z`, `xz -> 2n^2 + x n + z`.
pub fn gen_t3(n: usize) -> Result<TripleSystem> {
    if n < 1 {
        return Err(Error::Argument("T3 needs n >= 1".into()));
    }
    let nn = n * n;
    let mut edges = Vec::with_capacity(nn * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                edges.push([x * n + y, nn + y * n + z, 2 * nn + x * n + z]);
            }
        }
    }
    TripleSystem::new(3 * nn, edges)
}

/// Replaces every vertex `v` by the clones `v t + a` (`0 <= a < t`) and every
/// edge `{x, y, z}` (`x < y < z`) by the triples
/// `{(x, a), (y, b), (z, c)}` with `a + b + c = 0 mod t`.
pub fn gen_blowup(h: &TripleSystem, t: usize) -> Result<TripleSystem> {
    if t < 1 {
        return Err(Error::Argument("blow-up factor t must be at least 1".into()));
    }
    h.require_linear()?;
    let mut edges = Vec::with_capacity(h.edge_count() * t * t);
    for e in h.edges() {
        for a in 0..t {
            for b in 0..t {
                let c = (2 * t - a - b) % t;
                edges.push([e[0] * t + a, e[1] * t + b, e[2] * t + c]);
            }
        }
    }
    TripleSystem::new(h.n() * t, edges)
}

/// A random linear triple system: `attempts` uniformly random triples are
/// proposed in turn and each is kept if it shares no pair with a kept edge.
pub fn random_linear_system(n: usize, attempts: usize, seed: u64) -> Result<TripleSystem> {
    if n < 3 {
        return Ok(TripleSystem::empty(n));
    }
    let mut rng = rng::seeded(seed);
    let mut pairs = HashSet::new();
    let mut edges = Vec::new();
    for _ in 0..attempts {
        let mut e = [0usize; 3];
        for slot in 0..3 {
            e[slot] = loop {
                let v = rng.gen_range(0..n as u64) as usize;
                if !e[..slot].contains(&v) {
                    break v;
                }
            };
        }
        e.sort_unstable();
        let ps = [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])];
        if ps.iter().any(|p| pairs.contains(p)) {
            continue;
        }
        pairs.extend(ps);
        edges.push(e);
    }
    TripleSystem::new(n, edges)
}

/// `G(n, p)` with `p = num / den`.
pub fn random_graph(n: usize, num: u32, den: u32, seed: u64) -> Result<SimpleGraph> {
    if den == 0 || num > den {
        return Err(Error::Argument(format!(
            "edge probability {num}/{den} is not in [0, 1]"
        )));
    }
    let mut rng = rng::seeded(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_ratio(num, den) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges)
}

/// `count` distinct points of the grid `{0..w} x {0..h}`, chosen uniformly,
/// listed in the order they were drawn.
pub fn random_lattice_points(w: i64, h: i64, count: usize, seed: u64) -> Result<PointSet> {
    if w < 1 || h < 1 || count as i64 > w * h {
        return Err(Error::Argument(format!(
            "cannot pick {count} points from a {w}x{h} grid"
        )));
    }
    let mut rng = rng::seeded(seed);
    let mut seen = HashSet::new();
    let mut pts = Vec::with_capacity(count);
    while pts.len() < count {
        let x = rng.gen_range(0..w);
        let y = rng.gen_range(0..h);
        if seen.insert((x, y)) {
            pts.push(GaussianRational::from_ints(x, y));
        }
    }
    PointSet::new(pts)
}
