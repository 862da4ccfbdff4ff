//! Triple systems (3-uniform hypergraphs) and linear paths.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::{Error, Result, SimpleGraph};

pub type VertexId = usize;

/// An edge of a triple system, stored with its vertices ascending.
pub type Triple = [VertexId; 3];

/// A 3-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored sorted and the edge list is kept in lexicographic order,
/// so two systems with the same edge set compare equal and serialize to the
/// same bytes. A pair-to-edge index is built once at construction; when the
/// system is linear it maps every covered pair to its unique edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSystem {
    n: usize,
    edges: Vec<Triple>,
    incidence: Vec<Vec<usize>>,
    pairs: HashMap<(VertexId, VertexId), usize>,
    repeated_pair: Option<(VertexId, VertexId)>,
}

impl TripleSystem {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut list = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::Structural(format!(
                    "edge {e:?} does not have three distinct vertices"
                )));
            }
            if e[2] >= n {
                return Err(Error::Structural(format!("edge {e:?} out of range for {n} vertices")));
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Structural(format!("duplicate edge {:?}", w[0])));
        }

        let mut incidence = vec![Vec::new(); n];
        let mut pairs = HashMap::with_capacity(list.len() * 3);
        let mut repeated_pair = None;
        for (i, e) in list.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
            for p in pairs_of(e) {
                if pairs.insert(p, i).is_some() && repeated_pair.is_none() {
                    repeated_pair = Some(p);
                }
            }
        }
        Ok(TripleSystem {
            n,
            edges: list,
            incidence,
            pairs,
            repeated_pair,
        })
    }

    pub fn empty(n: usize) -> Self {
        TripleSystem::new(n, []).expect("empty system is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Triple {
        self.edges[i]
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn incident(&self, v: VertexId) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// True iff no unordered pair of vertices lies in two edges.
    pub fn is_linear(&self) -> bool {
        self.repeated_pair.is_none()
    }

    pub fn require_linear(&self) -> Result<()> {
        match self.repeated_pair {
            None => Ok(()),
            Some((u, v)) => Err(Error::NotLinear(u, v)),
        }
    }

    /// The edge containing both `u` and `v`, if any. For a non-linear system
    /// this is the last such edge in canonical order.
    pub fn edge_with_pair(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.pairs.get(&(u.min(v), u.max(v))).copied()
    }

    /// The third vertex of the edge through `u` and `v`.
    pub fn third_vertex(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        self.edge_with_pair(u, v).map(|i| other_vertex(&self.edges[i], u, v))
    }

    pub fn contains_edge(&self, e: Triple) -> bool {
        let mut e = e;
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    /// Per-vertex edge counts.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// The graph of all pairs covered by some edge.
    pub fn shadow(&self) -> SimpleGraph {
        SimpleGraph::from_pairs_dedup(self.n, self.edges.iter().flat_map(pairs_of))
            .expect("edges were validated at construction")
    }

    /// Calls `visit` on every directed linear path with `k` edges that starts
    /// at edge `first` and does not leave `first` through `banned_exit`.
    ///
    /// A linear path is a sequence of edges in which consecutive edges meet in
    /// exactly one vertex and non-consecutive edges are disjoint.
    pub fn walk_paths_from<F>(&self, first: usize, k: usize, banned_exit: Option<VertexId>, visit: &mut F)
    where
        F: FnMut(&[usize]),
    {
        if k == 0 {
            return;
        }
        let mut path = vec![first];
        let mut used: Vec<VertexId> = self.edges[first].to_vec();
        self.extend_path(&mut path, &mut used, banned_exit, k, 0, visit);
    }

    /// Like [`TripleSystem::walk_paths_from`], but only edges with index at
    /// least `min_edge` may follow the first one.
    pub(crate) fn walk_paths_above<F>(&self, first: usize, k: usize, min_edge: usize, visit: &mut F)
    where
        F: FnMut(&[usize]),
    {
        let mut path = vec![first];
        let mut used: Vec<VertexId> = self.edges[first].to_vec();
        self.extend_path(&mut path, &mut used, None, k, min_edge, visit);
    }

    fn extend_path<F>(
        &self,
        path: &mut Vec<usize>,
        used: &mut Vec<VertexId>,
        entry: Option<VertexId>,
        k: usize,
        min_edge: usize,
        visit: &mut F,
    ) where
        F: FnMut(&[usize]),
    {
        if path.len() == k {
            visit(path);
            return;
        }
        let last = self.edges[*path.last().expect("path is non-empty")];
        for &x in &last {
            if Some(x) == entry {
                continue;
            }
            for &f in &self.incidence[x] {
                if f < min_edge {
                    continue;
                }
                let fe = self.edges[f];
                if fe == last {
                    continue;
                }
                let (o1, o2) = others(&fe, x);
                if used.contains(&o1) || used.contains(&o2) {
                    continue;
                }
                path.push(f);
                used.push(o1);
                used.push(o2);
                self.extend_path(path, used, Some(x), k, min_edge, visit);
                used.truncate(used.len() - 2);
                path.pop();
            }
        }
    }

    /// Number of linear paths with `k` edges, a path and its reverse counted
    /// once.
    pub fn linear_paths(&self, k: usize) -> Result<u64> {
        if k < 1 {
            return Err(Error::Argument("path length k must be at least 1".into()));
        }
        self.require_linear()?;
        if k == 1 {
            return Ok(self.edges.len() as u64);
        }
        let directed: u64 = (0..self.edges.len())
            .into_par_iter()
            .map(|first| {
                let mut c = 0u64;
                self.walk_paths_from(first, k, None, &mut |_| c += 1);
                c
            })
            .sum();
        Ok(directed / 2)
    }

    /// Every linear path with `k` edges, each listed once in the direction
    /// whose first edge index is smaller than its last.
    pub fn enumerate_linear_paths(&self, k: usize) -> Result<Vec<LinearPath>> {
        if k < 1 {
            return Err(Error::Argument("path length k must be at least 1".into()));
        }
        self.require_linear()?;
        let mut out = Vec::new();
        for first in 0..self.edges.len() {
            self.walk_paths_from(first, k, None, &mut |p| {
                if k == 1 || p[0] < p[k - 1] {
                    out.push(LinearPath { edges: p.to_vec() });
                }
            });
        }
        Ok(out)
    }
}

/// A linear path given by the indices of its edges in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearPath {
    pub edges: Vec<usize>,
}

impl LinearPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices of the first or last edge that lie in no other edge of the
    /// path. A one-edge path has all three of its vertices as endpoints.
    pub fn endpoints(&self, h: &TripleSystem) -> Vec<VertexId> {
        let k = self.edges.len();
        if k == 0 {
            return Vec::new();
        }
        if k == 1 {
            return h.edge(self.edges[0]).to_vec();
        }
        let first = h.edge(self.edges[0]);
        let second = h.edge(self.edges[1]);
        let last = h.edge(self.edges[k - 1]);
        let before_last = h.edge(self.edges[k - 2]);
        let mut out: Vec<VertexId> = first.iter().copied().filter(|v| !second.contains(v)).collect();
        out.extend(last.iter().copied().filter(|v| !before_last.contains(v)));
        out
    }

    pub fn triples(&self, h: &TripleSystem) -> Vec<Triple> {
        self.edges.iter().map(|&i| h.edge(i)).collect()
    }
}

pub(crate) fn pairs_of(e: &Triple) -> [(VertexId, VertexId); 3] {
    [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])]
}

/// The two vertices of `e` other than `x`.
pub(crate) fn others(e: &Triple, x: VertexId) -> (VertexId, VertexId) {
    if e[0] == x {
        (e[1], e[2])
    } else if e[1] == x {
        (e[0], e[2])
    } else {
        (e[0], e[1])
    }
}

pub(crate) fn other_vertex(e: &Triple, u: VertexId, v: VertexId) -> VertexId {
    *e.iter()
        .find(|&&w| w != u && w != v)
        .expect("edge has three distinct vertices")
}

/// The unique common vertex of two edges, if they meet in exactly one.
pub(crate) fn single_common(e: &Triple, f: &Triple) -> Option<VertexId> {
    let mut common = e.iter().filter(|v| f.contains(v));
    match (common.next(), common.next()) {
        (Some(&v), None) => Some(v),
        _ => None,
    }
}
