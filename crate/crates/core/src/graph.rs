//! Simple graphs and labeled multigraphs on dense vertex ids.

use std::collections::BTreeSet;

use crate::{Error, Result, VertexId};

/// An undirected graph without loops or parallel edges.
///
/// Adjacency lists are kept sorted, so `edges()` yields pairs in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated pairs.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let pair = check_pair(n, u, v)?;
            if !set.insert(pair) {
                return Err(Error::Structural(format!("duplicate edge ({}, {})", pair.0, pair.1)));
            }
        }
        Ok(Self::from_sorted_set(n, set))
    }

    /// Like [`SimpleGraph::new`] but silently merges repeated pairs.
    pub fn from_pairs_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            set.insert(check_pair(n, u, v)?);
        }
        Ok(Self::from_sorted_set(n, set))
    }

    fn from_sorted_set(n: usize, set: BTreeSet<(VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleGraph { n, adj, m: set.len() }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        SimpleGraph {
            n,
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// All triangles `(i, j, k)` with `i < j < k`, lexicographically ordered.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for &j in self.adj[i].iter().filter(|&&j| j > i) {
                for &k in self.adj[j].iter().filter(|&&k| k > j) {
                    if self.has_edge(i, k) {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| common_count(&self.adj[u], &self.adj[v]) == 0)
    }

    /// The graph with the listed edges removed. Pairs that are not edges are
    /// ignored.
    pub fn without_edges<I>(&self, removed: I) -> SimpleGraph
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let gone: BTreeSet<(VertexId, VertexId)> = removed.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        let kept: BTreeSet<_> = self.edges().filter(|p| !gone.contains(p)).collect();
        Self::from_sorted_set(self.n, kept)
    }

    /// Number of paths with three edges and four distinct vertices, each
    /// path counted once regardless of direction.
    pub fn count_three_edge_paths(&self) -> u64 {
        self.edges()
            .map(|(u, v)| {
                let du = self.adj[u].len() as u64 - 1;
                let dv = self.adj[v].len() as u64 - 1;
                du * dv - common_count(&self.adj[u], &self.adj[v]) as u64
            })
            .sum()
    }

    /// Iteratively deletes every vertex of degree at most `t` until none is
    /// left. Deleted vertices stay in the vertex set as isolated vertices;
    /// the second component lists them in deletion order.
    pub fn prune_to_min_degree(&self, t: usize) -> (SimpleGraph, Vec<VertexId>) {
        let mut alive = vec![true; self.n];
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut stack: Vec<VertexId> = (0..self.n).filter(|&v| deg[v] <= t).collect();
        let mut removed = Vec::new();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            removed.push(v);
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == t {
                        stack.push(w);
                    }
                }
            }
        }
        let kept: BTreeSet<_> = self.edges().filter(|&(u, v)| alive[u] && alive[v]).collect();
        (Self::from_sorted_set(self.n, kept), removed)
    }
}

fn check_pair(n: usize, u: VertexId, v: VertexId) -> Result<(VertexId, VertexId)> {
    if u == v {
        return Err(Error::Structural(format!("loop at vertex {u}")));
    }
    if u >= n || v >= n {
        return Err(Error::Structural(format!(
            "edge ({u}, {v}) out of range for {n} vertices"
        )));
    }
    Ok((u.min(v), u.max(v)))
}

/// Size of the intersection of two sorted lists.
pub(crate) fn common_count(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// A multigraph whose parallel edges are told apart by their labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph<L> {
    n: usize,
    edges: Vec<((VertexId, VertexId), L)>,
}

impl<L: PartialEq> Multigraph<L> {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    /// Adds a labeled edge. Fails on loops, out-of-range endpoints or a
    /// label that is already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, label: L) -> Result<()> {
        let pair = check_pair(self.n, u, v)?;
        if self.edges.iter().any(|(_, l)| *l == label) {
            return Err(Error::Structural("duplicate multigraph label".into()));
        }
        self.edges.push((pair, label));
        Ok(())
    }
}

impl<L> Multigraph<L> {
    pub(crate) fn push_unchecked(&mut self, pair: (VertexId, VertexId), label: L) {
        self.edges.push(((pair.0.min(pair.1), pair.0.max(pair.1)), label));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[((VertexId, VertexId), L)] {
        &self.edges
    }

    /// How many labeled edges join `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let pair = (u.min(v), u.max(v));
        self.edges.iter().filter(|(p, _)| *p == pair).count()
    }

    /// The underlying simple graph.
    pub fn simple(&self) -> SimpleGraph {
        let set: BTreeSet<_> = self.edges.iter().map(|(p, _)| *p).collect();
        SimpleGraph::from_sorted_set(self.n, set)
    }
}
