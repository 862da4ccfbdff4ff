//! Counting loose cycles in triple systems and simple cycles in graphs.
//!
//! The fast counters are anchored depth-first searches; the `_oracle`
//! variants scan every edge subset and share no code with them, so the two
//! can be checked against each other.

use rayon::prelude::*;

use crate::hypergraph::single_common;
use crate::{Error, Result, SimpleGraph, Triple, TripleSystem, VertexId};

/// Work budget for exhaustive counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_work: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_work: 1_000_000_000,
        }
    }
}

impl Limits {
    pub fn check(&self, estimated: u128) -> Result<()> {
        if estimated > self.max_work {
            Err(Error::Capacity {
                estimated,
                limit: self.max_work,
            })
        } else {
            Ok(())
        }
    }
}

/// One copy of a loose cycle `C_k`.
///
/// Edge `i` is `{v_i, v_{i+1}, w_i}` with indices taken mod `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LooseCycleCopy {
    pub edges: Vec<Triple>,
    pub cycle_vertices: Vec<VertexId>,
    pub wing_vertices: Vec<VertexId>,
}

impl LooseCycleCopy {
    /// Reads a cyclic edge sequence as a loose cycle, checking every
    /// invariant on the way.
    pub fn from_sequence(edges: &[Triple]) -> Result<Self> {
        let k = edges.len();
        if k < 3 {
            return Err(Error::Argument("a loose cycle needs at least 3 edges".into()));
        }
        let mut cycle_vertices = Vec::with_capacity(k);
        for i in 0..k {
            let prev = &edges[(i + k - 1) % k];
            let v = single_common(prev, &edges[i]).ok_or_else(|| {
                Error::Verification(format!(
                    "edges {:?} and {:?} do not meet in exactly one vertex",
                    prev, edges[i]
                ))
            })?;
            cycle_vertices.push(v);
        }
        let wing_vertices = (0..k)
            .map(|i| {
                let (a, b) = (cycle_vertices[i], cycle_vertices[(i + 1) % k]);
                if a == b {
                    return Err(Error::Verification(format!(
                        "edge {:?} meets both neighbours in the same vertex",
                        edges[i]
                    )));
                }
                Ok(crate::hypergraph::other_vertex(&edges[i], a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        let copy = LooseCycleCopy {
            edges: edges.to_vec(),
            cycle_vertices,
            wing_vertices,
        };
        copy.validate()?;
        Ok(copy)
    }

    /// Checks the full distinctness and intersection pattern.
    pub fn validate(&self) -> Result<()> {
        let k = self.edges.len();
        let mut all: Vec<VertexId> = self.cycle_vertices.iter().chain(&self.wing_vertices).copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) || all.len() != 2 * k {
            return Err(Error::Verification(format!(
                "cycle vertices {:?} and wings {:?} are not 2k distinct vertices",
                self.cycle_vertices, self.wing_vertices
            )));
        }
        for i in 0..k {
            let mut expect = [
                self.cycle_vertices[i],
                self.cycle_vertices[(i + 1) % k],
                self.wing_vertices[i],
            ];
            expect.sort_unstable();
            let mut got = self.edges[i];
            got.sort_unstable();
            if expect != got {
                return Err(Error::Verification(format!("edge {i} is {got:?}, expected {expect:?}")));
            }
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                let shared = self.edges[i].iter().filter(|v| self.edges[j].contains(v)).count();
                if consecutive && shared != 1 || !consecutive && shared != 0 {
                    return Err(Error::Verification(format!(
                        "edges {i} and {j} share {shared} vertices"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The edge set in canonical order.
    pub fn edge_set(&self) -> Vec<Triple> {
        let mut set = self.edges.clone();
        set.sort_unstable();
        set
    }
}

fn work_estimate(h: &TripleSystem, k: usize) -> u128 {
    let max_deg = (0..h.n()).map(|v| h.degree(v)).max().unwrap_or(0) as u128;
    let branching = 2 * max_deg.saturating_sub(1);
    (h.edge_count() as u128)
        .saturating_mul(branching.saturating_pow(k.saturating_sub(2) as u32))
        .saturating_mul(3)
}

/// Walks every loose `C_k` once as a cyclic edge sequence whose first edge
/// has the smallest index and whose second edge index is below its last.
fn for_each_cycle_sequence<F>(h: &TripleSystem, k: usize, anchor: usize, visit: &mut F)
where
    F: FnMut(&[usize]),
{
    let first = h.edge(anchor);
    h.walk_paths_above(anchor, k - 1, anchor + 1, &mut |path| {
        let exit_first = single_common(&first, &h.edge(path[1])).expect("path edges meet");
        let last = h.edge(path[k - 2]);
        let entry_last = single_common(&h.edge(path[k - 3]), &last).expect("path edges meet");
        let used: Vec<VertexId> = path.iter().flat_map(|&i| h.edge(i)).collect();
        for &x in last.iter().filter(|&&x| x != entry_last) {
            for &y in first.iter().filter(|&&y| y != exit_first) {
                let Some(f) = h.edge_with_pair(x, y) else { continue };
                if f <= anchor || f <= path[1] {
                    continue;
                }
                let third = crate::hypergraph::other_vertex(&h.edge(f), x, y);
                if used.contains(&third) {
                    continue;
                }
                let mut seq = path.to_vec();
                seq.push(f);
                visit(&seq);
            }
        }
    });
}

/// Number of unlabeled loose `C_k` in a linear triple system.
pub fn count_loose_cycles(h: &TripleSystem, k: usize, limits: &Limits) -> Result<u64> {
    if k < 3 {
        return Err(Error::Argument("cycle length k must be at least 3".into()));
    }
    h.require_linear()?;
    limits.check(work_estimate(h, k))?;
    Ok((0..h.edge_count())
        .into_par_iter()
        .map(|anchor| {
            let mut c = 0u64;
            for_each_cycle_sequence(h, k, anchor, &mut |_| c += 1);
            c
        })
        .sum())
}

/// Every loose `C_k` of a linear triple system, each listed once.
pub fn loose_cycles(h: &TripleSystem, k: usize, limits: &Limits) -> Result<Vec<LooseCycleCopy>> {
    if k < 3 {
        return Err(Error::Argument("cycle length k must be at least 3".into()));
    }
    h.require_linear()?;
    limits.check(work_estimate(h, k))?;
    let mut seqs = Vec::new();
    for anchor in 0..h.edge_count() {
        for_each_cycle_sequence(h, k, anchor, &mut |s| seqs.push(s.to_vec()));
    }
    seqs.into_iter()
        .map(|s| {
            let triples: Vec<Triple> = s.iter().map(|&i| h.edge(i)).collect();
            LooseCycleCopy::from_sequence(&triples)
        })
        .collect()
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// True iff the given edges, in any order, form a loose cycle on all of them.
///
/// Every vertex must lie in at most two of the edges, exactly `k` vertices in
/// two, each edge must contain exactly two of those, and the edges must be
/// connected through them.
pub fn is_loose_cycle_set(edges: &[Triple]) -> bool {
    let k = edges.len();
    if k < 3 {
        return false;
    }
    let mut count: std::collections::HashMap<VertexId, usize> = std::collections::HashMap::new();
    for e in edges {
        for &v in e {
            *count.entry(v).or_default() += 1;
        }
    }
    if count.values().any(|&c| c > 2) || count.values().filter(|&&c| c == 2).count() != k {
        return false;
    }
    if edges.iter().any(|e| e.iter().filter(|v| count[v] == 2).count() != 2) {
        return false;
    }
    // Connectivity by flood fill over shared vertices.
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..k {
            if !seen[j] && edges[i].iter().any(|v| edges[j].contains(v)) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn for_each_subset<F: FnMut(&[usize])>(m: usize, k: usize, visit: &mut F) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return;
    }
    loop {
        visit(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Reference counter: scans every `k`-subset of edges.
pub fn count_loose_cycles_oracle(h: &TripleSystem, k: usize, limits: &Limits) -> Result<u64> {
    Ok(loose_cycles_oracle(h, k, limits)?.len() as u64)
}

/// Reference enumeration: edge sets of all loose `C_k`, canonically sorted.
pub fn loose_cycles_oracle(h: &TripleSystem, k: usize, limits: &Limits) -> Result<Vec<Vec<Triple>>> {
    if k < 3 {
        return Err(Error::Argument("cycle length k must be at least 3".into()));
    }
    h.require_linear()?;
    let m = h.edge_count() as u128;
    limits.check(binomial(m, k as u128).saturating_mul(k as u128))?;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(k);
    for_each_subset(h.edge_count(), k, &mut |idx| {
        buf.clear();
        buf.extend(idx.iter().map(|&i| h.edge(i)));
        if is_loose_cycle_set(&buf) {
            out.push(buf.clone());
        }
    });
    Ok(out)
}

/// Number of simple cycles of length `len` in `g`, each unlabeled cycle
/// counted once.
///
/// Every cycle is walked from its smallest vertex, in the direction whose
/// second vertex is smaller than its last.
pub fn count_graph_cycles(g: &SimpleGraph, len: usize, limits: &Limits) -> Result<u64> {
    if len < 3 {
        return Err(Error::Argument("cycle length must be at least 3".into()));
    }
    let est = (g.n() as u128).saturating_mul((g.max_degree() as u128).saturating_pow(len as u32 - 1));
    limits.check(est)?;
    Ok((0..g.n())
        .into_par_iter()
        .map(|s| {
            let mut path = vec![s];
            let mut on_path = vec![false; g.n()];
            on_path[s] = true;
            cycles_from(g, len, &mut path, &mut on_path)
        })
        .sum())
}

fn cycles_from(g: &SimpleGraph, len: usize, path: &mut Vec<VertexId>, on_path: &mut [bool]) -> u64 {
    let s = path[0];
    let last = *path.last().expect("non-empty");
    if path.len() == len {
        return u64::from(path[1] < last && g.has_edge(last, s));
    }
    let mut total = 0;
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        total += cycles_from(g, len, path, on_path);
        on_path[w] = false;
        path.pop();
    }
    total
}

/// Loose `C_4` count of `T3(n)` together with `count / N^{5/2}`, where
/// `N = 3 n^2` is the number of vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct C4Row {
    pub n: usize,
    pub vertices: usize,
    pub count: u64,
    pub ratio: f64,
}

pub fn t3_c4_profile(ns: &[usize], limits: &Limits) -> Result<Vec<C4Row>> {
    ns.iter()
        .map(|&n| {
            let h = crate::constructions::gen_t3(n)?;
            let count = count_loose_cycles(&h, 4, limits)?;
            Ok(C4Row {
                n,
                vertices: h.n(),
                count,
                ratio: count as f64 / (h.n() as f64).powf(2.5),
            })
        })
        .collect()
}
