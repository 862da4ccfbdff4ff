//! Brute-force reference implementations shared by the integration tests.
//!
//! These deliberately avoid the pair index, path walkers and counters of the
//! library: they scan raw edge lists, permutations and subsets.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use harmonia::constructions::random_linear_system;
use harmonia::geometry::{GaussianRational as G, PointSet, Rational};
use harmonia::{SimpleGraph, Triple, TripleSystem};
use num::{BigInt, Zero};
use rand::Rng;

pub fn rng(seed: u64) -> harmonia::rng::SplitMix64 {
    harmonia::rng::seeded(seed)
}

/// A seeded random linear system with `n` in `lo..=hi`.
pub fn seeded_system(seed: u64, lo: usize, hi: usize, density: usize) -> TripleSystem {
    let mut r = rng(seed ^ 0x5eed);
    let n = r.gen_range(lo..=hi);
    let attempts = r.gen_range(n..=density * n);
    random_linear_system(n, attempts, seed).unwrap()
}

fn meet(e: &Triple, f: &Triple) -> usize {
    e.iter().filter(|v| f.contains(v)).count()
}

/// Every permutation of `items`, by Heap's algorithm.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    fn heap<T: Clone>(k: usize, a: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut a = items.to_vec();
    let mut out = Vec::new();
    heap(a.len(), &mut a, &mut out);
    out
}

pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// True when some cyclic ordering of `edges` has consecutive edges meeting
/// in one vertex and all other pairs disjoint, with `k` distinct meeting
/// points.
pub fn is_loose_cycle_by_orderings(edges: &[Triple]) -> bool {
    let k = edges.len();
    let (first, rest) = edges.split_first().unwrap();
    permutations(rest).into_iter().any(|perm| {
        let mut cyc = vec![*first];
        cyc.extend(perm);
        let mut meets = BTreeSet::new();
        for i in 0..k {
            for j in i + 1..k {
                let adjacent = j == i + 1 || (i == 0 && j == k - 1);
                let s = meet(&cyc[i], &cyc[j]);
                if adjacent != (s == 1) || s > 1 {
                    return false;
                }
                if adjacent {
                    meets.insert(cyc[i].iter().find(|v| cyc[j].contains(v)).copied());
                }
            }
        }
        meets.len() == k
    })
}

/// All loose `C_k` edge sets, each sorted.
pub fn brute_loose_cycles(h: &TripleSystem, k: usize) -> BTreeSet<Vec<Triple>> {
    let edges = h.edges();
    subsets(edges.len(), k)
        .into_iter()
        .map(|s| s.iter().map(|&i| edges[i]).collect::<Vec<_>>())
        .filter(|set| is_loose_cycle_by_orderings(set))
        .collect()
}

/// Simple cycles of length `len`, from vertex subsets and orderings.
pub fn brute_graph_cycles(g: &SimpleGraph, len: usize) -> u64 {
    let mut count = 0;
    for s in subsets(g.n(), len) {
        let (first, rest) = s.split_first().unwrap();
        for perm in permutations(rest) {
            // Fix the direction: the second vertex is below the last.
            if perm[0] > perm[len - 2] {
                continue;
            }
            let mut cyc = vec![*first];
            cyc.extend(perm);
            if (0..len).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % len])) {
                count += 1;
            }
        }
    }
    count
}

/// `G_v` from a double loop over edge pairs meeting in one vertex `x != v`.
pub fn brute_gv(h: &TripleSystem, v: usize) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for e in h.edges() {
        if !e.contains(&v) {
            continue;
        }
        for f in h.edges() {
            if meet(e, f) != 1 {
                continue;
            }
            let x = *e.iter().find(|u| f.contains(u)).unwrap();
            if x == v {
                continue;
            }
            let yz: Vec<usize> = f.iter().copied().filter(|&u| u != x).collect();
            out.insert((yz[0].min(yz[1]), yz[0].max(yz[1])));
        }
    }
    out
}

/// Undirected three-edge paths `w x y z` of an edge set, as the
/// lexicographically smaller of the two readings.
pub fn brute_three_paths(edges: &BTreeSet<(usize, usize)>) -> Vec<[usize; 4]> {
    let has = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let verts: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let verts: Vec<usize> = verts.into_iter().collect();
    let mut out = BTreeSet::new();
    for &w in &verts {
        for &x in &verts {
            for &y in &verts {
                for &z in &verts {
                    let d: BTreeSet<_> = [w, x, y, z].into_iter().collect();
                    if d.len() == 4 && has(w, x) && has(x, y) && has(y, z) {
                        out.insert([w, x, y, z].min([z, y, x, w]));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

fn edge_with(h: &TripleSystem, vs: &[usize]) -> Vec<Triple> {
    h.edges()
        .iter()
        .filter(|e| vs.iter().all(|v| e.contains(v)))
        .copied()
        .collect()
}

/// Existential good-path test by scanning all edge choices.
pub fn brute_is_good(h: &TripleSystem, u: usize, [w, x, y, z]: [usize; 4]) -> bool {
    for e_wx in edge_with(h, &[w, x]) {
        let a = *e_wx.iter().find(|&&t| t != w && t != x).unwrap();
        for e_ua in edge_with(h, &[u, a]) {
            let a2 = *e_ua.iter().find(|&&t| t != u && t != a).unwrap();
            for e_xy in edge_with(h, &[x, y]) {
                let b = *e_xy.iter().find(|&&t| t != x && t != y).unwrap();
                if edge_with(h, &[u, b]).is_empty() {
                    continue;
                }
                for e_yz in edge_with(h, &[y, z]) {
                    let c = *e_yz.iter().find(|&&t| t != y && t != z).unwrap();
                    for e_uc in edge_with(h, &[u, c]) {
                        let c2 = *e_uc.iter().find(|&&t| t != u && t != c).unwrap();
                        let all: BTreeSet<_> = [u, w, x, y, z, a, b, c, a2, c2].into_iter().collect();
                        if all.len() == 10 {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// Directed linear paths with `k` edges, as edge sequences, by extending
/// sequences edge by edge against the full edge list.
pub fn brute_directed_paths(h: &TripleSystem, k: usize) -> Vec<Vec<Triple>> {
    let mut paths: Vec<Vec<Triple>> = h.edges().iter().map(|&e| vec![e]).collect();
    for _ in 1..k {
        let mut next = Vec::new();
        for p in &paths {
            for &f in h.edges() {
                let l = p.len();
                let ok = p.iter().enumerate().all(|(i, e)| {
                    let s = meet(e, &f);
                    if i == l - 1 {
                        s == 1
                    } else {
                        s == 0
                    }
                });
                // The new meeting point must not be the previous one.
                let fresh = l < 2 || {
                    let prev = p[l - 2].iter().find(|v| p[l - 1].contains(v)).unwrap();
                    !f.contains(prev)
                };
                if ok && fresh {
                    let mut q = p.clone();
                    q.push(f);
                    next.push(q);
                }
            }
        }
        paths = next;
    }
    paths
}

/// Number of `k`-edge linear paths up to reversal.
pub fn brute_linear_paths(h: &TripleSystem, k: usize) -> u64 {
    let d = brute_directed_paths(h, k).len() as u64;
    if k == 1 {
        d
    } else {
        d / 2
    }
}

/// `sum_u |E(G_u)|` from directed paths: each path contributes once for
/// every degree-one vertex of its first edge.
pub fn brute_gu_edges(h: &TripleSystem, u: usize, k: usize) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for p in brute_directed_paths(h, k) {
        if !p[0].contains(&u) || p[1].contains(&u) {
            continue;
        }
        let entry = p[k - 1].iter().find(|v| p[k - 2].contains(v)).unwrap();
        let yz: Vec<usize> = p[k - 1].iter().copied().filter(|v| v != entry).collect();
        *out.entry((yz[0], yz[1])).or_insert(0) += 1;
    }
    out
}

/// Minimum number of edges whose removal leaves no triangle, by branch and
/// bound on an uncovered triangle.
pub fn min_triangle_edit(g: &SimpleGraph) -> usize {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let id: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut tris: Vec<[usize; 3]> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    tris.push([id[&(a, b)], id[&(a, c)], id[&(b, c)]]);
                }
            }
        }
    }
    let mantel = |remaining: usize| remaining.saturating_sub(n * n / 4);
    // Upper bound: delete everything outside a maximum cut.
    let mut best = edges.len();
    if n > 0 {
        for mask in 0u32..(1 << (n - 1)) {
            let side = |v: usize| v + 1 < n && mask >> v & 1 == 1;
            let cut = edges.iter().filter(|&&(a, b)| side(a) != side(b)).count();
            best = best.min(edges.len() - cut);
        }
    }
    fn packing_bound(tris: &[[usize; 3]], deleted: &[bool]) -> usize {
        let mut used = deleted.to_vec();
        let mut c = 0;
        for t in tris {
            if t.iter().all(|&e| !used[e]) {
                c += 1;
                for &e in t {
                    used[e] = true;
                }
            }
        }
        c
    }
    fn rec(
        tris: &[[usize; 3]],
        deleted: &mut Vec<bool>,
        count: usize,
        m: usize,
        best: &mut usize,
        mantel: &dyn Fn(usize) -> usize,
    ) {
        let lb = packing_bound(tris, deleted).max(mantel(m - count));
        if count + lb >= *best {
            return;
        }
        let Some(t) = tris.iter().find(|t| t.iter().all(|&e| !deleted[e])) else {
            *best = count;
            return;
        };
        for &e in t {
            deleted[e] = true;
            rec(tris, deleted, count + 1, m, best, mantel);
            deleted[e] = false;
        }
    }
    let mut deleted = vec![false; edges.len()];
    rec(&tris, &mut deleted, 0, edges.len(), &mut best, &mantel);
    best
}

/// Exact concyclicity (or collinearity) test: the determinant of rows
/// `(|p|^2, re p, im p, 1)` vanishes.
pub fn concyclic(p: [&G; 4]) -> bool {
    let rows: Vec<[Rational; 4]> = p
        .iter()
        .map(|q| {
            [
                q.norm_sqr(),
                q.re.clone(),
                q.im.clone(),
                Rational::from_integer(BigInt::from(1)),
            ]
        })
        .collect();
    det4(&rows).is_zero()
}

fn det3(m: [[&Rational; 3]; 3]) -> Rational {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn det4(m: &[[Rational; 4]]) -> Rational {
    let mut total = Rational::zero();
    for col in 0..4 {
        let minor: Vec<[&Rational; 3]> = (1..4)
            .map(|r| {
                let v: Vec<&Rational> = (0..4).filter(|&c| c != col).map(|c| &m[r][c]).collect();
                [v[0], v[1], v[2]]
            })
            .collect();
        let d = det3([minor[0], minor[1], minor[2]]);
        let term = &m[0][col] * d;
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Labeled triangles `(a, b, c)` with `2C - A - B = z (A - B)`, over all
/// ordered triples of distinct points.
pub fn cubic_similar_scan(s: &PointSet, z: &G) -> BTreeSet<(usize, usize, usize)> {
    let p = s.points();
    let two = G::from_ints(2, 0);
    let mut out = BTreeSet::new();
    for a in 0..p.len() {
        for b in 0..p.len() {
            for c in 0..p.len() {
                if a == b || b == c || a == c {
                    continue;
                }
                if &two * &p[c] - &p[a] - &p[b] == z * (&p[a] - &p[b]) {
                    out.insert((a, b, c));
                }
            }
        }
    }
    out
}

/// A random Gaussian rational with numerators in `-r..=r` and
/// denominators in `1..=d`.
pub fn random_gaussian(rng: &mut impl Rng, r: i64, d: i64) -> G {
    let mut part = || Rational::new(BigInt::from(rng.gen_range(-r..=r)), BigInt::from(rng.gen_range(1..=d)));
    let re = part();
    G::new(re, part())
}
