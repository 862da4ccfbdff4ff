//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use harmonia::census::{count_graph_cycles, count_loose_cycles, loose_cycles, loose_cycles_oracle, Limits};
use harmonia::constructions::{gen_ruzsa, gen_t3, random_graph, random_lattice_points, ruzsa_stats, ruzsa_verify};
use harmonia::geometry::{
    cross_ratio, harmonic_from_z, harmonic_point, shape_z, side_products, similarity_system, three_harmonic_points,
    tripartition, GaussianRational as G, PentagonWitness, PointSet, Rational, ShapeParameter,
};
use harmonia::removal::{greedy_triangle_packing, PackingOrder};
use harmonia::supersat::{
    c5_bound, ck_bound, claim_check, gv_edge_identity, kpath_identity, pentagons_from_good_paths,
};
use harmonia::SimpleGraph;
use num::{BigInt, BigRational, BigUint, One};
use rand::Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let lim = Limits::default();
    for n in 1..=4 {
        let h = gen_t3(n).map_err(|e| e.to_string())?;
        ensure(h.n() == 3 * n * n && h.edge_count() == n * n * n, || {
            format!("T3({n}) has wrong size")
        })?;
        ensure(h.is_linear(), || format!("T3({n}) is not linear"))?;
        for k in [3, 5] {
            let c = count_loose_cycles(&h, k, &lim).map_err(|e| e.to_string())?;
            ensure(c == 0, || format!("T3({n}) has {c} loose C{k}"))?;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("n = 1..4 in {} ms", t.as_millis()))
}

fn criterion_2() -> Check {
    for seed in 0..100 {
        let h = common::seeded_system(seed, 3, 30, 4);
        let id = gv_edge_identity(&h).map_err(|e| e.to_string())?;
        let lhs: usize = (0..h.n()).map(|v| common::brute_gv(&h, v).len()).sum();
        let mut deg = vec![0u128; h.n()];
        for e in h.edges() {
            for &v in e {
                deg[v] += 1;
            }
        }
        let rhs: u128 = deg.iter().map(|d| 2 * d * d.saturating_sub(1)).sum();
        ensure(id.equal && id.lhs == lhs as u128 && id.rhs == rhs, || {
            format!("seed {seed}: library {id:?}, oracle ({lhs}, {rhs})")
        })?;
    }
    Ok("100 systems".into())
}

fn criterion_3() -> Check {
    let mut total_paths = 0;
    for seed in 0..50 {
        let h = common::seeded_system(1000 + seed, 6, 20, 3);
        for k in [2, 3] {
            let id = kpath_identity(&h, k).map_err(|e| e.to_string())?;
            let paths = common::brute_linear_paths(&h, k) as u128;
            let lhs: usize = (0..h.n())
                .map(|u| common::brute_gu_edges(&h, u, k).values().sum::<usize>())
                .sum();
            ensure(id.equal && id.rhs == 4 * paths && id.lhs == lhs as u128, || {
                format!("seed {seed}, k = {k}: library {id:?}, oracle paths {paths}, pairs {lhs}")
            })?;
            total_paths += paths;
        }
    }
    Ok(format!("50 systems, {total_paths} paths"))
}

fn pentagon_systems() -> Vec<harmonia::TripleSystem> {
    (0..50)
        .map(|seed| common::seeded_system(2000 + seed, 12, 20, 8))
        .collect()
}

fn criterion_4() -> Check {
    let lim = Limits::default();
    let (mut pentagons, mut good) = (0, 0u64);
    for (i, h) in pentagon_systems().iter().enumerate() {
        let tally = pentagons_from_good_paths(h).map_err(|e| e.to_string())?;
        let oracle: BTreeSet<Vec<harmonia::Triple>> = loose_cycles_oracle(h, 5, &lim)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        for (p, &mult) in &tally.multiplicity {
            ensure(oracle.contains(p), || {
                format!("system {i}: pentagon {p:?} not in oracle list")
            })?;
            ensure(mult <= 5, || {
                format!("system {i}: pentagon {p:?} has multiplicity {mult}")
            })?;
        }
        pentagons += tally.multiplicity.len();
        good += tally.good_paths;
    }
    ensure(pentagons > 0, || {
        "no pentagons produced; the check would be vacuous".into()
    })?;
    Ok(format!("{good} good paths, {pentagons} distinct pentagons"))
}

fn criterion_5() -> Check {
    let mut checked = 0;
    for (i, h) in pentagon_systems().iter().enumerate() {
        for row in claim_check(h).map_err(|e| e.to_string())? {
            ensure(row.holds && row.bad <= row.bound, || format!("system {i}: {row:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} vertices"))
}

fn criterion_6() -> Check {
    let lim = Limits::default();
    for seed in 0..200u64 {
        let mut r = common::rng(3000 + seed);
        let k = 3 + (seed % 3) as usize;
        let h = common::seeded_system(3000 + seed, 6, 18, 2);
        let fast = count_loose_cycles(&h, k, &lim).map_err(|e| e.to_string())?;
        let oracle = harmonia::census::count_loose_cycles_oracle(&h, k, &lim).map_err(|e| e.to_string())?;
        let brute = common::brute_loose_cycles(&h, k).len() as u64;
        ensure(fast == oracle && fast == brute, || {
            format!("seed {seed}, k = {k}: fast {fast}, oracle {oracle}, brute {brute}")
        })?;
        let n = r.gen_range(5..=12);
        let g = random_graph(n, r.gen_range(1..=3), 4, seed).map_err(|e| e.to_string())?;
        let len = 3 + (seed % 4) as usize;
        let fast = count_graph_cycles(&g, len, &lim).map_err(|e| e.to_string())?;
        let brute = common::brute_graph_cycles(&g, len);
        ensure(fast == brute, || {
            format!("seed {seed}, length {len}: fast {fast}, brute {brute}")
        })?;
    }
    let k10 = count_graph_cycles(&SimpleGraph::complete(10), 5, &lim).map_err(|e| e.to_string())?;
    // n(n-1)(n-2)(n-3)(n-4)/10 at n = 10.
    let closed_form = 10 * 9 * 8 * 7 * 6 / 10;
    ensure(closed_form == 3024 && k10 == closed_form, || {
        format!("K10 has {k10} 5-cycles")
    })?;
    Ok("200 systems and 200 graphs; K10 5-cycles = 3024".into())
}

fn criterion_7() -> Check {
    let mut r = common::rng(7);
    let minus_one = G::from_ints(-1, 0);
    let mut done = 0;
    while done < 1000 {
        let (a, b, c) = (
            common::random_gaussian(&mut r, 20, 9),
            common::random_gaussian(&mut r, 20, 9),
            common::random_gaussian(&mut r, 20, 9),
        );
        if harmonia::geometry::orientation(&a, &b, &c) == Rational::default() {
            continue;
        }
        let d = harmonic_point(&a, &b, &c).map_err(|e| e.to_string())?;
        let cr = cross_ratio(&a, &b, &c, &d).map_err(|e| e.to_string())?;
        ensure(cr == minus_one, || format!("cross-ratio {cr} for {a}, {b}, {c}"))?;
        let z = shape_z(&a, &b, &c).map_err(|e| e.to_string())?;
        let dz = harmonic_from_z(&a, &b, &z).map_err(|e| e.to_string())?;
        ensure(dz == d, || format!("shape formula gives {dz}, cross-ratio formula {d}"))?;
        // Opposite sides of the cyclic quadrilateral a, c, b, d.
        let l = (&a - &c).norm_sqr() * (&b - &d).norm_sqr();
        let rr = (&c - &b).norm_sqr() * (&d - &a).norm_sqr();
        ensure(
            l == rr && side_products(&a, &b, &c, &d) == (l.clone(), rr.clone()),
            || format!("side products differ for {a}, {b}, {c}, {d}"),
        )?;
        done += 1;
    }
    let h = three_harmonic_points(&G::from_ints(6, 0), &G::from_ints(0, 8), &G::from_ints(-1, 1))
        .map_err(|e| e.to_string())?;
    let fifth = |n: i64| Rational::new(BigInt::from(n), BigInt::from(5));
    ensure(h.opposite_a == G::from_ints(-2, 4), || {
        format!("delta_alpha = {}", h.opposite_a)
    })?;
    ensure(h.opposite_b == G::new(fifth(8), fifth(-4)), || {
        format!("delta_beta = {}", h.opposite_b)
    })?;
    ensure(h.opposite_c == G::from_ints(7, 7), || {
        format!("delta_gamma = {}", h.opposite_c)
    })?;
    Ok("1000 triples; (6, 8i) gives -2+4i, 8/5-4i/5, 7+7i".into())
}

fn similar_image(s: &PointSet, r: &mut impl Rng) -> PointSet {
    let p = loop {
        let p = common::random_gaussian(r, 5, 4);
        if !p.is_zero() {
            break p;
        }
    };
    let q = common::random_gaussian(r, 50, 7);
    PointSet::new(s.points().iter().map(|w| &p * w + &q).collect()).expect("similarities are injective")
}

fn criterion_8() -> Check {
    let lim = Limits::default();
    let z = ShapeParameter::new(G::from_ints(0, -1)).expect("non-zero");
    let (mut pentagons, mut sets, mut literal_ok) = (0, 0, 0);
    for seed in 0..200u64 {
        let mut r = common::rng(8000 + seed);
        let base = random_lattice_points(8, 8, 56, seed).map_err(|e| e.to_string())?;
        let s = similar_image(&base, &mut r);
        let labels = tripartition(&s, seed);
        let sys = similarity_system(&s, &z, &labels).map_err(|e| e.to_string())?;
        let cycles = loose_cycles(&sys.system, 5, &lim).map_err(|e| e.to_string())?;
        sets += 1;
        for c in &cycles {
            let w = PentagonWitness::from_cycle(&sys, &s, c).map_err(|e| format!("seed {seed}: {e}"))?;
            let four = w.fifth_harmonic(&s).map_err(|e| e.to_string())?;
            let direct = w.direct_harmonic(&s).map_err(|e| e.to_string())?;
            ensure(four == direct, || format!("seed {seed}: {four} != {direct} for {w:?}"))?;
            // The criterion's formula, taken literally: + C1 - C2 with no 1/z.
            let t = &w.triangles;
            let literal = harmonic_from_z(s.point(t[3].a), s.point(t[2].b), &w.z).map_err(|e| e.to_string())?
                + s.point(t[0].c)
                - s.point(t[1].c);
            if literal == direct {
                literal_ok += 1;
            }
            pentagons += 1;
        }
        if pentagons >= 40 {
            break;
        }
    }
    ensure(pentagons >= 20, || {
        format!("only {pentagons} pentagons found in {sets} point sets")
    })?;
    ensure(literal_ok == pentagons, || {
        format!(
            "'+ C1 - C2' matches the direct harmonic point on {literal_ok}/{pentagons} pentagons; \
             '+ (C1 - C2)/z' matches on {pentagons}/{pentagons}"
        )
    })?;
    Ok(format!("{pentagons} pentagons from {sets} point sets"))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let expected = [(1, 9, 6, 0.8155), (2, 45, 90, 1.1821), (3, 252, 1680, 1.3431)];
    for (m, n, t, _) in expected {
        let inst = gen_ruzsa(m, 2).map_err(|e| e.to_string())?;
        let rep = ruzsa_verify(&inst).map_err(|e| format!("m = {m}: {e}"))?;
        ensure(rep.points == n && rep.triangles == t, || format!("m = {m}: {rep:?}"))?;
        ensure(rep.distinct_harmonic_points == 3 * t, || format!("m = {m}: {rep:?}"))?;
    }
    let rows = ruzsa_stats(&[1, 2, 3]).map_err(|e| e.to_string())?;
    let mut prev = 0.0;
    for (row, (m, n, t, x)) in rows.iter().zip(expected) {
        ensure(
            row.m == m && row.n == BigUint::from(n) && row.triangles == BigUint::from(t),
            || format!("row {row:?}"),
        )?;
        ensure((row.exponent - x).abs() < 1e-3, || {
            format!("m = {m}: exponent {}", row.exponent)
        })?;
        ensure(row.exponent > prev && row.exponent < 1.726, || {
            format!("m = {m}: exponent {}", row.exponent)
        })?;
        prev = row.exponent;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("m = 1..3 verified in {} ms", t.as_millis()))
}

fn criterion_10() -> Check {
    let mut summary = Vec::new();
    for seed in 0..20u64 {
        let mut r = common::rng(10_000 + seed);
        let n = r.gen_range(6..=12);
        let g = random_graph(n, r.gen_range(2..=4), 5, seed).map_err(|e| e.to_string())?;
        let exact = common::min_triangle_edit(&g);
        for order in [PackingOrder::Lexicographic, PackingOrder::Random(seed)] {
            let p = greedy_triangle_packing(&g, order);
            ensure(p.leftover.is_triangle_free(), || {
                format!("seed {seed}: leftover has a triangle")
            })?;
            ensure(common::brute_graph_cycles(&p.leftover, 3) == 0, || {
                format!("seed {seed}: oracle finds a triangle")
            })?;
            let m = p.size();
            ensure(m <= exact && exact <= 3 * m, || {
                format!("seed {seed}: distance {exact} outside [{m}, {}]", 3 * m)
            })?;
        }
        summary.push(exact);
    }
    Ok(format!("edit distances {summary:?}"))
}

fn criterion_11() -> Check {
    let mut r = common::rng(11);
    for i in 0..50 {
        let n: u64 = r.gen_range(11..=1_000_000);
        let m: u64 = r.gen_range(0..=n * n);
        let k: u32 = r.gen_range(2..=5);
        let (p, q): (u64, u64) = (r.gen_range(1..=200), r.gen_range(1..=200));
        let (nb, mb) = (BigUint::from(n), BigUint::from(m));
        // Hypotheses via integer roots: m > t  <=>  m > floor(t) for integer m.
        let c5 = c5_bound(&nb, &mb).map_err(|e| e.to_string())?;
        let root = (BigUint::from(10_000u32) * nb.pow(3)).sqrt();
        let bound: BigRational = (0..6).fold(BigRational::one(), |acc, _| acc * BigInt::from(m))
            / (0..7).fold(BigRational::one(), |acc, _| acc * BigInt::from(n));
        ensure(c5.bound == bound && c5.threshold_ok == (mb > root), || {
            format!("case {i}: c5 {c5:?}")
        })?;
        let c = BigRational::new(BigInt::from(p), BigInt::from(q));
        let ck = ck_bound(&nb, &mb, k, &c).map_err(|e| e.to_string())?;
        let x = BigUint::from(p).pow(3 * k) * nb.pow(6 * k - 1);
        let mq = &mb * q;
        let expect_bound = BigRational::new(BigInt::from(m).pow(3 * k), BigInt::from(n).pow(4 * k - 1));
        let threshold = mq > x.nth_root(3 * k);
        ensure(ck.bound == expect_bound && ck.threshold_ok == threshold, || {
            format!("case {i}: ck {ck:?}")
        })?;
    }
    // Boundary: n = t^2 and m = 100 t^3 gives m^2 = 10^4 n^3 exactly.
    for t in [4u64, 10, 57] {
        let n = BigUint::from(t * t);
        let m = BigUint::from(100 * t * t * t);
        ensure(!c5_bound(&n, &m).map_err(|e| e.to_string())?.threshold_ok, || {
            format!("t = {t}: equality passed")
        })?;
        let m1 = &m + 1u32;
        ensure(c5_bound(&n, &m1).map_err(|e| e.to_string())?.threshold_ok, || {
            format!("t = {t}: m + 1 failed")
        })?;
    }
    // Same for the general hypothesis with n = t^{3k}, m = t^{6k-1}, C = 1.
    for (t, k) in [(2u32, 2u32), (3, 3)] {
        let n = BigUint::from(t).pow(3 * k);
        let m = BigUint::from(t).pow(6 * k - 1);
        let one = BigRational::one();
        ensure(
            !ck_bound(&n, &m, k, &one).map_err(|e| e.to_string())?.threshold_ok,
            || "ck equality passed".into(),
        )?;
        let m1 = &m + 1u32;
        ensure(
            ck_bound(&n, &m1, k, &one).map_err(|e| e.to_string())?.threshold_ok,
            || "ck m + 1 failed".into(),
        )?;
    }
    Ok("50 random cases and exact boundaries".into())
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 11] = [
        ("T3(n) sizes, linearity, no loose C3 or C5", criterion_1),
        ("sum of e(G_v) equals 4 sum C(d(x), 2)", criterion_2),
        ("sum of |E(G_u)| equals 4 times the k-path count", criterion_3),
        (
            "good-path pentagons are oracle pentagons, multiplicity <= 5",
            criterion_4,
        ),
        ("bad paths bounded by 12 (d(x) + d(y) - 2) per G_v edge", criterion_5),
        ("fast cycle counters match brute force", criterion_6),
        (
            "exact cross-ratio, harmonic point and side-product identities",
            criterion_7,
        ),
        ("four-triangle formula for the fifth harmonic point", criterion_8),
        (
            "base-13 construction counts, distinct harmonic points, exponents",
            criterion_9,
        ),
        ("greedy packing brackets the triangle edit distance", criterion_10),
        ("bound calculators and exact thresholds", criterion_11),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title} [{detail}; {ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title} [{why}; {ms} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
