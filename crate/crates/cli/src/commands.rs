use std::path::Path;

use harmonia::census::{count_graph_cycles, count_loose_cycles, loose_cycles, Limits};
use harmonia::constructions::{
    gen_blowup, gen_ruzsa, gen_t3, random_graph, random_lattice_points, random_linear_system, ruzsa_stats, ruzsa_verify,
};
use harmonia::geometry::{
    find_similar_triangles, harmonic_closure, harmonic_from_z, parse_rational, shape_z, shared_harmonic_search,
    similarity_system, three_harmonic_points, tripartition, GaussianRational, Orientation, PentagonWitness, PointSet,
    Rational, ShapeParameter,
};
use harmonia::io::{emit_g1, emit_l3g, emit_pts, parse_g1, parse_l3g, parse_pts};
use harmonia::removal::{farness_certificate, greedy_triangle_packing, odd_cycle_check, PackingOrder};
use harmonia::supersat::{build_gv, c5_bound, ck_bound, claim_check, gv_edge_identity, kpath_identity, BoundReport};
use harmonia::{Error, SimpleGraph, TripleSystem};
use num::{BigUint, Signed};
use serde_json::{json, Value};

use crate::report::{biguint, count, gaussian, rational, triangle, triple, CmdResult, Failure, Input, Outcome};
use crate::{BoundCmd, CountCmd, GenCmd, GeomCmd, Group, OrientationArg, PackOrder, RemovalCmd, StatsCmd, VerifyCmd};

pub fn run(cmd: &Group, out: Option<&Path>) -> (String, CmdResult) {
    match cmd {
        Group::Gen(c) => gen(c, out),
        Group::Count(c) => count_cmd(c),
        Group::Verify(c) => verify(c),
        Group::Bound(c) => bound(c),
        Group::Removal(c) => removal(c),
        Group::Geom(c) => geom(c),
        Group::Stats(StatsCmd::Ruzsa { m }) => ("stats ruzsa".into(), stats_ruzsa(m)),
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_l3g(path: &Path, o: &mut Outcome) -> Result<TripleSystem, Failure> {
    let input = Input::read(path)?;
    let h = parse_l3g(&input.text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    o.inputs.push(input);
    Ok(h)
}

fn read_g1(path: &Path, o: &mut Outcome) -> Result<SimpleGraph, Failure> {
    let input = Input::read(path)?;
    let g = parse_g1(&input.text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    o.inputs.push(input);
    Ok(g)
}

fn read_pts(path: &Path, o: &mut Outcome) -> Result<PointSet, Failure> {
    let input = Input::read(path)?;
    let s = parse_pts(&input.text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    o.inputs.push(input);
    Ok(s)
}

fn parse_point(s: &str) -> Result<GaussianRational, Failure> {
    s.parse().map_err(|e: Error| usage(e.to_string()))
}

fn parse_shape(s: &str) -> Result<ShapeParameter, Failure> {
    Ok(ShapeParameter::new(parse_point(s)?)?)
}

fn parse_big(s: &str, what: &str) -> Result<BigUint, Failure> {
    s.parse()
        .map_err(|_| usage(format!("{what} must be a non-negative integer, got {s:?}")))
}

fn orientation(o: OrientationArg) -> Orientation {
    match o {
        OrientationArg::Direct => Orientation::Direct,
        OrientationArg::Mirror => Orientation::Mirror,
        OrientationArg::Both => Orientation::Both,
    }
}

fn orientation_name(o: OrientationArg) -> &'static str {
    match o {
        OrientationArg::Direct => "direct",
        OrientationArg::Mirror => "mirror",
        OrientationArg::Both => "both",
    }
}

fn limits(max_work: u128) -> Limits {
    Limits { max_work }
}

/// Writes a generated file to `out`, or to stdout.
fn emit(text: &str, out: Option<&Path>, o: &mut Outcome) -> Result<(), Failure> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            o.result("written", p.display().to_string());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn system_summary(h: &TripleSystem, o: &mut Outcome) {
    o.result("vertices", h.n())
        .result("edges", h.edge_count())
        .result("linear", h.is_linear());
}

fn gen(cmd: &GenCmd, out: Option<&Path>) -> (String, CmdResult) {
    let mut o = Outcome::default();
    let (name, r) = match cmd {
        GenCmd::T3 { n } => (
            "gen t3",
            (|| {
                o.param("n", *n);
                let h = gen_t3(*n)?;
                system_summary(&h, &mut o);
                emit(&emit_l3g(&h), out, &mut o)
            })(),
        ),
        GenCmd::Blowup { t, input } => (
            "gen blowup",
            (|| {
                o.param("t", *t);
                let h = read_l3g(input, &mut o)?;
                let b = gen_blowup(&h, *t)?;
                system_summary(&b, &mut o);
                emit(&emit_l3g(&b), out, &mut o)
            })(),
        ),
        GenCmd::Ruzsa { m, s } => (
            "gen ruzsa",
            (|| {
                o.param("m", *m).param("s", *s);
                let inst = gen_ruzsa(*m, *s)?;
                let pts = inst.point_set()?;
                o.result("points", pts.len()).result("triangles", inst.triangles.len());
                emit(&emit_pts(&pts), out, &mut o)
            })(),
        ),
        GenCmd::Random { n, attempts, seed } => (
            "gen random",
            (|| {
                o.param("n", *n).param("attempts", *attempts).param("seed", *seed);
                let h = random_linear_system(*n, *attempts, *seed)?;
                system_summary(&h, &mut o);
                emit(&emit_l3g(&h), out, &mut o)
            })(),
        ),
        GenCmd::Graph { n, p, seed } => (
            "gen graph",
            (|| {
                o.param("n", *n).param("p", p.as_str()).param("seed", *seed);
                let (num, den) = p
                    .split_once('/')
                    .and_then(|(a, b)| Some((a.trim().parse::<u32>().ok()?, b.trim().parse::<u32>().ok()?)))
                    .ok_or_else(|| usage(format!("edge probability must be num/den, got {p:?}")))?;
                let g = random_graph(*n, num, den, *seed)?;
                o.result("vertices", g.n()).result("edges", g.edge_count());
                emit(&emit_g1(&g), out, &mut o)
            })(),
        ),
        GenCmd::Points {
            width,
            height,
            count,
            seed,
        } => (
            "gen points",
            (|| {
                o.param("width", *width)
                    .param("height", *height)
                    .param("count", *count)
                    .param("seed", *seed);
                let s = random_lattice_points(*width, *height, *count, *seed)?;
                o.result("points", s.len());
                emit(&emit_pts(&s), out, &mut o)
            })(),
        ),
    };
    (name.into(), r.map(|()| o))
}

fn count_cmd(cmd: &CountCmd) -> (String, CmdResult) {
    let mut o = Outcome::default();
    let (name, r) = match cmd {
        CountCmd::Loose { k, input, limit } => (
            "count loose",
            (|| {
                o.param("k", *k).param("max_work", count(limit.max_work));
                let h = read_l3g(input, &mut o)?;
                let c = count_loose_cycles(&h, *k, &limits(limit.max_work))?;
                o.result("kind", "loose").result("k", *k).result("count", c);
                Ok(())
            })(),
        ),
        CountCmd::Graph { k, input, limit } => (
            "count graph",
            (|| {
                o.param("k", *k).param("max_work", count(limit.max_work));
                let g = read_g1(input, &mut o)?;
                let c = count_graph_cycles(&g, *k, &limits(limit.max_work))?;
                o.result("kind", "graph").result("k", *k).result("count", c);
                Ok(())
            })(),
        ),
    };
    (name.into(), r.map(|()| o))
}

fn verify(cmd: &VerifyCmd) -> (String, CmdResult) {
    let mut o = Outcome::default();
    let (name, r) = match cmd {
        VerifyCmd::Linear { input } => ("verify linear", verify_linear(input, &mut o)),
        VerifyCmd::Identity { input, k, per_vertex } => {
            ("verify identity", verify_identity(input, *k, *per_vertex, &mut o))
        }
        VerifyCmd::Claim { input, per_vertex } => ("verify claim", verify_claim(input, *per_vertex, &mut o)),
        VerifyCmd::Ruzsa { m, s } => ("verify ruzsa", verify_ruzsa(*m, *s, &mut o)),
        VerifyCmd::Lemma41 { input, z, seed, limit } => (
            "verify lemma41",
            verify_lemma41(input, z, *seed, limit.max_work, &mut o),
        ),
    };
    (name.into(), r.map(|()| o))
}

fn verify_linear(input: &Path, o: &mut Outcome) -> Result<(), Failure> {
    let h = read_l3g(input, o)?;
    system_summary(&h, o);
    if let Err(Error::NotLinear(u, v)) = h.require_linear() {
        let edges: Vec<Value> = h
            .edges()
            .iter()
            .filter(|e| e.contains(&u) && e.contains(&v))
            .map(triple)
            .collect();
        o.fail("linear", json!({ "pair": [u, v], "edges": edges }));
    }
    Ok(())
}

fn verify_identity(input: &Path, k: Option<usize>, per_vertex: bool, o: &mut Outcome) -> Result<(), Failure> {
    let h = read_l3g(input, o)?;
    h.require_linear()?;
    let check = match k {
        None => {
            o.param("identity", "sum e(G_v) = 4 sum C(d(x), 2)");
            gv_edge_identity(&h)?
        }
        Some(k) => {
            o.param("identity", "sum |E(G_u)| = 4 linear_paths(k)").param("k", k);
            kpath_identity(&h, k)?
        }
    };
    o.result("lhs", count(check.lhs))
        .result("rhs", count(check.rhs))
        .result("equal", check.equal);
    if per_vertex && k.is_none() {
        let rows = (0..h.n())
            .map(|v| {
                let d = h.degree(v) as u64;
                Ok(json!({ "v": v, "gv_edges": build_gv(&h, v)?.graph.edge_count(), "pairs": d * d.saturating_sub(1) / 2 }))
            })
            .collect::<Result<Vec<Value>, Error>>()?;
        o.result("per_vertex", rows);
    }
    if !check.equal {
        o.fail("identity", json!({ "lhs": count(check.lhs), "rhs": count(check.rhs) }));
    }
    Ok(())
}

fn verify_claim(input: &Path, per_vertex: bool, o: &mut Outcome) -> Result<(), Failure> {
    let h = read_l3g(input, o)?;
    let rows = claim_check(&h)?;
    let sum = |f: fn(&harmonia::supersat::ClaimRow) -> u64| rows.iter().map(f).sum::<u64>();
    o.result("vertices", rows.len())
        .result("paths", sum(|r| r.paths))
        .result("good", sum(|r| r.good))
        .result("bad", sum(|r| r.bad))
        .result("bound", sum(|r| r.bound))
        .result("all_hold", rows.iter().all(|r| r.holds));
    let row_json = |r: &harmonia::supersat::ClaimRow| json!({ "v": r.v, "edges": r.edges, "paths": r.paths, "good": r.good, "bad": r.bad, "bound": r.bound, "holds": r.holds });
    if per_vertex {
        o.result("per_vertex", rows.iter().map(row_json).collect::<Vec<_>>());
    }
    if let Some(r) = rows.iter().find(|r| !r.holds) {
        o.fail("bad paths <= sum 12 (d(x) + d(y) - 2)", row_json(r));
    }
    Ok(())
}

fn verify_ruzsa(m: usize, s: i64, o: &mut Outcome) -> Result<(), Failure> {
    o.param("m", m).param("s", s);
    let inst = gen_ruzsa(m, s)?;
    match ruzsa_verify(&inst) {
        Ok(rep) => {
            o.result("points", rep.points)
                .result("triangles", rep.triangles)
                .result("harmonic_points", rep.harmonic_points)
                .result("distinct_harmonic_points", rep.distinct_harmonic_points);
        }
        Err(Error::Verification(msg)) => o.fail("base-13 construction", Value::from(msg)),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn verify_lemma41(input: &Path, z: &str, seed: u64, max_work: u128, o: &mut Outcome) -> Result<(), Failure> {
    let s = read_pts(input, o)?;
    let z = parse_shape(z)?;
    o.param("z", gaussian(z.value()))
        .param("seed", seed)
        .param("max_work", count(max_work));
    let sys = similarity_system(&s, &z, &tripartition(&s, seed))?;
    let cycles = loose_cycles(&sys.system, 5, &limits(max_work))?;
    let (mut matched, mut plain) = (0usize, 0usize);
    for c in &cycles {
        let w = PentagonWitness::from_cycle(&sys, &s, c)?;
        let four = w.fifth_harmonic(&s)?;
        let direct = w.direct_harmonic(&s)?;
        let t = &w.triangles;
        let without_z = harmonic_from_z(s.point(t[3].a), s.point(t[2].b), &w.z)? + s.point(t[0].c) - s.point(t[1].c);
        if without_z == direct {
            plain += 1;
        }
        if four == direct {
            matched += 1;
        } else {
            let tris: Vec<Value> = t.iter().map(|x| triangle(x, &s)).collect();
            o.fail(
                "four-point harmonic formula",
                json!({ "triangles": tris, "formula": gaussian(&four), "direct": gaussian(&direct) }),
            );
        }
    }
    o.result("triangles", sys.system.edge_count())
        .result("pentagons", cycles.len())
        .result("matched", matched)
        .result("matched_without_1_over_z", plain);
    Ok(())
}

fn bound_json(r: &BoundReport, o: &mut Outcome) {
    o.result("threshold_ok", r.threshold_ok)
        .result("bound", rational(&r.bound))
        .result("bound_float", harmonia::geometry::ratio_to_f64(&r.bound));
}

fn bound(cmd: &BoundCmd) -> (String, CmdResult) {
    let mut o = Outcome::default();
    let (name, r) = match cmd {
        BoundCmd::C5 { n, m } => (
            "bound c5",
            (|| {
                let (n, m) = (parse_big(n, "n")?, parse_big(m, "m")?);
                o.param("n", biguint(&n)).param("m", biguint(&m));
                let r = c5_bound(&n, &m)?;
                bound_json(&r, &mut o);
                Ok(())
            })(),
        ),
        BoundCmd::Ck { n, m, k, c } => (
            "bound ck",
            (|| {
                let (n, m) = (parse_big(n, "n")?, parse_big(m, "m")?);
                let c = parse_rational(c)?;
                o.param("n", biguint(&n))
                    .param("m", biguint(&m))
                    .param("k", *k)
                    .param("c", rational(&c));
                let r = ck_bound(&n, &m, *k, &c)?;
                bound_json(&r, &mut o);
                Ok(())
            })(),
        ),
    };
    (name.into(), r.map(|()| o))
}

fn removal(cmd: &RemovalCmd) -> (String, CmdResult) {
    let mut o = Outcome::default();
    let (name, r) = match cmd {
        RemovalCmd::Pack { input, order, seed } => (
            "removal pack",
            (|| {
                let g = read_g1(input, &mut o)?;
                let order = match (order, seed) {
                    (PackOrder::Lex, _) => {
                        o.param("order", "lex");
                        PackingOrder::Lexicographic
                    }
                    (PackOrder::Random, Some(s)) => {
                        o.param("order", "random").param("seed", *s);
                        PackingOrder::Random(*s)
                    }
                    (PackOrder::Random, None) => return Err(usage("--order random needs --seed")),
                };
                let p = greedy_triangle_packing(&g, order);
                o.result("size", p.size())
                    .result("leftover_edges", p.leftover.edge_count())
                    .result("leftover_triangle_free", p.leftover.is_triangle_free())
                    .result("triangles", p.packing.edges().iter().map(triple).collect::<Vec<_>>());
                if let Some(t) = p.leftover.triangles().first() {
                    o.fail("leftover is triangle-free", json!(t));
                }
                Ok(())
            })(),
        ),
        RemovalCmd::Certify { input } => (
            "removal certify",
            (|| {
                let g = read_g1(input, &mut o)?;
                let c = farness_certificate(&g);
                o.result("n", c.n)
                    .result("m_pack", c.m_pack)
                    .result("eps_lower", rational(&c.eps_lower))
                    .result("eps_upper", rational(&c.eps_upper));
                Ok(())
            })(),
        ),
        RemovalCmd::Check { input, l, c, limit } => (
            "removal check",
            (|| {
                let g = read_g1(input, &mut o)?;
                let c: Rational = parse_rational(c)?;
                if c.is_negative() {
                    return Err(usage("c must be non-negative"));
                }
                o.param("l", *l)
                    .param("c", rational(&c))
                    .param("max_work", count(limit.max_work));
                let r = odd_cycle_check(&g, *l, &c, &limits(limit.max_work))?;
                o.result("length", r.length)
                    .result("count", r.count)
                    .result("eps_lower", rational(&r.eps_lower))
                    .result("required", rational(&r.required))
                    .result("holds", r.holds);
                if !r.holds {
                    o.fail(
                        "cycle count >= c eps^{3l} n^{2l+1}",
                        json!({ "count": r.count, "required": rational(&r.required) }),
                    );
                }
                Ok(())
            })(),
        ),
    };
    (name.into(), r.map(|()| o))
}

fn geom(cmd: &GeomCmd) -> (String, CmdResult) {
    let mut o = Outcome::default();
    let (name, r) = match cmd {
        GeomCmd::Similar {
            input,
            z,
            orientation: ori,
        } => (
            "geom similar",
            (|| {
                let s = read_pts(input, &mut o)?;
                let z = parse_shape(z)?;
                o.param("z", gaussian(z.value()))
                    .param("orientation", orientation_name(*ori));
                let tris = find_similar_triangles(&s, &z, orientation(*ori))?;
                o.result("count", tris.len()).result(
                    "triangles",
                    tris.iter().map(|t| json!([t.a, t.b, t.c])).collect::<Vec<_>>(),
                );
                Ok(())
            })(),
        ),
        GeomCmd::Harmonic { a, b, c } => (
            "geom harmonic",
            (|| {
                let (a, b, c) = (parse_point(a)?, parse_point(b)?, parse_point(c)?);
                o.param("a", gaussian(&a))
                    .param("b", gaussian(&b))
                    .param("c", gaussian(&c));
                let h = three_harmonic_points(&a, &b, &c)?;
                o.result("z", gaussian(shape_z(&a, &b, &c)?.value()))
                    .result("opposite_a", gaussian(&h.opposite_a))
                    .result("opposite_b", gaussian(&h.opposite_b))
                    .result("opposite_c", gaussian(&h.opposite_c));
                Ok(())
            })(),
        ),
        GeomCmd::Shared {
            input,
            z,
            orientation: ori,
        } => (
            "geom shared",
            (|| {
                let s = read_pts(input, &mut o)?;
                let z = parse_shape(z)?;
                o.param("z", gaussian(z.value()))
                    .param("orientation", orientation_name(*ori));
                let found = shared_harmonic_search(&s, &z, orientation(*ori))?;
                let pairs: Vec<Value> = found
                    .iter()
                    .map(|f| {
                        json!({
                            "first": [f.first.a, f.first.b, f.first.c],
                            "second": [f.second.a, f.second.b, f.second.c],
                            "point": gaussian(&f.point),
                            "vertex_disjoint": f.vertex_disjoint,
                        })
                    })
                    .collect();
                o.result("count", pairs.len())
                    .result("vertex_disjoint", found.iter().filter(|f| f.vertex_disjoint).count())
                    .result("pairs", pairs);
                Ok(())
            })(),
        ),
        GeomCmd::Closure {
            input,
            z,
            c,
            eps,
            points,
        } => (
            "geom closure",
            (|| {
                let s = read_pts(input, &mut o)?;
                let z = parse_shape(z)?;
                let (c, eps) = (parse_rational(c)?, parse_rational(eps)?);
                o.param("z", gaussian(z.value()))
                    .param("c", rational(&c))
                    .param("eps", rational(&eps));
                let r = harmonic_closure(&s, &z, &c, &eps)?;
                let steps: Vec<Value> = r
                    .steps
                    .iter()
                    .map(|st| {
                        json!({
                            "point": gaussian(&st.point),
                            "triangles": st.triangles.iter().map(|t| json!([t.a, t.b, t.c])).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                o.result("input_points", s.len())
                    .result("closure_points", r.closure.len())
                    .result("delta", rational(&r.delta))
                    .result("threshold", rational(&r.threshold))
                    .result("triangles", r.triangle_count)
                    .result("size_bound", rational(&r.size_bound))
                    .result("within_bound", r.within_bound())
                    .result("steps", steps);
                if let Some(p) = points {
                    std::fs::write(p, emit_pts(&r.closure)).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                    o.result("written", p.display().to_string());
                }
                if !r.within_bound() {
                    o.fail(
                        "|U| <= (c / delta + 1) n",
                        json!({ "size": r.closure.len(), "bound": rational(&r.size_bound) }),
                    );
                }
                Ok(())
            })(),
        ),
    };
    (name.into(), r.map(|()| o))
}

fn stats_ruzsa(ms: &[usize]) -> CmdResult {
    let mut o = Outcome::default();
    o.param("m", ms.to_vec());
    let rows = ruzsa_stats(ms)?;
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "m": r.m, "n": biguint(&r.n), "triangles": biguint(&r.triangles), "exponent": r.exponent }))
        .collect();
    o.result("rows", rows)
        .result("exponent_limit", harmonia::constructions::RUZSA_EXPONENT_LIMIT);
    Ok(o)
}
