//! Right isosceles triangles on base-13 digit sets with pairwise distinct
//! harmonic points.
//!
//! `A` holds `sum a_k 13^k` with `a_k` in `{1, s}` (exactly `2m` ones) and `B`
//! holds `sum b_k 13^k` with `b_k` in `{i, is}` (exactly `m` entries `i`),
//! `k = 1..3m`. A pair `(alpha, beta)` is a base unless some coordinate has
//! `(a_k, b_k) = (s, i)`; its apex is
//! `gamma = (alpha + beta)/2 + i (beta - alpha)/2`.

use std::collections::{BTreeSet, HashMap};

use num::{BigInt, BigUint, One, ToPrimitive};

use crate::geometry::{harmonic_point, rational, shape_z, GaussianRational as G, PointSet, Rational, ShapeParameter};
use crate::{Error, Result};

/// `1 + 2 / (3 log2 3 - 2)`, the growth exponent of the construction.
pub const RUZSA_EXPONENT_LIMIT: f64 = 1.725_982_457_878_719;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuzsaTriangle {
    /// Index into [`RuzsaInstance::alphas`].
    pub alpha: usize,
    /// Index into [`RuzsaInstance::betas`].
    pub beta: usize,
    pub gamma: G,
    pub delta_gamma: G,
    pub delta_beta: G,
    pub delta_alpha: G,
    /// `5 delta_beta`.
    pub delta_prime: G,
    /// `5 delta_alpha`.
    pub delta_double_prime: G,
}

#[derive(Debug, Clone)]
pub struct RuzsaInstance {
    pub m: usize,
    pub s: i64,
    /// `a_digits[j][k]` is true when `a_{k+1} = 1` for the `j`-th alpha.
    pub a_digits: Vec<Vec<bool>>,
    /// `b_digits[j][k]` is true when `b_{k+1} = i` for the `j`-th beta.
    pub b_digits: Vec<Vec<bool>>,
    pub alphas: Vec<G>,
    pub betas: Vec<G>,
    pub triangles: Vec<RuzsaTriangle>,
}

/// All 0/1 vectors of length `len` with exactly `ones` ones, in
/// lexicographic order of the positions of the ones.
fn choose_vectors(len: usize, ones: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..ones).collect();
    loop {
        let mut v = vec![false; len];
        for &i in &idx {
            v[i] = true;
        }
        out.push(v);
        let Some(pos) = (0..ones).rev().find(|&p| idx[p] < len - ones + p) else {
            return out;
        };
        idx[pos] += 1;
        for q in pos + 1..ones {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn powers_of_13(len: usize) -> Vec<BigInt> {
    let mut p = Vec::with_capacity(len);
    let mut x = BigInt::from(13);
    for _ in 0..len {
        p.push(x.clone());
        x *= 13;
    }
    p
}

fn digit_sum(digits: &[G], powers: &[BigInt]) -> G {
    digits.iter().zip(powers).fold(G::zero(), |acc, (d, p)| {
        acc + d.scale(&Rational::from_integer(p.clone()))
    })
}

fn g(re: i64, im: i64) -> G {
    G::from_ints(re, im)
}

pub fn gen_ruzsa(m: usize, s: i64) -> Result<RuzsaInstance> {
    if m < 1 {
        return Err(Error::Argument("m must be at least 1".into()));
    }
    if s == 1 {
        return Err(Error::Argument("s = 1 collapses the digit sets".into()));
    }
    let len = 3 * m;
    let powers = powers_of_13(len);
    let a_digits = choose_vectors(len, 2 * m);
    let b_digits = choose_vectors(len, m);
    let (one, s_re, i, s_im) = (g(1, 0), g(s, 0), g(0, 1), g(0, s));
    let alphas: Vec<G> = a_digits
        .iter()
        .map(|v| {
            let d: Vec<G> = v.iter().map(|&o| if o { one.clone() } else { s_re.clone() }).collect();
            digit_sum(&d, &powers)
        })
        .collect();
    let betas: Vec<G> = b_digits
        .iter()
        .map(|v| {
            let d: Vec<G> = v.iter().map(|&o| if o { i.clone() } else { s_im.clone() }).collect();
            digit_sum(&d, &powers)
        })
        .collect();
    let half = rational(1, 2);
    let fifth = rational(1, 5);
    let (cb1, cb2) = (g(4, -2).scale(&fifth), g(1, 2).scale(&fifth));
    let (ca1, ca2) = (g(1, -2).scale(&fifth), g(4, 2).scale(&fifth));
    let mut triangles = Vec::new();
    for (ai, av) in a_digits.iter().enumerate() {
        for (bi, bv) in b_digits.iter().enumerate() {
            // (a_k, b_k) = (s, i) is forbidden.
            if av.iter().zip(bv).any(|(&a_one, &b_i)| !a_one && b_i) {
                continue;
            }
            let (al, be) = (&alphas[ai], &betas[bi]);
            let mid = (al + be).scale(&half);
            let turn = (&i * (be - al)).scale(&half);
            let delta_beta = &cb1 * al + &cb2 * be;
            let delta_alpha = &ca1 * al + &ca2 * be;
            triangles.push(RuzsaTriangle {
                alpha: ai,
                beta: bi,
                gamma: &mid + &turn,
                delta_gamma: &mid - &turn,
                delta_prime: delta_beta.scale(&rational(5, 1)),
                delta_double_prime: delta_alpha.scale(&rational(5, 1)),
                delta_beta,
                delta_alpha,
            });
        }
    }
    Ok(RuzsaInstance {
        m,
        s,
        a_digits,
        b_digits,
        alphas,
        betas,
        triangles,
    })
}

impl RuzsaInstance {
    /// The distinct apexes, in sorted order.
    pub fn gammas(&self) -> Vec<G> {
        let set: BTreeSet<&G> = self.triangles.iter().map(|t| &t.gamma).collect();
        set.into_iter().cloned().collect()
    }

    /// `A`, then `B`, then the apex set.
    pub fn point_set(&self) -> Result<PointSet> {
        let pts = self
            .alphas
            .iter()
            .chain(&self.betas)
            .cloned()
            .chain(self.gammas())
            .collect();
        PointSet::new(pts)
    }

    /// The common shape `(alpha, beta, gamma)` of every triangle.
    pub fn shape(&self) -> ShapeParameter {
        ShapeParameter::new(g(0, -1)).expect("non-zero")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuzsaReport {
    pub points: usize,
    pub triangles: usize,
    pub harmonic_points: usize,
    pub distinct_harmonic_points: usize,
}

/// Expected digit of `gamma`, `delta_gamma`, `5 delta_beta`, `5 delta_alpha`
/// in a coordinate with `(a_k, b_k)`; `None` for the forbidden pair.
fn tableau(a_one: bool, b_i: bool, s: i64) -> Option<[G; 4]> {
    let sr = g(s, 0);
    let one = g(1, 0);
    let half = rational(1, 2);
    Some(match (a_one, b_i) {
        (true, true) => [G::zero(), g(1, 1), g(2, -1), g(-1, 2)],
        (true, false) => [
            ((&one - &sr) * g(1, -1)).scale(&half),
            ((&one + &sr) * g(1, 1)).scale(&half),
            (g(2, 0) - &sr) * g(2, -1),
            (&one - sr.scale(&rational(2, 1))) * g(1, -2),
        ],
        (false, false) => [G::zero(), &sr * g(1, 1), &sr * g(2, -1), &sr * g(-1, 2)],
        (false, true) => return None,
    })
}

fn fail(msg: String) -> Error {
    Error::Verification(msg)
}

/// Checks every structural claim about the instance:
///
/// - each base respects the forbidden-pair rule and each triangle is right
///   isosceles at `gamma` with shape `-i` for `(alpha, beta, gamma)`;
/// - the closed-form harmonic points satisfy their cross-ratio conditions
///   and `delta_alpha` is the mirror image of `delta_beta` in the line from
///   the base midpoint to `gamma`;
/// - digit by digit, the four derived points follow the tableaux;
/// - `delta_gamma` lies in the open first quadrant;
/// - all `3 |triangles|` harmonic points are pairwise distinct.
pub fn ruzsa_verify(inst: &RuzsaInstance) -> Result<RuzsaReport> {
    let len = 3 * inst.m;
    let powers = powers_of_13(len);
    let shape = inst.shape();
    for (ti, t) in inst.triangles.iter().enumerate() {
        let (al, be, ga) = (&inst.alphas[t.alpha], &inst.betas[t.beta], &t.gamma);
        let (av, bv) = (&inst.a_digits[t.alpha], &inst.b_digits[t.beta]);
        let mut digits: [Vec<G>; 4] = Default::default();
        for k in 0..len {
            let row = tableau(av[k], bv[k], inst.s)
                .ok_or_else(|| fail(format!("triangle {ti}: coordinate {} has (a, b) = (s, i)", k + 1)))?;
            for (d, v) in digits.iter_mut().zip(row) {
                d.push(v);
            }
        }
        let derived = [ga, &t.delta_gamma, &t.delta_prime, &t.delta_double_prime];
        for (which, (d, want)) in ["gamma", "delta_gamma", "5 delta_beta", "5 delta_alpha"]
            .iter()
            .zip(digits.iter().zip(derived))
        {
            if &digit_sum(d, &powers) != want {
                return Err(fail(format!("triangle {ti}: {which} does not match its digit tableau")));
            }
        }
        let (u, v) = (al - ga, be - ga);
        if u.norm_sqr() != v.norm_sqr() || (&u * v.conj()).re != Rational::default() {
            return Err(fail(format!("triangle {ti} is not right isosceles at gamma")));
        }
        if shape_z(al, be, ga)? != shape {
            return Err(fail(format!("triangle {ti} has the wrong shape")));
        }
        let checks = [
            (harmonic_point(al, be, ga)?, &t.delta_gamma, "delta_gamma"),
            (harmonic_point(ga, al, be)?, &t.delta_beta, "delta_beta"),
            (harmonic_point(be, ga, al)?, &t.delta_alpha, "delta_alpha"),
        ];
        for (generic, closed, which) in checks {
            if &generic != closed {
                return Err(fail(format!("triangle {ti}: closed form for {which} disagrees")));
            }
        }
        let w = (al + be).scale(&rational(1, 2));
        let dir = ga - &w;
        let reflected = &w + (&dir / dir.conj()) * (&t.delta_beta - &w).conj();
        if reflected != t.delta_alpha {
            return Err(fail(format!(
                "triangle {ti}: delta_alpha is not the reflection of delta_beta"
            )));
        }
        let zero = Rational::default();
        if t.delta_gamma.re <= zero || t.delta_gamma.im <= zero {
            return Err(fail(format!(
                "triangle {ti}: delta_gamma is outside the positive quadrant"
            )));
        }
    }
    let mut owner: HashMap<&G, (usize, &str)> = HashMap::new();
    for (ti, t) in inst.triangles.iter().enumerate() {
        for (p, which) in [
            (&t.delta_gamma, "delta_gamma"),
            (&t.delta_beta, "delta_beta"),
            (&t.delta_alpha, "delta_alpha"),
        ] {
            if let Some((tj, other)) = owner.insert(p, (ti, which)) {
                return Err(fail(format!(
                    "harmonic point ({p}) is {other} of triangle {tj} and {which} of triangle {ti}"
                )));
            }
        }
    }
    let points = inst.alphas.len() + inst.betas.len() + inst.gammas().len();
    Ok(RuzsaReport {
        points,
        triangles: inst.triangles.len(),
        harmonic_points: 3 * inst.triangles.len(),
        distinct_harmonic_points: owner.len(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuzsaRow {
    pub m: usize,
    pub n: BigUint,
    pub triangles: BigUint,
    /// `ln(triangles) / ln(n)`.
    pub exponent: f64,
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

/// Natural log of a positive big integer, accurate to double precision.
fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_f64().expect("fits").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("fits in 64 bits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Point and triangle counts of the construction from the closed forms
/// `n = 3 C(3m, m)` and `C(3m, m) C(2m, m)`.
pub fn ruzsa_stats(ms: &[usize]) -> Result<Vec<RuzsaRow>> {
    ms.iter()
        .map(|&m| {
            if m < 1 {
                return Err(Error::Argument("m must be at least 1".into()));
            }
            let side = binomial(3 * m, m);
            let n = &side * 3u32;
            let triangles = &side * binomial(2 * m, m);
            let exponent = ln_big(&triangles) / ln_big(&n);
            Ok(RuzsaRow {
                m,
                n,
                triangles,
                exponent,
            })
        })
        .collect()
}
