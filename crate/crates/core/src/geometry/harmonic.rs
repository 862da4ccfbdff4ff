//! Cross-ratios, harmonic points and the shape parameter of a triangle.

use super::{GaussianRational as G, Rational};
use crate::{Error, Result};

/// `((a - c)(b - d)) / ((a - d)(b - c))`.
pub fn cross_ratio(a: &G, b: &G, c: &G, d: &G) -> Result<G> {
    let den = (a - d) * (b - c);
    if den.is_zero() {
        return Err(Error::Degenerate("cross-ratio denominator vanishes"));
    }
    Ok(((a - c) * (b - d)) / den)
}

/// The point `d` with `(a, b; c, d) = -1`:
/// `d = (2ab - ac - bc) / (a + b - 2c)`.
pub fn harmonic_point(a: &G, b: &G, c: &G) -> Result<G> {
    let den = a + b - c.scale(&super::integer(2));
    if den.is_zero() {
        return Err(Error::Degenerate("c is the midpoint of ab; harmonic point at infinity"));
    }
    let two_ab = (a * b).scale(&super::integer(2));
    Ok((two_ab - a * c - b * c) / den)
}

fn pairwise_distinct(points: &[&G]) -> bool {
    points
        .iter()
        .enumerate()
        .all(|(i, p)| points[i + 1..].iter().all(|q| p != q))
}

/// True iff `(a, b; c, d) = -1` exactly.
pub fn is_harmonic_quad(a: &G, b: &G, c: &G, d: &G) -> Result<bool> {
    if !pairwise_distinct(&[a, b, c, d]) {
        return Err(Error::Degenerate("harmonic quadrilateral needs four distinct points"));
    }
    Ok(cross_ratio(a, b, c, d)? == G::from_ints(-1, 0))
}

/// Squared side products of the quadrilateral whose cross-ratio is
/// `(a, b; c, d)`. Its cyclic order is `a, c, b, d`, so the two pairs of
/// opposite sides are `(ac, bd)` and `(cb, da)`; for a harmonic quadruple
/// the two returned values agree.
pub fn side_products(a: &G, b: &G, c: &G, d: &G) -> (Rational, Rational) {
    (
        (a - c).norm_sqr() * (b - d).norm_sqr(),
        (c - b).norm_sqr() * (d - a).norm_sqr(),
    )
}

/// The similarity invariant `z = (2C - A - B) / (A - B)` of an ordered
/// triangle. It is unchanged by any map `w -> pw + q` with `p != 0`, and
/// `C = (A + B)/2 + z (A - B)/2` recovers the apex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeParameter(G);

impl ShapeParameter {
    pub fn new(z: G) -> Result<Self> {
        if z.is_zero() {
            return Err(Error::Degenerate("shape parameter must be non-zero"));
        }
        Ok(ShapeParameter(z))
    }

    pub fn value(&self) -> &G {
        &self.0
    }

    /// Real shapes describe collinear triples.
    pub fn is_degenerate(&self) -> bool {
        self.0.is_real()
    }

    /// The shape of the mirror image of any triangle with this shape.
    pub fn mirrored(&self) -> ShapeParameter {
        ShapeParameter(self.0.conj())
    }

    /// Apex of the triangle on base `(a, b)`.
    pub fn apex(&self, a: &G, b: &G) -> G {
        (a + b).half() + (&self.0 * (a - b)).half()
    }
}

pub fn shape_z(a: &G, b: &G, c: &G) -> Result<ShapeParameter> {
    if a == b {
        return Err(Error::Degenerate("shape parameter needs A != B"));
    }
    let z = (c.scale(&super::integer(2)) - a - b) / (a - b);
    ShapeParameter::new(z).map_err(|_| Error::Degenerate("C is the midpoint of AB"))
}

/// The harmonic point opposite `C` of the triangle on base `(a, b)` with
/// shape `z`: `(A + B)/2 + (A - B)/(2z)`.
pub fn harmonic_from_z(a: &G, b: &G, z: &ShapeParameter) -> Result<G> {
    if a == b {
        return Err(Error::Degenerate("harmonic point needs A != B"));
    }
    let zinv = z.value().inv().ok_or(Error::Degenerate("shape parameter is zero"))?;
    Ok((a + b).half() + ((a - b) * zinv).half())
}

/// Twice the signed area of `abc`; zero iff the points are collinear.
pub fn orientation(a: &G, b: &G, c: &G) -> Rational {
    let u = b - a;
    let v = c - a;
    &u.re * &v.im - &u.im * &v.re
}

/// The three harmonic points of a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicTriple {
    /// `(a, b; c, d) = -1`, across `ab` from `c`.
    pub opposite_c: G,
    /// `(c, a; b, d) = -1`, across `ca` from `b`.
    pub opposite_b: G,
    /// `(b, c; a, d) = -1`, across `bc` from `a`.
    pub opposite_a: G,
}

impl HarmonicTriple {
    pub fn as_array(&self) -> [&G; 3] {
        [&self.opposite_c, &self.opposite_b, &self.opposite_a]
    }
}

pub fn three_harmonic_points(a: &G, b: &G, c: &G) -> Result<HarmonicTriple> {
    use num::Zero;
    if orientation(a, b, c).is_zero() {
        return Err(Error::Degenerate("collinear triangle"));
    }
    Ok(HarmonicTriple {
        opposite_c: harmonic_point(a, b, c)?,
        opposite_b: harmonic_point(c, a, b)?,
        opposite_a: harmonic_point(b, c, a)?,
    })
}
