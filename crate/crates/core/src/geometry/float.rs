//! Floating-point counterparts of the exact routines, for exploring shapes
//! with irrational coordinates (equilateral triangles, for instance).
//!
//! Nothing here is exact; comparisons use a caller-supplied tolerance.

use num::complex::Complex64;

pub fn harmonic_point(a: Complex64, b: Complex64, c: Complex64) -> Option<Complex64> {
    let den = a + b - 2.0 * c;
    if den.norm() == 0.0 {
        return None;
    }
    Some((2.0 * a * b - a * c - b * c) / den)
}

pub fn cross_ratio(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Option<Complex64> {
    let den = (a - d) * (b - c);
    if den.norm() == 0.0 {
        return None;
    }
    Some((a - c) * (b - d) / den)
}

/// Labeled triangles `(a, b, c)` with `|apex(a, b) - c| <= tol`. Quadratic
/// in the number of points times a linear scan for the apex.
pub fn similar_triangles(points: &[Complex64], z: Complex64, tol: f64) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (i, &a) in points.iter().enumerate() {
        for (j, &b) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let apex = (a + b) / 2.0 + z * (a - b) / 2.0;
            for (k, &c) in points.iter().enumerate() {
                if k != i && k != j && (apex - c).norm() <= tol {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}
