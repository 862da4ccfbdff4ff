//! Exact plane geometry over the Gaussian rationals.

pub mod closure;
pub mod float;
mod gaussian;
pub mod harmonic;
pub mod pentagon;
pub mod similar;

pub use closure::{harmonic_closure, ClosureResult, ClosureStep};
pub use gaussian::{integer, parse_rational, ratio_to_f64, rational, to_decimal_string, GaussianRational, Rational};
pub use harmonic::{
    cross_ratio, harmonic_from_z, harmonic_point, is_harmonic_quad, orientation, shape_z, side_products,
    three_harmonic_points, HarmonicTriple, ShapeParameter,
};
pub use pentagon::{pentagon_fifth_harmonic, PentagonWitness};
pub use similar::{
    find_similar_triangles, shared_harmonic_search, similarity_system, tripartition, LabeledTriangle, Orientation,
    Part, PointSet, SharedHarmonic, SimilaritySystem,
};
