//! Loose cycles in linear triple systems, triangle packings, and exact
//! harmonic-point geometry.
//!
//! The crate is organised around a handful of independent pieces:
//!
//! - [`hypergraph`] and [`graph`]: triple systems, simple graphs and
//!   multigraphs, plus linear-path enumeration.
//! - [`census`]: loose-cycle and graph-cycle counters with brute-force
//!   reference counters.
//! - [`supersat`]: the auxiliary graphs `G_v`, good/bad path classification,
//!   the edge-count identities and the pentagon bound calculators.
//! - [`removal`]: greedy edge-disjoint triangle packings and farness
//!   certificates.
//! - [`geometry`]: Gaussian-rational points, cross-ratios, harmonic points,
//!   similar-triangle systems and the harmonic closure.
//! - [`constructions`]: `T3(n)`, blow-ups, random linear systems and the
//!   base-13 right-isosceles construction.
//! - [`io`]: the `.l3g`, `.g1` and `.pts` text formats.

pub mod census;
pub mod constructions;
mod error;
pub mod geometry;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod removal;
pub mod rng;
pub mod supersat;

pub use error::{Error, Result};
pub use graph::{Multigraph, SimpleGraph};
pub use hypergraph::{LinearPath, Triple, TripleSystem, VertexId};
