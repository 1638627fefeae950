//! Transversals of linear uniform hypergraphs.
//!
//! The crate builds the standard incidence-geometry families (affine and
//! projective planes over finite fields, `L_k`, the Δ ≤ 2 extremal family and
//! the special-hypergraph catalog), computes exact transversal numbers,
//! matchings and deficiencies, and checks the classical upper bounds on
//! them at desk scale.

pub mod algebra;
pub mod deficiency;
pub mod error;
pub mod graph;
pub mod hgfile;
pub mod hypergraph;
pub mod iso;
pub mod manifest;
pub mod matching;
pub mod probability;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
