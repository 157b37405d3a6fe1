//! Odd-cycle colourings of small graphs.
//!
//! Graphs on at most 64 vertices are stored as one adjacency bitmask per
//! vertex. On top of that the crate provides an exact homomorphism solver,
//! the usual graph families (circular cliques, odd-K4s, odd-K3²s,
//! generalised Mycielski graphs), detectors for odd-K4 and odd-K3²
//! subgraphs, and an isomorph-free enumerator that searches for the
//! smallest graphs of given odd-girth with no homomorphism to a given odd
//! cycle.

pub mod budget;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod hom;
pub mod search;
pub mod witness;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{CycleLength, Graph};
pub use hom::VertexMap;
