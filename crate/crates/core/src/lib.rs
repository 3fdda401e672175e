//! Graph energy toolkit.
//!
//! The energy of a graph is the sum of the absolute values of its adjacency
//! eigenvalues — the trace norm of the adjacency matrix. This crate builds
//! the graph families for which that quantity is understood exactly
//! (complete graphs, matchings, Paley graphs, symplectic graphs and their
//! complements, the even-q Ahrens–Szekeres family, projective-plane
//! incidence graphs, random regular graphs), computes spectra with a
//! self-contained dense symmetric eigensolver, and verifies the known
//! bounds, equality cases and limiting laws at desk scale.
//!
//! Everything is deterministic: algebraic constructions enumerate vertices
//! in a fixed order and randomized procedures are driven entirely by a
//! caller-supplied seed.

pub mod algebra;
pub mod bounds;
pub mod constructors;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod transform;
pub mod verify;

pub use bounds::EnergyReport;
pub use eigen::{Spectrum, SymMatrix};
pub use error::{Error, Result};
pub use graph::{DegreeStats, Graph};
pub use spectral::EsdHistogram;
