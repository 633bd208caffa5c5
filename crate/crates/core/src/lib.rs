//! Exact enumeration of perfect matchings.
//!
//! Regions of the triangular and square lattices (lozenge and domino
//! tilings), generic planar cell complexes (diform tilings) and abstract
//! graphs are turned into [`PlaneGraph`]s, whose perfect matchings are then
//! counted exactly by one of several engines:
//!
//! * signed determinants for planar bipartite graphs,
//! * Pfaffians of oriented skew matrices for planar graphs,
//! * Ryser's permanent formula for small bipartite graphs,
//! * brute-force enumeration as an independent oracle.
//!
//! On top of the counting engines sit the exploratory tools: edge
//! probabilities, moments of inertia, cokernels, Gram spectra, integer
//! factorization, sequence fitting and weighted identities.

pub mod analysis;
pub mod error;
pub mod families;
pub mod grid;
pub mod kasteleyn;
pub mod linalg;
pub mod weighted;

pub use error::{Error, Result};
pub use grid::{CellComplex, Color, Orientation, PlaneGraph, SquareRegion, TriRegion};
pub use kasteleyn::{count_matchings, Method};
