//! Generators for the parameterized regions and graphs.

mod aztec;
mod graphs;
mod hexagon;
mod quasi;

pub use aztec::{aztec, aztec_rectangle, AztecKind, AztecSpec};
pub use graphs::{cube_graph, triangle_graph, MAX_CUBE_DIMENSION};
pub use hexagon::{central_pair, general_hexagon, hexagon, holey_hexagon, HexagonSpec, HoleyKind};
pub use quasi::{quasi_hexagon, quasi_hexagon_graph};
