//! Region encodings and their dual graphs.
//!
//! * [`TriRegion`]: cells of the triangular lattice, read from `.vax` text
//!   where `A` is an upward triangle and `V` a downward one.
//! * [`SquareRegion`]: cells of the square lattice, read from `.xreg` text
//!   where `X` is a unit square.
//! * [`CellComplex`]: an arbitrary two-colored cell adjacency structure with
//!   optional face cycles, read from `.cells` text.
//!
//! Character columns are absolute: an upward triangle at `(r, c)` shares its
//! edges with downward triangles at `(r, c - 1)`, `(r, c + 1)` and
//! `(r + 1, c)`.

mod complex;
mod graph;
mod square;
mod tri;

pub use complex::{CellComplex, ComplexCell, ComplexEdge};
pub use graph::{Bipartition, Edge, Embedding, Face, PlaneGraph};
pub use square::SquareRegion;
pub use tri::{Orientation, TriRegion};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Any region or graph that can be turned into a [`PlaneGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    Tri(TriRegion),
    Square(SquareRegion),
    Complex(CellComplex),
}

impl Region {
    pub fn dual_graph(&self) -> Result<PlaneGraph> {
        match self {
            Region::Tri(r) => Ok(r.dual_graph()),
            Region::Square(r) => Ok(r.dual_graph()),
            Region::Complex(c) => c.dual_graph(),
        }
    }

    /// Serializes back to the matching file format.
    pub fn serialize(&self) -> String {
        match self {
            Region::Tri(r) => r.to_vax(),
            Region::Square(r) => r.to_xreg(),
            Region::Complex(c) => c.to_cells(),
        }
    }

    /// Parses by file extension: `.vax`, `.xreg` or `.cells`.
    pub fn parse_with_extension(text: &str, ext: &str) -> Result<Region> {
        match ext {
            "vax" => TriRegion::parse(text).map(Region::Tri),
            "xreg" => SquareRegion::parse(text).map(Region::Square),
            "cells" => CellComplex::parse(text).map(Region::Complex),
            other => Err(Error::InvalidParameter(format!(
                "unknown region extension `.{other}`"
            ))),
        }
    }
}

/// Iterates the non-blank characters of a character grid with their
/// absolute `(row, col)`; blank lines and trailing spaces contribute nothing.
pub(crate) fn grid_chars(text: &str) -> impl Iterator<Item = (i64, i64, char)> + '_ {
    text.lines().enumerate().flat_map(|(r, line)| {
        line.trim_end_matches(['\r', ' '])
            .chars()
            .enumerate()
            .filter(|&(_, ch)| ch != ' ')
            .map(move |(c, ch)| (r as i64, c as i64, ch))
    })
}

/// Renders occupied `(row, col)` positions as a character grid translated
/// so the minimum row and column are zero.
pub(crate) fn render_grid(cells: impl Iterator<Item = ((i64, i64), char)> + Clone) -> String {
    let Some(min_r) = cells.clone().map(|((r, _), _)| r).min() else {
        return String::new();
    };
    let min_c = cells.clone().map(|((_, c), _)| c).min().unwrap_or(0);
    let max_r = cells.clone().map(|((r, _), _)| r).max().unwrap_or(0);
    let mut rows: Vec<Vec<char>> = vec![Vec::new(); (max_r - min_r + 1) as usize];
    for ((r, c), ch) in cells {
        let row = &mut rows[(r - min_r) as usize];
        let c = (c - min_c) as usize;
        if row.len() <= c {
            row.resize(c + 1, ' ');
        }
        row[c] = ch;
    }
    let mut out = String::new();
    for row in rows {
        out.extend(row);
        out.push('\n');
    }
    out
}
