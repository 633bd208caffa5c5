use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::One;

use super::graph::{Edge, Embedding, PlaneGraph};
use super::{grid_chars, render_grid, Color};
use crate::error::{Error, Result};

/// Unit squares of the square lattice. A cell is black when `row + col`
/// is even.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SquareRegion {
    cells: BTreeSet<(i64, i64)>,
}

impl SquareRegion {
    pub fn new() -> SquareRegion {
        SquareRegion::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = (i64, i64)>) -> SquareRegion {
        SquareRegion {
            cells: cells.into_iter().collect(),
        }
    }

    /// Full `rows × cols` rectangle.
    pub fn rectangle(rows: i64, cols: i64) -> SquareRegion {
        SquareRegion::from_cells((0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))))
    }

    pub fn parse(text: &str) -> Result<SquareRegion> {
        let mut cells = BTreeSet::new();
        for (r, c, ch) in grid_chars(text) {
            if ch != 'X' {
                return Err(Error::Parse {
                    line: r as usize + 1,
                    col: c as usize + 1,
                    msg: format!("unexpected character {ch:?}; expected 'X' or space"),
                });
            }
            cells.insert((r, c));
        }
        Ok(SquareRegion { cells })
    }

    pub fn to_xreg(&self) -> String {
        render_grid(self.cells.iter().map(|&p| (p, 'X')))
    }

    pub fn color(row: i64, col: i64) -> Color {
        if (row + col).rem_euclid(2) == 0 {
            Color::Black
        } else {
            Color::White
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, row: i64, col: i64) -> bool {
        self.cells.contains(&(row, col))
    }

    pub fn insert(&mut self, row: i64, col: i64) -> bool {
        self.cells.insert((row, col))
    }

    pub fn remove(&mut self, row: i64, col: i64) -> bool {
        self.cells.remove(&(row, col))
    }

    /// Cells in row-major order, matching the dual graph's vertex order.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.cells.iter().copied()
    }

    pub fn index_of(&self, row: i64, col: i64) -> Option<usize> {
        self.cells
            .contains(&(row, col))
            .then(|| self.cells.range(..(row, col)).count())
    }

    pub fn count_color(&self, color: Color) -> usize {
        self.cells
            .iter()
            .filter(|&&(r, c)| SquareRegion::color(r, c) == color)
            .count()
    }

    pub fn normalized(&self) -> SquareRegion {
        let min_r = self.cells.iter().map(|p| p.0).min().unwrap_or(0);
        let min_c = self.cells.iter().map(|p| p.1).min().unwrap_or(0);
        SquareRegion::from_cells(self.cells().map(|(r, c)| (r - min_r, c - min_c)))
    }

    /// Dual graph on the 4-neighborhood, drawn at cell centers.
    pub fn dual_graph(&self) -> PlaneGraph {
        let index: BTreeMap<(i64, i64), usize> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i))
            .collect();
        let mut labels = Vec::with_capacity(self.len());
        let mut colors = Vec::with_capacity(self.len());
        let mut coords = Vec::with_capacity(self.len());
        let mut edges = Vec::new();
        for &(r, c) in &self.cells {
            labels.push(format!("X{r},{c}"));
            colors.push(Some(SquareRegion::color(r, c)));
            coords.push((c, -r));
            for q in [(r, c + 1), (r + 1, c)] {
                if let Some(&j) = index.get(&q) {
                    edges.push(Edge {
                        u: index[&(r, c)],
                        v: j,
                        weight: BigRational::one(),
                    });
                }
            }
        }
        PlaneGraph::new(labels, colors, edges, Embedding::Coordinates(coords))
            .expect("lattice duals are planar")
    }
}
