use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::graph::{Edge, Embedding, PlaneGraph};
use super::{grid_chars, render_grid, Color};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn symbol(self) -> char {
        match self {
            Orientation::Up => 'A',
            Orientation::Down => 'V',
        }
    }
}

/// Unit triangles of the triangular lattice, keyed by absolute character
/// position `(row, col)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriRegion {
    cells: BTreeMap<(i64, i64), Orientation>,
}

impl TriRegion {
    pub fn new() -> TriRegion {
        TriRegion::default()
    }

    pub fn from_cells(cells: impl IntoIterator<Item = ((i64, i64), Orientation)>) -> TriRegion {
        TriRegion {
            cells: cells.into_iter().collect(),
        }
    }

    pub fn parse(text: &str) -> Result<TriRegion> {
        let mut cells = BTreeMap::new();
        for (r, c, ch) in grid_chars(text) {
            let o = match ch {
                'A' => Orientation::Up,
                'V' => Orientation::Down,
                _ => {
                    return Err(Error::Parse {
                        line: r as usize + 1,
                        col: c as usize + 1,
                        msg: format!("unexpected character {ch:?}; expected 'A', 'V' or space"),
                    })
                }
            };
            cells.insert((r, c), o);
        }
        Ok(TriRegion { cells })
    }

    pub fn to_vax(&self) -> String {
        render_grid(self.cells.iter().map(|(&p, &o)| (p, o.symbol())))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn get(&self, row: i64, col: i64) -> Option<Orientation> {
        self.cells.get(&(row, col)).copied()
    }

    pub fn insert(&mut self, row: i64, col: i64, o: Orientation) {
        self.cells.insert((row, col), o);
    }

    pub fn remove(&mut self, row: i64, col: i64) -> Option<Orientation> {
        self.cells.remove(&(row, col))
    }

    /// Cells in canonical (row-major) order; this is also the vertex order
    /// of [`TriRegion::dual_graph`].
    pub fn cells(&self) -> impl Iterator<Item = ((i64, i64), Orientation)> + '_ {
        self.cells.iter().map(|(&p, &o)| (p, o))
    }

    pub fn count(&self, o: Orientation) -> usize {
        self.cells.values().filter(|&&x| x == o).count()
    }

    /// Index of a cell in canonical order.
    pub fn index_of(&self, row: i64, col: i64) -> Option<usize> {
        self.cells
            .contains_key(&(row, col))
            .then(|| self.cells.range(..(row, col)).count())
    }

    /// Same region translated so its minimum row and column are zero.
    pub fn normalized(&self) -> TriRegion {
        let min_r = self.cells.keys().map(|p| p.0).min().unwrap_or(0);
        let min_c = self.cells.keys().map(|p| p.1).min().unwrap_or(0);
        TriRegion::from_cells(self.cells().map(|((r, c), o)| ((r - min_r, c - min_c), o)))
    }

    /// Scaled centroid of a cell, used as its vertex position in the dual.
    pub fn centroid(row: i64, col: i64, o: Orientation) -> (i64, i64) {
        let depth = match o {
            Orientation::Up => 6 * row + 4,
            Orientation::Down => 6 * row + 2,
        };
        (3 * col, -depth)
    }

    /// Dual graph: an upward triangle at `(r, c)` is joined to downward
    /// triangles at `(r, c - 1)`, `(r, c + 1)` and `(r + 1, c)`. Upward
    /// triangles are black.
    pub fn dual_graph(&self) -> PlaneGraph {
        let index: BTreeMap<(i64, i64), usize> = self
            .cells
            .keys()
            .enumerate()
            .map(|(i, &p)| (p, i))
            .collect();
        let mut labels = Vec::with_capacity(self.len());
        let mut colors = Vec::with_capacity(self.len());
        let mut coords = Vec::with_capacity(self.len());
        let mut edges = Vec::new();
        for (&(r, c), &o) in &self.cells {
            labels.push(format!("{}{},{}", o.symbol(), r, c));
            colors.push(Some(match o {
                Orientation::Up => Color::Black,
                Orientation::Down => Color::White,
            }));
            coords.push(TriRegion::centroid(r, c, o));
            if o == Orientation::Up {
                for q in [(r, c - 1), (r, c + 1), (r + 1, c)] {
                    if self.cells.get(&q) == Some(&Orientation::Down) {
                        edges.push(Edge {
                            u: index[&(r, c)],
                            v: index[&q],
                            weight: BigRational::one(),
                        });
                    }
                }
            }
        }
        // Centroid drawings of lattice regions never cross, so tracing
        // cannot fail.
        PlaneGraph::new(labels, colors, edges, Embedding::Coordinates(coords))
            .expect("lattice duals are planar")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_cells() {
        let r = TriRegion::parse("AV").unwrap();
        assert_eq!(r.get(0, 0), Some(Orientation::Up));
        assert_eq!(r.get(0, 1), Some(Orientation::Down));
        let g = r.dual_graph();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn bad_character_position() {
        match TriRegion::parse("AV\n A\n  X") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (3, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unit_hexagon_is_six_cycle() {
        let r = TriRegion::parse("AVA\nVAV\n").unwrap();
        assert_eq!(r.len(), 6);
        let g = r.dual_graph();
        assert_eq!(g.edge_count(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
        let faces = g.faces().unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 6);
    }

    #[test]
    fn roundtrip_translates() {
        let text = "  AVA\n  VAV\n";
        let r = TriRegion::parse(text).unwrap();
        assert_eq!(r.to_vax(), "AVA\nVAV\n");
        assert_eq!(TriRegion::parse(&r.to_vax()).unwrap(), r.normalized());
    }

    #[test]
    fn blank_lines_and_trailing_spaces_ignored() {
        let r = TriRegion::parse("AV  \r\n\n").unwrap();
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn index_matches_dual_order() {
        let r = TriRegion::parse("AVA\nVAV").unwrap();
        let g = r.dual_graph();
        assert_eq!(r.index_of(1, 1), Some(4));
        assert_eq!(g.label(4), "A1,1");
        assert_eq!(r.index_of(5, 5), None);
    }
}
