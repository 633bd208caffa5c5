use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use super::HexagonSpec;
use crate::grid::{CellComplex, Color, Edge, Embedding, PlaneGraph};

/// Piece of a unit square `(x, y)` of the sliced dissection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Piece {
    /// Triangle in the upper-left half of a sliced square.
    UpperLeft,
    Square,
    /// Triangle in the lower-right half of a sliced square.
    LowerRight,
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
    Top,
    Bottom,
}

impl Piece {
    fn touches(self, side: Side) -> bool {
        match self {
            Piece::Square => true,
            Piece::UpperLeft => matches!(side, Side::Left | Side::Top),
            Piece::LowerRight => matches!(side, Side::Right | Side::Bottom),
        }
    }

    /// Centroid scaled by 6 relative to the square's corner.
    fn centroid6(self) -> (i64, i64) {
        match self {
            Piece::UpperLeft => (2, 2),
            Piece::Square => (3, 3),
            Piece::LowerRight => (4, 4),
        }
    }

    fn tag(self) -> char {
        match self {
            Piece::UpperLeft => 'U',
            Piece::Square => 'S',
            Piece::LowerRight => 'L',
        }
    }
}

/// Boundary of the `a, b, c` quasi-hexagon as a closed lattice walk, in
/// square-grid coordinates with `y` growing downward.
fn boundary(spec: HexagonSpec) -> Vec<(i64, i64)> {
    let (a, b, c) = (i64::from(spec.a), i64::from(spec.b), i64::from(spec.c));
    // Staircase sides alternate unit steps; the `b` sides run along a
    // slicing diagonal.
    let steep = [(0, 1), (1, 0), (0, 1)];
    let shallow = [(1, 0), (0, 1), (1, 0)];
    let rev = |s: [(i64, i64); 3]| s.map(|(x, y)| (-x, -y));
    let sides: Vec<(i64, [(i64, i64); 3])> = vec![(a, steep), (c, shallow)];
    let mut walk = vec![(0, b)];
    let push = |walk: &mut Vec<(i64, i64)>, d: (i64, i64)| {
        let &(x, y) = walk.last().expect("walk starts nonempty");
        walk.push((x + d.0, y + d.1));
    };
    for (len, steps) in sides {
        for _ in 0..len {
            for d in steps {
                push(&mut walk, d);
            }
        }
    }
    for _ in 0..b {
        push(&mut walk, (1, -1));
    }
    for (len, steps) in [(a, rev(steep)), (c, rev(shallow))] {
        for _ in 0..len {
            for d in steps {
                push(&mut walk, d);
            }
        }
    }
    for _ in 0..b {
        push(&mut walk, (-1, 1));
    }
    let closed = walk.pop();
    debug_assert_eq!(closed, Some((0, b)));
    walk
}

/// Even-odd test; `p` and the polygon are both scaled by 6 and `p` never
/// lies on the boundary.
fn inside(poly: &[(i64, i64)], p: (i64, i64)) -> bool {
    let mut odd = false;
    for i in 0..poly.len() {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % poly.len()];
        if (y1 > p.1) != (y2 > p.1) {
            // x-coordinate of the crossing compared without division.
            let lhs = (p.0 - x1) * (y2 - y1);
            let rhs = (x2 - x1) * (p.1 - y1);
            if (lhs < rhs) == (y2 > y1) {
                odd = !odd;
            }
        }
    }
    odd
}

/// Dual graph of the `a, b, c` quasi-hexagon in the dissection of the plane
/// obtained by slicing the square grid along every third up-diagonal.
/// Vertices are drawn at piece centroids, in row-major order.
pub fn quasi_hexagon_graph(spec: HexagonSpec) -> PlaneGraph {
    let b = i64::from(spec.b);
    let poly: Vec<(i64, i64)> = boundary(spec)
        .into_iter()
        .map(|(x, y)| (6 * x, 6 * y))
        .collect();
    let max_x = poly.iter().map(|p| p.0).max().unwrap_or(0) / 6;
    let max_y = poly.iter().map(|p| p.1).max().unwrap_or(0) / 6;
    let mut pieces: BTreeMap<(i64, i64, Piece), usize> = BTreeMap::new();
    for y in 0..max_y {
        for x in 0..max_x {
            let sliced = (x + y + 1 - b).rem_euclid(3) == 0;
            let kinds: &[Piece] = if sliced {
                &[Piece::UpperLeft, Piece::LowerRight]
            } else {
                &[Piece::Square]
            };
            for &k in kinds {
                let (dx, dy) = k.centroid6();
                if inside(&poly, (6 * x + dx, 6 * y + dy)) {
                    pieces.insert((y, x, k), 0);
                }
            }
        }
    }
    for (i, slot) in pieces.values_mut().enumerate() {
        *slot = i;
    }
    let find = |x: i64, y: i64, side: Side| {
        [Piece::Square, Piece::UpperLeft, Piece::LowerRight]
            .into_iter()
            .filter(|k| k.touches(side))
            .find_map(|k| pieces.get(&(y, x, k)).copied())
    };
    let mut labels = Vec::new();
    let mut coords = Vec::new();
    let mut edges = Vec::new();
    for (&(y, x, k), &i) in &pieces {
        labels.push(format!("{}{},{}", k.tag(), x, y));
        let (dx, dy) = k.centroid6();
        coords.push((6 * x + dx, -(6 * y + dy)));
        let mut link = |j: Option<usize>| {
            if let Some(j) = j {
                edges.push(Edge {
                    u: i,
                    v: j,
                    weight: BigRational::one(),
                });
            }
        };
        if k.touches(Side::Right) {
            link(find(x + 1, y, Side::Left));
        }
        if k.touches(Side::Bottom) {
            link(find(x, y + 1, Side::Top));
        }
        if k == Piece::UpperLeft {
            link(pieces.get(&(y, x, Piece::LowerRight)).copied());
        }
    }
    let n = labels.len();
    let g = PlaneGraph::new(
        labels.clone(),
        vec![None; n],
        edges.clone(),
        Embedding::Coordinates(coords.clone()),
    )
    .expect("centroid drawing of a dissection is planar");
    // Record the two-coloring on the vertices themselves.
    let colors = match g.bipartition() {
        Some(bp) => {
            let mut c = vec![None; n];
            for &v in &bp.black {
                c[v] = Some(Color::Black);
            }
            for &v in &bp.white {
                c[v] = Some(Color::White);
            }
            c
        }
        None => vec![None; n],
    };
    PlaneGraph::new(labels, colors, edges, Embedding::Coordinates(coords))
        .expect("centroid drawing of a dissection is planar")
}

/// The quasi-hexagon as a cell complex with its faces.
pub fn quasi_hexagon(spec: HexagonSpec) -> CellComplex {
    CellComplex::from_plane_graph(&quasi_hexagon_graph(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_corners() {
        let walk = boundary(HexagonSpec::new(2, 3, 2).unwrap());
        for corner in [(0, 3), (2, 7), (6, 9), (9, 6), (7, 2), (3, 0)] {
            assert!(walk.contains(&corner), "{corner:?}");
        }
    }

    #[test]
    fn figure_piece_count() {
        let g = quasi_hexagon_graph(HexagonSpec::new(2, 3, 2).unwrap());
        assert_eq!(g.vertex_count(), 64);
        let bp = g.bipartition().unwrap();
        assert!(bp.is_balanced());
    }

    #[test]
    fn complex_roundtrip() {
        let c = quasi_hexagon(HexagonSpec::new(1, 1, 1).unwrap());
        let again = CellComplex::parse(&c.to_cells()).unwrap();
        assert_eq!(again, c);
        let g = again.dual_graph().unwrap();
        assert!(g.is_planar_embedded());
    }
}
