use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::grid::{Color, Edge, Embedding, PlaneGraph};

/// Largest cube dimension accepted by [`cube_graph`].
pub const MAX_CUBE_DIMENSION: u32 = 5;

/// Triangular grid graph with rows of `1, 2, …, n` vertices, each row
/// joined to the next along both diagonals and within itself.
pub fn triangle_graph(n: u32) -> Result<PlaneGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "triangle graph order must be at least 1".into(),
        ));
    }
    let n = i64::from(n);
    let id = |i: i64, j: i64| (i * (i + 1) / 2 + j) as usize;
    let mut labels = Vec::new();
    let mut coords = Vec::new();
    let mut edges = Vec::new();
    let unit = |u, v| Edge {
        u,
        v,
        weight: BigRational::one(),
    };
    for i in 0..n {
        for j in 0..=i {
            labels.push(format!("{i},{j}"));
            coords.push((2 * j - i, -2 * i));
            if j < i {
                edges.push(unit(id(i, j), id(i, j + 1)));
            }
            if i + 1 < n {
                edges.push(unit(id(i, j), id(i + 1, j)));
                edges.push(unit(id(i, j), id(i + 1, j + 1)));
            }
        }
    }
    let count = labels.len();
    PlaneGraph::new(
        labels,
        vec![None; count],
        edges,
        Embedding::Coordinates(coords),
    )
}

/// The `n`-dimensional hypercube, bipartitioned by bit parity.
pub fn cube_graph(n: u32) -> Result<PlaneGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cube dimension must be at least 1".into(),
        ));
    }
    if n > MAX_CUBE_DIMENSION {
        return Err(Error::TooLarge(format!(
            "{n}-cube exceeds the supported dimension {MAX_CUBE_DIMENSION}"
        )));
    }
    let size = 1usize << n;
    let labels = (0..size)
        .map(|v| format!("{v:0width$b}", width = n as usize))
        .collect();
    let colors = (0..size)
        .map(|v: usize| {
            Some(if v.count_ones().is_multiple_of(2) {
                Color::Black
            } else {
                Color::White
            })
        })
        .collect();
    let edges = (0..size)
        .flat_map(|v| (0..n).map(move |bit| (v, v ^ (1 << bit))))
        .filter(|&(u, v)| u < v)
        .map(|(u, v)| Edge {
            u,
            v,
            weight: BigRational::one(),
        })
        .collect();
    PlaneGraph::new(labels, colors, edges, Embedding::None)
}
