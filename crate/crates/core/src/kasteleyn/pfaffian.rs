use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::signs::{peel_faces, spanning_forest};
use crate::error::{Error, Result};
use crate::grid::{Face, PlaneGraph};
use crate::linalg::{det_bareiss, det_rational, integer_sqrt, IntMatrix, RationalMatrix, Sqrt};

/// Skew-symmetric matrix of a Pfaffian orientation: entry `(u, v)` is the
/// edge weight if the edge is oriented `u -> v`, its negative if `v -> u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSkewMatrix {
    /// `true` when edge `i` points from its `u` end to its `v` end.
    forward: Vec<bool>,
    n: usize,
    entries: Vec<(usize, usize, BigRational)>,
}

impl OrientedSkewMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_forward(&self, edge: usize) -> bool {
        self.forward[edge]
    }

    pub fn to_int_matrix(&self) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for (a, b, w) in &self.entries {
            if !w.is_integer() {
                return Err(Error::InvalidParameter("non-integral edge weight".into()));
            }
            m[(*a, *b)] = w.to_integer();
            m[(*b, *a)] = -w.to_integer();
        }
        Ok(m)
    }

    pub fn to_rational_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.n, self.n);
        for (a, b, w) in &self.entries {
            m[(*a, *b)] = w.clone();
            m[(*b, *a)] = -w.clone();
        }
        m
    }
}

/// Edges of a face walk oriented along the walk, counted with multiplicity.
fn along(face: &Face, forward: &[bool], g: &PlaneGraph) -> usize {
    let k = face.vertices.len();
    (0..k)
        .filter(|&i| {
            let e = g.edge(face.edges[i]);
            let from = face.vertices[i];
            let to = face.vertices[(i + 1) % k];
            debug_assert!((e.u, e.v) == (from, to) || (e.v, e.u) == (from, to));
            (e.u == from) == forward[face.edges[i]]
        })
        .count()
}

/// Orients a planar embedded graph so that every bounded face walk has an
/// odd number of edges pointing along it.
pub fn pfaffian_orientation(g: &PlaneGraph) -> Result<OrientedSkewMatrix> {
    let faces = g.faces().ok_or(Error::NoEmbedding)?;
    let tree = spanning_forest(g);
    let mut forward = vec![true; g.edge_count()];
    peel_faces(g, tree, |face, e| {
        forward[e] = true;
        if along(face, &forward, g).is_multiple_of(2) {
            forward[e] = false;
        }
    })?;
    if let Some(f) = faces
        .iter()
        .find(|f| along(f, &forward, g).is_multiple_of(2))
    {
        return Err(Error::BadEmbedding(format!(
            "orientation is not Pfaffian on a face of length {}",
            f.len()
        )));
    }
    let entries = g
        .edges()
        .iter()
        .zip(&forward)
        .map(|(e, &f)| {
            if f {
                (e.u, e.v, e.weight.clone())
            } else {
                (e.v, e.u, e.weight.clone())
            }
        })
        .collect();
    Ok(OrientedSkewMatrix {
        forward,
        n: g.vertex_count(),
        entries,
    })
}

/// Matching count of a planar graph as `sqrt(det A)` for the Pfaffian
/// orientation's skew matrix `A`. An inexact square root is reported as an
/// error: it can only come from a broken orientation.
pub fn pfaffian_count(g: &PlaneGraph) -> Result<BigInt> {
    let a = pfaffian_orientation(g)?;
    if a.n % 2 == 1 {
        return Ok(BigInt::zero());
    }
    if a.n == 0 {
        return Ok(BigInt::one());
    }
    let det = det_bareiss(&a.to_int_matrix()?)?;
    match integer_sqrt(&det) {
        Ok(Sqrt::Exact(r)) => Ok(r),
        Ok(Sqrt::NotASquare(_)) | Err(_) => Err(Error::InexactPfaffian(format!("det = {det}"))),
    }
}

/// Weighted Pfaffian sum for rational weights.
pub fn pfaffian_weighted(g: &PlaneGraph) -> Result<BigRational> {
    let a = pfaffian_orientation(g)?;
    if a.n % 2 == 1 {
        return Ok(BigRational::zero());
    }
    if a.n == 0 {
        return Ok(BigRational::one());
    }
    let det = det_rational(&a.to_rational_matrix())?;
    if det.is_negative() {
        return Err(Error::InexactPfaffian(format!("negative det {det}")));
    }
    let num = integer_sqrt(det.numer())?;
    let den = integer_sqrt(det.denom())?;
    match (num.exact(), den.exact()) {
        (Some(p), Some(q)) => Ok(BigRational::new(p.clone(), q.clone())),
        _ => Err(Error::InexactPfaffian(format!("det = {det}"))),
    }
}
