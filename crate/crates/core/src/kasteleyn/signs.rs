use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::grid::{Face, PlaneGraph};
use crate::linalg::{det_bareiss, det_rational, IntMatrix, RationalMatrix};

/// One nonzero entry of a Kasteleyn matrix and the edge it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KasteleynEntry {
    pub row: usize,
    pub col: usize,
    pub edge: usize,
    pub sign: i8,
    pub weight: BigRational,
}

/// Signed biadjacency matrix: rows are black vertices, columns white
/// vertices, both in increasing vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KasteleynMatrix {
    black: Vec<usize>,
    white: Vec<usize>,
    entries: Vec<KasteleynEntry>,
}

impl KasteleynMatrix {
    /// Builds the matrix for explicit per-edge signs, which must satisfy the
    /// face condition on every bounded face.
    pub fn with_signs(g: &PlaneGraph, signs: &[i8]) -> Result<KasteleynMatrix> {
        let bp = g.bipartition().ok_or(Error::NotBipartite)?;
        if signs.len() != g.edge_count() || signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::InvalidParameter(
                "one sign of +1 or -1 per edge required".into(),
            ));
        }
        let faces = g.faces().ok_or(Error::NoEmbedding)?;
        if let Some(f) = faces.iter().find(|f| !face_condition_holds(f, signs)) {
            return Err(Error::BadEmbedding(format!(
                "sign assignment violates the face condition on a face of length {}",
                f.len()
            )));
        }
        Ok(KasteleynMatrix::assemble(g, &bp.black, &bp.white, signs))
    }

    fn assemble(g: &PlaneGraph, black: &[usize], white: &[usize], signs: &[i8]) -> KasteleynMatrix {
        let mut row_of = vec![usize::MAX; g.vertex_count()];
        let mut col_of = vec![usize::MAX; g.vertex_count()];
        for (i, &b) in black.iter().enumerate() {
            row_of[b] = i;
        }
        for (j, &w) in white.iter().enumerate() {
            col_of[w] = j;
        }
        let entries = g
            .edges()
            .iter()
            .enumerate()
            .map(|(id, e)| {
                let (b, w) = if row_of[e.u] != usize::MAX {
                    (e.u, e.v)
                } else {
                    (e.v, e.u)
                };
                KasteleynEntry {
                    row: row_of[b],
                    col: col_of[w],
                    edge: id,
                    sign: signs[id],
                    weight: e.weight.clone(),
                }
            })
            .collect();
        KasteleynMatrix {
            black: black.to_vec(),
            white: white.to_vec(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.black.len()
    }

    pub fn cols(&self) -> usize {
        self.white.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    /// Graph vertex of each row.
    pub fn black(&self) -> &[usize] {
        &self.black
    }

    /// Graph vertex of each column.
    pub fn white(&self) -> &[usize] {
        &self.white
    }

    pub fn entries(&self) -> &[KasteleynEntry] {
        &self.entries
    }

    pub fn sign(&self, edge: usize) -> i8 {
        self.entries[edge].sign
    }

    pub fn signs(&self) -> Vec<i8> {
        self.entries.iter().map(|e| e.sign).collect()
    }

    pub fn entry_of_edge(&self, edge: usize) -> &KasteleynEntry {
        &self.entries[edge]
    }

    /// Integer matrix; fails if some weight is not an integer.
    pub fn to_int_matrix(&self) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(self.rows(), self.cols());
        for e in &self.entries {
            if !e.weight.is_integer() {
                return Err(Error::InvalidParameter("non-integral edge weight".into()));
            }
            m[(e.row, e.col)] = e.weight.to_integer() * BigInt::from(e.sign);
        }
        Ok(m)
    }

    pub fn to_rational_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows(), self.cols());
        for e in &self.entries {
            m[(e.row, e.col)] = e.weight.clone() * BigRational::from_integer(BigInt::from(e.sign));
        }
        m
    }

    /// Negates every entry incident to the given graph vertices. This
    /// preserves the face condition and |det|.
    pub fn flip_vertices(&self, vertices: &[usize]) -> KasteleynMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            let flips = vertices.contains(&self.black[e.row]) as u8
                + vertices.contains(&self.white[e.col]) as u8;
            if flips % 2 == 1 {
                e.sign = -e.sign;
            }
        }
        out
    }

    fn integral_weights(&self) -> bool {
        self.entries.iter().all(|e| e.weight.is_integer())
    }
}

/// Product of signs around a face (with multiplicity) is
/// `(-1)^(len/2 + 1)`; faces of odd length never satisfy it.
pub fn face_condition_holds(face: &Face, signs: &[i8]) -> bool {
    let len = face.len();
    if len % 2 == 1 {
        return false;
    }
    let negatives = face.edges.iter().filter(|&&e| signs[e] < 0).count();
    (negatives % 2 == 1) == len.is_multiple_of(4)
}

/// Breadth-first spanning forest over vertices in index order.
pub(crate) fn spanning_forest(g: &PlaneGraph) -> Vec<bool> {
    let mut in_tree = vec![false; g.edge_count()];
    let mut seen = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(y, id) in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    in_tree[id] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    in_tree
}

/// Fixes the edges outside a spanning forest one face at a time: each round
/// takes a face with a single undetermined edge and lets `settle` choose its
/// value from the others.
pub(crate) fn peel_faces(
    g: &PlaneGraph,
    mut assigned: Vec<bool>,
    mut settle: impl FnMut(&Face, usize),
) -> Result<()> {
    let faces = g.faces().ok_or(Error::NoEmbedding)?;
    let mut faces_of_edge = vec![Vec::new(); g.edge_count()];
    for (fi, f) in faces.iter().enumerate() {
        let mut distinct = f.edges.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for e in distinct {
            faces_of_edge[e].push(fi);
        }
    }
    let open = |f: &Face, assigned: &[bool]| {
        let mut d: Vec<usize> = f.edges.iter().copied().filter(|&e| !assigned[e]).collect();
        d.sort_unstable();
        d.dedup();
        d
    };
    let mut done = vec![false; faces.len()];
    let mut queue: VecDeque<usize> = (0..faces.len()).collect();
    while let Some(fi) = queue.pop_front() {
        if done[fi] {
            continue;
        }
        let pending = open(&faces[fi], &assigned);
        match pending.len() {
            0 => done[fi] = true,
            1 => {
                let e = pending[0];
                settle(&faces[fi], e);
                assigned[e] = true;
                done[fi] = true;
                queue.extend(faces_of_edge[e].iter().copied().filter(|&f| !done[f]));
            }
            _ => {}
        }
    }
    if assigned.iter().all(|&a| a) {
        Ok(())
    } else {
        Err(Error::BadEmbedding(
            "faces do not determine every edge; embedding inconsistent".into(),
        ))
    }
}

/// Kasteleyn signs for a planar bipartite graph: spanning-forest edges are
/// positive, the rest are forced face by face. The result is checked
/// against every bounded face before it is returned.
pub fn sign_assignment(g: &PlaneGraph) -> Result<KasteleynMatrix> {
    g.bipartition().ok_or(Error::NotBipartite)?;
    g.faces().ok_or(Error::NoEmbedding)?;
    let tree = spanning_forest(g);
    let mut signs = vec![1i8; g.edge_count()];
    peel_faces(g, tree, |face, e| {
        let others = face
            .edges
            .iter()
            .filter(|&&x| x != e)
            .filter(|&&x| signs[x] < 0)
            .count();
        let want_odd = face.len() % 4 == 0;
        signs[e] = if (others % 2 == 1) == want_odd { 1 } else { -1 };
    })?;
    KasteleynMatrix::with_signs(g, &signs)
}

/// Number of perfect matchings (weighted sum for integral weights) as
/// `|det K|`; an unbalanced bipartition gives 0.
pub fn count_det(k: &KasteleynMatrix) -> Result<BigInt> {
    if !k.is_square() {
        return Ok(BigInt::zero());
    }
    if k.rows() == 0 {
        return Ok(BigInt::from(1));
    }
    Ok(det_bareiss(&k.to_int_matrix()?)?.abs())
}

/// Weighted matching sum `|det K|` for rational weights.
pub fn weighted_det(k: &KasteleynMatrix) -> Result<BigRational> {
    if !k.is_square() {
        return Ok(BigRational::zero());
    }
    if k.rows() == 0 {
        return Ok(BigRational::from_integer(1.into()));
    }
    if k.integral_weights() {
        return count_det(k).map(BigRational::from_integer);
    }
    Ok(det_rational(&k.to_rational_matrix())?.abs())
}
