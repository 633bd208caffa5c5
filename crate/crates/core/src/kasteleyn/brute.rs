use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grid::PlaneGraph;

/// Largest graph accepted by the enumeration oracle.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 40;

/// Commutative semiring in which matchings are summed.
pub trait Semiring: Clone {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;
}

impl Semiring for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Semiring for BigRational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Sum over all perfect matchings of the product of `weights[edge]`.
///
/// Recursively matches a remaining vertex of least remaining degree along
/// each of its edges, memoizing on the set of unmatched vertices.
pub fn brute_force<S: Semiring>(g: &PlaneGraph, weights: &[S]) -> Result<S> {
    brute_force_with_cap(g, weights, BRUTE_FORCE_MAX_VERTICES)
}

pub fn brute_force_with_cap<S: Semiring>(g: &PlaneGraph, weights: &[S], cap: usize) -> Result<S> {
    let n = g.vertex_count();
    if n > cap.min(64) {
        return Err(Error::TooLarge(format!(
            "brute force limited to {} vertices, graph has {n}",
            cap.min(64)
        )));
    }
    if weights.len() != g.edge_count() {
        return Err(Error::Dimension("one weight per edge required".into()));
    }
    let adj: Vec<Vec<(usize, usize)>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(enumerate(full, &adj, weights, &mut memo))
}

fn enumerate<S: Semiring>(
    mask: u64,
    adj: &[Vec<(usize, usize)>],
    w: &[S],
    memo: &mut HashMap<u64, S>,
) -> S {
    if mask == 0 {
        return S::one_elem();
    }
    if mask.count_ones() % 2 == 1 {
        return S::zero_elem();
    }
    if let Some(s) = memo.get(&mask) {
        return s.clone();
    }
    let mut best = None;
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = adj[v].iter().filter(|&&(u, _)| mask >> u & 1 == 1).count();
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((v, d));
        }
        if d == 0 {
            break;
        }
    }
    let (v, _) = best.expect("mask nonempty");
    let mut total = S::zero_elem();
    for &(u, e) in &adj[v] {
        if mask >> u & 1 == 1 {
            let rest = enumerate(mask & !(1 << v) & !(1 << u), adj, w, memo);
            if !rest.is_zero_elem() {
                total = total.plus(&w[e].times(&rest));
            }
        }
    }
    memo.insert(mask, total.clone());
    total
}

/// Unweighted matching count by enumeration.
pub fn brute_force_count(g: &PlaneGraph) -> Result<BigInt> {
    brute_force(g, &vec![BigInt::one(); g.edge_count()])
}

/// Weighted matching sum by enumeration, using the graph's edge weights.
pub fn brute_force_weighted(g: &PlaneGraph) -> Result<BigRational> {
    let w: Vec<BigRational> = g.edges().iter().map(|e| e.weight.clone()).collect();
    brute_force(g, &w)
}

/// Every perfect matching as a sorted list of edge ids, in lexicographic
/// order. Intended for small graphs only.
pub fn all_matchings(g: &PlaneGraph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "matching listing limited to {BRUTE_FORCE_MAX_VERTICES} vertices"
        )));
    }
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut current = Vec::new();
    list(g, &mut used, &mut current, &mut out);
    for m in &mut out {
        m.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn list(g: &PlaneGraph, used: &mut [bool], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some(v) = used.iter().position(|&u| !u) else {
        out.push(current.clone());
        return;
    };
    used[v] = true;
    for &(u, e) in g.neighbors(v) {
        if !used[u] {
            used[u] = true;
            current.push(e);
            list(g, used, current, out);
            current.pop();
            used[u] = false;
        }
    }
    used[v] = false;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Edge, Embedding};

    #[test]
    fn six_cycle() {
        let g = PlaneGraph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
            .unwrap();
        assert_eq!(brute_force_count(&g).unwrap(), BigInt::from(2));
        assert_eq!(all_matchings(&g).unwrap().len(), 2);
    }

    #[test]
    fn weighted_four_cycle() {
        let r = |n: i64| BigRational::from_integer(n.into());
        let (a, b, c, d) = (r(2), r(3), r(5), r(7));
        let edges = [(0, 1, &a), (1, 2, &b), (2, 3, &c), (3, 0, &d)]
            .into_iter()
            .map(|(u, v, w)| Edge {
                u,
                v,
                weight: w.clone(),
            })
            .collect();
        let labels = (0..4).map(|i| i.to_string()).collect();
        let g = PlaneGraph::new(labels, vec![None; 4], edges, Embedding::None).unwrap();
        assert_eq!(brute_force_weighted(&g).unwrap(), &a * &c + &b * &d);
    }

    #[test]
    fn cap_enforced() {
        let g = PlaneGraph::from_edge_list(41, &[]).unwrap();
        assert!(matches!(brute_force_count(&g), Err(Error::TooLarge(_))));
        let odd = PlaneGraph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_count(&odd).unwrap(), BigInt::zero());
    }
}
