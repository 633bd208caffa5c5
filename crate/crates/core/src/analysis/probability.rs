use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::grid::PlaneGraph;
use crate::kasteleyn::{
    count_matchings, sign_assignment, KasteleynMatrix, BRUTE_FORCE_MAX_VERTICES,
};
use crate::linalg::{det_bareiss, inverse_rational, IntMatrix, RationalMatrix};

/// Probability that `edge` lies in a uniformly random perfect matching,
/// as `count(G - {u, v}) / count(G)`.
pub fn edge_probability(g: &PlaneGraph, edge: usize) -> Result<BigRational> {
    if edge >= g.edge_count() {
        return Err(Error::InvalidParameter(format!("no edge with id {edge}")));
    }
    let total = count_matchings(g)?;
    if total.is_zero() {
        return Err(Error::NoMatchings);
    }
    let e = g.edge(edge);
    let rest = g.remove_vertices(&[e.u, e.v])?;
    let keep_engine = rest.is_planar_embedded() || !(g.is_planar_embedded() && g.is_bipartite());
    let part = if keep_engine || rest.vertex_count() <= BRUTE_FORCE_MAX_VERTICES {
        count_matchings(&rest)?
    } else {
        // Removing vertices can cost a declared embedding; the minor of a
        // Kasteleyn matrix of the whole graph still counts the remainder.
        let k = sign_assignment(g)?;
        let entry = k.entry_of_edge(edge);
        det_bareiss(&sign_matrix(&k).minor(&[entry.row], &[entry.col]))?.abs()
    };
    Ok(BigRational::new(part, total))
}

/// Same probability via the inverse Kasteleyn matrix,
/// `|K[b, w] * K^-1[w, b]|`. Needs a planar embedding and a bipartition.
pub fn edge_probability_inverse(g: &PlaneGraph, edge: usize) -> Result<BigRational> {
    if edge >= g.edge_count() {
        return Err(Error::InvalidParameter(format!("no edge with id {edge}")));
    }
    let k = sign_assignment(g)?;
    let inv = kasteleyn_inverse(&k)?;
    Ok(inverse_term(&k, &inv, edge))
}

/// Probabilities of every edge, indexed by edge id. Uses one inverse of the
/// Kasteleyn matrix when the graph is planar and bipartite, otherwise the
/// deletion method edge by edge.
pub fn edge_probabilities(g: &PlaneGraph) -> Result<Vec<BigRational>> {
    if g.is_planar_embedded() && g.is_bipartite() {
        let k = sign_assignment(g)?;
        let inv = kasteleyn_inverse(&k)?;
        return Ok((0..g.edge_count())
            .map(|e| inverse_term(&k, &inv, e))
            .collect());
    }
    (0..g.edge_count())
        .map(|e| edge_probability(g, e))
        .collect()
}

fn sign_matrix(k: &KasteleynMatrix) -> IntMatrix {
    let mut m = IntMatrix::zeros(k.rows(), k.cols());
    for e in k.entries() {
        m[(e.row, e.col)] = BigInt::from(e.sign);
    }
    m
}

fn kasteleyn_inverse(k: &KasteleynMatrix) -> Result<RationalMatrix> {
    if !k.is_square() {
        return Err(Error::NoMatchings);
    }
    inverse_rational(&sign_matrix(k)).map_err(|e| match e {
        Error::Singular => Error::NoMatchings,
        other => other,
    })
}

fn inverse_term(k: &KasteleynMatrix, inv: &RationalMatrix, edge: usize) -> BigRational {
    let e = k.entry_of_edge(edge);
    (inv[(e.col, e.row)].clone() * BigInt::from(e.sign)).abs()
}

/// Decimal rendering rounded to `digits` places with trailing zeros and the
/// leading zero dropped: `7/10` becomes `.7`, `1` stays `1`.
pub fn render_probability(p: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = p * BigRational::from_integer(scale.clone());
    // Round half away from zero.
    let half = BigRational::new(1.into(), 2.into());
    let rounded = if scaled.is_negative() {
        -((-scaled) + half).floor()
    } else {
        (scaled + half).floor()
    }
    .to_integer();
    let negative = rounded.is_negative();
    let (int, frac) = rounded.abs().div_rem(&scale);
    let mut frac = format!("{:0>width$}", frac.to_string(), width = digits);
    while frac.ends_with('0') {
        frac.pop();
    }
    let int = if int.is_zero() && !frac.is_empty() {
        String::new()
    } else {
        int.to_string()
    };
    let sign = if negative { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{aztec, central_pair, hexagon, AztecSpec, HexagonSpec};
    use num_traits::One;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn diamond_of_order_one() {
        let g = aztec(AztecSpec::diamond(1)).unwrap().dual_graph();
        for e in 0..g.edge_count() {
            assert_eq!(edge_probability(&g, e).unwrap(), q(1, 2));
            assert_eq!(edge_probability_inverse(&g, e).unwrap(), q(1, 2));
        }
    }

    #[test]
    fn central_edge_of_small_hexagon() {
        let region = hexagon(HexagonSpec::new(1, 2, 1).unwrap());
        let ((r1, c1), (r2, c2)) = central_pair(1).unwrap();
        let u = region.index_of(r1, c1).unwrap();
        let v = region.index_of(r2, c2).unwrap();
        let g = region.dual_graph();
        let e = g.find_edge(u, v).unwrap();
        assert_eq!(edge_probability(&g, e).unwrap(), q(1, 3));
        assert_eq!(edge_probability_inverse(&g, e).unwrap(), q(1, 3));
    }

    #[test]
    fn both_methods_agree_and_vertices_sum_to_one() {
        let g = hexagon(HexagonSpec::new(2, 3, 2).unwrap()).dual_graph();
        let all = edge_probabilities(&g).unwrap();
        for (e, p) in all.iter().enumerate() {
            assert_eq!(*p, edge_probability(&g, e).unwrap());
        }
        for v in 0..g.vertex_count() {
            let s: BigRational = g.neighbors(v).iter().map(|&(_, e)| all[e].clone()).sum();
            assert!(s.is_one());
        }
    }

    #[test]
    fn no_matchings_is_an_error() {
        let g = PlaneGraph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(edge_probability(&g, 0), Err(Error::NoMatchings));
    }

    #[test]
    fn rendering() {
        assert_eq!(render_probability(&q(7, 10), 2), ".7");
        assert_eq!(render_probability(&q(2, 5), 2), ".4");
        assert_eq!(render_probability(&q(1, 3), 2), ".33");
        assert_eq!(render_probability(&q(2, 3), 2), ".67");
        assert_eq!(render_probability(&q(1, 1), 2), "1");
        assert_eq!(render_probability(&q(0, 1), 2), "0");
        assert_eq!(render_probability(&q(1, 1000), 2), "0");
    }
}
