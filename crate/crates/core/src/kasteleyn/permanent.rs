use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grid::PlaneGraph;
use crate::linalg::IntMatrix;

/// Largest side of a biadjacency matrix accepted by [`permanent_ryser`].
pub const MAX_PERMANENT_SIDE: usize = 20;

/// Integer biadjacency matrix (black rows, white columns).
pub fn biadjacency(g: &PlaneGraph) -> Result<IntMatrix> {
    let bp = g.bipartition().ok_or(Error::NotBipartite)?;
    let mut row = vec![usize::MAX; g.vertex_count()];
    let mut col = vec![usize::MAX; g.vertex_count()];
    for (i, &b) in bp.black.iter().enumerate() {
        row[b] = i;
    }
    for (j, &w) in bp.white.iter().enumerate() {
        col[w] = j;
    }
    let mut m = IntMatrix::zeros(bp.black.len(), bp.white.len());
    for e in g.edges() {
        if !e.weight.is_integer() {
            return Err(Error::InvalidParameter(
                "permanent needs integral weights".into(),
            ));
        }
        let (b, w) = if row[e.u] != usize::MAX {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        m[(row[b], col[w])] = e.weight.to_integer();
    }
    Ok(m)
}

/// Matching count of a bipartite graph as the permanent of its
/// biadjacency matrix.
pub fn permanent_count(g: &PlaneGraph) -> Result<BigInt> {
    let m = biadjacency(g)?;
    if !m.is_square() {
        return Ok(BigInt::zero());
    }
    permanent_ryser(&m)
}

/// Ryser's inclusion–exclusion formula over column subsets, visited in
/// Gray-code order so each step adds or removes a single column.
pub fn permanent_ryser(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    if n > MAX_PERMANENT_SIDE {
        return Err(Error::TooLarge(format!(
            "permanent of a {n}x{n} matrix exceeds the {MAX_PERMANENT_SIDE}x{MAX_PERMANENT_SIDE} limit"
        )));
    }
    let small: Option<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| i64::try_from(x).ok().filter(|v| v.abs() <= 1 << 20))
                .collect()
        })
        .collect();
    if let Some(rows) = small {
        if let Some(p) = ryser_i128(&rows) {
            return Ok(BigInt::from(p));
        }
    }
    Ok(ryser_big(m))
}

fn ryser_i128(a: &[Vec<i64>]) -> Option<i128> {
    let n = a.len();
    let mut sums = vec![0i64; n];
    let mut total: i128 = 0;
    let mut gray: u64 = 0;
    for k in 1u64..(1 << n) {
        let j = k.trailing_zeros() as usize;
        gray ^= 1 << j;
        let add = gray & (1 << j) != 0;
        for (s, row) in sums.iter_mut().zip(a) {
            if add {
                *s += row[j];
            } else {
                *s -= row[j];
            }
        }
        let mut prod: i128 = 1;
        for &s in &sums {
            if s == 0 {
                prod = 0;
                break;
            }
            prod = prod.checked_mul(s as i128)?;
        }
        if (gray.count_ones() as usize) % 2 == n % 2 {
            total = total.checked_add(prod)?;
        } else {
            total = total.checked_sub(prod)?;
        }
    }
    Some(total)
}

fn ryser_big(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut sums = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut gray: u64 = 0;
    for k in 1u64..(1 << n) {
        let j = k.trailing_zeros() as usize;
        gray ^= 1 << j;
        let add = gray & (1 << j) != 0;
        for (i, s) in sums.iter_mut().enumerate() {
            if add {
                *s += &m[(i, j)];
            } else {
                *s -= &m[(i, j)];
            }
        }
        if sums.iter().any(Zero::is_zero) {
            continue;
        }
        let prod: BigInt = sums.iter().product();
        if (gray.count_ones() as usize) % 2 == n % 2 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}
