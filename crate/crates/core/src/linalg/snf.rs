// Row operations read one row while writing another; indexing is clearer.
#![allow(clippy::needless_range_loop)]

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form diagonal `d1 | d2 | ... | dr` (all positive), plus the
/// shape of the input so the cokernel can be read off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    rows: usize,
}

impl SnfResult {
    /// Invariant factors greater than one; these determine the torsion part
    /// of the cokernel independently of matrix size.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Free rank of the cokernel `Z^rows / image`.
    pub fn free_rank(&self) -> usize {
        self.rows - self.rank
    }

    pub fn is_cyclic_cokernel(&self) -> bool {
        self.nontrivial_factors().len() + self.free_rank() <= 1
    }

    /// Product of the nonzero invariant factors.
    pub fn product(&self) -> BigInt {
        self.diagonal.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    /// Cokernel rendered like `Z/2 x Z/10`, `Z`, or `0`.
    pub fn cokernel(&self) -> Cokernel<'_> {
        Cokernel(self)
    }
}

pub struct Cokernel<'a>(&'a SnfResult);

impl fmt::Display for Cokernel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .0
            .nontrivial_factors()
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.0.free_rank()));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Smith normal form by elementary integer row and column operations, always
/// pivoting on the entry of smallest absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        if !move_smallest_to(&mut a, t) {
            break;
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                move_smallest_to(&mut a, t);
                continue;
            }
            // Pivot row and column are clear; enforce divisibility.
            let p = a[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    let rank = diagonal.len();
    SnfResult {
        diagonal,
        rank,
        rows,
    }
}

/// Moves the smallest nonzero `|entry|` of the trailing block to `(t, t)`.
/// Returns false when the block is zero.
fn move_smallest_to(a: &mut [Vec<BigInt>], t: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    let Some((i, j)) = best else { return false };
    a.swap(t, i);
    for row in a.iter_mut() {
        row.swap(t, j);
    }
    true
}
