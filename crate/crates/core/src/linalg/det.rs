use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, RationalMatrix};
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact and nothing is ever rounded.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(bareiss_rows(m.to_rows()))
}

pub(crate) fn bareiss_rows(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // Prefer the sparsest usable pivot row; keeps fill-in down.
            let swap = (k + 1..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k..].iter().filter(|x| !x.is_zero()).count());
            match swap {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        let trivial_scale = pivot == &prev;
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            if factor.is_zero() {
                if !trivial_scale {
                    for x in row[k + 1..].iter_mut() {
                        if !x.is_zero() {
                            *x = &*x * pivot / &prev;
                        }
                    }
                }
                continue;
            }
            for j in k + 1..n {
                let pj = &pivot_row[j];
                let x = &mut row[j];
                if pj.is_zero() {
                    if !x.is_zero() && !trivial_scale {
                        *x = &*x * pivot / &prev;
                    }
                } else {
                    *x = (&*x * pivot - &factor * pj) / &prev;
                }
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a rational matrix: clear denominators row by row, take the
/// integer determinant, then divide the scale back out.
pub fn det_rational(m: &RationalMatrix) -> Result<BigRational> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = (0..n).fold(BigInt::one(), |acc, j| acc.lcm(m[(i, j)].denom()));
        rows.push(
            (0..n)
                .map(|j| {
                    let x = &m[(i, j)];
                    x.numer() * (&lcm / x.denom())
                })
                .collect(),
        );
        scale *= lcm;
    }
    Ok(BigRational::new(bareiss_rows(rows), scale))
}

/// Exact inverse via fraction-free Gauss-Jordan elimination on `[m | I]`.
/// The right block ends as `det * m^-1`, which is divided out at the end.
pub fn inverse_rational(m: &IntMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let w = 2 * n;
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let i = (k + 1..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(k, i);
        }
        let pivot_row = a[k].clone();
        let pivot = &pivot_row[k];
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = std::mem::take(&mut row[k]);
            for j in 0..w {
                if j == k {
                    continue;
                }
                let pj = &pivot_row[j];
                let x = &mut row[j];
                if factor.is_zero() || pj.is_zero() {
                    if !x.is_zero() {
                        *x = &*x * pivot / &prev;
                    }
                } else {
                    *x = (&*x * pivot - &factor * pj) / &prev;
                }
            }
        }
        prev = pivot.clone();
    }
    // Every diagonal entry of the left block now equals det(m) (up to the
    // row permutation, which the right block already absorbed).
    let det = a[n - 1][n - 1].clone();
    if det.is_zero() {
        return Err(Error::Singular);
    }
    Ok(RationalMatrix::from_fn(n, n, |i, j| {
        let d = &a[i][i];
        debug_assert_eq!(d.abs(), det.abs());
        BigRational::new(a[i][n + j].clone(), d.clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let sub: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&sub)
            })
            .sum()
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_bareiss(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        let m = IntMatrix::from_i64(&[vec![6, 4], vec![4, 6]]);
        assert_eq!(det_bareiss(&m).unwrap(), BigInt::from(20));
        let s = IntMatrix::from_i64(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(det_bareiss(&s).unwrap(), BigInt::zero());
        let r = IntMatrix::zeros(2, 3);
        assert_eq!(det_bareiss(&r), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert_eq!(det_bareiss(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn det_needs_pivot_swap() {
        let m = IntMatrix::from_i64(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(
            det_bareiss(&m).unwrap(),
            BigInt::from(cofactor_det(&[
                vec![0, 1, 2],
                vec![1, 0, 3],
                vec![4, -3, 8]
            ]))
        );
    }

    #[test]
    fn det_matches_cofactor_expansion_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..400 {
            let n = rng.gen_range(1..=5);
            let sparse = rng.gen_bool(0.5);
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if sparse && rng.gen_bool(0.5) {
                                0
                            } else {
                                rng.gen_range(-9..=9)
                            }
                        })
                        .collect()
                })
                .collect();
            let got = det_bareiss(&IntMatrix::from_i64(&m)).unwrap();
            assert_eq!(got, BigInt::from(cofactor_det(&m)), "{m:?}");
        }
    }

    #[test]
    fn inverse_examples() {
        let id = IntMatrix::identity(4);
        assert_eq!(inverse_rational(&id).unwrap(), RationalMatrix::identity(4));
        let m = IntMatrix::from_i64(&[vec![1, -1], vec![1, 1]]);
        let inv = inverse_rational(&m).unwrap();
        let h = |n: i64| BigRational::new(n.into(), 2.into());
        assert_eq!(inv[(0, 0)], h(1));
        assert_eq!(inv[(0, 1)], h(1));
        assert_eq!(inv[(1, 0)], h(-1));
        assert_eq!(inv[(1, 1)], h(1));
        let s = IntMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(inverse_rational(&s), Err(Error::Singular));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 100 {
            let n = rng.gen_range(1..=6);
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let m = IntMatrix::from_i64(&m);
            if det_bareiss(&m).unwrap().is_zero() {
                assert_eq!(inverse_rational(&m), Err(Error::Singular));
                continue;
            }
            let inv = inverse_rational(&m).unwrap();
            assert_eq!(
                m.to_rational().mul(&inv).unwrap(),
                RationalMatrix::identity(n)
            );
            checked += 1;
        }
    }

    #[test]
    fn rational_det() {
        let half = BigRational::new(1.into(), 2.into());
        let m = RationalMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                half.clone()
            } else {
                BigRational::from_integer(BigInt::from(3))
            }
        });
        // 1/4 - 9
        assert_eq!(
            det_rational(&m).unwrap(),
            BigRational::new((-35).into(), 4.into())
        );
    }
}
