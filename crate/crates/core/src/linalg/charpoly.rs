use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::poly::IntPolynomial;

/// Characteristic polynomial `det(tI - K K^T)` of the Gram matrix of `k`.
///
/// Computed with the Faddeev-LeVerrier recurrence. The divisions by `k` are
/// exact because the characteristic polynomial of an integer matrix has
/// integer coefficients.
pub fn char_poly_gram(k: &IntMatrix) -> IntPolynomial {
    char_poly(&k.gram())
}

pub(crate) fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.rows();
    // coeffs[i] is the coefficient of t^i.
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut aux = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // aux <- m * aux + c_{n-k+1} I
        let mut next = m.mul(&aux).expect("square");
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        let prod = m.mul(&next).expect("square");
        let trace = (0..n).fold(BigInt::zero(), |acc, i| acc + &prod[(i, i)]);
        coeffs[n - k] = -trace / BigInt::from(k);
        aux = next;
    }
    IntPolynomial::new(coeffs)
}
