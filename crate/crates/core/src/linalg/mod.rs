//! Exact integer and rational linear algebra.

mod charpoly;
mod det;
mod matrix;
mod poly;
mod snf;

pub use charpoly::char_poly_gram;
pub use det::{det_bareiss, det_rational, inverse_rational};
pub use matrix::{IntMatrix, RationalMatrix};
pub use poly::{IntPolynomial, RatPolynomial};
pub use snf::{smith_normal_form, SnfResult};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::HexagonSpec;

/// Outcome of an exact integer square root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sqrt {
    Exact(BigInt),
    /// Not a perfect square; carries the floor of the square root.
    NotASquare(BigInt),
}

impl Sqrt {
    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            Sqrt::Exact(r) => Some(r),
            Sqrt::NotASquare(_) => None,
        }
    }

    pub fn floor(&self) -> &BigInt {
        match self {
            Sqrt::Exact(r) | Sqrt::NotASquare(r) => r,
        }
    }
}

pub fn integer_sqrt(n: &BigInt) -> Result<Sqrt> {
    if n.sign() == Sign::Minus {
        return Err(Error::NegativeSqrt);
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Ok(Sqrt::Exact(r))
    } else {
        Ok(Sqrt::NotASquare(r))
    }
}

pub fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The `b x b` matrix with `(i, j)` entry `C(a + c, a + i - j)`.
pub fn carlitz_matrix(spec: HexagonSpec) -> IntMatrix {
    let (a, b, c) = (spec.a as i64, spec.b as usize, spec.c as i64);
    IntMatrix::from_fn(b, b, |i, j| binomial(a + c, a + i as i64 - j as i64))
}

/// The three Carlitz matrices of `(a,b,c)`, `(b,c,a)` and `(c,a,b)`.
pub fn cyclic_carlitz_matrices(spec: HexagonSpec) -> [IntMatrix; 3] {
    let HexagonSpec { a, b, c } = spec;
    [
        carlitz_matrix(HexagonSpec { a, b, c }),
        carlitz_matrix(HexagonSpec { a: b, b: c, c: a }),
        carlitz_matrix(HexagonSpec { a: c, b: a, c: b }),
    ]
}
