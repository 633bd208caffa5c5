#![allow(dead_code)]

pub mod golden;

use num_bigint::BigInt;
use num_rational::BigRational;

pub fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}
