//! Weighted enumeration: multivariate covering polynomials and local
//! rewrites that rescale weighted matching sums.

pub mod hosts;

mod gessel;
mod polynomial;
mod rewrite;

pub use gessel::{
    dimer_polynomial, gessel_check, schur_specialization_check, tableaux_polynomial,
    PolynomialComparison, RectangleSpec,
};
pub use polynomial::{Monomial, Var, WeightPolynomial};
pub use rewrite::{
    kenyon_move, urban_renewal, KenyonSite, Rewrite, UrbanRenewalSite, UrbanRenewalWeights,
    KENYON_FACTOR,
};
