//! Exploratory analyses: edge probabilities, moments, inverse-entry sums,
//! factorization reports and sequence fitting.

mod factor;
mod fit;
mod invsum;
mod moments;
mod probability;

pub use factor::{
    factorize, is_probable_prime, roundness, FactoredCount, RoundnessReport, Structure,
};
pub use fit::{
    fit_polynomial, fit_recurrence, fit_recurrence_with, series_coefficients,
    series_coefficients_rational, window_evenness, Fitted, SequenceFit, DEFAULT_MAX_ORDER,
};
pub use invsum::{diamond_kasteleyn, inverse_entry_sum, inverse_entry_sum_formula};
pub use moments::{moments_of_inertia, moments_of_order, MomentEntry, MomentReport};
pub use probability::{
    edge_probabilities, edge_probability, edge_probability_inverse, render_probability,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::families::HexagonSpec;
use crate::grid::PlaneGraph;
use crate::kasteleyn::sign_assignment;
use crate::linalg::{carlitz_matrix, char_poly_gram, smith_normal_form, IntPolynomial, SnfResult};

/// MacMahon's box formula `prod (i+j+k+2)/(i+j+k+1)` over `i<a, j<b, k<c`.
pub fn macmahon(spec: HexagonSpec) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..spec.a {
        for j in 0..spec.b {
            for k in 0..spec.c {
                let s = i + j + k;
                num *= s + 2;
                den *= s + 1;
            }
        }
    }
    let q = BigRational::new(num, den);
    assert!(q.is_integer(), "box formula must be integral");
    q.to_integer()
}

/// Smith normal form of a Kasteleyn matrix of `g`.
pub fn kasteleyn_cokernel(g: &PlaneGraph) -> Result<SnfResult> {
    Ok(smith_normal_form(&sign_assignment(g)?.to_int_matrix()?))
}

/// Smith normal form of the lattice-path matrix of a hexagon.
pub fn carlitz_cokernel(spec: HexagonSpec) -> SnfResult {
    smith_normal_form(&carlitz_matrix(spec))
}

/// Characteristic polynomial of `K K^T` for a Kasteleyn matrix of `g`.
pub fn kasteleyn_spectrum(g: &PlaneGraph) -> Result<IntPolynomial> {
    Ok(char_poly_gram(&sign_assignment(g)?.to_int_matrix()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::hexagon;
    use crate::kasteleyn::count_matchings;

    fn spec(a: u32, b: u32, c: u32) -> HexagonSpec {
        HexagonSpec::new(a, b, c).unwrap()
    }

    #[test]
    fn box_formula_values() {
        assert_eq!(macmahon(spec(1, 1, 1)), 2.into());
        assert_eq!(macmahon(spec(2, 2, 2)), 20.into());
        assert_eq!(macmahon(spec(3, 3, 3)), 980.into());
        assert_eq!(macmahon(spec(1, 1, 5)), 6.into());
        assert_eq!(macmahon(spec(1, 2, 3)), 10.into());
    }

    #[test]
    fn box_formula_matches_determinant() {
        for (a, b, c) in [(1, 2, 3), (2, 3, 2), (3, 1, 4)] {
            let g = hexagon(spec(a, b, c)).dual_graph();
            assert_eq!(count_matchings(&g).unwrap(), macmahon(spec(a, b, c)));
        }
    }

    #[test]
    fn hexagon_cokernels() {
        assert_eq!(
            carlitz_cokernel(spec(2, 2, 2)).cokernel().to_string(),
            "Z/2 x Z/10"
        );
        let g = hexagon(spec(2, 2, 2)).dual_graph();
        assert_eq!(kasteleyn_cokernel(&g).unwrap().product(), 20.into());
    }
}
