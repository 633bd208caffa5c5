// Row operations read one row while writing another; indexing is clearer.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{IntPolynomial, RatPolynomial};

/// Longest recurrence tried by [`fit_recurrence`].
pub const DEFAULT_MAX_ORDER: usize = 6;
/// Terms a fit must reproduce beyond the ones it was solved from.
const MIN_HELD_OUT: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fitted {
    Polynomial(RatPolynomial),
    /// `[a1, ..., ad]` with `c_k = a1 c_{k-1} + ... + ad c_{k-d}`.
    Recurrence(Vec<BigInt>),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFit {
    pub terms: Vec<BigInt>,
    pub fitted: Fitted,
    /// Polynomial degree or recurrence order; 0 when nothing fits.
    pub order: usize,
    /// Terms matched that were not used to determine the fit.
    pub held_out: usize,
}

impl SequenceFit {
    fn none(terms: Vec<BigInt>) -> SequenceFit {
        SequenceFit {
            terms,
            fitted: Fitted::None,
            order: 0,
            held_out: 0,
        }
    }
}

/// Lowest-degree polynomial through `points` that is determined by a prefix
/// of them and reproduces at least two further points.
pub fn fit_polynomial(points: &[(BigInt, BigInt)]) -> Result<SequenceFit> {
    if points.len() < MIN_HELD_OUT + 1 {
        return Err(Error::InsufficientData(format!(
            "need at least {} points to validate a fit, got {}",
            MIN_HELD_OUT + 1,
            points.len()
        )));
    }
    let mut xs: Vec<&BigInt> = points.iter().map(|p| &p.0).collect();
    xs.sort();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter("abscissae must be distinct".into()));
    }
    let terms: Vec<BigInt> = points.iter().map(|p| p.1.clone()).collect();
    let rat = |v: &BigInt| BigRational::from_integer(v.clone());
    for used in 1..=points.len() - MIN_HELD_OUT {
        let poly = interpolate(&points[..used]);
        if points[used..]
            .iter()
            .all(|(x, y)| poly.eval(&rat(x)) == rat(y))
        {
            let order = poly.degree().unwrap_or(0);
            return Ok(SequenceFit {
                terms,
                fitted: Fitted::Polynomial(poly),
                order,
                held_out: points.len() - used,
            });
        }
    }
    Ok(SequenceFit::none(terms))
}

/// Newton interpolation through the given points.
fn interpolate(points: &[(BigInt, BigInt)]) -> RatPolynomial {
    let xs: Vec<BigRational> = points
        .iter()
        .map(|p| BigRational::from_integer(p.0.clone()))
        .collect();
    let mut dd: Vec<BigRational> = points
        .iter()
        .map(|p| BigRational::from_integer(p.1.clone()))
        .collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner over the Newton basis, highest divided difference first.
    let mut acc = RatPolynomial::new(Vec::new());
    for i in (0..dd.len()).rev() {
        let shifted = multiply_by_linear(&acc, &xs[i]);
        let mut coeffs = shifted.coeffs().to_vec();
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        coeffs[0] += &dd[i];
        acc = RatPolynomial::new(coeffs);
    }
    acc
}

/// `p(x) * (x - root)`.
fn multiply_by_linear(p: &RatPolynomial, root: &BigRational) -> RatPolynomial {
    let c = p.coeffs();
    let mut out = vec![BigRational::zero(); c.len() + 1];
    for (i, a) in c.iter().enumerate() {
        out[i + 1] += a;
        out[i] -= a * root;
    }
    RatPolynomial::new(out)
}

/// Shortest integer linear recurrence (order at most
/// [`DEFAULT_MAX_ORDER`]) reproducing every term.
pub fn fit_recurrence(terms: &[BigInt]) -> SequenceFit {
    fit_recurrence_with(terms, DEFAULT_MAX_ORDER)
}

/// Order `d` is solved exactly from the first `2d` terms and must then
/// predict the remaining ones, of which there must be at least two.
pub fn fit_recurrence_with(terms: &[BigInt], max_order: usize) -> SequenceFit {
    for d in 1..=max_order {
        if terms.len() < 2 * d + MIN_HELD_OUT {
            break;
        }
        let Some(coeffs) = solve_hankel(terms, d) else {
            continue;
        };
        if !coeffs.iter().all(|c| c.is_integer()) {
            continue;
        }
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(|c| c.to_integer()).collect();
        let predicts = (d..terms.len()).all(|k| {
            let next: BigInt = (0..d).map(|i| &coeffs[i] * &terms[k - 1 - i]).sum();
            next == terms[k]
        });
        if predicts {
            return SequenceFit {
                terms: terms.to_vec(),
                fitted: Fitted::Recurrence(coeffs),
                order: d,
                held_out: terms.len() - 2 * d,
            };
        }
    }
    SequenceFit::none(terms.to_vec())
}

/// Solves `c_k = sum_i a_i c_{k-i}` for `k = d..2d`, or `None` if the
/// system is singular.
fn solve_hankel(terms: &[BigInt], d: usize) -> Option<Vec<BigRational>> {
    let q = |v: &BigInt| BigRational::from_integer(v.clone());
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let k = d + r;
            let mut row: Vec<BigRational> = (1..=d).map(|i| q(&terms[k - i])).collect();
            row.push(q(&terms[k]));
            row
        })
        .collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=d {
                    let sub = &f * &m[col][j];
                    m[r][j] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[d].clone()).collect())
}

/// First `count` Taylor coefficients of `num / den`; `den(0)` must be `±1`
/// so that every coefficient is an integer.
pub fn series_coefficients(
    num: &IntPolynomial,
    den: &IntPolynomial,
    count: usize,
) -> Result<Vec<BigInt>> {
    let c0 = den.coeff(0);
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if !c0.abs().is_one() {
        return Err(Error::InvalidParameter(format!(
            "denominator constant term {c0} is not a unit; use the rational expansion"
        )));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for k in 0..count {
        let mut v = num.coeff(k);
        for i in 1..=k.min(den.degree().unwrap_or(0)) {
            v -= den.coeff(i) * &out[k - i];
        }
        out.push(v * &c0);
    }
    Ok(out)
}

/// Rational Taylor coefficients of `num / den`.
pub fn series_coefficients_rational(
    num: &RatPolynomial,
    den: &RatPolynomial,
    count: usize,
) -> Result<Vec<BigRational>> {
    let c0 = den.coeff(0);
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    for k in 0..count {
        let mut v = num.coeff(k);
        for i in 1..=k.min(den.degree().unwrap_or(0)) {
            v -= den.coeff(i) * &out[k - i];
        }
        out.push(v / &c0);
    }
    Ok(out)
}

/// Whether `poly(x)` has only even powers once rewritten in
/// `t = x + w/4`, the midpoint variable `(3x + y)/4` with `y = x + w`.
pub fn window_evenness(poly: &RatPolynomial, w: u32) -> bool {
    poly.shift(&-BigRational::new(BigInt::from(w), BigInt::from(4)))
        .is_even()
}
