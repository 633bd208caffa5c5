use std::fmt;

use num_bigint::BigInt;

use super::polynomial::{Monomial, Var, WeightPolynomial};
use crate::error::{Error, Result};
use crate::grid::SquareRegion;
use crate::kasteleyn::brute_force;

const MAX_DIMER_CELLS: u32 = 40;
const MAX_TABLEAU_CELLS: u32 = 30;

/// An `m x n` rectangle (`m` rows, `n` columns), both even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectangleSpec {
    pub m: u32,
    pub n: u32,
}

impl RectangleSpec {
    pub fn new(m: u32, n: u32) -> Result<RectangleSpec> {
        if m == 0 || n == 0 || m % 2 == 1 || n % 2 == 1 {
            return Err(Error::InvalidParameter(format!(
                "rectangle sides must be even and positive, got {m}x{n}"
            )));
        }
        Ok(RectangleSpec { m, n })
    }
}

impl fmt::Display for RectangleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// Sum over domino tilings of the rectangle of the product of domino
/// weights: `sqrt(x_j)` for a horizontal domino on columns `j, j+1`,
/// `sqrt(y_i)` for a vertical one on rows `i, i+1` (1-based).
pub fn dimer_polynomial(spec: RectangleSpec) -> Result<WeightPolynomial> {
    if spec.m * spec.n > MAX_DIMER_CELLS {
        return Err(Error::TooLarge(format!(
            "{spec} exceeds {MAX_DIMER_CELLS} cells"
        )));
    }
    let region = SquareRegion::rectangle(i64::from(spec.m), i64::from(spec.n));
    let cells: Vec<(i64, i64)> = region.cells().collect();
    let g = region.dual_graph();
    let weights: Vec<WeightPolynomial> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (cells[e.u], cells[e.v]);
            let var = if a.0 == b.0 {
                Var::X(a.1.min(b.1) as u32 + 1)
            } else {
                Var::Y(a.0.min(b.0) as u32 + 1)
            };
            WeightPolynomial::sqrt_var(var)
        })
        .collect();
    let p = brute_force(&g, &weights)?;
    assert!(p.is_integral(), "even rectangles give whole exponents");
    Ok(p)
}

/// Sum of the weights of the `m/2 x n/2` dimer tableaux.
///
/// A lattice path from the lower-left to the upper-right corner cuts the
/// rectangle into an upper-left Young shape and its lower-right complement.
/// Upper-left cells hold values in `1..n` with `i < j - 1` across a row and
/// `i <= j + 1` down a column, weighted `x_i`; lower-right cells hold values
/// in `1..m` with `i <= j + 1` across and `i < j - 1` down, weighted `y_j`.
/// Only neighbours within the same part constrain each other.
pub fn tableaux_polynomial(spec: RectangleSpec) -> Result<WeightPolynomial> {
    let (rows, cols) = ((spec.m / 2) as usize, (spec.n / 2) as usize);
    if (rows * cols) as u32 > MAX_TABLEAU_CELLS {
        return Err(Error::TooLarge(format!(
            "{spec} exceeds {MAX_TABLEAU_CELLS} tableau cells"
        )));
    }
    let mut total = WeightPolynomial::zero();
    for shape in shapes(rows, cols) {
        let mut grid = vec![vec![0u32; cols]; rows];
        let mut acc = Vec::new();
        fill(&shape, spec, &mut grid, 0, &mut acc);
        for m in acc {
            total = total.add(&WeightPolynomial::term(m, 1));
        }
    }
    Ok(total)
}

/// Weakly decreasing row lengths `shape[r] <= cols`.
fn shapes(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == rows {
            out.push(prefix.clone());
            return;
        }
        for len in 0..=max {
            prefix.push(len);
            go(rows, len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

fn fill(
    shape: &[usize],
    spec: RectangleSpec,
    grid: &mut [Vec<u32>],
    pos: usize,
    out: &mut Vec<Monomial>,
) {
    let cols = grid[0].len();
    if pos == grid.len() * cols {
        let mut m = Monomial::one();
        for (r, row) in grid.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let var = if c < shape[r] { Var::X(v) } else { Var::Y(v) };
                m = m.mul(&Monomial::var(var, 2));
            }
        }
        out.push(m);
        return;
    }
    let (r, c) = (pos / cols, pos % cols);
    let upper = c < shape[r];
    let same_part = |rr: usize, cc: usize| (cc < shape[rr]) == upper;
    let top = if upper { spec.n - 1 } else { spec.m - 1 };
    for v in 1..=top {
        let left_ok = c == 0
            || !same_part(r, c - 1)
            || if upper {
                grid[r][c - 1] + 1 < v
            } else {
                grid[r][c - 1] <= v + 1
            };
        let up_ok = r == 0
            || !same_part(r - 1, c)
            || if upper {
                grid[r - 1][c] <= v + 1
            } else {
                grid[r - 1][c] + 1 < v
            };
        if left_ok && up_ok {
            grid[r][c] = v;
            fill(shape, spec, grid, pos + 1, out);
        }
    }
    grid[r][c] = 0;
}

/// Outcome of comparing two weight polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialComparison {
    pub left: WeightPolynomial,
    pub right: WeightPolynomial,
    /// `left - right`; zero exactly when the two agree.
    pub difference: WeightPolynomial,
}

impl PolynomialComparison {
    fn new(left: WeightPolynomial, right: WeightPolynomial) -> PolynomialComparison {
        let difference = left.sub(&right);
        PolynomialComparison {
            left,
            right,
            difference,
        }
    }

    pub fn is_equal(&self) -> bool {
        self.difference.is_zero()
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_equal() {
            "EQUAL"
        } else {
            "DIFFERENT"
        }
    }
}

/// Dimer coverings against dimer tableaux.
pub fn gessel_check(spec: RectangleSpec) -> Result<PolynomialComparison> {
    Ok(PolynomialComparison::new(
        dimer_polynomial(spec)?,
        tableaux_polynomial(spec)?,
    ))
}

/// With even-indexed variables set to zero, the covering polynomial should
/// factor as `prod (x_i + y_j)` over odd `i < n` and odd `j < m`.
pub fn schur_specialization_check(spec: RectangleSpec) -> Result<PolynomialComparison> {
    let left = dimer_polynomial(spec)?.set_zero(|v| v.index() % 2 == 0);
    let mut right = WeightPolynomial::constant(BigInt::from(1));
    for i in (1..spec.n).step_by(2) {
        for j in (1..spec.m).step_by(2) {
            right =
                right.mul(&WeightPolynomial::var(Var::X(i)).add(&WeightPolynomial::var(Var::Y(j))));
        }
    }
    Ok(PolynomialComparison::new(left, right))
}
