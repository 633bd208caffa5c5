//! Closed forms and structural claims checked instance by instance.

use dimers::analysis::{
    edge_probability, factorize, inverse_entry_sum, inverse_entry_sum_formula, macmahon,
    moments_of_order, series_coefficients,
};
use dimers::families::*;
use dimers::kasteleyn::{count_with, Method};
use dimers::linalg::{integer_sqrt, IntPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::Result;

pub const FORMULAS: &[&str] = &[
    "macmahon",
    "aztec-power",
    "moments-vertical",
    "invsum",
    "pillow-gf",
    "intruded-structure",
    "central-edge-third",
];

/// One compared instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub got: String,
    pub want: String,
    pub pass: bool,
}

impl Check {
    fn compare(label: String, got: impl ToString, want: impl ToString) -> Check {
        let (got, want) = (got.to_string(), want.to_string());
        Check {
            pass: got == want,
            label,
            got,
            want,
        }
    }

    fn failed(label: String, err: impl ToString, want: impl ToString) -> Check {
        Check {
            label,
            got: format!("error: {}", err.to_string()),
            want: want.to_string(),
            pass: false,
        }
    }
}

pub fn is_known(id: &str) -> bool {
    FORMULAS.contains(&id)
}

/// All checks of formula `id` at parameter `n`, in a fixed order.
pub fn checks(id: &str, n: u32) -> Vec<Check> {
    let run = || -> Result<Vec<Check>> {
        if n == 0 {
            return Err("parameters start at 1".into());
        }
        Ok(match id {
            "macmahon" => macmahon_checks(n)?,
            "aztec-power" => {
                let got = det_count(&aztec(AztecSpec::diamond(n))?.dual_graph())?;
                vec![Check::compare(
                    format!("n={n}"),
                    got,
                    BigInt::from(2).pow(n * (n + 1) / 2),
                )]
            }
            "moments-vertical" => {
                let got = moments_of_order(n)?.vertical;
                let want = BigRational::from_integer(BigInt::from(
                    (u64::from(n).pow(4) - u64::from(n).pow(2)) / 6,
                ));
                vec![Check::compare(format!("n={n}"), got, want)]
            }
            "invsum" => {
                vec![Check::compare(
                    format!("n={n}"),
                    inverse_entry_sum(n)?,
                    inverse_entry_sum_formula(n),
                )]
            }
            "pillow-gf" => pillow_checks(n)?,
            "intruded-structure" => vec![intruded_check(n)?],
            "central-edge-third" => {
                let region = hexagon(HexagonSpec::new(2 * n - 1, 2 * n, 2 * n - 1)?);
                let (up, down) = central_pair(n)?;
                let g = region.dual_graph();
                let index = |(r, c): (i64, i64)| {
                    region
                        .index_of(r, c)
                        .ok_or("central cell outside the region")
                };
                let e = g
                    .find_edge(index(up)?, index(down)?)
                    .ok_or("central cells are not adjacent")?;
                vec![Check::compare(
                    format!("n={n}"),
                    edge_probability(&g, e)?,
                    "1/3",
                )]
            }
            other => return Err(format!("unknown formula `{other}`").into()),
        })
    };
    run().unwrap_or_else(|e| vec![Check::failed(format!("n={n}"), e, "-")])
}

fn det_count(g: &dimers::PlaneGraph) -> Result<BigInt> {
    Ok(count_with(g, Method::Det)?)
}

/// Every hexagon whose longest side is `n`, so that a range `1..k` covers
/// all sides up to `k` exactly once.
fn macmahon_checks(n: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                if a.max(b).max(c) == n {
                    let spec = HexagonSpec::new(a, b, c)?;
                    let got = det_count(&hexagon(spec).dual_graph())?;
                    out.push(Check::compare(
                        format!("a={a},b={b},c={c}"),
                        got,
                        macmahon(spec),
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn square_root(v: &BigInt) -> Option<BigInt> {
    integer_sqrt(v).ok()?.exact().cloned()
}

/// Pillow counts divided by the generating-function coefficient they are
/// paired with must be perfect squares.
fn pillow_checks(k: u32) -> Result<Vec<Check>> {
    if k == 0 {
        return Err("pillow orders start at 1".into());
    }
    let den = IntPolynomial::from_i64(&[1, -2, -2, -2, 1]);
    let mut out = Vec::new();
    let cases = [
        (AztecKind::Pillow0Mod4, [5, 3, 1, -1], 1),
        (AztecKind::Pillow2Mod4, [5, 6, 3, -2], 2),
    ];
    for (kind, num, first) in cases {
        if k < first {
            continue;
        }
        let index = (k - first) as usize;
        let coeff =
            series_coefficients(&IntPolynomial::from_i64(&num), &den, index + 1)?[index].clone();
        let count = det_count(&aztec(AztecSpec::new(kind, k))?.dual_graph())?;
        let label = format!("{} k={k}", kind.name());
        let check = if coeff.is_zero() || !(&count % &coeff).is_zero() {
            Check::compare(
                label,
                format!("{count} not a multiple of {coeff}"),
                format!("square * {coeff}"),
            )
        } else {
            let quotient = &count / &coeff;
            match square_root(&quotient) {
                Some(root) => Check::compare(
                    label,
                    format!("{root}^2 * {coeff}"),
                    format!("{root}^2 * {coeff}"),
                ),
                None => Check::compare(
                    label,
                    format!("{quotient} * {coeff}"),
                    format!("square * {coeff}"),
                ),
            }
        };
        out.push(check);
    }
    Ok(out)
}

/// `2^(n/2)` times an odd square, for even `n`.
fn intruded_check(n: u32) -> Result<Check> {
    if n % 2 == 1 {
        return Err(format!("the intruded-square claim is for even n, got {n}").into());
    }
    let count = det_count(&aztec(AztecSpec::new(AztecKind::IntrudedSquare, n))?.dual_graph())?;
    let fc = factorize(&count)?;
    let want = format!("2^{} * odd square", n / 2);
    let odd = &count >> (n / 2);
    let pass = fc.exponent_of(2) == n / 2 && square_root(&odd).is_some();
    let got = if pass { want.clone() } else { fc.to_string() };
    Ok(Check {
        label: format!("n={n} count={fc}"),
        got,
        want,
        pass,
    })
}
