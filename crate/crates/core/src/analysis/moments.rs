use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::families::{hexagon, HexagonSpec};
use crate::grid::Orientation;

use super::probability::{edge_probabilities, render_probability};

/// One horizontal edge of the honeycomb with its probability and position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentEntry {
    pub edge: usize,
    pub probability: BigRational,
    pub x: BigRational,
    pub y: BigRational,
}

/// Edge-probability mass on the horizontal edges and its two second moments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub spec: HexagonSpec,
    pub entries: Vec<MomentEntry>,
    /// `sum p * x^2`, the moment about the vertical axis.
    pub vertical: BigRational,
    /// `sum p * y^2`, the moment about the horizontal axis.
    pub horizontal: BigRational,
}

impl MomentReport {
    /// Probabilities laid out as in a picture of the hexagon: one text row per
    /// `y` (top first), one column per `x`, each value rounded to `digits`.
    pub fn render_table(&self, digits: usize) -> String {
        let xs: Vec<&BigRational> = {
            let mut v: Vec<_> = self.entries.iter().map(|e| &e.x).collect();
            v.sort();
            v.dedup();
            v
        };
        let mut rows: BTreeMap<std::cmp::Reverse<&BigRational>, Vec<&MomentEntry>> =
            BTreeMap::new();
        for e in &self.entries {
            rows.entry(std::cmp::Reverse(&e.y)).or_default().push(e);
        }
        let width = digits + 2;
        let mut out = String::new();
        for entries in rows.values() {
            let mut line = String::new();
            for x in &xs {
                let cell = entries
                    .iter()
                    .find(|e| &&e.x == x)
                    .map(|e| render_probability(&e.probability, digits))
                    .unwrap_or_default();
                let _ = write!(line, "{cell:>width$}  ");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Probabilities in reading order of [`render_table`](Self::render_table).
    pub fn reading_order(&self) -> Vec<BigRational> {
        let mut v: Vec<&MomentEntry> = self.entries.iter().collect();
        v.sort_by(|a, b| b.y.cmp(&a.y).then(a.x.cmp(&b.x)));
        v.into_iter().map(|e| e.probability.clone()).collect()
    }
}

/// Moments of inertia of the horizontal-edge probabilities of the `a, b, c`
/// honeycomb.
///
/// Horizontal edges sit in lanes; lanes get consecutive integer
/// `x`-coordinates and the edge levels consecutive integer `y`-coordinates,
/// both centred on the middle of their range. For `a = b = c` this is the
/// symmetric assignment `x ∈ -(n-1)..=n-1`, `y ∈ -(2n-1)..=2n-1`; for other
/// hexagons the same lane/level centring is used.
pub fn moments_of_inertia(spec: HexagonSpec) -> Result<MomentReport> {
    let region = hexagon(spec);
    let g = region.dual_graph();
    let cells: Vec<((i64, i64), Orientation)> = region.cells().collect();
    let probs = edge_probabilities(&g)?;
    let mut raw = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        let (a, b) = (cells[e.u], cells[e.v]);
        let (up, down) = match (a.1, b.1) {
            (Orientation::Up, Orientation::Down) => (a.0, b.0),
            (Orientation::Down, Orientation::Up) => (b.0, a.0),
            _ => unreachable!("dual edges join opposite orientations"),
        };
        if down == (up.0 + 1, up.1) {
            raw.push((id, up.0, up.1));
        }
    }
    let centre = |vals: Vec<i64>| {
        let lo = *vals.iter().min().unwrap_or(&0);
        let hi = *vals.iter().max().unwrap_or(&0);
        BigRational::new(BigInt::from(lo + hi), BigInt::from(2))
    };
    let x0 = centre(raw.iter().map(|r| r.1).collect());
    let y0 = centre(raw.iter().map(|r| r.2).collect());
    let mut vertical = BigRational::zero();
    let mut horizontal = BigRational::zero();
    let entries: Vec<MomentEntry> = raw
        .into_iter()
        .map(|(edge, lane, level)| {
            let x = BigRational::from_integer(lane.into()) - &x0;
            let y = BigRational::from_integer(level.into()) - &y0;
            let p = probs[edge].clone();
            vertical += &p * &x * &x;
            horizontal += &p * &y * &y;
            MomentEntry {
                edge,
                probability: p,
                x,
                y,
            }
        })
        .collect();
    Ok(MomentReport {
        spec,
        entries,
        vertical,
        horizontal,
    })
}

/// [`moments_of_inertia`] for the regular hexagon of side `n`.
pub fn moments_of_order(n: u32) -> Result<MomentReport> {
    moments_of_inertia(HexagonSpec::new(n, n, n)?)
}
