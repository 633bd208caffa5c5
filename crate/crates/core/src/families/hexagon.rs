use crate::error::{Error, Result};
use crate::grid::{Orientation, TriRegion};

/// Side lengths of the semiregular hexagon with sides `a, b, c, a, b, c`
/// (clockwise from the top).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HexagonSpec {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl HexagonSpec {
    pub fn new(a: u32, b: u32, c: u32) -> Result<HexagonSpec> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidParameter(format!(
                "hexagon sides must be positive, got {a},{b},{c}"
            )));
        }
        Ok(HexagonSpec { a, b, c })
    }

    /// The two cyclic rotations `(b, c, a)` and `(c, a, b)`.
    pub fn rotations(self) -> [HexagonSpec; 3] {
        let HexagonSpec { a, b, c } = self;
        [
            self,
            HexagonSpec { a: b, b: c, c: a },
            HexagonSpec { a: c, b: a, c: b },
        ]
    }
}

/// Lattice hexagon with sides `s[0..6]` clockwise from the top edge: top,
/// upper right, lower right, bottom, lower left, upper left.
///
/// The sides must close up: `s0 + s1 = s3 + s4` and `s1 + s2 = s4 + s5`.
/// Rows run downward; an upward triangle sits where `row + col` is even.
pub fn general_hexagon(s: [u32; 6]) -> Result<TriRegion> {
    let [s1, s2, s3, s4, s5, s6] = s.map(i64::from);
    if s1 + s2 != s4 + s5 || s2 + s3 != s5 + s6 {
        return Err(Error::InvalidParameter(format!(
            "hexagon sides {s:?} do not close up"
        )));
    }
    // Everything is measured in units of 1/12 of a side, so that centroids
    // and boundary lines are integral.
    let xl = |h: i64| {
        if h <= 12 * s6 {
            -h / 2
        } else {
            -6 * s6 + (h - 12 * s6) / 2
        }
    };
    let xr = |h: i64| {
        if h <= 12 * s2 {
            12 * s1 + h / 2
        } else {
            12 * s1 + 6 * s2 - (h - 12 * s2) / 2
        }
    };
    let height = s2 + s3;
    let mut region = TriRegion::new();
    for r in 0..height {
        for c in -2 * height - 2..=2 * (s1 + s2) + 2 {
            let o = if (r + c).rem_euclid(2) == 0 {
                Orientation::Up
            } else {
                Orientation::Down
            };
            let h = match o {
                Orientation::Up => 12 * r + 8,
                Orientation::Down => 12 * r + 4,
            };
            let x = 6 * c;
            if xl(h) < x && x < xr(h) {
                region.insert(r, c, o);
            }
        }
    }
    Ok(region.normalized())
}

/// The `a, b, c` semiregular hexagon.
pub fn hexagon(spec: HexagonSpec) -> TriRegion {
    let HexagonSpec { a, b, c } = spec;
    general_hexagon([a, b, c, a, b, c]).expect("semiregular sides close up")
}

/// The holey and punctured hexagon families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HoleyKind {
    /// `n, n+1, n, n+1, n, n+1` hexagon minus its central triangle.
    CentralTriangle,
    /// `2n, 2n+3, …` hexagon minus the middle triangle of each long side.
    ThreeSides,
    /// `n, n, n` hexagon minus a central up/down pair meeting at a vertex.
    OppositePair,
    /// `n, n, n` hexagon minus a central up/down pair sharing an edge.
    AdjacentPair,
    /// Plain `2n-1, 2n, 2n-1` hexagon; its central pair is given by
    /// [`central_pair`].
    CentralEdgeHost,
}

impl HoleyKind {
    pub const ALL: [HoleyKind; 5] = [
        HoleyKind::CentralTriangle,
        HoleyKind::ThreeSides,
        HoleyKind::OppositePair,
        HoleyKind::AdjacentPair,
        HoleyKind::CentralEdgeHost,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HoleyKind::CentralTriangle => "central-triangle",
            HoleyKind::ThreeSides => "three-sides",
            HoleyKind::OppositePair => "opposite-pair",
            HoleyKind::AdjacentPair => "adjacent-pair",
            HoleyKind::CentralEdgeHost => "central-edge",
        }
    }

    pub fn from_name(name: &str) -> Option<HoleyKind> {
        HoleyKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

type Row = (i64, Vec<((i64, i64), Orientation)>);

/// Rows of the region as `(row, cells sorted by column)`.
fn rows(region: &TriRegion) -> Vec<Row> {
    let mut out: Vec<(i64, Vec<_>)> = Vec::new();
    for cell in region.cells() {
        match out.last_mut() {
            Some((r, v)) if *r == cell.0 .0 => v.push(cell),
            _ => out.push((cell.0 .0, vec![cell])),
        }
    }
    out
}

pub fn holey_hexagon(kind: HoleyKind, n: u32) -> Result<TriRegion> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "family index must be at least 1".into(),
        ));
    }
    let ni = i64::from(n);
    match kind {
        HoleyKind::CentralTriangle => {
            let mut region = general_hexagon([n, n + 1, n, n + 1, n, n + 1])?;
            // The threefold rotation centre is the centroid of one triangle.
            let (r, c) = central_triangle(&region);
            region.remove(r, c);
            Ok(region)
        }
        HoleyKind::ThreeSides => {
            let mut region =
                general_hexagon([2 * n, 2 * n + 3, 2 * n, 2 * n + 3, 2 * n, 2 * n + 3])?;
            let rs = rows(&region);
            let mid = &rs[(n + 1) as usize].1;
            let first = mid.first().expect("nonempty row").0;
            let last = mid.last().expect("nonempty row").0;
            let bottom: Vec<(i64, i64)> = rs
                .last()
                .expect("nonempty region")
                .1
                .iter()
                .filter(|(_, o)| *o == Orientation::Up)
                .map(|&(p, _)| p)
                .collect();
            let b = bottom[(n + 1) as usize];
            for (r, c) in [first, last, b] {
                region.remove(r, c);
            }
            Ok(region)
        }
        HoleyKind::OppositePair | HoleyKind::AdjacentPair => {
            let mut region = hexagon(HexagonSpec::new(n, n, n)?);
            // Pre-normalization, row n-1 starts at column -(n-1); rows are
            // shifted by the normalization uniformly, so work relative to
            // the start of row n - 1.
            let rs = rows(&region);
            let start = rs[(n - 1) as usize].1[0].0 .1;
            let col = |pre: i64| start + pre + (ni - 1);
            let (p, q) = if kind == HoleyKind::OppositePair {
                ((ni - 1, col(ni)), (ni, col(ni)))
            } else {
                ((ni - 1, col(ni - 1)), (ni, col(ni - 1)))
            };
            region.remove(p.0, p.1);
            region.remove(q.0, q.1);
            Ok(region)
        }
        HoleyKind::CentralEdgeHost => Ok(hexagon(HexagonSpec::new(2 * n - 1, 2 * n, 2 * n - 1)?)),
    }
}

/// The two innermost triangles of the `2n-1, 2n, 2n-1` hexagon, upward
/// one first. They share an edge.
pub fn central_pair(n: u32) -> Result<((i64, i64), (i64, i64))> {
    let region = holey_hexagon(HoleyKind::CentralEdgeHost, n)?;
    let rs = rows(&region);
    let row = &rs[(2 * n - 1) as usize].1;
    debug_assert!(row.len().is_multiple_of(2));
    let (x, y) = (row[row.len() / 2 - 1], row[row.len() / 2]);
    Ok(if x.1 == Orientation::Up {
        (x.0, y.0)
    } else {
        (y.0, x.0)
    })
}

/// The triangle whose centroid is the centroid of the whole region.
fn central_triangle(region: &TriRegion) -> (i64, i64) {
    let n = region.len() as i64;
    let (sx, sy) = region
        .cells()
        .map(|((r, c), o)| TriRegion::centroid(r, c, o))
        .fold((0, 0), |(ax, ay), (x, y)| (ax + x, ay + y));
    region
        .cells()
        .find(|&((r, c), o)| {
            let (x, y) = TriRegion::centroid(r, c, o);
            x * n == sx && y * n == sy
        })
        .map(|(p, _)| p)
        .expect("threefold symmetric hexagon is centred on a triangle")
}
