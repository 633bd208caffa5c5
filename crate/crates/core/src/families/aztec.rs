use crate::error::{Error, Result};
use crate::grid::{Color, SquareRegion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AztecKind {
    Diamond,
    CenterPairRemoved,
    KnightPairRemoved,
    RectCenterHole,
    RectAdjacentHole,
    IntrudedSquare,
    Pillow0Mod4,
    Pillow2Mod4,
    Window,
}

impl AztecKind {
    pub const ALL: [AztecKind; 9] = [
        AztecKind::Diamond,
        AztecKind::CenterPairRemoved,
        AztecKind::KnightPairRemoved,
        AztecKind::RectCenterHole,
        AztecKind::RectAdjacentHole,
        AztecKind::IntrudedSquare,
        AztecKind::Pillow0Mod4,
        AztecKind::Pillow2Mod4,
        AztecKind::Window,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AztecKind::Diamond => "diamond",
            AztecKind::CenterPairRemoved => "center-pair",
            AztecKind::KnightPairRemoved => "knight-pair",
            AztecKind::RectCenterHole => "rect-center-hole",
            AztecKind::RectAdjacentHole => "rect-adjacent-hole",
            AztecKind::IntrudedSquare => "intruded",
            AztecKind::Pillow0Mod4 => "pillow0",
            AztecKind::Pillow2Mod4 => "pillow2",
            AztecKind::Window => "window",
        }
    }

    pub fn from_name(name: &str) -> Option<AztecKind> {
        AztecKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// A member of one of the Aztec-type families.
///
/// `n` is the family order; for [`AztecKind::Window`] it is the inner
/// order `x` and `w` is the width, so the outer order is `x + w`. For
/// [`AztecKind::IntrudedSquare`] the square is `2n × 2n` and `m` dominos
/// are removed (default `n / 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AztecSpec {
    pub kind: AztecKind,
    pub n: u32,
    pub w: u32,
    pub m: Option<u32>,
}

impl AztecSpec {
    pub fn new(kind: AztecKind, n: u32) -> AztecSpec {
        AztecSpec {
            kind,
            n,
            w: 0,
            m: None,
        }
    }

    pub fn diamond(n: u32) -> AztecSpec {
        AztecSpec::new(AztecKind::Diamond, n)
    }

    pub fn window(x: u32, w: u32) -> AztecSpec {
        AztecSpec {
            kind: AztecKind::Window,
            n: x,
            w,
            m: None,
        }
    }

    pub fn intruded(n: u32, m: u32) -> AztecSpec {
        AztecSpec {
            kind: AztecKind::IntrudedSquare,
            n,
            w: 0,
            m: Some(m),
        }
    }
}

/// Aztec rectangle whose upper-left staircase has `a` steps and upper-right
/// staircase `b` steps; `a = b = n` is the Aztec diamond of order `n`.
pub fn aztec_rectangle(a: u32, b: u32) -> SquareRegion {
    let (a, b) = (i64::from(a), i64::from(b));
    let mut region = SquareRegion::new();
    for r in 0..a + b {
        let left = if r < a { a - 1 - r } else { r - a };
        let right = if r < b { a + r } else { a + 2 * b - 1 - r };
        for c in left..=right {
            region.insert(r, c);
        }
    }
    region
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn aztec(spec: AztecSpec) -> Result<SquareRegion> {
    let AztecSpec { kind, n, w, m } = spec;
    let ni = i64::from(n);
    if kind != AztecKind::Window {
        require(n >= 1, || format!("{} needs order at least 1", kind.name()))?;
    }
    let region = match kind {
        AztecKind::Diamond => aztec_rectangle(n, n),
        AztecKind::CenterPairRemoved => {
            let mut r = aztec_rectangle(n, n);
            r.remove(ni - 1, ni - 1);
            r.remove(ni, ni - 1);
            r
        }
        AztecKind::KnightPairRemoved => {
            require(n >= 2, || "knight-pair needs order at least 2".into())?;
            let mut r = aztec_rectangle(n, n);
            r.remove(ni - 2, ni);
            r.remove(ni, ni - 1);
            r
        }
        AztecKind::RectCenterHole => {
            let mut r = aztec_rectangle(2 * n, 2 * n + 1);
            r.remove(2 * ni, 2 * ni);
            r
        }
        AztecKind::RectAdjacentHole => {
            let a = 2 * ni - 1;
            let mut r = aztec_rectangle(2 * n - 1, 2 * n);
            r.remove(a - 1, a);
            r
        }
        AztecKind::IntrudedSquare => {
            let m = i64::from(m.unwrap_or(n / 2));
            require(m < 2 * ni, || {
                format!("intrusion length {m} too long for a {0}x{0} square", 2 * n)
            })?;
            let mut r = SquareRegion::rectangle(2 * ni, 2 * ni);
            for k in 0..m {
                r.remove(2 * ni - 1 - k, k);
                r.remove(2 * ni - 1 - k, k + 1);
            }
            r
        }
        AztecKind::Pillow0Mod4 | AztecKind::Pillow2Mod4 => {
            let width = |i: i64| {
                if kind == AztecKind::Pillow0Mod4 {
                    4 * (i + 1)
                } else {
                    4 * i + 2
                }
            };
            let mut r = SquareRegion::new();
            for i in 0..ni {
                let start = 3 * (ni - 1 - i);
                for c in start..start + width(i) {
                    r.insert(i, c);
                }
                for c in i..i + width(ni - 1 - i) {
                    r.insert(ni + i, c);
                }
            }
            r
        }
        AztecKind::Window => {
            require(w >= 2 && w % 2 == 0, || {
                format!("window width must be even and at least 2, got {w} (odd widths have no tilings)")
            })?;
            let outer = ni + i64::from(w);
            let mut r = aztec_rectangle(n + w, n + w);
            let shift = outer - ni;
            for (hr, hc) in aztec_rectangle(n, n).cells() {
                r.remove(hr + shift, hc + shift);
            }
            r
        }
    };
    debug_assert_eq!(
        region.count_color(Color::Black),
        region.count_color(Color::White),
        "{spec:?}"
    );
    Ok(region)
}
