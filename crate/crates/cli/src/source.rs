//! Where a region comes from: a file, or a named family with parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use dimers::families::*;
use dimers::grid::Region;
use dimers::{PlaneGraph, SquareRegion};

use crate::Result;

/// `key=value` pairs as given to `--params`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, u32>);

impl FromStr for Params {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Params, String> {
        let mut map = BTreeMap::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|_| format!("`{}` is not a non-negative integer", v.trim()))?;
            if map.insert(k.trim().to_string(), v).is_some() {
                return Err(format!("parameter `{}` given twice", k.trim()));
            }
        }
        Ok(Params(map))
    }
}

impl Params {
    pub fn with(&self, key: &str, value: u32) -> Params {
        let mut map = self.0.clone();
        map.insert(key.to_string(), value);
        Params(map)
    }

    fn get(&self, key: &str) -> Option<u32> {
        self.0.get(key).copied()
    }

    fn require(&self, family: &str, key: &str) -> Result<u32> {
        self.get(key)
            .ok_or_else(|| format!("family `{family}` needs parameter `{key}`").into())
    }

    fn only(&self, family: &str, allowed: &[&str]) -> Result<()> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(format!(
                "family `{family}` has no parameter `{k}` (expected {})",
                allowed.join(", ")
            )
            .into()),
            None => Ok(()),
        }
    }

    /// `a, b, c`, or `n` standing for `n, n, n`.
    pub fn hexagon(&self, family: &str) -> Result<HexagonSpec> {
        let spec = match self.get("n") {
            Some(n) if self.0.len() == 1 => HexagonSpec::new(n, n, n),
            _ => HexagonSpec::new(
                self.require(family, "a")?,
                self.require(family, "b")?,
                self.require(family, "c")?,
            ),
        };
        Ok(spec?)
    }
}

/// A region ready for analysis.
pub struct Instance {
    pub graph: PlaneGraph,
    /// Side lengths when the region is a plain hexagon, for the analyses
    /// that are specific to hexagons.
    pub hexagon: Option<HexagonSpec>,
}

impl Instance {
    fn plain(graph: PlaneGraph) -> Instance {
        Instance {
            graph,
            hexagon: None,
        }
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Instance({} vertices)", self.graph.vertex_count())
    }
}

pub const FAMILIES: &[&str] = &[
    "hexagon",
    "quasi-hexagon",
    "rectangle",
    "aztec-rectangle",
    "diamond",
    "center-pair",
    "knight-pair",
    "rect-center-hole",
    "rect-adjacent-hole",
    "intruded",
    "pillow0",
    "pillow2",
    "window",
    "central-triangle",
    "three-sides",
    "opposite-pair",
    "adjacent-pair",
    "central-edge",
    "triangle-graph",
    "cube",
];

/// Parameter names each family accepts.
fn allowed(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "hexagon" | "quasi-hexagon" => &["a", "b", "c", "n"],
        "rectangle" => &["rows", "cols"],
        "aztec-rectangle" => &["a", "b"],
        "window" => &["x", "w"],
        "intruded" => &["n", "m"],
        _ if FAMILIES.contains(&name) => &["n"],
        _ => return None,
    })
}

/// Rejects unknown families and parameter names without building anything.
pub fn check_names(name: &str, params: &Params) -> Result<()> {
    let allowed = allowed(name).ok_or_else(|| {
        format!(
            "unknown family `{name}`; known families: {}",
            FAMILIES.join(", ")
        )
    })?;
    params.only(name, allowed)
}

/// The parameter a sweep varies when none is named.
pub fn default_sweep_param(family: &str) -> &'static str {
    match family {
        "window" => "x",
        "rectangle" => "rows",
        "aztec-rectangle" => "a",
        _ => "n",
    }
}

pub fn family(name: &str, params: &Params) -> Result<Instance> {
    check_names(name, params)?;
    match name {
        "hexagon" => {
            let spec = params.hexagon(name)?;
            return Ok(Instance {
                graph: hexagon(spec).dual_graph(),
                hexagon: Some(spec),
            });
        }
        "quasi-hexagon" => return Ok(Instance::plain(quasi_hexagon_graph(params.hexagon(name)?))),
        "rectangle" => {
            let (r, c) = (params.require(name, "rows")?, params.require(name, "cols")?);
            return Ok(Instance::plain(
                SquareRegion::rectangle(r.into(), c.into()).dual_graph(),
            ));
        }
        "aztec-rectangle" => {
            let (a, b) = (params.require(name, "a")?, params.require(name, "b")?);
            return Ok(Instance::plain(aztec_rectangle(a, b).dual_graph()));
        }
        "triangle-graph" => {
            return Ok(Instance::plain(triangle_graph(params.require(name, "n")?)?));
        }
        "cube" => {
            return Ok(Instance::plain(cube_graph(params.require(name, "n")?)?));
        }
        _ => {}
    }
    if let Some(kind) = AztecKind::from_name(name) {
        let spec = match kind {
            AztecKind::Window => {
                AztecSpec::window(params.require(name, "x")?, params.require(name, "w")?)
            }
            AztecKind::IntrudedSquare => {
                let n = params.require(name, "n")?;
                match params.get("m") {
                    Some(m) => AztecSpec::intruded(n, m),
                    None => AztecSpec::new(kind, n),
                }
            }
            _ => AztecSpec::new(kind, params.require(name, "n")?),
        };
        return Ok(Instance::plain(aztec(spec)?.dual_graph()));
    }
    if let Some(kind) = HoleyKind::from_name(name) {
        return Ok(Instance::plain(
            holey_hexagon(kind, params.require(name, "n")?)?.dual_graph(),
        ));
    }
    unreachable!("check_names accepted `{name}`")
}

/// Reads a `.vax`, `.xreg` or `.cells` file.
pub fn file(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let region =
        Region::parse_with_extension(&text, ext).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Instance::plain(region.dual_graph()?))
}

/// Inclusive parameter ranges: `1..8`, `1..=8`, `3,4,7,8` or a single `5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Range(pub Vec<u32>);

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Range, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad range bound `{}`", t.trim()))
        };
        let values = if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(format!("empty range {s}"));
            }
            (lo..=hi).collect()
        } else {
            s.split(',')
                .map(num)
                .collect::<std::result::Result<Vec<_>, _>>()?
        };
        Ok(Range(values))
    }
}
