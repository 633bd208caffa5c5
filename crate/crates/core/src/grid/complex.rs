use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::graph::{Edge, Embedding, PlaneGraph};
use super::Color;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexCell {
    pub id: String,
    pub color: Option<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexEdge {
    pub a: String,
    pub b: String,
    pub weight: BigRational,
}

/// Generic two-colored cell adjacency structure, optionally carrying its
/// bounded faces as cycles of cell ids.
///
/// ```text
/// # comment
/// cell u black
/// cell v white
/// edge u v 3/2
/// face u v w x
/// ```
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<ComplexCell>,
    edges: Vec<ComplexEdge>,
    faces: Option<Vec<Vec<String>>>,
}

impl CellComplex {
    /// Validates and assembles a complex from its parts.
    pub fn new(
        cells: Vec<ComplexCell>,
        edges: Vec<ComplexEdge>,
        faces: Option<Vec<Vec<String>>>,
    ) -> Result<CellComplex> {
        let mut index = HashMap::new();
        for (i, cell) in cells.iter().enumerate() {
            if index.insert(cell.id.as_str(), i).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "duplicate cell `{}`",
                    cell.id
                )));
            }
        }
        for e in &edges {
            let (Some(&a), Some(&b)) = (index.get(e.a.as_str()), index.get(e.b.as_str())) else {
                let missing = if index.contains_key(e.a.as_str()) {
                    &e.b
                } else {
                    &e.a
                };
                return Err(Error::InvalidParameter(format!(
                    "edge references unknown cell `{missing}`"
                )));
            };
            if let (Some(ca), Some(cb)) = (cells[a].color, cells[b].color) {
                if ca == cb {
                    return Err(Error::InvalidParameter(format!(
                        "edge {} - {} joins cells of the same color",
                        e.a, e.b
                    )));
                }
            }
            if !e.weight.is_positive() {
                return Err(Error::InvalidParameter(format!(
                    "edge {} - {} has non-positive weight {}",
                    e.a, e.b, e.weight
                )));
            }
        }
        for face in faces.iter().flatten() {
            if let Some(id) = face.iter().find(|id| !index.contains_key(id.as_str())) {
                return Err(Error::InvalidParameter(format!(
                    "face references unknown cell `{id}`"
                )));
            }
        }
        Ok(CellComplex {
            cells,
            edges,
            faces,
        })
    }

    pub fn parse(text: &str) -> Result<CellComplex> {
        let mut cells = Vec::new();
        let mut edges = Vec::new();
        let mut faces: Option<Vec<Vec<String>>> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse {
                line: lineno + 1,
                col: 1,
                msg,
            };
            let words: Vec<&str> = line.split_whitespace().collect();
            match words[0] {
                "cell" => {
                    let color = match words.get(2) {
                        None => None,
                        Some(&"black") => Some(Color::Black),
                        Some(&"white") => Some(Color::White),
                        Some(other) => return Err(err(format!("unknown color `{other}`"))),
                    };
                    if words.len() < 2 || words.len() > 3 {
                        return Err(err("expected `cell <id> [black|white]`".into()));
                    }
                    cells.push(ComplexCell {
                        id: words[1].to_string(),
                        color,
                    });
                }
                "edge" => {
                    if words.len() < 3 || words.len() > 4 {
                        return Err(err("expected `edge <idA> <idB> [<p>/<q>]`".into()));
                    }
                    let weight = match words.get(3) {
                        None => BigRational::one(),
                        Some(w) => parse_rational(w).map_err(err)?,
                    };
                    edges.push(ComplexEdge {
                        a: words[1].to_string(),
                        b: words[2].to_string(),
                        weight,
                    });
                }
                "face" => {
                    if words.len() < 4 {
                        return Err(err("a face lists at least three cells".into()));
                    }
                    faces
                        .get_or_insert_with(Vec::new)
                        .push(words[1..].iter().map(|s| s.to_string()).collect());
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        CellComplex::new(cells, edges, faces)
    }

    pub fn to_cells(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            match c.color {
                Some(Color::Black) => writeln!(out, "cell {} black", c.id),
                Some(Color::White) => writeln!(out, "cell {} white", c.id),
                None => writeln!(out, "cell {}", c.id),
            }
            .expect("writing to a String");
        }
        for e in &self.edges {
            if e.weight.is_one() {
                writeln!(out, "edge {} {}", e.a, e.b)
            } else {
                writeln!(
                    out,
                    "edge {} {} {}/{}",
                    e.a,
                    e.b,
                    e.weight.numer(),
                    e.weight.denom()
                )
            }
            .expect("writing to a String");
        }
        for f in self.faces.iter().flatten() {
            writeln!(out, "face {}", f.join(" ")).expect("writing to a String");
        }
        out
    }

    /// Captures a graph, including its bounded faces when embedded.
    pub fn from_plane_graph(g: &PlaneGraph) -> CellComplex {
        let cells = (0..g.vertex_count())
            .map(|v| ComplexCell {
                id: g.label(v).to_string(),
                color: g.color(v),
            })
            .collect();
        let edges = g
            .edges()
            .iter()
            .map(|e| ComplexEdge {
                a: g.label(e.u).to_string(),
                b: g.label(e.v).to_string(),
                weight: e.weight.clone(),
            })
            .collect();
        let faces = g.faces().map(|fs| {
            fs.iter()
                .map(|f| f.vertices.iter().map(|&v| g.label(v).to_string()).collect())
                .collect()
        });
        CellComplex {
            cells,
            edges,
            faces,
        }
    }

    pub fn cells(&self) -> &[ComplexCell] {
        &self.cells
    }

    pub fn edges(&self) -> &[ComplexEdge] {
        &self.edges
    }

    pub fn faces(&self) -> Option<&[Vec<String>]> {
        self.faces.as_deref()
    }

    /// Dual graph with vertices in declaration order. Declared faces become
    /// the embedding; they must satisfy Euler's relation.
    pub fn dual_graph(&self) -> Result<PlaneGraph> {
        let index: HashMap<&str, usize> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.as_str(), i))
            .collect();
        let labels = self.cells.iter().map(|c| c.id.clone()).collect();
        let colors = self.cells.iter().map(|c| c.color).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: index[e.a.as_str()],
                v: index[e.b.as_str()],
                weight: e.weight.clone(),
            })
            .collect();
        let embedding = match &self.faces {
            None => Embedding::None,
            Some(fs) => Embedding::Faces(
                fs.iter()
                    .map(|f| f.iter().map(|id| index[id.as_str()]).collect())
                    .collect(),
            ),
        };
        PlaneGraph::new(labels, colors, edges, embedding)
    }
}

/// Parses `p`, `p/q` or a signed variant into an exact rational.
pub(crate) fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("malformed rational `{s}`");
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(BigRational::new(p, q))
}
