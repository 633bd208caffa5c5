//! Small instances counted by exhaustive enumeration, frozen once and
//! shared by the oracle and acceptance suites.

use dimers::families::*;
use dimers::{PlaneGraph, TriRegion};

/// Brute-force counts, recorded once and compared against on every run.
pub const FROZEN: &[(&str, u32, u64)] = &[
    ("diamond", 1, 2),
    ("diamond", 2, 8),
    ("diamond", 3, 64),
    ("diamond", 4, 1024),
    ("center-pair", 1, 1),
    ("center-pair", 2, 2),
    ("center-pair", 3, 16),
    ("center-pair", 4, 192),
    ("knight-pair", 2, 2),
    ("knight-pair", 3, 8),
    ("knight-pair", 4, 160),
    ("rect-center-hole", 1, 8),
    ("rect-adjacent-hole", 1, 2),
    ("rect-adjacent-hole", 2, 96),
    ("intruded", 1, 2),
    ("intruded", 2, 18),
    ("intruded", 3, 3364),
    ("pillow0", 1, 5),
    ("pillow0", 2, 117),
    ("pillow2", 1, 2),
    ("pillow2", 2, 20),
    ("pillow2", 3, 1024),
    ("window", 1, 8),
    ("window", 2, 8),
    ("window", 3, 8),
    ("central-triangle", 1, 2),
    ("central-triangle", 2, 54),
    ("opposite-pair", 1, 1),
    ("opposite-pair", 2, 4),
    ("adjacent-pair", 1, 1),
    ("adjacent-pair", 2, 6),
];

pub fn instance(name: &str, n: u32) -> PlaneGraph {
    if let Some(kind) = AztecKind::from_name(name) {
        let spec = match kind {
            AztecKind::Window => AztecSpec::window(n, 2),
            _ => AztecSpec::new(kind, n),
        };
        return aztec(spec).unwrap().dual_graph();
    }
    let kind = HoleyKind::from_name(name).unwrap();
    holey_hexagon(kind, n).unwrap().dual_graph()
}

/// Every small instance used by the suite, with a name for messages.
pub fn golden_instances(max_vertices: usize) -> Vec<(String, PlaneGraph)> {
    let mut out: Vec<(String, PlaneGraph)> = FROZEN
        .iter()
        .map(|&(name, n, _)| (format!("{name} {n}"), instance(name, n)))
        .collect();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                let g = hexagon(HexagonSpec::new(a, b, c).unwrap()).dual_graph();
                out.push((format!("hexagon {a},{b},{c}"), g));
            }
        }
    }
    for n in [3, 4, 7] {
        out.push((format!("triangle {n}"), triangle_graph(n).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("cube {n}"), cube_graph(n).unwrap()));
    }
    out.push((
        "quasi 1,1,1".into(),
        quasi_hexagon_graph(HexagonSpec::new(1, 1, 1).unwrap()),
    ));
    out.push((
        "quasi 1,2,1".into(),
        quasi_hexagon_graph(HexagonSpec::new(1, 2, 1).unwrap()),
    ));
    out.push((
        "hexagon 1,2,1 parsed".into(),
        TriRegion::parse("AVAVA\nVAVAV\n").unwrap().dual_graph(),
    ));
    out.retain(|(_, g)| g.vertex_count() <= max_vertices);
    out
}
