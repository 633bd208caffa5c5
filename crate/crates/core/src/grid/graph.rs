use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::One;

use super::Color;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: BigRational,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A bounded face: its boundary walk as vertices and as edge ids, both in
/// the same rotational direction for every face of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub black: Vec<usize>,
    pub white: Vec<usize>,
}

impl Bipartition {
    pub fn is_balanced(&self) -> bool {
        self.black.len() == self.white.len()
    }
}

/// Graph with exact edge weights and, optionally, a planar embedding given
/// by its list of bounded faces.
///
/// Immutable once built. Vertex `i` of a region's dual graph is the `i`-th
/// cell of the region in its canonical order.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    labels: Vec<String>,
    colors: Vec<Option<Color>>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, usize)>>,
    coords: Option<Vec<(i64, i64)>>,
    rotation: Option<Vec<Vec<usize>>>,
    faces: Option<Vec<Face>>,
    bipartition: Option<Bipartition>,
    components: usize,
}

/// How a graph is embedded in the plane, if at all.
#[derive(Debug, Clone)]
pub enum Embedding {
    None,
    /// Straight-line drawing; rotation system and faces are derived from it.
    Coordinates(Vec<(i64, i64)>),
    /// Bounded faces as vertex cycles, all in the same rotational direction.
    Faces(Vec<Vec<usize>>),
}

impl PlaneGraph {
    /// Builds a graph. Edges are `(u, v, weight)`; loops and parallel edges
    /// are rejected.
    pub fn new(
        labels: Vec<String>,
        colors: Vec<Option<Color>>,
        edges: Vec<Edge>,
        embedding: Embedding,
    ) -> Result<PlaneGraph> {
        let n = labels.len();
        if colors.len() != n {
            return Err(Error::Dimension(
                "one color slot per vertex required".into(),
            ));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashMap::new();
        for (id, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {id} has an endpoint out of range"
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidParameter(format!("edge {id} is a loop")));
            }
            if seen.insert((e.u.min(e.v), e.u.max(e.v)), id).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "parallel edge between {} and {}",
                    labels[e.u], labels[e.v]
                )));
            }
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        let mut g = PlaneGraph {
            labels,
            colors,
            edges,
            adjacency,
            coords: None,
            rotation: None,
            faces: None,
            bipartition: None,
            components: 0,
        };
        g.components = g.component_ids().1;
        g.bipartition = g.compute_bipartition();
        match embedding {
            Embedding::None => {}
            Embedding::Coordinates(coords) => {
                if coords.len() != n {
                    return Err(Error::Dimension(
                        "one coordinate per vertex required".into(),
                    ));
                }
                let rotation = g.rotation_from_coords(&coords);
                let faces = g.trace_faces(&coords, &rotation)?;
                g.coords = Some(coords);
                g.rotation = Some(rotation);
                g.faces = Some(faces);
                g.check_euler()?;
            }
            Embedding::Faces(cycles) => {
                let faces = g.faces_from_cycles(cycles)?;
                g.faces = Some(faces);
                g.check_euler()?;
            }
        }
        Ok(g)
    }

    /// Unweighted graph without embedding or declared colors.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<PlaneGraph> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges = edges
            .iter()
            .map(|&(u, v)| Edge {
                u,
                v,
                weight: BigRational::one(),
            })
            .collect();
        PlaneGraph::new(labels, vec![None; n], edges, Embedding::None)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    /// `(neighbor, edge id)` pairs at `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, id)| id)
    }

    pub fn coords(&self) -> Option<&[(i64, i64)]> {
        self.coords.as_deref()
    }

    /// Edge ids around each vertex in counterclockwise order, when the
    /// graph carries a straight-line drawing.
    pub fn rotation(&self) -> Option<&[Vec<usize>]> {
        self.rotation.as_deref()
    }

    /// Bounded faces; `None` when the graph has no planar embedding.
    pub fn faces(&self) -> Option<&[Face]> {
        self.faces.as_deref()
    }

    pub fn is_planar_embedded(&self) -> bool {
        self.faces.is_some()
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_unit_weighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight.is_one())
    }

    /// Component index of every vertex, and the number of components.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adjacency[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Same graph with every edge weight replaced.
    pub fn with_weights(&self, weight: impl Fn(usize, &Edge) -> BigRational) -> PlaneGraph {
        let mut g = self.clone();
        for (id, e) in g.edges.iter_mut().enumerate() {
            e.weight = weight(id, &self.edges[id]);
        }
        g
    }

    /// The graph with the listed vertices deleted; surviving vertices keep
    /// their relative order. A straight-line drawing is retraced; declared
    /// faces cannot be repaired and are dropped.
    pub fn remove_vertices(&self, remove: &[usize]) -> Result<PlaneGraph> {
        let n = self.vertex_count();
        let mut new_index = vec![usize::MAX; n];
        let mut next = 0;
        for (v, slot) in new_index.iter_mut().enumerate() {
            if !remove.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let keep = |v: usize| new_index[v] != usize::MAX;
        let labels = (0..n)
            .filter(|&v| keep(v))
            .map(|v| self.labels[v].clone())
            .collect();
        let colors = (0..n)
            .filter(|&v| keep(v))
            .map(|v| self.colors[v])
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| keep(e.u) && keep(e.v))
            .map(|e| Edge {
                u: new_index[e.u],
                v: new_index[e.v],
                weight: e.weight.clone(),
            })
            .collect();
        let embedding = match &self.coords {
            Some(c) => Embedding::Coordinates((0..n).filter(|&v| keep(v)).map(|v| c[v]).collect()),
            None => Embedding::None,
        };
        PlaneGraph::new(labels, colors, edges, embedding)
    }

    fn compute_bipartition(&self) -> Option<Bipartition> {
        let n = self.vertex_count();
        if self.colors.iter().all(Option::is_some) && n > 0 {
            let ok = self
                .edges
                .iter()
                .all(|e| self.colors[e.u] != self.colors[e.v]);
            if !ok {
                return None;
            }
            let black = (0..n)
                .filter(|&v| self.colors[v] == Some(Color::Black))
                .collect();
            let white = (0..n)
                .filter(|&v| self.colors[v] == Some(Color::White))
                .collect();
            return Some(Bipartition { black, white });
        }
        // Two-color each component by breadth-first search, honoring any
        // declared color at the root.
        let mut side: Vec<Option<Color>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(self.colors[s].unwrap_or(Color::Black));
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = side[x].expect("colored when queued");
                for &(y, _) in &self.adjacency[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(cx.opposite());
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        if (0..n).any(|v| self.colors[v].is_some_and(|c| Some(c) != side[v])) {
            return None;
        }
        let black = (0..n).filter(|&v| side[v] == Some(Color::Black)).collect();
        let white = (0..n).filter(|&v| side[v] == Some(Color::White)).collect();
        Some(Bipartition { black, white })
    }

    fn rotation_from_coords(&self, coords: &[(i64, i64)]) -> Vec<Vec<usize>> {
        (0..self.vertex_count())
            .map(|v| {
                let mut darts: Vec<(usize, usize)> = self.adjacency[v].clone();
                let (x0, y0) = coords[v];
                darts.sort_by(|&(a, _), &(b, _)| {
                    let da = (coords[a].0 - x0, coords[a].1 - y0);
                    let db = (coords[b].0 - x0, coords[b].1 - y0);
                    angle_cmp(da, db)
                });
                darts.into_iter().map(|(_, id)| id).collect()
            })
            .collect()
    }

    /// Traces every face of the rotation system, then drops the outer face
    /// of each component (the one with the most negative signed area).
    fn trace_faces(&self, coords: &[(i64, i64)], rotation: &[Vec<usize>]) -> Result<Vec<Face>> {
        let m = self.edge_count();
        // Dart 2e runs u -> v, dart 2e + 1 runs v -> u.
        let tail = |d: usize| {
            let e = &self.edges[d / 2];
            if d.is_multiple_of(2) {
                e.u
            } else {
                e.v
            }
        };
        let head = |d: usize| tail(d ^ 1);
        let mut pos = HashMap::new();
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &id) in rot.iter().enumerate() {
                pos.insert((v, id), i);
            }
        }
        let dart_from = |v: usize, id: usize| {
            if self.edges[id].u == v {
                2 * id
            } else {
                2 * id + 1
            }
        };
        let mut used = vec![false; 2 * m];
        let (comp, ncomp) = self.component_ids();
        let mut traced: Vec<(usize, i128, Face)> = Vec::new();
        for start in 0..2 * m {
            if used[start] {
                continue;
            }
            let mut vertices = Vec::new();
            let mut edges = Vec::new();
            let mut d = start;
            loop {
                if used[d] {
                    if d == start {
                        break;
                    }
                    return Err(Error::BadEmbedding(
                        "face walk re-entered a used dart".into(),
                    ));
                }
                used[d] = true;
                vertices.push(tail(d));
                edges.push(d / 2);
                // Arriving at head(d), leave along the edge just clockwise of
                // the reverse dart; this keeps the face on the left.
                let b = head(d);
                let rot = &rotation[b];
                let i = pos[&(b, d / 2)];
                let next_id = rot[(i + rot.len() - 1) % rot.len()];
                d = dart_from(b, next_id);
            }
            let area2: i128 = (0..vertices.len())
                .map(|i| {
                    let (x1, y1) = coords[vertices[i]];
                    let (x2, y2) = coords[vertices[(i + 1) % vertices.len()]];
                    x1 as i128 * y2 as i128 - x2 as i128 * y1 as i128
                })
                .sum();
            traced.push((comp[vertices[0]], area2, Face { vertices, edges }));
        }
        let mut outer = vec![None::<(usize, i128)>; ncomp];
        for (i, (c, area, _)) in traced.iter().enumerate() {
            if outer[*c].is_none_or(|(_, a)| *area < a) {
                outer[*c] = Some((i, *area));
            }
        }
        let outer_idx: Vec<usize> = outer.iter().flatten().map(|&(i, _)| i).collect();
        for (i, (_, area, _)) in traced.iter().enumerate() {
            if !outer_idx.contains(&i) && *area <= 0 {
                return Err(Error::BadEmbedding("drawing is not planar".into()));
            }
        }
        Ok(traced
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !outer_idx.contains(i))
            .map(|(_, (_, _, f))| f)
            .collect())
    }

    fn faces_from_cycles(&self, cycles: Vec<Vec<usize>>) -> Result<Vec<Face>> {
        let mut darts_seen = HashMap::new();
        let mut faces = Vec::with_capacity(cycles.len());
        for cycle in cycles {
            if cycle.len() < 3 {
                return Err(Error::BadEmbedding(
                    "a face needs at least three vertices".into(),
                ));
            }
            let mut edges = Vec::with_capacity(cycle.len());
            for i in 0..cycle.len() {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                if a >= self.vertex_count() || b >= self.vertex_count() {
                    return Err(Error::BadEmbedding("face vertex out of range".into()));
                }
                let id = self.find_edge(a, b).ok_or_else(|| {
                    Error::BadEmbedding(format!(
                        "face uses missing edge {} - {}",
                        self.labels[a], self.labels[b]
                    ))
                })?;
                if darts_seen.insert((a, b), ()).is_some() {
                    return Err(Error::BadEmbedding(format!(
                        "edge {} -> {} is traversed twice in the same direction; \
                         faces must share one rotational direction",
                        self.labels[a], self.labels[b]
                    )));
                }
                edges.push(id);
            }
            faces.push(Face {
                vertices: cycle,
                edges,
            });
        }
        Ok(faces)
    }

    /// Euler's relation `V - E + F = 2` per component, `F` counting the
    /// outer face; summed over components it reads `V - E + F_bounded = C`.
    fn check_euler(&self) -> Result<()> {
        let faces = self.faces.as_ref().map_or(0, Vec::len) as i64;
        let lhs = self.vertex_count() as i64 - self.edge_count() as i64 + faces;
        if lhs != self.components as i64 {
            return Err(Error::BadEmbedding(format!(
                "Euler relation fails: V - E + F_bounded = {lhs}, expected {} components",
                self.components
            )));
        }
        Ok(())
    }
}

/// Counterclockwise angular order starting from the positive x axis.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(u: usize, v: usize) -> Edge {
        Edge {
            u,
            v,
            weight: BigRational::one(),
        }
    }

    fn square_with_coords() -> PlaneGraph {
        let labels = (0..4).map(|i| i.to_string()).collect();
        let edges = vec![unit(0, 1), unit(1, 2), unit(2, 3), unit(3, 0)];
        let coords = vec![(0, 0), (1, 0), (1, 1), (0, 1)];
        PlaneGraph::new(labels, vec![None; 4], edges, Embedding::Coordinates(coords)).unwrap()
    }

    #[test]
    fn four_cycle_has_one_bounded_face() {
        let g = square_with_coords();
        let faces = g.faces().unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 4);
        assert!(g.is_bipartite());
        assert!(g.bipartition().unwrap().is_balanced());
    }

    #[test]
    fn triangle_is_not_bipartite() {
        let g = PlaneGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!g.is_bipartite());
    }

    #[test]
    fn angle_order() {
        let mut dirs = vec![(0, -1), (1, 1), (-1, 0), (1, 0), (0, 1), (-1, -1)];
        dirs.sort_by(|&a, &b| angle_cmp(a, b));
        assert_eq!(
            dirs,
            vec![(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
        );
    }

    #[test]
    fn declared_faces_checked() {
        let labels: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let edges = vec![unit(0, 1), unit(1, 2), unit(2, 3), unit(3, 0)];
        let g = PlaneGraph::new(
            labels.clone(),
            vec![None; 4],
            edges.clone(),
            Embedding::Faces(vec![vec![0, 1, 2, 3]]),
        )
        .unwrap();
        assert_eq!(g.faces().unwrap().len(), 1);
        // Declaring the same face twice breaks Euler (and direction).
        let bad = PlaneGraph::new(
            labels.clone(),
            vec![None; 4],
            edges.clone(),
            Embedding::Faces(vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]]),
        );
        assert!(matches!(bad, Err(Error::BadEmbedding(_))));
        let missing = PlaneGraph::new(
            labels,
            vec![None; 4],
            edges,
            Embedding::Faces(vec![vec![0, 2, 1]]),
        );
        assert!(matches!(missing, Err(Error::BadEmbedding(_))));
    }

    #[test]
    fn parallel_edges_rejected() {
        assert!(PlaneGraph::from_edge_list(2, &[(0, 1), (1, 0)]).is_err());
        assert!(PlaneGraph::from_edge_list(2, &[(0, 0)]).is_err());
    }

    #[test]
    fn removing_vertices_retraces_faces() {
        let g = square_with_coords();
        let h = g.remove_vertices(&[0]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.faces().unwrap().len(), 0);
    }

    #[test]
    fn disconnected_euler() {
        let labels = (0..5).map(|i| i.to_string()).collect();
        let edges = vec![unit(0, 1), unit(1, 2), unit(2, 3), unit(3, 0)];
        let coords = vec![(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)];
        let g =
            PlaneGraph::new(labels, vec![None; 5], edges, Embedding::Coordinates(coords)).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.faces().unwrap().len(), 1);
    }
}
