//! Plane multigraphs given by rotation systems, and the link diagram whose
//! unshaded checkerboard graph is a given signed plane graph.
//!
//! Each edge of the graph becomes one crossing; vertices become unshaded
//! regions and faces become shaded ones. An edge sign of `+1` or `-1` is the
//! Goeritz index of its crossing.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::diagram::{Crossing, Diagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("dart {0} appears {1} times in the rotation system")]
    BadRotation(usize, usize),
    #[error("edge sign must be +1 or -1, got {0}")]
    BadSign(i32),
    #[error("graph must be connected")]
    Disconnected,
    #[error("vertex {0} out of range")]
    NoVertex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub sign: i32,
}

/// A corner of vertex `vertex`: the wedge between its darts `index` and
/// `index + 1` in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub vertex: usize,
    pub index: usize,
}

/// Dart `2e` leaves the tail of edge `e`, dart `2e + 1` leaves its head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    edges: Vec<Edge>,
    rotation: Vec<Vec<usize>>,
}

fn dart_vertex(edges: &[Edge], dart: usize) -> usize {
    let e = edges[dart / 2];
    if dart.is_multiple_of(2) {
        e.tail
    } else {
        e.head
    }
}

impl PlaneGraph {
    pub fn single_vertex() -> Self {
        PlaneGraph { edges: Vec::new(), rotation: vec![Vec::new()] }
    }

    /// Builds a graph from edges and counterclockwise dart orders.
    pub fn from_parts(edges: Vec<Edge>, rotation: Vec<Vec<usize>>) -> Result<Self, PlanarError> {
        let mut seen = vec![0usize; 2 * edges.len()];
        for (v, darts) in rotation.iter().enumerate() {
            for &d in darts {
                if d >= seen.len() {
                    return Err(PlanarError::BadRotation(d, 0));
                }
                if dart_vertex(&edges, d) != v {
                    return Err(PlanarError::BadRotation(d, usize::MAX));
                }
                seen[d] += 1;
            }
        }
        if let Some((d, &k)) = seen.iter().enumerate().find(|(_, &k)| k != 1) {
            return Err(PlanarError::BadRotation(d, k));
        }
        if let Some(e) = edges.iter().find(|e| e.sign.abs() != 1) {
            return Err(PlanarError::BadSign(e.sign));
        }
        let g = PlaneGraph { edges, rotation };
        if !g.is_connected() {
            return Err(PlanarError::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &d in &self.rotation[v] {
                let w = dart_vertex(&self.edges, d ^ 1);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn position(&self, dart: usize) -> usize {
        let v = dart_vertex(&self.edges, dart);
        self.rotation[v].iter().position(|&d| d == dart).expect("dart in rotation")
    }

    /// Facial walks, each as its sequence of corners.
    pub fn faces(&self) -> Vec<Vec<Corner>> {
        let mut done: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len().max(1)]).collect();
        let mut faces = Vec::new();
        for v in 0..self.vertex_count() {
            for i in 0..done[v].len() {
                if done[v][i] {
                    continue;
                }
                let mut face = Vec::new();
                let mut corner = Corner { vertex: v, index: i };
                while !done[corner.vertex][corner.index] {
                    done[corner.vertex][corner.index] = true;
                    face.push(corner);
                    let rot = &self.rotation[corner.vertex];
                    if rot.is_empty() {
                        break;
                    }
                    let out = rot[(corner.index + 1) % rot.len()];
                    let twin = out ^ 1;
                    corner = Corner { vertex: dart_vertex(&self.edges, twin), index: self.position(twin) };
                }
                faces.push(face);
            }
        }
        faces
    }

    fn insert_dart(&mut self, corner: Corner, dart: usize) {
        let rot = &mut self.rotation[corner.vertex];
        let at = if rot.is_empty() { 0 } else { corner.index + 1 };
        rot.insert(at, dart);
    }

    /// Adds an edge between two corners of the same face.
    pub fn add_chord(&mut self, a: Corner, b: Corner, sign: i32) -> Result<usize, PlanarError> {
        if sign.abs() != 1 {
            return Err(PlanarError::BadSign(sign));
        }
        let e = self.edges.len();
        self.edges.push(Edge { tail: a.vertex, head: b.vertex, sign });
        // Insert the later position first so the earlier index stays valid.
        if a.vertex == b.vertex && a.index > b.index {
            self.insert_dart(a, 2 * e);
            self.insert_dart(b, 2 * e + 1);
        } else if a.vertex == b.vertex {
            self.insert_dart(b, 2 * e + 1);
            self.insert_dart(a, 2 * e);
        } else {
            self.insert_dart(a, 2 * e);
            self.insert_dart(b, 2 * e + 1);
        }
        Ok(e)
    }

    /// Adds a new vertex joined by one edge at `corner`.
    pub fn add_pendant(&mut self, corner: Corner, sign: i32) -> Result<usize, PlanarError> {
        if corner.vertex >= self.vertex_count() {
            return Err(PlanarError::NoVertex(corner.vertex));
        }
        if sign.abs() != 1 {
            return Err(PlanarError::BadSign(sign));
        }
        let v = self.rotation.len();
        self.rotation.push(Vec::new());
        let e = self.edges.len();
        self.edges.push(Edge { tail: corner.vertex, head: v, sign });
        self.insert_dart(corner, 2 * e);
        self.insert_dart(Corner { vertex: v, index: 0 }, 2 * e + 1);
        Ok(v)
    }

    /// Random connected plane graph grown by pendant vertices and chords
    /// inside faces. With `mixed_signs` unset every edge gets sign `+1`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, vertices: usize, chords: usize, mixed_signs: bool) -> Self {
        let mut g = PlaneGraph::single_vertex();
        let sign = |rng: &mut R| if mixed_signs && rng.gen_bool(0.5) { -1 } else { 1 };
        let corner_of =
            |g: &PlaneGraph, rng: &mut R, v: usize| Corner { vertex: v, index: rng.gen_range(0..g.degree(v).max(1)) };
        for _ in 1..vertices.max(1) {
            let v = rng.gen_range(0..g.vertex_count());
            let c = corner_of(&g, rng, v);
            let s = sign(rng);
            g.add_pendant(c, s).expect("valid corner");
        }
        for _ in 0..chords {
            let faces = g.faces();
            let face = faces.choose(rng).expect("at least one face");
            let a = *face.choose(rng).expect("nonempty face");
            let b = *face.choose(rng).expect("nonempty face");
            let s = sign(rng);
            g.add_chord(a, b, s).expect("valid corners");
        }
        g
    }

    /// Signed Laplacian: off-diagonal `(u, v)` is minus the sum of the signs
    /// of edges joining `u` and `v`; loops contribute nothing.
    pub fn signed_laplacian(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut l = vec![vec![0i64; n]; n];
        for e in &self.edges {
            if e.tail != e.head {
                l[e.tail][e.head] -= i64::from(e.sign);
                l[e.head][e.tail] -= i64::from(e.sign);
                l[e.tail][e.tail] += i64::from(e.sign);
                l[e.head][e.head] += i64::from(e.sign);
            }
        }
        l
    }

    /// The diagram whose unshaded regions are this graph's vertices.
    pub fn medial(&self) -> MedialDiagram {
        if self.edges.is_empty() {
            let diagram = Diagram::circles(1).expect("one circle");
            return MedialDiagram { diagram, vertex_quadrant: vec![None] };
        }
        let mut offset = vec![0u64; self.vertex_count() + 1];
        for v in 0..self.vertex_count() {
            offset[v + 1] = offset[v] + self.degree(v) as u64;
        }
        let label = |v: usize, i: isize| -> u64 {
            let deg = self.degree(v) as isize;
            1 + offset[v] + i.rem_euclid(deg) as u64
        };

        let mut vertex_quadrant = vec![None; self.vertex_count()];
        let crossings = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let iu = self.position(2 * e) as isize;
                let iv = self.position(2 * e + 1) as isize;
                let (u, v) = (edge.tail, edge.head);
                let a45 = label(v, iv - 1);
                let a135 = label(u, iu);
                let a225 = label(u, iu - 1);
                let a315 = label(v, iv);
                let (crossing, qu, qv) = if edge.sign < 0 {
                    (Crossing::new(a45, a135, a225, a315), 1, 3)
                } else {
                    (Crossing::new(a135, a225, a315, a45), 0, 2)
                };
                vertex_quadrant[u].get_or_insert((e, qu));
                vertex_quadrant[v].get_or_insert((e, qv));
                crossing
            })
            .collect();
        let diagram = Diagram::new(crossings, 0).expect("every corner label is used twice");
        MedialDiagram { diagram, vertex_quadrant }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedialDiagram {
    pub diagram: Diagram,
    /// For each vertex, a `(crossing, quadrant)` lying in its region; `None`
    /// for the lone vertex of an edgeless graph, whose region is the
    /// unbounded one.
    pub vertex_quadrant: Vec<Option<(usize, usize)>>,
}

impl MedialDiagram {
    pub fn vertex_region(&self, rm: &crate::diagram::RegionMap, v: usize) -> usize {
        match self.vertex_quadrant[v] {
            Some((c, q)) => rm.quadrant(c, q),
            None => rm.unbounded_region(),
        }
    }
}
