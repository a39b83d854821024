//! Combinatorial embeddings: rotation systems, face tracing and in-face edits.
//!
//! Face tracing convention: the walk that enters `v` along `u -> v` leaves
//! along `v -> w`, where `w` follows `u` in the rotation at `v`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("rotation list count {found} does not match vertex count {n}")]
    RotationCount { n: usize, found: usize },
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    NotAPermutation(usize),
    #[error("edge ({u}, {v}) appears in only one rotation")]
    Asymmetric { u: usize, v: usize },
    #[error("face {0:?} is not a face of this embedding")]
    UnknownFace(Vec<usize>),
    #[error("vertex {0} is not on the face boundary")]
    NotOnFace(usize),
    #[error("edge ({u}, {v}) already exists")]
    EdgeExists { u: usize, v: usize },
    #[error("edge ({u}, {v}) does not exist")]
    MissingEdge { u: usize, v: usize },
    #[error("an edge needs two distinct endpoints, got {0} twice")]
    SameVertex(usize),
    #[error("removing vertex {0} leaves no face touching its neighbors")]
    DegenerateRemoval(usize),
    #[error("not a plane embedding: component {component:?} has V={vertices}, E={edges}, F={faces}")]
    EulerViolation {
        component: VertexSet,
        vertices: usize,
        edges: usize,
        faces: usize,
    },
}

/// A face, stored as its boundary walk rotated to start at the
/// lexicographically smallest rotation. Orientation is kept.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face {
    boundary: Vec<usize>,
}

impl Face {
    /// Canonicalizes a closed boundary walk.
    pub fn new(walk: Vec<usize>) -> Self {
        let len = walk.len();
        let best = (0..len)
            .min_by(|&a, &b| {
                let ra = walk[a..].iter().chain(&walk[..a]);
                let rb = walk[b..].iter().chain(&walk[..b]);
                ra.cmp(rb)
            })
            .unwrap_or(0);
        let mut boundary = walk;
        boundary.rotate_left(best);
        Face { boundary }
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    /// Boundary walk length; a vertex visited twice counts twice.
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.boundary.iter().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }

    /// Directed edges of the walk, in order.
    pub fn directed_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.boundary.len();
        (0..len).map(move |i| (self.boundary[i], self.boundary[(i + 1) % len]))
    }

    pub fn has_directed_edge(&self, u: usize, v: usize) -> bool {
        self.directed_edges().any(|e| e == (u, v))
    }

    /// True when the boundary is a simple cycle of length `k`.
    pub fn is_simple_cycle(&self, k: usize) -> bool {
        self.len() == k && self.vertices().len() == k
    }

    fn relabeled(&self, map: impl Fn(usize) -> usize) -> Face {
        Face::new(self.boundary.iter().map(|&v| map(v)).collect())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face{:?}", self.boundary)
    }
}

/// A graph together with a cyclic order of neighbors at every vertex and a
/// designated outer face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    outer: Option<Face>,
}

/// JSON shape: adjacency lists in rotation order plus the outer-face boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    pub outer_face: Option<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that each rotation is a permutation of the graph's neighbors.
    /// The outer face defaults to the smallest face in canonical order.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(EmbeddingError::RotationCount {
                n,
                found: rotation.len(),
            });
        }
        for (v, rot) in rotation.iter().enumerate() {
            let set: VertexSet = rot
                .iter()
                .map(|&w| graph.check_vertex(w).map(|_| w))
                .collect::<Result<_, _>>()?;
            if set.len() != rot.len() || set != graph.neighbors(v) {
                return Err(EmbeddingError::NotAPermutation(v));
            }
        }
        let mut e = RotationSystem {
            graph,
            rotation,
            outer: None,
        };
        e.outer = e.faces().into_iter().next();
        Ok(e)
    }

    /// Builds the graph from the rotation lists themselves.
    pub fn from_rotation(n: usize, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let mut g = Graph::try_empty(n)?;
        if rotation.len() != n {
            return Err(EmbeddingError::RotationCount {
                n,
                found: rotation.len(),
            });
        }
        for (u, rot) in rotation.iter().enumerate() {
            for &v in rot {
                g.check_vertex(v)?;
                if u == v {
                    return Err(GraphError::SelfLoop(u).into());
                }
                if !rotation[v].contains(&u) {
                    return Err(EmbeddingError::Asymmetric { u, v });
                }
                g.add_edge(u, v);
            }
        }
        Self::new(g, rotation)
    }

    pub fn from_json(json: &EmbeddingJson) -> Result<Self, EmbeddingError> {
        let e = Self::from_rotation(json.n, json.rotation.clone())?;
        match &json.outer_face {
            Some(walk) => e.with_outer_face(&Face::new(walk.clone())),
            None => Ok(e),
        }
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            n: self.graph.vertex_count(),
            rotation: self.rotation.clone(),
            outer_face: self.outer.as_ref().map(|f| f.boundary.clone()),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn outer_face(&self) -> Option<&Face> {
        self.outer.as_ref()
    }

    pub fn with_outer_face(mut self, f: &Face) -> Result<Self, EmbeddingError> {
        self.require_face(f)?;
        self.outer = Some(f.clone());
        Ok(self)
    }

    /// Neighbor of `v` that follows `u` in the rotation at `v`.
    pub fn successor(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == u).expect("u is a neighbor of v");
        rot[(i + 1) % rot.len()]
    }

    /// Boundary walks in tracing order.
    fn face_walks(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![0u16; n];
        let mut walks = Vec::new();
        for u in 0..n {
            for &v in &self.rotation[u] {
                if seen[u] & (1 << v) != 0 {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen[a] & (1 << b) == 0 {
                    seen[a] |= 1 << b;
                    walk.push(a);
                    let next = self.successor(b, a);
                    a = b;
                    b = next;
                }
                walks.push(walk);
            }
        }
        walks
    }

    /// All faces in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        let set: BTreeSet<Face> = self.face_walks().into_iter().map(Face::new).collect();
        set.into_iter().collect()
    }

    /// The face whose walk uses the directed edge `u -> v`.
    pub fn face_containing(&self, u: usize, v: usize) -> Result<Face, EmbeddingError> {
        if !self.graph.has_edge(u, v) {
            return Err(EmbeddingError::MissingEdge { u, v });
        }
        let mut walk = Vec::new();
        let (mut a, mut b) = (u, v);
        loop {
            walk.push(a);
            let next = self.successor(b, a);
            a = b;
            b = next;
            if (a, b) == (u, v) {
                break;
            }
        }
        Ok(Face::new(walk))
    }

    fn require_face(&self, f: &Face) -> Result<(), EmbeddingError> {
        let ok = match f.directed_edges().next() {
            Some((u, v)) => self.face_containing(u, v).is_ok_and(|g| &g == f),
            None => false,
        };
        if ok {
            Ok(())
        } else {
            Err(EmbeddingError::UnknownFace(f.boundary.clone()))
        }
    }

    pub fn is_face(&self, f: &Face) -> bool {
        self.require_face(f).is_ok()
    }

    /// Checks `V - E + F = 2` on every component that has an edge.
    pub fn euler_check(&self) -> Result<(), EmbeddingError> {
        let faces = self.faces();
        for comp in self.graph.components() {
            let vertices = comp.len();
            if vertices == 1 {
                continue;
            }
            let edges = comp.iter().map(|v| self.graph.degree(v)).sum::<usize>() / 2;
            let faces = faces.iter().filter(|f| comp.contains(f.boundary[0])).count();
            if vertices + faces != edges + 2 {
                return Err(EmbeddingError::EulerViolation {
                    component: comp,
                    vertices,
                    edges,
                    faces,
                });
            }
        }
        Ok(())
    }

    pub fn is_plane(&self) -> bool {
        self.euler_check().is_ok()
    }

    /// Boundary vertex set of `f`.
    pub fn vertices_on_face(&self, f: &Face) -> Result<VertexSet, EmbeddingError> {
        self.require_face(f)?;
        Ok(f.vertices())
    }

    /// True iff the graph is connected on at least 3 vertices and every face
    /// boundary is a 3-cycle.
    pub fn is_triangulation(&self) -> bool {
        self.vertex_count() >= 3
            && self.graph.is_connected()
            && self.is_plane()
            && self.faces().iter().all(|f| f.is_simple_cycle(3))
    }

    /// Draws the new edge `uv` inside face `f`, splitting it in two.
    ///
    /// An endpoint visited more than once by the walk is attached at its first
    /// visit. An isolated endpoint is accepted and placed inside `f`. When `f`
    /// is the outer face, the longer of the two pieces stays outer.
    pub fn insert_edge_in_face(&self, u: usize, v: usize, f: &Face) -> Result<Self, EmbeddingError> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u == v {
            return Err(EmbeddingError::SameVertex(u));
        }
        if self.graph.has_edge(u, v) {
            return Err(EmbeddingError::EdgeExists { u, v });
        }
        self.require_face(f)?;
        let mut rotation = self.rotation.clone();
        for x in [u, v] {
            let y = if x == u { v } else { u };
            if self.graph.degree(x) == 0 {
                rotation[x].push(y);
                continue;
            }
            let walk = &f.boundary;
            let i = walk.iter().position(|&w| w == x).ok_or(EmbeddingError::NotOnFace(x))?;
            let prev = walk[(i + walk.len() - 1) % walk.len()];
            let at = rotation[x].iter().position(|&w| w == prev).expect("walk edge") + 1;
            rotation[x].insert(at, y);
        }
        let graph = self.graph.with_edge(u, v);
        let mut e = RotationSystem {
            graph,
            rotation,
            outer: None,
        };
        e.outer = match &self.outer {
            Some(o) if o == f => {
                let a = e.face_containing(u, v)?;
                let b = e.face_containing(v, u)?;
                Some(if b.len() > a.len() { b } else { a })
            }
            other => other.clone(),
        };
        Ok(e)
    }

    /// Deletes edge `uv`; the two faces on either side merge.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self, EmbeddingError> {
        if !self.graph.has_edge(u, v) {
            return Err(EmbeddingError::MissingEdge { u, v });
        }
        let mut rotation = self.rotation.clone();
        rotation[u].retain(|&w| w != v);
        rotation[v].retain(|&w| w != u);
        let graph = self.graph.without_edge(u, v);
        let mut e = RotationSystem {
            graph,
            rotation,
            outer: None,
        };
        e.outer = self.carry_outer(&e, |a, b| (a, b) != (u, v) && (a, b) != (v, u), |x| x);
        Ok(e)
    }

    /// Re-locates the outer face in `next` through a surviving directed edge
    /// of the current outer face.
    fn carry_outer(
        &self,
        next: &RotationSystem,
        survives: impl Fn(usize, usize) -> bool,
        map: impl Fn(usize) -> usize,
    ) -> Option<Face> {
        let outer = self.outer.as_ref()?;
        outer
            .directed_edges()
            .find(|&(a, b)| survives(a, b))
            .and_then(|(a, b)| next.face_containing(map(a), map(b)).ok())
            .or_else(|| next.faces().into_iter().next())
    }

    /// Removes `r`, relabeling the vertices above it down by one, and returns
    /// the face left where `r` used to be. If `r` was on the outer face, that
    /// face becomes the outer face.
    pub fn delete_vertex(&self, r: usize) -> Result<(Self, Face), EmbeddingError> {
        self.graph.check_vertex(r)?;
        let shift = |v: usize| if v > r { v - 1 } else { v };
        let rotation: Vec<Vec<usize>> = (0..self.vertex_count())
            .filter(|&v| v != r)
            .map(|v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| w != r)
                    .map(|&w| shift(w))
                    .collect()
            })
            .collect();
        let graph = self.graph.delete_vertex(r);
        let mut e = RotationSystem {
            graph,
            rotation,
            outer: None,
        };
        let anchor = self.rotation[r]
            .iter()
            .find(|&&x| self.graph.degree(x) > 1)
            .map(|&x| (x, self.successor(x, r)));
        let (x, y) = anchor.ok_or(EmbeddingError::DegenerateRemoval(r))?;
        let merged = e.face_containing(shift(x), shift(y))?;
        e.outer = match &self.outer {
            Some(o) if o.contains(r) => Some(merged.clone()),
            Some(o) => Some(o.relabeled(shift)),
            None => None,
        };
        Ok((e, merged))
    }

    /// Reverses every rotation (mirror image). Faces reverse orientation.
    pub fn mirrored(&self) -> Self {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        let outer = self.outer.as_ref().map(|f| {
            let mut walk = f.boundary.clone();
            walk.reverse();
            Face::new(walk)
        });
        RotationSystem {
            graph: self.graph,
            rotation,
            outer,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let n = self.vertex_count();
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v].iter().map(|&w| perm[w]).collect();
        }
        let outer = self.outer.as_ref().map(|f| f.relabeled(|v| perm[v]));
        RotationSystem {
            graph: self.graph.permuted(perm),
            rotation,
            outer,
        }
    }
}

impl fmt::Debug for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RotationSystem")
            .field("rotation", &self.rotation)
            .field("outer", &self.outer)
            .finish()
    }
}

impl Serialize for RotationSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RotationSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = EmbeddingJson::deserialize(deserializer)?;
        RotationSystem::from_json(&json).map_err(serde::de::Error::custom)
    }
}
