//! Kuratowski subdivisions: extraction from a nonplanar graph and
//! stand-alone validation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubdivisionKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` inside some graph.
///
/// For `K5`, `branch_vertices` holds five vertices and `paths` the ten
/// connecting paths for pairs `(i, j)`, `i < j`, in lexicographic order.
/// For `K3,3`, the first three branch vertices form one side, the last three
/// the other, and `paths` holds the nine paths `(a_i, b_j)` in row-major order.
/// Every path runs from its first branch vertex to its second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub kind: SubdivisionKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("expected {expected} branch vertices, found {found}")]
    BranchCount { expected: usize, found: usize },
    #[error("branch vertices are not distinct or out of range")]
    BadBranchVertices,
    #[error("expected {expected} paths, found {found}")]
    PathCount { expected: usize, found: usize },
    #[error("path {index} does not join branch vertices {from} and {to}")]
    WrongEndpoints { index: usize, from: usize, to: usize },
    #[error("path {index} uses the non-edge ({u}, {v})")]
    NonEdge { index: usize, u: usize, v: usize },
    #[error("internal vertex {vertex} is shared or is a branch vertex")]
    SharedVertex { vertex: usize },
}

impl SubdivisionWitness {
    /// Branch-vertex pairs each path must join, in path order.
    pub fn required_pairs(&self) -> Vec<(usize, usize)> {
        let b = &self.branch_vertices;
        match self.kind {
            SubdivisionKind::K5 => (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .map(|(i, j)| (b[i], b[j]))
                .collect(),
            SubdivisionKind::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (b[i], b[j]))).collect(),
        }
    }

    /// Checks the subdivision pattern against `g` without any planarity test.
    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        let (branches, paths) = match self.kind {
            SubdivisionKind::K5 => (5, 10),
            SubdivisionKind::K33 => (6, 9),
        };
        if self.branch_vertices.len() != branches {
            return Err(WitnessError::BranchCount {
                expected: branches,
                found: self.branch_vertices.len(),
            });
        }
        let mut used = VertexSet::EMPTY;
        for &v in &self.branch_vertices {
            if v >= g.vertex_count() || used.contains(v) {
                return Err(WitnessError::BadBranchVertices);
            }
            used.insert(v);
        }
        if self.paths.len() != paths {
            return Err(WitnessError::PathCount {
                expected: paths,
                found: self.paths.len(),
            });
        }
        for (index, (path, (from, to))) in self.paths.iter().zip(self.required_pairs()).enumerate() {
            if path.len() < 2 || path[0] != from || path[path.len() - 1] != to {
                return Err(WitnessError::WrongEndpoints { index, from, to });
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(WitnessError::NonEdge {
                        index,
                        u: w[0],
                        v: w[1],
                    });
                }
            }
            for &v in &path[1..path.len() - 1] {
                if used.contains(v) {
                    return Err(WitnessError::SharedVertex { vertex: v });
                }
                used.insert(v);
            }
        }
        Ok(())
    }

    /// The witness as a subgraph of the host graph on `n` vertices.
    pub fn subgraph(&self, n: usize) -> Graph {
        let mut h = Graph::empty(n);
        for p in &self.paths {
            for w in p.windows(2) {
                h.add_edge(w[0], w[1]);
            }
        }
        h
    }
}

/// Shrinks a nonplanar graph to an edge-minimal nonplanar subgraph and reads
/// the subdivision off it.
pub(crate) fn extract(g: &Graph, planar: impl Fn(&Graph) -> bool) -> SubdivisionWitness {
    let n = g.vertex_count();
    let bound = (3 * n).saturating_sub(6);
    let mut h = *g;
    for (u, v) in g.edges() {
        let trial = h.without_edge(u, v);
        // Above the Euler bound the trial is nonplanar without testing.
        if trial.edge_count() > bound || !planar(&trial) {
            h = trial;
        }
    }
    read_subdivision(&h).expect("an edge-minimal nonplanar graph is a Kuratowski subdivision")
}

fn read_subdivision(h: &Graph) -> Option<SubdivisionWitness> {
    let n = h.vertex_count();
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 3).collect();
    let is_branch = |v: usize| h.degree(v) >= 3;
    let trace = |from: usize, first: usize| {
        let mut path = vec![from, first];
        let (mut prev, mut cur) = (from, first);
        while !is_branch(cur) {
            let next = h.neighbors(cur).iter().find(|&w| w != prev)?;
            path.push(next);
            prev = cur;
            cur = next;
        }
        Some(path)
    };
    let path_between = |a: usize, b: usize| {
        h.neighbors(a)
            .iter()
            .filter_map(|x| trace(a, x))
            .find(|p| p[p.len() - 1] == b)
    };

    if branch.len() == 5 && branch.iter().all(|&v| h.degree(v) == 4) {
        let mut paths = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                paths.push(path_between(branch[i], branch[j])?);
            }
        }
        return Some(SubdivisionWitness {
            kind: SubdivisionKind::K5,
            branch_vertices: branch,
            paths,
        });
    }
    if branch.len() == 6 && branch.iter().all(|&v| h.degree(v) == 3) {
        let a0 = branch[0];
        let far: VertexSet = h
            .neighbors(a0)
            .iter()
            .filter_map(|x| trace(a0, x))
            .map(|p| p[p.len() - 1])
            .collect();
        let side_a: Vec<usize> = branch.iter().copied().filter(|&v| !far.contains(v)).collect();
        let side_b: Vec<usize> = far.iter().collect();
        if side_a.len() != 3 || side_b.len() != 3 {
            return None;
        }
        let mut paths = Vec::new();
        for &a in &side_a {
            for &b in &side_b {
                paths.push(path_between(a, b)?);
            }
        }
        let mut branch_vertices = side_a;
        branch_vertices.extend(side_b);
        return Some(SubdivisionWitness {
            kind: SubdivisionKind::K33,
            branch_vertices,
            paths,
        });
    }
    None
}
