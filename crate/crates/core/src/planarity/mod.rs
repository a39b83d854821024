//! Planarity testing with a witness either way: a plane rotation system for
//! planar graphs, a `K5` or `K3,3` subdivision otherwise.

mod dmp;
mod oracle;
mod witness;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::RotationSystem;
use crate::graph::Graph;

pub use oracle::{subdivision_oracle, MAX_ORACLE_VERTICES};
pub use witness::{SubdivisionKind, SubdivisionWitness, WitnessError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("the Euler edge bound needs at least 3 vertices, got {0}")]
pub struct EulerBoundError(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum PlanarityResult {
    Planar { embedding: RotationSystem },
    Nonplanar { subdivision: SubdivisionWitness },
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Planar { .. })
    }

    pub fn embedding(&self) -> Option<&RotationSystem> {
        match self {
            PlanarityResult::Planar { embedding } => Some(embedding),
            PlanarityResult::Nonplanar { .. } => None,
        }
    }

    pub fn subdivision(&self) -> Option<&SubdivisionWitness> {
        match self {
            PlanarityResult::Planar { .. } => None,
            PlanarityResult::Nonplanar { subdivision } => Some(subdivision),
        }
    }

    pub fn into_embedding(self) -> Option<RotationSystem> {
        match self {
            PlanarityResult::Planar { embedding } => Some(embedding),
            PlanarityResult::Nonplanar { .. } => None,
        }
    }
}

/// Decides planarity and attaches the matching witness.
pub fn is_planar(g: &Graph) -> PlanarityResult {
    match dmp::embed(g) {
        Some(rotation) => {
            let embedding = RotationSystem::new(*g, rotation).expect("embedder returns permutations");
            debug_assert!(embedding.is_plane());
            PlanarityResult::Planar { embedding }
        }
        None => PlanarityResult::Nonplanar {
            subdivision: witness::extract(g, planar),
        },
    }
}

/// Verdict only, without building either witness.
pub fn planar(g: &Graph) -> bool {
    dmp::embed(g).is_some()
}

/// Maximum edge count `3n - 6` of a planar graph on `n >= 3` vertices.
pub fn euler_edge_bound(n: usize) -> Result<usize, EulerBoundError> {
    if n < 3 {
        return Err(EulerBoundError(n));
    }
    Ok(3 * n - 6)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_named_graphs() {
        assert!(is_planar(&Graph::complete(4)).is_planar());
        let k5 = is_planar(&Graph::complete(5));
        let w = k5.subdivision().expect("K5 is nonplanar");
        assert_eq!(w.kind, SubdivisionKind::K5);
        assert!(w.paths.iter().all(|p| p.len() == 2));
        w.validate(&Graph::complete(5)).unwrap();

        let k33 = Graph::complete_bipartite(3, 3);
        let w = is_planar(&k33).subdivision().cloned().expect("K3,3 is nonplanar");
        assert_eq!(w.kind, SubdivisionKind::K33);
        w.validate(&k33).unwrap();

        let p = Graph::petersen();
        let w = is_planar(&p).subdivision().cloned().expect("Petersen is nonplanar");
        w.validate(&p).unwrap();
        let oracle = subdivision_oracle(&p).unwrap().expect("oracle agrees");
        oracle.validate(&p).unwrap();
    }

    #[test]
    fn embeddings_are_plane() {
        for g in [Graph::cycle(7), Graph::wheel(6), Graph::complete(4), Graph::empty(3)] {
            let e = is_planar(&g).into_embedding().unwrap();
            assert!(e.is_plane());
            assert_eq!(e.graph(), &g);
        }
    }

    #[test]
    fn disconnected_with_nonplanar_component() {
        // K5 on 0..5 plus a separate triangle.
        let mut g = Graph::empty(8);
        for (u, v) in Graph::complete(5).edges() {
            g.add_edge(u, v);
        }
        g.add_edge(5, 6);
        g.add_edge(6, 7);
        g.add_edge(5, 7);
        let w = is_planar(&g).subdivision().cloned().unwrap();
        w.validate(&g).unwrap();
        assert!(w.branch_vertices.iter().all(|&v| v < 5));
    }

    #[test]
    fn euler_bound_values() {
        assert_eq!(euler_edge_bound(11), Ok(27));
        assert_eq!(euler_edge_bound(3), Ok(3));
        assert_eq!(euler_edge_bound(9), Ok(3 * 9 - 6));
        assert_eq!(euler_edge_bound(2), Err(EulerBoundError(2)));
    }

    #[test]
    fn oracle_cases() {
        let k5_minus = Graph::complete(5).without_edge(0, 1);
        assert_eq!(subdivision_oracle(&k5_minus).unwrap(), None);
        let k6 = Graph::complete(6);
        subdivision_oracle(&k6).unwrap().unwrap().validate(&k6).unwrap();
        assert!(subdivision_oracle(&Graph::empty(11)).is_err());
    }

    #[test]
    fn witness_validation_catches_tampering() {
        let k5 = Graph::complete(5);
        let mut w = is_planar(&k5).subdivision().cloned().unwrap();
        w.paths[0] = vec![w.branch_vertices[0], w.branch_vertices[2]];
        assert!(matches!(
            w.validate(&k5),
            Err(WitnessError::WrongEndpoints { index: 0, .. })
        ));
        let w = SubdivisionWitness {
            kind: SubdivisionKind::K5,
            branch_vertices: vec![0, 1, 2, 3],
            paths: vec![],
        };
        assert!(matches!(w.validate(&k5), Err(WitnessError::BranchCount { .. })));
    }
}
