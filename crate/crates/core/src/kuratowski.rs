//! Nonplanarity certificates made of disjoint connected vertex sets.
//!
//! Condition (i): six parts `A1..A3`, `B1..B3` with an edge between every
//! `Ai` and `Bj`; contracting the parts gives a `K3,3` minor. Condition (ii):
//! five parts with an edge between every two of them, a `K5` minor.
//! Connectivity is recomputed on each check, so a certificate stays valid
//! when edges are added to the graph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::planarity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Six parts against each other in a 3 + 3 pattern.
    ConditionI,
    /// Five mutually adjacent parts.
    ConditionIi,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KuratowskiCertificate {
    pub kind: CertificateKind,
    pub parts_a: Vec<VertexSet>,
    pub parts_b: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("{kind:?} needs {expected_a} + {expected_b} parts, got {found_a} + {found_b}")]
    PartCount {
        kind: CertificateKind,
        expected_a: usize,
        expected_b: usize,
        found_a: usize,
        found_b: usize,
    },
    #[error("part {0} is empty")]
    EmptyPart(usize),
    #[error("parts {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("vertex {vertex} is not a vertex of the {n}-vertex graph")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("certificate does not verify")]
    Rejected,
}

impl KuratowskiCertificate {
    pub fn condition_i(parts_a: [VertexSet; 3], parts_b: [VertexSet; 3]) -> Self {
        KuratowskiCertificate {
            kind: CertificateKind::ConditionI,
            parts_a: parts_a.to_vec(),
            parts_b: parts_b.to_vec(),
        }
    }

    pub fn condition_ii(parts: [VertexSet; 5]) -> Self {
        KuratowskiCertificate {
            kind: CertificateKind::ConditionIi,
            parts_a: parts.to_vec(),
            parts_b: Vec::new(),
        }
    }

    /// All parts, `parts_a` first.
    pub fn parts(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.parts_a.iter().chain(&self.parts_b).copied()
    }

    /// Index pairs into [`parts`](Self::parts) that must be joined by an edge.
    pub fn required_pairs(&self) -> Vec<(usize, usize)> {
        match self.kind {
            CertificateKind::ConditionI => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
            CertificateKind::ConditionIi => (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect(),
        }
    }

    fn check_shape(&self, n: usize) -> Result<Vec<VertexSet>, CertificateError> {
        let (ea, eb) = match self.kind {
            CertificateKind::ConditionI => (3, 3),
            CertificateKind::ConditionIi => (5, 0),
        };
        if self.parts_a.len() != ea || self.parts_b.len() != eb {
            return Err(CertificateError::PartCount {
                kind: self.kind,
                expected_a: ea,
                expected_b: eb,
                found_a: self.parts_a.len(),
                found_b: self.parts_b.len(),
            });
        }
        let parts: Vec<VertexSet> = self.parts().collect();
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(CertificateError::EmptyPart(i));
            }
            if let Some(vertex) = p.iter().find(|&v| v >= n) {
                return Err(CertificateError::VertexOutOfRange { vertex, n });
            }
            if let Some(j) = (0..i).find(|&j| !parts[j].is_disjoint(*p)) {
                return Err(CertificateError::Overlap(j, i));
            }
        }
        Ok(parts)
    }
}

fn touches(g: &Graph, a: VertexSet, b: VertexSet) -> bool {
    a.iter().any(|v| !g.neighbors(v).is_disjoint(b))
}

/// Whether every part is connected in `g` and every required pair of parts
/// is joined by an edge. Malformed certificates are errors, not `false`.
pub fn verify(g: &Graph, c: &KuratowskiCertificate) -> Result<bool, CertificateError> {
    let parts = c.check_shape(g.vertex_count())?;
    let connected = parts.iter().all(|&p| g.is_connected_within(p).unwrap_or(false));
    Ok(connected
        && c.required_pairs()
            .into_iter()
            .all(|(i, j)| touches(g, parts[i], parts[j])))
}

/// Checks the certificate, then confirms the planarity test also rejects `g`.
pub fn certified_nonplanar(g: &Graph, c: &KuratowskiCertificate) -> Result<bool, CertificateError> {
    if !verify(g, c)? {
        return Err(CertificateError::Rejected);
    }
    Ok(!planarity::planar(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn singletons_on_k33_and_k5() {
        let k33 = Graph::complete_bipartite(3, 3);
        let c = KuratowskiCertificate::condition_i([s(&[0]), s(&[1]), s(&[2])], [s(&[3]), s(&[4]), s(&[5])]);
        assert_eq!(verify(&k33, &c), Ok(true));
        assert_eq!(certified_nonplanar(&k33, &c), Ok(true));

        let k5 = Graph::complete(5);
        let c = KuratowskiCertificate::condition_ii([s(&[0]), s(&[1]), s(&[2]), s(&[3]), s(&[4])]);
        assert_eq!(verify(&k5, &c), Ok(true));
        assert_eq!(certified_nonplanar(&k5, &c), Ok(true));
    }

    #[test]
    fn contracted_parts_on_petersen() {
        // Contract each spoke of the Petersen graph to get a K5 minor.
        let p = Graph::petersen();
        let c = KuratowskiCertificate::condition_ii([s(&[0, 5]), s(&[1, 6]), s(&[2, 7]), s(&[3, 8]), s(&[4, 9])]);
        assert_eq!(verify(&p, &c), Ok(true));
    }

    #[test]
    fn malformed_certificates() {
        let k5 = Graph::complete(5);
        let c = KuratowskiCertificate::condition_ii([s(&[0, 1]), s(&[1]), s(&[2]), s(&[3]), s(&[4])]);
        assert_eq!(verify(&k5, &c), Err(CertificateError::Overlap(0, 1)));
        let c = KuratowskiCertificate::condition_ii([VertexSet::EMPTY, s(&[1]), s(&[2]), s(&[3]), s(&[4])]);
        assert_eq!(verify(&k5, &c), Err(CertificateError::EmptyPart(0)));
        let mut c = KuratowskiCertificate::condition_ii([s(&[0]), s(&[1]), s(&[2]), s(&[3]), s(&[4])]);
        c.parts_b.push(s(&[0]));
        assert!(matches!(verify(&k5, &c), Err(CertificateError::PartCount { .. })));
        let c = KuratowskiCertificate::condition_ii([s(&[0]), s(&[1]), s(&[2]), s(&[3]), s(&[7])]);
        assert_eq!(
            verify(&k5, &c),
            Err(CertificateError::VertexOutOfRange { vertex: 7, n: 5 })
        );
    }

    #[test]
    fn disconnected_part_fails() {
        let g = Graph::complete(6).without_edge(0, 5);
        let c = KuratowskiCertificate::condition_ii([s(&[0, 5]), s(&[1]), s(&[2]), s(&[3]), s(&[4])]);
        assert_eq!(verify(&g, &c), Ok(false));
        let k4 = Graph::complete(4);
        let c = KuratowskiCertificate::condition_ii([s(&[0]), s(&[1]), s(&[2]), s(&[3]), s(&[3])]);
        assert!(verify(&k4, &c).is_err());
        assert_eq!(
            certified_nonplanar(
                &Graph::cycle(5),
                &KuratowskiCertificate::condition_ii([s(&[0]), s(&[1]), s(&[2]), s(&[3]), s(&[4])])
            ),
            Err(CertificateError::Rejected)
        );
    }

    #[test]
    fn json_schema() {
        let c = KuratowskiCertificate::condition_i([s(&[0]), s(&[1]), s(&[2])], [s(&[3, 6]), s(&[4]), s(&[5])]);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(
            text,
            r#"{"kind":"condition_i","parts_a":[[0],[1],[2]],"parts_b":[[3,6],[4],[5]]}"#
        );
        let back: KuratowskiCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }
}
