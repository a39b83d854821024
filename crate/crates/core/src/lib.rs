//! Exact planarity, thickness-2 and Kuratowski-certificate checking for
//! graphs on at most 16 vertices, together with a computational replay of
//! the argument that `K9` is not biplanar.

pub mod biplanar;
mod canon;
pub mod embedding;
pub mod enumeration;
pub mod graph;
mod graph6;
pub mod kuratowski;
pub mod planarity;
pub mod theorems;

pub use biplanar::{BiplanarPair, PairViolation};
pub use embedding::{EmbeddingError, Face, RotationSystem};
pub use graph::{Graph, GraphError, VertexSet};
pub use kuratowski::{CertificateKind, KuratowskiCertificate};
pub use planarity::{is_planar, PlanarityResult, SubdivisionWitness};
