//! Isomorph-free catalogs of maximal planar graphs on 4 to 9 vertices.
//!
//! Catalog `n` is grown from catalog `n - 1` by placing a new vertex inside
//! every face and joining it to the three face corners, then closed under
//! diagonal flips. Flips connect all triangulations on a fixed vertex count,
//! so the closure is complete once it holds one of them.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::biplanar::BiplanarPair;
use crate::graph::{Graph, Graph6Error};
use crate::planarity::{self, PlanarityResult, SubdivisionWitness};

pub const MIN_CATALOG_VERTICES: usize = 4;
pub const MAX_CATALOG_VERTICES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("triangulation catalogs cover {MIN_CATALOG_VERTICES}..={MAX_CATALOG_VERTICES} vertices, got {0}")]
    OutOfRange(usize),
    #[error("catalog line {line}: {source}")]
    BadLine { line: usize, source: Graph6Error },
    #[error("catalog member {graph6} is invalid: {reason}")]
    InvalidMember { graph6: String, reason: String },
    #[error("catalog lines are not strictly sorted at line {0}")]
    Unsorted(usize),
    #[error("maximal planar graph {0} has a planar complement")]
    PlanarComplement(String),
    #[error("no maximal planar graph on 8 vertices has a planar complement")]
    NoBiplanarK8,
}

/// Maximal planar graphs on `n` vertices, one canonical representative per
/// isomorphism class, sorted by graph6 string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationCatalog {
    n: usize,
    members: Vec<Graph>,
}

impl TriangulationCatalog {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// One graph6 string per line, sorted, newline-terminated.
    pub fn to_lines(&self) -> String {
        self.members.iter().map(|g| g.to_graph6() + "\n").collect()
    }

    /// Parses and fully re-validates a catalog file.
    pub fn from_lines(text: &str) -> Result<Self, EnumerationError> {
        let mut members = Vec::new();
        let mut prev: Option<String> = None;
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let line = line.trim();
            let g = Graph::from_graph6(line).map_err(|source| EnumerationError::BadLine { line: i + 1, source })?;
            if prev.as_deref().is_some_and(|p| p >= line) {
                return Err(EnumerationError::Unsorted(i + 1));
            }
            prev = Some(line.to_string());
            members.push(g);
        }
        let n = members.first().map_or(0, Graph::vertex_count);
        let catalog = TriangulationCatalog { n, members };
        catalog.validate()?;
        Ok(catalog)
    }

    /// Checks every member is canonical, maximal planar, and on `n` vertices.
    /// Canonical members are pairwise non-isomorphic exactly when distinct.
    pub fn validate(&self) -> Result<(), EnumerationError> {
        let mut seen = BTreeSet::new();
        for g in &self.members {
            let invalid = |reason: &str| EnumerationError::InvalidMember {
                graph6: g.to_graph6(),
                reason: reason.to_string(),
            };
            if g.vertex_count() != self.n {
                return Err(invalid("wrong vertex count"));
            }
            if g.canonical_form().map_err(|e| invalid(&e.to_string()))? != *g {
                return Err(invalid("not in canonical form"));
            }
            if !seen.insert(*g) {
                return Err(invalid("duplicate"));
            }
            if !is_maximal_planar(g) {
                return Err(invalid("not maximal planar"));
            }
        }
        Ok(())
    }
}

/// Planar, `3n - 6` edges, and no non-edge can be added planarly.
pub fn is_maximal_planar(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 3
        && g.edge_count() == 3 * n - 6
        && planarity::planar(g)
        && g.complement()
            .edges()
            .all(|(u, v)| !planarity::planar(&g.with_edge(u, v)))
}

static CATALOGS: [OnceLock<TriangulationCatalog>; MAX_CATALOG_VERTICES + 1] =
    [const { OnceLock::new() }; MAX_CATALOG_VERTICES + 1];

/// All maximal planar graphs on `n` vertices up to isomorphism. Results are
/// memoized per `n`.
pub fn enumerate_triangulations(n: usize) -> Result<&'static TriangulationCatalog, EnumerationError> {
    if !(MIN_CATALOG_VERTICES..=MAX_CATALOG_VERTICES).contains(&n) {
        return Err(EnumerationError::OutOfRange(n));
    }
    if let Some(c) = CATALOGS[n].get() {
        return Ok(c);
    }
    let seeds: BTreeSet<Graph> = if n == MIN_CATALOG_VERTICES {
        BTreeSet::from([canonical(&Graph::complete(4))])
    } else {
        enumerate_triangulations(n - 1)?
            .members
            .iter()
            .flat_map(stackings)
            .collect()
    };
    let members = flip_closure(seeds);
    Ok(CATALOGS[n].get_or_init(|| TriangulationCatalog { n, members }))
}

fn canonical(g: &Graph) -> Graph {
    g.canonical_form().expect("catalog graphs have at most 10 vertices")
}

fn plane_faces(g: &Graph) -> Vec<[usize; 3]> {
    let e = planarity::is_planar(g)
        .into_embedding()
        .expect("triangulations are planar");
    e.faces()
        .iter()
        .map(|f| [f.boundary()[0], f.boundary()[1], f.boundary()[2]])
        .collect()
}

/// The graphs obtained by adding a degree-3 vertex inside each face.
fn stackings(g: &Graph) -> Vec<Graph> {
    let n = g.vertex_count();
    plane_faces(g)
        .into_iter()
        .map(|[a, b, c]| {
            let mut h = Graph::empty(n + 1);
            for (u, v) in g.edges() {
                h.add_edge(u, v);
            }
            h.add_edge(n, a);
            h.add_edge(n, b);
            h.add_edge(n, c);
            canonical(&h)
        })
        .collect()
}

/// Every triangulation obtained from `g` by one diagonal flip, canonicalized.
pub fn flips(g: &Graph) -> Vec<Graph> {
    let mut apex = BTreeMap::new();
    for [a, b, c] in plane_faces(g) {
        apex.insert((a, b), c);
        apex.insert((b, c), a);
        apex.insert((c, a), b);
    }
    g.edges()
        .filter_map(|(a, b)| {
            let (c, d) = (apex[&(a, b)], apex[&(b, a)]);
            (c != d && !g.has_edge(c, d)).then(|| canonical(&g.without_edge(a, b).with_edge(c, d)))
        })
        .collect()
}

fn flip_closure(seeds: BTreeSet<Graph>) -> Vec<Graph> {
    let mut found: BTreeSet<Graph> = seeds.clone();
    let mut queue: Vec<Graph> = seeds.into_iter().collect();
    while let Some(g) = queue.pop() {
        for h in flips(&g) {
            if found.insert(h) {
                queue.push(h);
            }
        }
    }
    let mut members: Vec<Graph> = found.into_iter().collect();
    members.sort_by_cached_key(Graph::to_graph6);
    members
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementCheck {
    pub graph6: String,
    pub complement_graph6: String,
    pub complement_verdict: String,
    pub witness: Option<SubdivisionWitness>,
    pub witness_valid: bool,
}

/// Complement check of every 9-vertex maximal planar graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub triangulations: usize,
    pub entries: Vec<ComplementCheck>,
}

impl Theorem1Report {
    pub fn all_nonplanar(&self) -> bool {
        self.entries.iter().all(|e| e.witness.is_some() && e.witness_valid)
    }
}

/// Checks that the complement of a single triangulation is nonplanar.
pub fn check_complement(t: &Graph) -> ComplementCheck {
    let comp = t.complement();
    let result = planarity::is_planar(&comp);
    let verdict = if result.is_planar() { "planar" } else { "nonplanar" };
    let witness = match result {
        PlanarityResult::Nonplanar { subdivision } => Some(subdivision),
        PlanarityResult::Planar { .. } => None,
    };
    let witness_valid = witness.as_ref().is_some_and(|w| w.validate(&comp).is_ok());
    ComplementCheck {
        graph6: t.to_graph6(),
        complement_graph6: comp.to_graph6(),
        complement_verdict: verdict.to_string(),
        witness,
        witness_valid,
    }
}

/// Every maximal planar graph on nine vertices has a nonplanar complement,
/// each backed by a re-validated subdivision witness. Since any biplanar
/// `K9` could be augmented until its first side is maximal planar, this
/// shows `K9` is not biplanar.
pub fn verify_theorem1() -> Result<Theorem1Report, EnumerationError> {
    verify_theorem1_on(enumerate_triangulations(9)?)
}

/// Same check against a given (for example, file-loaded) catalog.
pub fn verify_theorem1_on(catalog: &TriangulationCatalog) -> Result<Theorem1Report, EnumerationError> {
    let entries: Vec<ComplementCheck> = catalog.members().iter().map(check_complement).collect();
    if let Some(bad) = entries.iter().find(|e| e.witness.is_none() || !e.witness_valid) {
        return Err(EnumerationError::PlanarComplement(bad.graph6.clone()));
    }
    Ok(Theorem1Report {
        triangulations: catalog.len(),
        entries,
    })
}

/// A biplanar decomposition of `K8`: the first 8-vertex maximal planar graph
/// (in catalog order) whose complement is planar, with both sides embedded.
pub fn find_biplanar_k8() -> Result<BiplanarPair, EnumerationError> {
    complete_pair_from_catalog(8)?.ok_or(EnumerationError::NoBiplanarK8)
}

/// First catalog member on `n` vertices with a planar complement, as a pair.
pub(crate) fn complete_pair_from_catalog(n: usize) -> Result<Option<BiplanarPair>, EnumerationError> {
    for t in enumerate_triangulations(n)?.members() {
        if let PlanarityResult::Planar { embedding: second } = planarity::is_planar(&t.complement()) {
            let first = planarity::is_planar(t)
                .into_embedding()
                .expect("catalog members are planar");
            let pair = BiplanarPair::complete(first, second).expect("complementary plane embeddings");
            return Ok(Some(pair));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_catalog_counts() {
        let counts: Vec<usize> = (4..=7).map(|n| enumerate_triangulations(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5]);
        assert_eq!(
            enumerate_triangulations(4).unwrap().members()[0],
            canonical(&Graph::complete(4))
        );
    }

    #[test]
    fn range_checks() {
        assert_eq!(enumerate_triangulations(3), Err(EnumerationError::OutOfRange(3)));
        assert_eq!(enumerate_triangulations(10), Err(EnumerationError::OutOfRange(10)));
    }

    #[test]
    fn catalog_file_round_trip() {
        let c = enumerate_triangulations(7).unwrap();
        let text = c.to_lines();
        assert_eq!(text.lines().count(), 5);
        assert_eq!(&TriangulationCatalog::from_lines(&text).unwrap(), c);

        let mut lines: Vec<&str> = text.lines().collect();
        lines.swap(0, 1);
        assert_eq!(
            TriangulationCatalog::from_lines(&lines.join("\n")),
            Err(EnumerationError::Unsorted(2))
        );
        let cycle = Graph::cycle(7).canonical_form().unwrap().to_graph6();
        assert!(matches!(
            TriangulationCatalog::from_lines(&cycle),
            Err(EnumerationError::InvalidMember { .. })
        ));
    }

    #[test]
    fn maximality_predicate() {
        assert!(is_maximal_planar(&Graph::complete(4)));
        assert!(!is_maximal_planar(&Graph::wheel(5)));
        assert!(!is_maximal_planar(&Graph::complete(5)));
    }
}
