//! Pairs of plane embeddings that split a host graph, thickness-2 decisions,
//! one-crossing tests, and the refuter for claimed biplanar `K9` splits.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::{EmbeddingError, EmbeddingJson, Face, RotationSystem};
use crate::enumeration::{self, EnumerationError};
use crate::graph::{Graph, GraphError};
use crate::planarity;

/// Largest vertex count the exhaustive thickness search accepts.
pub const MAX_THICKNESS_VERTICES: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    First,
    Second,
}

/// Why a pair of rotation systems is not a biplanar split of its host.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum PairViolation {
    #[error("expected {expected} vertices, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("{side:?} side rotation is malformed: {reason}")]
    MalformedRotation { side: Side, reason: String },
    #[error("edge ({u}, {v}) lies on both sides")]
    Overlap { u: usize, v: usize },
    #[error("edge ({u}, {v}) of the host lies on neither side")]
    MissingEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) is not an edge of the host")]
    ForeignEdge { u: usize, v: usize },
    #[error("{side:?} side has {edges} edges, more than the planar bound {bound}")]
    EulerBound { side: Side, edges: usize, bound: usize },
    #[error("{side:?} side is not a plane embedding: {reason}")]
    NotPlane { side: Side, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiplanarError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Pair(#[from] PairViolation),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("thickness search handles at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("frozen pair ({u}, {v}) is already an edge of the first side")]
    FrozenEdgePresent { u: usize, v: usize },
    #[error("no 9-vertex triangulation complement has crossing number at most one")]
    NoCrossingWitness,
}

/// Plane embeddings `first` and `second` whose edge sets partition `host`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiplanarPair {
    host: Graph,
    first: RotationSystem,
    second: RotationSystem,
}

/// JSON shape of a pair; `host` is a graph6 string and defaults to `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub host: Option<String>,
    pub first: EmbeddingJson,
    pub second: EmbeddingJson,
}

fn check_split(host: &Graph, first: &RotationSystem, second: &RotationSystem) -> Result<(), PairViolation> {
    let n = host.vertex_count();
    for e in [first, second] {
        if e.vertex_count() != n {
            return Err(PairViolation::VertexCount {
                expected: n,
                found: e.vertex_count(),
            });
        }
    }
    let (a, b) = (first.graph(), second.graph());
    if let Some((u, v)) = a.intersection(b).edges().next() {
        return Err(PairViolation::Overlap { u, v });
    }
    let both = a.union(b);
    if let Some((u, v)) = host.difference(&both).edges().next() {
        return Err(PairViolation::MissingEdge { u, v });
    }
    if let Some((u, v)) = both.difference(host).edges().next() {
        return Err(PairViolation::ForeignEdge { u, v });
    }
    let bound = (3 * n).saturating_sub(6).max(n.saturating_sub(1));
    for (side, e) in [(Side::First, first), (Side::Second, second)] {
        if e.graph().edge_count() > bound {
            return Err(PairViolation::EulerBound {
                side,
                edges: e.graph().edge_count(),
                bound,
            });
        }
    }
    for (side, e) in [(Side::First, first), (Side::Second, second)] {
        e.euler_check().map_err(|err| PairViolation::NotPlane {
            side,
            reason: err.to_string(),
        })?;
    }
    Ok(())
}

impl BiplanarPair {
    pub fn new(host: Graph, first: RotationSystem, second: RotationSystem) -> Result<Self, PairViolation> {
        check_split(&host, &first, &second)?;
        Ok(BiplanarPair { host, first, second })
    }

    /// A split of the complete graph on the embeddings' vertex count.
    pub fn complete(first: RotationSystem, second: RotationSystem) -> Result<Self, PairViolation> {
        Self::new(Graph::complete(first.vertex_count()), first, second)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn first(&self) -> &RotationSystem {
        &self.first
    }

    pub fn second(&self) -> &RotationSystem {
        &self.second
    }

    pub fn vertex_count(&self) -> usize {
        self.host.vertex_count()
    }

    /// Re-runs every check on the stored embeddings.
    pub fn validate(&self) -> Result<(), PairViolation> {
        check_split(&self.host, &self.first, &self.second)
    }

    pub fn swapped(&self) -> Self {
        BiplanarPair {
            host: self.host,
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// Replaces the embeddings without re-checking; callers keep the split intact.
    pub(crate) fn from_parts(host: Graph, first: RotationSystem, second: RotationSystem) -> Self {
        debug_assert!(check_split(&host, &first, &second).is_ok());
        BiplanarPair { host, first, second }
    }

    pub fn to_json(&self) -> PairJson {
        let n = self.vertex_count();
        PairJson {
            n,
            host: (self.host != Graph::complete(n)).then(|| self.host.to_graph6()),
            first: self.first.to_json(),
            second: self.second.to_json(),
        }
    }

    pub fn from_json(json: &PairJson) -> Result<Self, PairViolation> {
        let host = match &json.host {
            Some(text) => Graph::from_graph6(text).map_err(|e| PairViolation::MalformedRotation {
                side: Side::First,
                reason: format!("bad host: {e}"),
            })?,
            None => Graph::try_empty(json.n).map(|_| Graph::complete(json.n)).map_err(|e| {
                PairViolation::MalformedRotation {
                    side: Side::First,
                    reason: e.to_string(),
                }
            })?,
        };
        let embed = |side, e: &EmbeddingJson| {
            RotationSystem::from_json(e).map_err(|err| PairViolation::MalformedRotation {
                side,
                reason: err.to_string(),
            })
        };
        Self::new(
            host,
            embed(Side::First, &json.first)?,
            embed(Side::Second, &json.second)?,
        )
    }

    /// Moves host edges from `second` into faces of `first` until no face of
    /// `first` has two non-adjacent boundary vertices joined in the host. On
    /// `K_n` the first side ends as a triangulation.
    pub fn augment_to_maximal(&self) -> BiplanarPair {
        self.augment(&[], false).expect("unrestricted augmentation cannot fail")
    }

    /// Like [`augment_to_maximal`](Self::augment_to_maximal) but never
    /// draws an edge inside the outer face of `first` and never joins a pair
    /// in `frozen`.
    pub fn restricted_augment(&self, frozen: &[(usize, usize)]) -> Result<BiplanarPair, BiplanarError> {
        self.augment(frozen, true)
    }

    fn augment(&self, frozen: &[(usize, usize)], keep_outer: bool) -> Result<BiplanarPair, BiplanarError> {
        let (first, added) = augment_embedding(&self.first, &self.host, frozen, keep_outer)?;
        let mut second = self.second.clone();
        for (u, v) in added {
            second = second.remove_edge(u, v)?;
        }
        Ok(BiplanarPair::from_parts(self.host, first, second))
    }
}

/// Draws host edges into faces of `e` until no eligible face has two
/// non-adjacent boundary vertices joined in `host`, skipping `frozen` pairs
/// and, with `keep_outer`, the outer face. Returns the grown embedding and
/// the edges added, in order.
pub fn augment_embedding(
    e: &RotationSystem,
    host: &Graph,
    frozen: &[(usize, usize)],
    keep_outer: bool,
) -> Result<(RotationSystem, Vec<(usize, usize)>), BiplanarError> {
    for &(u, v) in frozen {
        if e.graph().has_edge(u, v) {
            return Err(BiplanarError::FrozenEdgePresent { u, v });
        }
    }
    let allowed = |g: &Graph, u: usize, v: usize| {
        host.has_edge(u, v) && !g.has_edge(u, v) && !frozen.iter().any(|&p| p == (u, v) || p == (v, u))
    };
    let mut e = e.clone();
    let mut added = Vec::new();
    while let Some((u, v, face)) = next_augmenting_edge(&e, keep_outer, allowed) {
        e = match face {
            Some(f) => e.insert_edge_in_face(u, v, &f)?,
            None => first_edge(&e, u, v)?,
        };
        added.push((u.min(v), u.max(v)));
    }
    Ok((e, added))
}

/// The next host pair to draw in `e`, with the face to draw it in. `None`
/// as the face means `e` has no edges yet.
fn next_augmenting_edge(
    e: &RotationSystem,
    keep_outer: bool,
    allowed: impl Fn(&Graph, usize, usize) -> bool,
) -> Option<(usize, usize, Option<Face>)> {
    let g = e.graph();
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| allowed(g, u, v))
            .map(|(u, v)| (u, v, None));
    }
    let faces: Vec<Face> = e
        .faces()
        .into_iter()
        .filter(|f| !(keep_outer && Some(f) == e.outer_face()))
        .collect();
    for f in &faces {
        let vs = f.vertices().to_vec();
        for (i, &u) in vs.iter().enumerate() {
            if let Some(&v) = vs[i + 1..].iter().find(|&&v| allowed(g, u, v)) {
                return Some((u, v, Some(f.clone())));
            }
        }
    }
    // Isolated vertices can go into any face; use the first one.
    let f = faces.first()?;
    (0..n).filter(|&x| g.degree(x) == 0).find_map(|x| {
        f.vertices()
            .iter()
            .find(|&y| allowed(g, x, y))
            .map(|y| (x, y, Some(f.clone())))
    })
}

fn first_edge(e: &RotationSystem, u: usize, v: usize) -> Result<RotationSystem, EmbeddingError> {
    let mut rotation: Vec<Vec<usize>> = (0..e.vertex_count()).map(|x| e.rotation(x).to_vec()).collect();
    rotation[u].push(v);
    rotation[v].push(u);
    RotationSystem::new(e.graph().with_edge(u, v), rotation)
}

/// Outcome of a thickness-2 test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThicknessDecision {
    AtMostTwo(BiplanarPair),
    MoreThanTwo(NotBiplanarReason),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NotBiplanarReason {
    /// More edges than two planar graphs on `n` vertices can hold.
    EdgeCount { edges: usize, bound: usize },
    /// Complete graph whose every maximal planar split has a nonplanar complement.
    TriangulationComplements { triangulations: usize },
    /// Exhaustive edge bipartition search found no split.
    ExhaustiveSearch { nodes: u64 },
}

impl ThicknessDecision {
    pub fn is_biplanar(&self) -> bool {
        matches!(self, ThicknessDecision::AtMostTwo(_))
    }

    pub fn pair(&self) -> Option<&BiplanarPair> {
        match self {
            ThicknessDecision::AtMostTwo(p) => Some(p),
            ThicknessDecision::MoreThanTwo(_) => None,
        }
    }
}

fn embed(g: &Graph) -> RotationSystem {
    planarity::is_planar(g)
        .into_embedding()
        .expect("caller checked planarity")
}

/// Decides whether `g` splits into two planar graphs, for `n <= 9`.
///
/// Up to eight vertices a split of `K_n` restricts to every `g`. On nine
/// vertices `K9` is settled by the triangulation catalog and any other graph
/// by a backtracking search over edge bipartitions.
pub fn thickness_at_most_2(g: &Graph) -> Result<ThicknessDecision, BiplanarError> {
    let n = g.vertex_count();
    if n > MAX_THICKNESS_VERTICES {
        return Err(BiplanarError::TooManyVertices {
            n,
            max: MAX_THICKNESS_VERTICES,
        });
    }
    let bound = 2 * (3 * n).saturating_sub(6);
    if n >= 3 && g.edge_count() > bound {
        return Ok(ThicknessDecision::MoreThanTwo(NotBiplanarReason::EdgeCount {
            edges: g.edge_count(),
            bound,
        }));
    }
    if planarity::planar(g) {
        let pair = BiplanarPair::new(*g, embed(g), embed(&Graph::empty(n)))?;
        return Ok(ThicknessDecision::AtMostTwo(pair));
    }
    if n <= 8 {
        let full = enumeration::complete_pair_from_catalog(n)?.expect("K_n is biplanar for n <= 8");
        return Ok(ThicknessDecision::AtMostTwo(restrict(&full, g)?));
    }
    if *g == Graph::complete(n) {
        return Ok(match enumeration::complete_pair_from_catalog(n)? {
            Some(p) => ThicknessDecision::AtMostTwo(p),
            None => ThicknessDecision::MoreThanTwo(NotBiplanarReason::TriangulationComplements {
                triangulations: enumeration::enumerate_triangulations(n)?.len(),
            }),
        });
    }
    let mut search = PartitionSearch::new(g);
    Ok(match search.run() {
        Some((a, b)) => ThicknessDecision::AtMostTwo(BiplanarPair::new(*g, embed(&a), embed(&b))?),
        None => ThicknessDecision::MoreThanTwo(NotBiplanarReason::ExhaustiveSearch { nodes: search.nodes }),
    })
}

/// Drops the edges of a `K_n` split that are not in `g`.
fn restrict(pair: &BiplanarPair, g: &Graph) -> Result<BiplanarPair, BiplanarError> {
    let mut sides = [pair.first.clone(), pair.second.clone()];
    for side in &mut sides {
        for (u, v) in side.graph().difference(g).edges().collect::<Vec<_>>() {
            *side = side.remove_edge(u, v)?;
        }
    }
    let [first, second] = sides;
    Ok(BiplanarPair::new(*g, first, second)?)
}

struct PartitionSearch {
    n: usize,
    edges: Vec<(usize, usize)>,
    bound: usize,
    nodes: u64,
}

impl PartitionSearch {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        // High-degree vertices first so nonplanar sides surface early.
        edges.sort_by_key(|&(u, v)| std::cmp::Reverse((g.degree(u) + g.degree(v), usize::MAX - u, usize::MAX - v)));
        PartitionSearch {
            n,
            edges,
            bound: 3 * n - 6,
            nodes: 0,
        }
    }

    fn run(&mut self) -> Option<(Graph, Graph)> {
        let empty = Graph::empty(self.n);
        self.extend(0, empty, empty)
    }

    fn extend(&mut self, i: usize, a: Graph, b: Graph) -> Option<(Graph, Graph)> {
        self.nodes += 1;
        let Some(&(u, v)) = self.edges.get(i) else {
            return Some((a, b));
        };
        let remaining = self.edges.len() - i;
        if remaining > 2 * self.bound - a.edge_count() - b.edge_count() {
            return None;
        }
        let sides = if i == 0 { 1 } else { 2 };
        for s in 0..sides {
            let (na, nb) = if s == 0 {
                (a.with_edge(u, v), b)
            } else {
                (a, b.with_edge(u, v))
            };
            let grown = if s == 0 { &na } else { &nb };
            if grown.edge_count() > self.bound || (grown.edge_count() >= 9 && !planarity::planar(grown)) {
                continue;
            }
            if let Some(found) = self.extend(i + 1, na, nb) {
                return Some(found);
            }
        }
        None
    }
}

/// Result of the at-most-one-crossing test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CrossingDecision {
    Planar,
    /// Drawing `first` and `second` through one shared crossing point makes
    /// the graph planar.
    OneCrossing {
        first: (usize, usize),
        second: (usize, usize),
    },
    AtLeastTwo,
}

/// `g` with the edges `e` and `f` replaced by a new vertex joined to all
/// four of their endpoints.
pub fn planarize(g: &Graph, e: (usize, usize), f: (usize, usize)) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    let mut h = Graph::try_empty(n + 1)?;
    for (u, v) in g.edges().filter(|&x| x != e && x != f) {
        h.add_edge(u, v);
    }
    for x in [e.0, e.1, f.0, f.1] {
        h.add_edge(n, x);
    }
    Ok(h)
}

/// Whether `g` can be drawn with at most one crossing. Tries every pair of
/// vertex-disjoint edges in lexicographic order.
pub fn crossing_le_1(g: &Graph) -> Result<CrossingDecision, GraphError> {
    if planarity::planar(g) {
        return Ok(CrossingDecision::Planar);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                continue;
            }
            if planarity::planar(&planarize(g, e, f)?) {
                return Ok(CrossingDecision::OneCrossing { first: e, second: f });
            }
        }
    }
    Ok(CrossingDecision::AtLeastTwo)
}

/// Witness that the biplanar crossing number of `K9` is exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K9CrossingWitness {
    pub value: usize,
    /// Maximal planar first side.
    pub triangulation: Graph,
    /// The complement drawn with one crossing between these edges.
    pub crossing: ((usize, usize), (usize, usize)),
    /// Number of triangulations whose complements were all shown nonplanar.
    pub lower_bound_checked: usize,
}

/// Upper bound: a triangulation whose complement has a one-crossing drawing.
/// Lower bound: no triangulation has a planar complement.
pub fn biplanar_crossing_k9() -> Result<K9CrossingWitness, BiplanarError> {
    let report = enumeration::verify_theorem1()?;
    for t in enumeration::enumerate_triangulations(9)?.members() {
        if let CrossingDecision::OneCrossing { first, second } = crossing_le_1(&t.complement())? {
            return Ok(K9CrossingWitness {
                value: 1,
                triangulation: *t,
                crossing: (first, second),
                lower_bound_checked: report.triangulations,
            });
        }
    }
    Err(BiplanarError::NoCrossingWitness)
}

/// A claimed biplanar split of `K9`, given as raw rotation lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedPair {
    pub n: usize,
    pub first: Vec<Vec<usize>>,
    pub second: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Refutation {
    Rejected {
        violation: PairViolation,
    },
    /// Every check passed. For `K9` this cannot happen.
    Accepted,
}

impl Refutation {
    pub fn is_rejected(&self) -> bool {
        matches!(self, Refutation::Rejected { .. })
    }
}

/// Names the first failed check of a claimed `K9` split: vertex count, then
/// rotation well-formedness, then edge partition, then the planar edge bound,
/// then Euler's formula on each side.
pub fn refute_k9_certificate(claim: &ClaimedPair) -> Refutation {
    let reject = |violation| Refutation::Rejected { violation };
    if claim.n != 9 {
        return reject(PairViolation::VertexCount {
            expected: 9,
            found: claim.n,
        });
    }
    let mut sides = Vec::new();
    for (side, rot) in [(Side::First, &claim.first), (Side::Second, &claim.second)] {
        match RotationSystem::from_rotation(9, rot.clone()) {
            Ok(e) => sides.push(e),
            Err(err) => {
                return reject(PairViolation::MalformedRotation {
                    side,
                    reason: err.to_string(),
                })
            }
        }
    }
    let second = sides.pop().expect("two sides");
    let first = sides.pop().expect("two sides");
    match BiplanarPair::new(Graph::complete(9), first, second) {
        Ok(_) => Refutation::Accepted,
        Err(violation) => reject(violation),
    }
}
