//! Finite-instance checks of the steps in the `K9` argument: the outer-face
//! degree dichotomy, outer-face shrinking, the pentagon lemma with its chord
//! cases, and the edge-count bound on `ν(k)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::biplanar::{self, BiplanarError, BiplanarPair};
use crate::embedding::{EmbeddingError, Face, RotationSystem};
use crate::enumeration::{self, EnumerationError};
use crate::graph::{Graph, VertexSet};
use crate::kuratowski::{self, KuratowskiCertificate};
use crate::planarity::{self, PlanarityResult, SubdivisionWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Biplanar(#[from] BiplanarError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("expected {expected} vertices, found {found}")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("embedding is not a triangulation")]
    NotATriangulation,
    #[error("embedding is not plane")]
    NotPlane,
    #[error("outer face {0:?} is not a simple cycle of the required length")]
    BadOuterFace(Vec<usize>),
    #[error("interior vertices {u} and {v} are adjacent")]
    InteriorEdge { u: usize, v: usize },
    #[error("interior vertex {0} has no neighbors")]
    IsolatedInterior(usize),
    #[error("{0} chords on the outer cycle")]
    TooManyChords(usize),
    #[error("chords {0:?} and {1:?} do not share a vertex")]
    CrossingChords((usize, usize), (usize, usize)),
    #[error("face {0:?} is not an internal face of the outer cycle with its chords")]
    NotAnInternalFace(Vec<usize>),
    #[error("face {0:?} contains no interior vertex")]
    EmptyFace(Vec<usize>),
    #[error("no interior vertex in face {0:?} sees its whole boundary")]
    NoFullyAdjacentVertex(Vec<usize>),
    #[error("every outer-cycle vertex is adjacent to {u} or {w}")]
    NoFreeCycleVertex { u: usize, w: usize },
    #[error("certificate for the complement does not verify")]
    CertificateRejected,
    #[error("all outer degrees are at most four yet the complement is planar")]
    PlanarComplement,
    #[error("host of the pair is not a complete graph")]
    HostNotComplete,
    #[error("face {0:?} is not a face of the second embedding")]
    UnknownSecondFace(Vec<usize>),
    #[error("no vertex lies on both the outer face and the second face at step {step}")]
    NoSharedVertex { step: usize },
    #[error("k must be at least 1")]
    KTooSmall,
    #[error("k = {0} overflows the integer evaluation")]
    Overflow(u64),
}

fn embed(g: &Graph) -> Option<RotationSystem> {
    planarity::is_planar(g).into_embedding()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Claim1Outcome {
    /// An outer-face vertex of degree at least five.
    HighDegree { vertex: usize, degree: usize },
    /// The three outer vertices against the three vertices off the second
    /// layer form a `K3,3` in the complement.
    K33InComplement { certificate: KuratowskiCertificate },
    /// All outer degrees are small but the complement is nonplanar anyway.
    ComplementNonplanar { witness: SubdivisionWitness },
}

/// For a triangulation on nine vertices: either some outer vertex has degree
/// at least five, or the complement is certified nonplanar.
pub fn claim1_check(t: &RotationSystem) -> Result<Claim1Outcome, TheoremError> {
    if t.vertex_count() != 9 {
        return Err(TheoremError::WrongVertexCount {
            expected: 9,
            found: t.vertex_count(),
        });
    }
    if !t.is_triangulation() {
        return Err(TheoremError::NotATriangulation);
    }
    let outer = t.outer_face().ok_or(TheoremError::NotATriangulation)?;
    let g = t.graph();
    if let Some(vertex) = outer.boundary().iter().copied().filter(|&v| g.degree(v) >= 5).min() {
        return Ok(Claim1Outcome::HighDegree {
            vertex,
            degree: g.degree(vertex),
        });
    }
    let comp = g.complement();
    if let Some(certificate) = outer_layer_certificate(t, outer) {
        if kuratowski::verify(&comp, &certificate) == Ok(true) {
            return Ok(Claim1Outcome::K33InComplement { certificate });
        }
    }
    match planarity::is_planar(&comp) {
        PlanarityResult::Nonplanar { subdivision } => Ok(Claim1Outcome::ComplementNonplanar { witness: subdivision }),
        PlanarityResult::Planar { .. } => Err(TheoremError::PlanarComplement),
    }
}

/// Deletes the outer triangle; if the resulting hole is a triangle, pairs
/// the outer vertices with the three vertices not on the hole.
fn outer_layer_certificate(t: &RotationSystem, outer: &Face) -> Option<KuratowskiCertificate> {
    let mut corners = outer.vertices().to_vec();
    corners.sort_unstable_by(|a, b| b.cmp(a));
    let mut e = t.clone();
    let mut hole = None;
    for &c in &corners {
        let (next, merged) = e.delete_vertex(c).ok()?;
        e = next;
        hole = Some(merged);
    }
    let hole = hole?;
    if !hole.is_simple_cycle(3) {
        return None;
    }
    let outer_set = outer.vertices();
    let remaining: Vec<usize> = (0..t.vertex_count()).filter(|&v| !outer_set.contains(v)).collect();
    let hole_set: VertexSet = hole.boundary().iter().map(|&i| remaining[i]).collect();
    let inner: Vec<usize> = remaining.iter().copied().filter(|&v| !hole_set.contains(v)).collect();
    let outer_vs = outer_set.to_vec();
    let single = VertexSet::singleton;
    Some(KuratowskiCertificate::condition_i(
        [single(outer_vs[0]), single(outer_vs[1]), single(outer_vs[2])],
        [single(inner[0]), single(inner[1]), single(inner[2])],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShrinkStep {
    /// Vertex leaving the outer face.
    pub s: usize,
    pub x: usize,
    pub y: usize,
    /// Whether `xy` was moved over from the second embedding.
    pub transferred: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrinkOutcome {
    pub pair: BiplanarPair,
    /// The tracked face of the second embedding after the last step.
    pub f_bar: Face,
    pub steps: Vec<ShrinkStep>,
    /// Vertices off the outer face that are not on `f_bar` either.
    pub off_both: Vec<usize>,
}

/// Closes the outer face of `first` down to a 5-cycle. Each step takes the
/// smallest `s` on both `f` and `f_bar`, with `x`, `y` its neighbors on `f`,
/// and draws `xy` across the outer face: re-routed if `first` already has
/// it, otherwise moved over from `second` (which may merge `f_bar` with the
/// face across `xy`).
pub fn shrink_outer_face(p: &BiplanarPair, f: &Face, f_bar: &Face) -> Result<ShrinkOutcome, TheoremError> {
    let n = p.vertex_count();
    if *p.host() != Graph::complete(n) {
        return Err(TheoremError::HostNotComplete);
    }
    let mut first = p.first().clone().with_outer_face(f)?;
    let mut second = p.second().clone();
    let k = f.len();
    if k < 5 || !f.is_simple_cycle(k) {
        return Err(TheoremError::BadOuterFace(f.boundary().to_vec()));
    }
    if !second.is_face(f_bar) || f_bar.vertices().len() < 3 {
        return Err(TheoremError::UnknownSecondFace(f_bar.boundary().to_vec()));
    }
    let mut f_bar = f_bar.clone();
    let mut steps = Vec::new();
    loop {
        let f = first.outer_face().expect("outer face is tracked").clone();
        if f.len() == 5 {
            break;
        }
        let walk = f.boundary();
        let s = walk
            .iter()
            .copied()
            .filter(|&v| f_bar.contains(v))
            .min()
            .ok_or(TheoremError::NoSharedVertex { step: steps.len() })?;
        let i = walk.iter().position(|&v| v == s).expect("s is on f");
        let x = walk[(i + walk.len() - 1) % walk.len()];
        let y = walk[(i + 1) % walk.len()];
        let transferred = !first.graph().has_edge(x, y);
        if transferred {
            let keep = f_bar
                .directed_edges()
                .find(|&(a, b)| (a, b) != (x, y) && (a, b) != (y, x));
            second = second.remove_edge(x, y)?;
            if let Some((a, b)) = keep {
                f_bar = second.face_containing(a, b)?;
            }
        } else {
            first = first.remove_edge(x, y)?;
        }
        first = first.insert_edge_in_face(x, y, &f)?;
        steps.push(ShrinkStep { s, x, y, transferred });
    }
    let outer = first.outer_face().expect("outer face is tracked").vertices();
    let off_both = (0..n).filter(|&v| !outer.contains(v) && !f_bar.contains(v)).collect();
    let pair = BiplanarPair::new(*p.host(), first, second).map_err(BiplanarError::from)?;
    Ok(ShrinkOutcome {
        pair,
        f_bar,
        steps,
        off_both,
    })
}

/// An 8-vertex plane graph whose outer face is the 5-cycle `a1..a5`, with the
/// three remaining vertices `u, v, w` inside and pairwise non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Instance {
    h: RotationSystem,
    outer_cycle: [usize; 5],
    interior: [usize; 3],
}

impl Theorem2Instance {
    pub fn new(h: RotationSystem) -> Result<Self, TheoremError> {
        if h.vertex_count() != 8 {
            return Err(TheoremError::WrongVertexCount {
                expected: 8,
                found: h.vertex_count(),
            });
        }
        let outer = h.outer_face().ok_or(TheoremError::BadOuterFace(Vec::new()))?.clone();
        if !outer.is_simple_cycle(5) {
            return Err(TheoremError::BadOuterFace(outer.boundary().to_vec()));
        }
        let inside = VertexSet::full(8).difference(outer.vertices()).to_vec();
        let interior = [inside[0], inside[1], inside[2]];
        for (i, &u) in interior.iter().enumerate() {
            if let Some(&v) = interior[i + 1..].iter().find(|&&v| h.graph().has_edge(u, v)) {
                return Err(TheoremError::InteriorEdge { u, v });
            }
            if h.graph().degree(u) == 0 {
                return Err(TheoremError::IsolatedInterior(u));
            }
        }
        if !h.is_plane() {
            return Err(TheoremError::NotPlane);
        }
        let b = outer.boundary();
        Ok(Theorem2Instance {
            outer_cycle: [b[0], b[1], b[2], b[3], b[4]],
            interior,
            h,
        })
    }

    pub fn embedding(&self) -> &RotationSystem {
        &self.h
    }

    pub fn outer_cycle(&self) -> [usize; 5] {
        self.outer_cycle
    }

    pub fn interior(&self) -> [usize; 3] {
        self.interior
    }

    /// The interior pairs, which never become edges.
    pub fn frozen_pairs(&self) -> [(usize, usize); 3] {
        let [u, v, w] = self.interior;
        [(u, v), (u, w), (v, w)]
    }

    /// No internal face has a non-adjacent, non-frozen pair on its boundary.
    pub fn is_restricted_maximal(&self) -> bool {
        let host = Graph::complete(8);
        biplanar::augment_embedding(&self.h, &host, &self.frozen_pairs(), true).is_ok_and(|(_, added)| added.is_empty())
    }

    /// The outer cycle with its chords; interior vertices are left isolated.
    pub fn cycle_with_chords(&self) -> RotationSystem {
        let on_cycle: VertexSet = self.outer_cycle.iter().copied().collect();
        let mut g = Graph::empty(8);
        for (a, b) in self
            .h
            .graph()
            .edges()
            .filter(|&(a, b)| on_cycle.contains(a) && on_cycle.contains(b))
        {
            g.add_edge(a, b);
        }
        let rotation = (0..8)
            .map(|x| {
                self.h
                    .rotation(x)
                    .iter()
                    .copied()
                    .filter(|&y| g.has_edge(x, y))
                    .collect()
            })
            .collect();
        let e = RotationSystem::new(g, rotation).expect("restriction of a valid rotation system");
        let outer = self.h.outer_face().expect("checked in new");
        e.with_outer_face(outer).expect("outer face has no interior corners")
    }

    /// Internal faces of [`cycle_with_chords`](Self::cycle_with_chords).
    pub fn internal_faces(&self) -> Vec<Face> {
        let e = self.cycle_with_chords();
        let outer = e.outer_face().cloned();
        e.faces().into_iter().filter(|f| Some(f) != outer.as_ref()).collect()
    }

    /// Interior vertices drawn inside the internal face `f`.
    pub fn interior_in_face(&self, f: &Face) -> Result<VertexSet, TheoremError> {
        if !self.internal_faces().contains(f) {
            return Err(TheoremError::NotAnInternalFace(f.boundary().to_vec()));
        }
        let walk = f.boundary();
        let len = walk.len();
        let interior: VertexSet = self.interior.iter().copied().collect();
        let mut inside = VertexSet::EMPTY;
        for i in 0..len {
            let (x, y, z) = (walk[i], walk[(i + 1) % len], walk[(i + 2) % len]);
            let mut t = self.h.successor(y, x);
            while t != z {
                if interior.contains(t) {
                    inside.insert(t);
                }
                t = self.h.successor(y, t);
            }
        }
        Ok(inside)
    }

    fn relabel_cycle(&self, start: usize) -> [usize; 5] {
        let c = self.outer_cycle;
        let i = c.iter().position(|&x| x == start).expect("start is on the cycle");
        std::array::from_fn(|j| c[(i + j) % 5])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ChordCase {
    ZeroChords,
    OneChord { chord: (usize, usize) },
    TwoChords { shared: usize, chords: [(usize, usize); 2] },
}

/// Chords of the outer cycle in `h`, as `(a_i, a_{i+2})` in cycle order.
pub fn classify_chords(inst: &Theorem2Instance) -> Result<ChordCase, TheoremError> {
    let c = inst.outer_cycle;
    let chords: Vec<(usize, usize)> = (0..5)
        .map(|i| (c[i], c[(i + 2) % 5]))
        .filter(|&(a, b)| inst.h.graph().has_edge(a, b))
        .collect();
    match chords[..] {
        [] => Ok(ChordCase::ZeroChords),
        [chord] => Ok(ChordCase::OneChord { chord }),
        [p, q] => {
            let shared = [p.0, p.1].into_iter().find(|&x| x == q.0 || x == q.1);
            match shared {
                Some(shared) => Ok(ChordCase::TwoChords { shared, chords: [p, q] }),
                None => Err(TheoremError::CrossingChords(p, q)),
            }
        }
        _ => Err(TheoremError::TooManyChords(chords.len())),
    }
}

/// The smallest interior vertex inside `f` that is adjacent to every boundary
/// vertex of `f`.
pub fn claim2_witness(inst: &Theorem2Instance, f: &Face) -> Result<usize, TheoremError> {
    let inside = inst.interior_in_face(f)?;
    if inside.is_empty() {
        return Err(TheoremError::EmptyFace(f.boundary().to_vec()));
    }
    inside
        .iter()
        .find(|&x| f.vertices().is_subset(inst.h.graph().neighbors(x)))
        .ok_or_else(|| TheoremError::NoFullyAdjacentVertex(f.boundary().to_vec()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Certificate {
    pub case: ChordCase,
    /// The outer cycle relabeled as `a1..a5` for this case.
    pub a: [usize; 5],
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub certificate: KuratowskiCertificate,
}

/// A verified certificate that the complement of `h` is nonplanar, built
/// from the chord case.
pub fn theorem2_certificate(inst: &Theorem2Instance) -> Result<Theorem2Certificate, TheoremError> {
    let case = classify_chords(inst)?;
    let g = inst.h.graph();
    let c = inst.outer_cycle;
    let s = VertexSet::singleton;
    let pair = |x: usize, y: usize| [x, y].into_iter().collect::<VertexSet>();
    let others = |hub: usize| {
        let rest: Vec<usize> = inst.interior.iter().copied().filter(|&x| x != hub).collect();
        (rest[0], rest[1])
    };
    let (a, u, v, w, certificate) = match case {
        ChordCase::ZeroChords => {
            let face = inst.internal_faces().remove(0);
            let v = claim2_witness(inst, &face)?;
            let (u, w) = others(v);
            let free = c
                .iter()
                .copied()
                .find(|&x| !g.has_edge(x, u) && !g.has_edge(x, w))
                .ok_or(TheoremError::NoFreeCycleVertex { u, w })?;
            let a = inst.relabel_cycle(free);
            let cert = KuratowskiCertificate::condition_ii([s(u), s(w), s(a[0]), pair(a[1], a[3]), pair(a[2], a[4])]);
            (a, u, v, w, cert)
        }
        ChordCase::OneChord { chord } => {
            let i = c.iter().position(|&x| x == chord.0).expect("chord on cycle");
            let a = inst.relabel_cycle(c[(i + 1) % 5]);
            let face = inst
                .internal_faces()
                .into_iter()
                .find(|f| f.len() == 4)
                .expect("one chord leaves a quadrilateral face");
            let v = claim2_witness(inst, &face)?;
            let (u, w) = others(v);
            let cert =
                KuratowskiCertificate::condition_i([s(u), s(w), s(a[0])], [s(v), pair(a[1], a[3]), pair(a[2], a[4])]);
            (a, u, v, w, cert)
        }
        ChordCase::TwoChords { shared, .. } => {
            let a = inst.relabel_cycle(shared);
            let [u, v, w] = inst.interior;
            let cert = KuratowskiCertificate::condition_ii([s(u), s(v), s(w), pair(a[1], a[3]), pair(a[2], a[4])]);
            (a, u, v, w, cert)
        }
    };
    if kuratowski::verify(&g.complement(), &certificate) != Ok(true) {
        return Err(TheoremError::CertificateRejected);
    }
    Ok(Theorem2Certificate {
        case,
        a,
        u,
        v,
        w,
        certificate,
    })
}

/// Every restricted-maximal pentagon instance reachable from the 9-vertex
/// catalog: delete a degree-5 vertex so its link becomes the outer 5-cycle,
/// drop the edges among the three interior vertices, and re-augment with
/// those pairs frozen. Each is taken in both orientations, all five cyclic
/// labelings of the cycle, and all orders of the interior vertices.
pub fn theorem2_instances() -> Result<Vec<Theorem2Instance>, TheoremError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let host = Graph::complete(8);
    for t in enumeration::enumerate_triangulations(9)?.members() {
        let base = embed(t).expect("catalog members are planar");
        for r in (0..9).filter(|&r| t.degree(r) == 5) {
            for e in [base.clone(), base.mirrored()] {
                let (h, hole) = e.delete_vertex(r)?;
                let h = h.with_outer_face(&hole)?;
                let cycle = hole.boundary().to_vec();
                let inside = VertexSet::full(8).difference(hole.vertices()).to_vec();
                for shift in 0..5 {
                    for order in PERMUTATIONS_OF_3 {
                        let mut perm = [0usize; 8];
                        for (i, &x) in cycle.iter().enumerate() {
                            perm[x] = (i + 5 - shift) % 5;
                        }
                        for (j, &k) in order.iter().enumerate() {
                            perm[inside[k]] = 5 + j;
                        }
                        let mut g = h.relabeled(&perm);
                        for (x, y) in [(5, 6), (5, 7), (6, 7)] {
                            if g.graph().has_edge(x, y) {
                                g = g.remove_edge(x, y)?;
                            }
                        }
                        let (g, _) = biplanar::augment_embedding(&g, &host, &[(5, 6), (5, 7), (6, 7)], true)?;
                        if seen.insert((*g.graph(), g.faces(), g.outer_face().cloned())) {
                            out.push(Theorem2Instance::new(g)?);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

const PERMUTATIONS_OF_3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Sweep {
    pub instances: usize,
    pub zero_chords: usize,
    pub one_chord: usize,
    pub two_chords: usize,
    /// Instances whose certificate failed or whose complement tested planar.
    pub failures: Vec<String>,
}

/// Runs [`theorem2_certificate`] and the planarity test on every generated
/// instance.
pub fn theorem2_sweep() -> Result<Theorem2Sweep, TheoremError> {
    let mut report = Theorem2Sweep::default();
    for inst in theorem2_instances()? {
        report.instances += 1;
        let comp = inst.h.graph().complement();
        match theorem2_certificate(&inst) {
            Ok(cert) if !planarity::planar(&comp) => match cert.case {
                ChordCase::ZeroChords => report.zero_chords += 1,
                ChordCase::OneChord { .. } => report.one_chord += 1,
                ChordCase::TwoChords { .. } => report.two_chords += 1,
            },
            Ok(_) => report.failures.push(format!("{:?}: complement planar", inst.h)),
            Err(e) => report.failures.push(format!("{:?}: {e}", inst.h)),
        }
    }
    Ok(report)
}

/// `floor((6k + 1 + sqrt(36k^2 - 36k + 1)) / 2) + 1`, the smallest `n` with
/// more than `k (3n - 6)` edges in `K_n`, evaluated in integers.
pub fn nu_upper_bound(k: u64) -> Result<u64, TheoremError> {
    if k < 1 {
        return Err(TheoremError::KTooSmall);
    }
    let over = TheoremError::Overflow(k);
    let k2 = k.checked_mul(k).and_then(|x| x.checked_mul(36)).ok_or(over.clone())?;
    let disc = k2 - 36 * k + 1;
    let root = disc.isqrt();
    let top = k.checked_mul(6).and_then(|x| x.checked_add(1 + root)).ok_or(over)?;
    Ok(top / 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_bound_small_values() {
        assert_eq!(nu_upper_bound(1), Ok(5));
        assert_eq!(nu_upper_bound(2), Ok(11));
        assert_eq!(nu_upper_bound(0), Err(TheoremError::KTooSmall));
        assert!(matches!(nu_upper_bound(u64::MAX), Err(TheoremError::Overflow(_))));
    }

    #[test]
    fn instance_validation() {
        let h = embed(&Graph::cycle(5)).unwrap();
        assert_eq!(
            Theorem2Instance::new(h).unwrap_err(),
            TheoremError::WrongVertexCount { expected: 8, found: 5 }
        );
    }
}
