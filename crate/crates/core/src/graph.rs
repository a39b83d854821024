//! Small undirected simple graphs stored as per-vertex neighbor bitmasks.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::canon;
pub use crate::graph6::Graph6Error;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 16;

/// Largest vertex count accepted by [`Graph::canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("exhaustive canonical labeling supports at most {max} vertices, got {n}")]
    CanonicalTooLarge { n: usize, max: usize },
}

/// A set of vertex indices below [`MAX_VERTICES`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 16 {
            VertexSet(u16::MAX)
        } else {
            VertexSet((1u16 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Undirected simple graph on the vertices `0..n`, `n <= 16`.
///
/// Adjacency is kept symmetric and irreflexive by every constructor and
/// mutator, so a `Graph` value always satisfies those invariants.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [u16; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n > 16`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "{n} vertices exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: [0; MAX_VERTICES],
        }
    }

    pub fn try_empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self::empty(n))
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Wheel with rim `0..k` and hub `k`.
    pub fn wheel(k: usize) -> Self {
        let mut g = Self::empty(k + 1);
        for v in 0..k {
            g.add_edge(v, (v + 1) % k);
            g.add_edge(v, k);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bitmasks, rejecting asymmetric or looped input.
    pub fn from_adjacency(n: usize, adj: &[u16]) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(n)?;
        for (u, &mask) in adj.iter().enumerate().take(n) {
            for v in VertexSet(mask).iter() {
                g.check_vertex(v)?;
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn with_edge(mut self, u: usize, v: usize) -> Self {
        self.add_edge(u, v);
        self
    }

    pub fn without_edge(mut self, u: usize, v: usize) -> Self {
        self.remove_edge(u, v);
        self
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn adjacency_bits(&self) -> &[u16] {
        &self.adj[..self.n]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u32 << u) - 1) as u16)
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Self {
        let full = VertexSet::full(self.n).bits();
        let mut g = Self::empty(self.n);
        for v in 0..self.n {
            g.adj[v] = full & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Edge-wise union of two graphs on the same vertex count.
    pub fn union(&self, other: &Graph) -> Self {
        assert_eq!(self.n, other.n);
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] |= other.adj[v];
        }
        g
    }

    pub fn difference(&self, other: &Graph) -> Self {
        assert_eq!(self.n, other.n);
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] &= !other.adj[v];
        }
        g
    }

    pub fn intersection(&self, other: &Graph) -> Self {
        assert_eq!(self.n, other.n);
        let mut g = *self;
        for v in 0..self.n {
            g.adj[v] &= other.adj[v];
        }
        g
    }

    /// True if every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| self.adj[v] & !other.adj[v] == 0)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Removes `r` and shifts the labels above it down by one.
    pub fn delete_vertex(&self, r: usize) -> Self {
        assert!(r < self.n);
        let shift = |v: usize| if v > r { v - 1 } else { v };
        let mut g = Self::empty(self.n - 1);
        for (u, v) in self.edges() {
            if u != r && v != r {
                g.add_edge(shift(u), shift(v));
            }
        }
        g
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u16;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            frontier = VertexSet(next).intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Whether the subgraph induced on `s` is connected.
    pub fn is_connected_within(&self, s: VertexSet) -> Result<bool, GraphError> {
        let start = s.first().ok_or(GraphError::EmptyVertexSet)?;
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        Ok(self.reach_within(start, s) == s)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, self.vertices()) == self.vertices()
    }

    /// Connected components, each as a vertex set, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach_within(v, self.vertices());
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// Upper-triangle adjacency bits in graph6 order, first bit most significant.
    pub fn triangle_bits(&self) -> u128 {
        let mut key = 0u128;
        for j in 1..self.n {
            for i in 0..j {
                key = (key << 1) | u128::from(self.has_edge(i, j));
            }
        }
        key
    }

    /// A relabeling that is identical for isomorphic graphs and distinct otherwise.
    pub fn canonical_form(&self) -> Result<Self, GraphError> {
        if self.n > MAX_CANONICAL_VERTICES {
            return Err(GraphError::CanonicalTooLarge {
                n: self.n,
                max: MAX_CANONICAL_VERTICES,
            });
        }
        Ok(canon::canonical_form(self))
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, GraphError> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Self, Graph6Error> {
        crate::graph6::decode(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} ", self.to_graph6())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Graph::from_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_k5_is_empty() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::complete(11).edge_count(), 55);
    }

    #[test]
    fn c5_is_self_complementary_by_brute_force() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        let mut perm = [0, 1, 2, 3, 4];
        let mut found = None;
        // Heap's algorithm over all 5! relabelings.
        let mut c = [0usize; 5];
        let mut i = 0;
        if c5.permuted(&perm) == comp {
            found = Some(perm);
        }
        while i < 5 && found.is_none() {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                if c5.permuted(&perm) == comp {
                    found = Some(perm);
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        let perm = found.expect("C5 is self-complementary");
        assert_eq!(c5.permuted(&perm), comp);
    }

    #[test]
    fn connectivity_within_sets() {
        let g = Graph::empty(4);
        assert!(g.is_connected_within(VertexSet::singleton(2)).unwrap());
        assert!(!g.is_connected_within([0, 1].into_iter().collect()).unwrap());
        assert_eq!(g.is_connected_within(VertexSet::EMPTY), Err(GraphError::EmptyVertexSet));

        // a2a4 is not an edge of the 5-cycle, so it is an edge of the complement.
        let comp = Graph::cycle(5).complement();
        assert!(comp.is_connected_within([1, 3].into_iter().collect()).unwrap());
        assert!(comp.is_connected_within([2, 4].into_iter().collect()).unwrap());
        assert!(!comp.is_connected_within([1, 2].into_iter().collect()).unwrap());
    }

    #[test]
    fn delete_vertex_relabels_densely() {
        let w = Graph::wheel(5);
        let rim = w.delete_vertex(5);
        assert_eq!(rim, Graph::cycle(5));
        let g = Graph::from_edges(4, &[(0, 3), (1, 2)]).unwrap().delete_vertex(1);
        assert_eq!(g, Graph::from_edges(3, &[(0, 2)]).unwrap());
    }

    #[test]
    fn edges_are_sorted_and_complete() {
        let g = Graph::complete(4);
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::try_empty(17), Err(GraphError::TooManyVertices(17)));
    }

    #[test]
    fn canonical_form_rejects_large_graphs() {
        assert!(matches!(
            Graph::empty(11).canonical_form(),
            Err(GraphError::CanonicalTooLarge { n: 11, .. })
        ));
    }
}
