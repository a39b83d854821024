#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use biplanarity::planarity::subdivision_oracle;
use biplanarity::{is_planar, Graph};
use rand::Rng;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The labeled graph on `n` vertices whose edges are the set bits of `mask`
/// over `pairs(n)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn oracle_planar(g: &Graph) -> bool {
    subdivision_oracle(g).unwrap().is_none()
}

/// Smallest canonical representative by trying every permutation.
pub fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    });
    best.unwrap()
}

pub fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Maximal planar graphs on `n <= 7` vertices by filtering every labeled graph
/// with `3n - 6` edges through the subdivision oracle.
pub fn exhaustive_triangulations(n: usize) -> BTreeSet<Graph> {
    let m = n * (n - 1) / 2;
    let target = 3 * n - 6;
    let mut found = BTreeSet::new();
    for mask in 0u64..1 << m {
        if mask.count_ones() as usize != target {
            continue;
        }
        let g = graph_from_mask(n, mask);
        if oracle_planar(&g) {
            found.insert(g.canonical_form().unwrap());
        }
    }
    found
}

/// Second generation order: grow each triangulation by a vertex of degree
/// 3, 4 or 5 placed over one face, two adjacent faces, or a path of three
/// faces. Every triangulation has a vertex of degree at most five, so this
/// reaches all of them.
pub fn vertex_insertion_catalog(n: usize) -> BTreeSet<Graph> {
    let mut level: BTreeSet<Graph> = BTreeSet::from([Graph::complete(4).canonical_form().unwrap()]);
    for size in 5..=n {
        let mut next = BTreeSet::new();
        for t in &level {
            for g in vertex_insertions(t) {
                debug_assert_eq!(g.vertex_count(), size);
                next.insert(g.canonical_form().unwrap());
            }
        }
        level = next;
    }
    level
}

fn vertex_insertions(t: &Graph) -> Vec<Graph> {
    let n = t.vertex_count();
    let e = is_planar(t).into_embedding().unwrap();
    let mut apex = BTreeMap::new();
    for f in e.faces() {
        let b = f.boundary();
        for i in 0..3 {
            apex.insert((b[i], b[(i + 1) % 3]), b[(i + 2) % 3]);
        }
    }
    let grow = |removed: &[(usize, usize)], joined: &[usize]| {
        let mut g = Graph::empty(n + 1);
        for (u, v) in t
            .edges()
            .filter(|&(u, v)| !removed.contains(&(u, v)) && !removed.contains(&(v, u)))
        {
            g.add_edge(u, v);
        }
        for &x in joined {
            g.add_edge(n, x);
        }
        g
    };
    let mut out = Vec::new();
    for (&(a, b), &c) in &apex {
        out.push(grow(&[], &[a, b, c]));
        let d = apex[&(b, a)];
        out.push(grow(&[(a, b)], &[a, b, c, d]));
        // Third face across the edge (a, d) of the face b -> a -> d.
        let e3 = apex[&(d, a)];
        let joined = [a, b, c, d, e3];
        if joined.iter().collect::<BTreeSet<_>>().len() == 5 {
            out.push(grow(&[(a, b), (a, d)], &joined));
        }
    }
    out
}

/// Smallest `n >= 3` with `n (n - 1) / 2 > k (3n - 6)`.
pub fn smallest_n_exceeding(k: u64) -> u64 {
    (3..).find(|&n| n * (n - 1) / 2 > k * (3 * n - 6)).unwrap()
}
