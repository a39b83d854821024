//! Brute-force Kuratowski search, kept independent of the embedding code.
//!
//! Branch vertices are enumerated as combinations; connecting paths are
//! found by backtracking over simple paths through unused vertices. A direct
//! edge between two branch vertices is always taken, since it uses no
//! internal vertex and no other path can need it.

use crate::graph::{Graph, GraphError, VertexSet};
use crate::planarity::{SubdivisionKind, SubdivisionWitness};

/// Largest vertex count accepted by [`subdivision_oracle`].
pub const MAX_ORACLE_VERTICES: usize = 10;

pub fn subdivision_oracle(g: &Graph) -> Result<Option<SubdivisionWitness>, GraphError> {
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let deg4: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    for combo in combinations(&deg4, 5) {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (combo[i], combo[j]))
            .collect();
        if let Some(paths) = connect(g, &combo, &pairs) {
            return Ok(Some(SubdivisionWitness {
                kind: SubdivisionKind::K5,
                branch_vertices: combo,
                paths,
            }));
        }
    }
    let deg3: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    for combo in combinations(&deg3, 6) {
        // Fix combo[0] on side A to skip mirrored splits.
        for rest in combinations(&combo[1..], 2) {
            let side_a = [combo[0], rest[0], rest[1]];
            let side_b: Vec<usize> = combo.iter().copied().filter(|v| !side_a.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = side_a
                .iter()
                .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                .collect();
            if let Some(paths) = connect(g, &combo, &pairs) {
                let mut branch_vertices = side_a.to_vec();
                branch_vertices.extend(side_b);
                return Ok(Some(SubdivisionWitness {
                    kind: SubdivisionKind::K33,
                    branch_vertices,
                    paths,
                }));
            }
        }
    }
    Ok(None)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Internally disjoint paths for every pair, or `None`.
fn connect(g: &Graph, branch: &[usize], pairs: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut paths: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
    let mut open = Vec::new();
    for (k, &(a, b)) in pairs.iter().enumerate() {
        if g.has_edge(a, b) {
            paths[k] = vec![a, b];
        } else {
            open.push(k);
        }
    }
    let branch_set: VertexSet = branch.iter().copied().collect();
    let free = g.vertices().difference(branch_set);
    if open.len() > free.len() {
        return None;
    }
    if route(g, pairs, &open, free, &mut paths) {
        Some(paths)
    } else {
        None
    }
}

fn route(g: &Graph, pairs: &[(usize, usize)], open: &[usize], free: VertexSet, paths: &mut Vec<Vec<usize>>) -> bool {
    let Some((&k, rest)) = open.split_first() else {
        return true;
    };
    let (a, b) = pairs[k];
    let mut path = vec![a];
    extend(g, b, free, &mut path, &mut |path, used| {
        paths[k] = path.to_vec();
        route(g, pairs, rest, free.difference(used), paths)
    })
}

/// Depth-first enumeration of simple paths from `path`'s last vertex to
/// `target` with at least one internal vertex drawn from `free`.
fn extend(
    g: &Graph,
    target: usize,
    free: VertexSet,
    path: &mut Vec<usize>,
    found: &mut dyn FnMut(&[usize], VertexSet) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() > 1 && g.has_edge(last, target) {
        path.push(target);
        let used: VertexSet = path[1..path.len() - 1].iter().copied().collect();
        let ok = found(path, used);
        path.pop();
        if ok {
            return true;
        }
    }
    for next in g.neighbors(last).intersection(free).iter() {
        if path.contains(&next) {
            continue;
        }
        path.push(next);
        let ok = extend(g, target, free, path, found);
        path.pop();
        if ok {
            return true;
        }
    }
    false
}
