//! Canonical labeling by individualization and color refinement.
//!
//! Every discrete coloring reached by the search yields a relabeling; the
//! canonical form is the relabeled graph with the largest upper-triangle key.
//! Twin vertices (equal neighborhoods up to each other) are interchangeable by
//! an automorphism fixing everything else, so only one twin per cell is tried.

use crate::graph::Graph;

pub(crate) fn canonical_form(g: &Graph) -> Graph {
    let n = g.vertex_count();
    if n <= 1 {
        return *g;
    }
    let adj = g.adjacency_bits();
    let mut twins = [0u16; 16];
    for u in 0..n {
        for v in 0..n {
            if u != v && adj[u] & !(1 << v) == adj[v] & !(1 << u) {
                twins[u] |= 1 << v;
            }
        }
    }
    let mut search = Search { g, twins, best: None };
    let start = refine(g, vec![0; n]);
    search.descend(start);
    search.best.expect("search reaches at least one leaf").1
}

struct Search<'a> {
    g: &'a Graph,
    twins: [u16; 16],
    best: Option<(u128, Graph)>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) {
        let n = colors.len();
        let mut counts = vec![0u32; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let relabeled = self.g.permuted(&perm);
            let key = relabeled.triangle_bits();
            if self.best.as_ref().is_none_or(|(k, _)| key > *k) {
                self.best = Some((key, relabeled));
            }
            return;
        };
        let mut tried = 0u16;
        for v in 0..n {
            if colors[v] as usize != target || self.twins[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            let split = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + u32::from(x != v))
                .collect();
            self.descend(refine(self.g, split));
        }
    }
}

/// Iterated neighborhood refinement; returns dense color ranks that respect
/// the order of the input colors.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = colors.len();
    let mut classes = usize::MAX;
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for (v, sig) in sigs.drain(..).enumerate() {
            colors[v] = distinct.binary_search(&sig).expect("signature present") as u32;
        }
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelings_of_c5_agree() {
        let c5 = Graph::cycle(5);
        let base = canonical_form(&c5);
        for perm in [[1, 2, 3, 4, 0], [0, 2, 4, 1, 3], [4, 3, 2, 1, 0]] {
            assert_eq!(canonical_form(&c5.permuted(&perm)), base);
        }
        assert_eq!(canonical_form(&base), base);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        for g in [
            Graph::complete(10),
            Graph::empty(10),
            Graph::petersen(),
            Graph::cycle(10),
        ] {
            let c = canonical_form(&g);
            assert_eq!(c.edge_count(), g.edge_count());
            assert_eq!(canonical_form(&c), c);
        }
    }
}
