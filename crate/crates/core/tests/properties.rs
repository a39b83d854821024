mod common;

use biplanarity::biplanar::{thickness_at_most_2, BiplanarPair};
use biplanarity::{is_planar, Graph, RotationSystem};
use common::graph_from_mask;
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << m)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

fn graph_and_permutation() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

fn planar_embedding() -> impl Strategy<Value = RotationSystem> {
    graph().prop_filter_map("planar", |g| is_planar(&g).into_embedding())
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_permutation()) {
        let h = g.permuted(&perm);
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
        prop_assert!(g.is_isomorphic(&h).unwrap());
    }

    #[test]
    fn complement_counts(g in graph()) {
        let n = g.vertex_count();
        let c = g.complement();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
        prop_assert_eq!(g.intersection(&c).edge_count(), 0);
    }

    #[test]
    fn graph6_round_trip(g in graph()) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn embeddings_satisfy_euler(e in planar_embedding()) {
        prop_assert!(e.is_plane());
        let json = serde_json::to_string(&e).unwrap();
        let back: RotationSystem = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn insert_then_remove_restores_faces(e in planar_embedding(), pick in any::<prop::sample::Index>()) {
        let faces = e.faces();
        prop_assume!(!faces.is_empty());
        let f = pick.get(&faces);
        let vs = f.vertices().to_vec();
        let pair = vs.iter().enumerate().find_map(|(i, &u)| {
            vs[i + 1..].iter().find(|&&v| !e.graph().has_edge(u, v)).map(|&v| (u, v))
        });
        prop_assume!(pair.is_some());
        let (u, v) = pair.unwrap();
        let grown = e.insert_edge_in_face(u, v, f).unwrap();
        prop_assert!(grown.is_plane());
        prop_assert_eq!(grown.faces().len(), faces.len() + 1);
        let back = grown.remove_edge(u, v).unwrap();
        prop_assert_eq!(back.faces(), faces);
    }

    #[test]
    fn augmentation_keeps_pair_invariants(g in graph().prop_filter("at least 3 vertices", |g| g.vertex_count() >= 3)) {
        let n = g.vertex_count();
        let pair = match thickness_at_most_2(&Graph::complete(n)).unwrap().pair() {
            Some(p) => p.clone(),
            None => return Ok(()),
        };
        let q = pair.swapped().augment_to_maximal();
        prop_assert!(q.validate().is_ok());
        prop_assert!(q.first().is_triangulation());
        let _ = BiplanarPair::from_json(&q.to_json()).unwrap();
        if let Some(p) = thickness_at_most_2(&g).unwrap().pair() {
            prop_assert!(p.validate().is_ok());
            prop_assert_eq!(p.host(), &g);
        }
    }
}
