mod common;

use common::{all_graphs, catalogs, relabeled_graph};
use mdc_core::graph::LoopValence;
use mdc_core::reference;
use proptest::prelude::*;

proptest! {
    #[test]
    fn canonical_form_ignores_labels((g, h) in relabeled_graph()) {
        let (fg, fh) = (g.canonical_form(), h.canonical_form());
        prop_assert_eq!(&fg.encoding, &fh.encoding);
        prop_assert!(fh.relabeling.is_isomorphism(&h, &fh.representative));
        prop_assert!(reference::isomorphic(&h, &fh.representative));
        prop_assert!(fh.representative.canonical_form().relabeling.is_identity());
    }

    #[test]
    fn distinct_classes_are_not_isomorphic(i in 0..all_graphs().len(), j in 0..all_graphs().len()) {
        let (g, h) = (&all_graphs()[i], &all_graphs()[j]);
        let same = g.canonical_form().encoding == h.canonical_form().encoding;
        prop_assert_eq!(same, i == j);
        if g.num_vertices() <= 7 {
            prop_assert_eq!(reference::isomorphic(g, h), same);
        }
    }

    #[test]
    fn automorphism_group_matches_brute_force((_, g) in relabeled_graph()) {
        let auts = g.automorphisms();
        prop_assert_eq!(auts.len(), reference::automorphism_count(&g));
        for a in &auts {
            prop_assert!(a.is_isomorphism(&g, &g));
            prop_assert!(a.inverse().is_isomorphism(&g, &g));
            for b in auts.iter().take(4) {
                let ab = a.then(b);
                prop_assert!(auts.contains(&ab));
            }
        }
    }

    #[test]
    fn odd_edge_symmetry_matches_brute_force((_, g) in relabeled_graph()) {
        prop_assume!(g.num_edges() <= 6);
        let all: Vec<usize> = (0..g.num_edges()).collect();
        prop_assert_eq!(g.has_odd_automorphism_on(&all), reference::has_odd_label_symmetry(&g, &all));
    }

    #[test]
    fn contraction_preserves_invariants((_, g) in relabeled_graph(), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.num_edges() > 0);
        let e = pick.index(g.num_edges());
        let c = g.contract_edge(e).unwrap();
        let h = &c.graph;
        prop_assert_eq!(h.num_edges() + 1, g.num_edges());
        prop_assert_eq!(h.genus(), g.genus());
        prop_assert_eq!(h.total_degree(), g.total_degree());
        prop_assert!(h.is_stable_with(LoopValence::Two));
        prop_assert!(h.is_connected());
        prop_assert_eq!(c.edge_map.iter().filter(|x| x.is_none()).count(), 1);
        let mut hit = vec![false; h.num_vertices()];
        for &v in &c.vertex_map {
            hit[v] = true;
        }
        prop_assert!(hit.iter().all(|&x| x));
        let idx = catalogs().iter().position(|cat| cat.contains(&g)).unwrap();
        prop_assert!(catalogs()[idx].contains(h));
    }

    #[test]
    fn sprouting_is_idempotent((_, g) in relabeled_graph()) {
        let sp = g.sprout().graph;
        prop_assert_eq!(sp.one_ends().len(), g.degree_target() as usize);
        prop_assert!(sp.vertices().iter().filter(|v| v.degree > 0).all(|v| v.degree == 1));
        let again = sp.sprout();
        prop_assert!(again.new_edges.is_empty());
        prop_assert_eq!(again.graph.canonical_form().encoding, sp.canonical_form().encoding);
        prop_assert_eq!(sp.genus(), g.genus());
    }
}

#[test]
fn half_edge_formula_matches_exhaustive_count() {
    for g in all_graphs().iter().filter(|g| g.num_edges() <= 4) {
        assert_eq!(reference::automorphism_count(g), reference::automorphism_count_by_half_edges(g), "{g:?}");
    }
}
