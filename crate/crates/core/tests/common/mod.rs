#![allow(dead_code)]

use std::sync::OnceLock;

use mdc_core::enumeration::{stable_graphs, EnumerationRequest, GraphCatalog};
use mdc_core::graph::{DecoratedGraph, VertexId};
use proptest::prelude::*;

pub const TRIPLES: [(u32, u32, u32); 6] = [(0, 4, 1), (0, 3, 2), (0, 1, 3), (1, 1, 2), (1, 2, 2), (1, 1, 3)];

pub fn catalogs() -> &'static [GraphCatalog] {
    static CATALOGS: OnceLock<Vec<GraphCatalog>> = OnceLock::new();
    CATALOGS.get_or_init(|| {
        TRIPLES.iter().map(|&(g, n, d)| stable_graphs(&EnumerationRequest::new(g, n, d)).unwrap()).collect()
    })
}

pub fn all_graphs() -> &'static [DecoratedGraph] {
    static ALL: OnceLock<Vec<DecoratedGraph>> = OnceLock::new();
    ALL.get_or_init(|| catalogs().iter().flat_map(|c| c.graphs().cloned()).collect())
}

pub fn genus_one_graphs() -> Vec<&'static DecoratedGraph> {
    all_graphs().iter().filter(|g| g.genus_target() == 1).collect()
}

/// Applies a vertex permutation, an edge permutation and endpoint swaps.
pub fn relabel(g: &DecoratedGraph, vperm: &[VertexId], eperm: &[usize], flips: &[bool]) -> DecoratedGraph {
    let mut vertices = vec![g.vertex(0).clone(); g.num_vertices()];
    for v in 0..g.num_vertices() {
        vertices[vperm[v]] = g.vertex(v).clone();
    }
    let mut edges = vec![[0, 0]; g.num_edges()];
    for (e, &[a, b]) in g.edges().iter().enumerate() {
        let (x, y) = (vperm[a], vperm[b]);
        edges[eperm[e]] = if flips[e] { [y, x] } else { [x, y] };
    }
    DecoratedGraph::new(g.genus_target(), g.marking_count(), g.degree_target(), vertices, edges).unwrap()
}

/// A catalog graph together with a random relabeling of it.
pub fn relabeled_graph() -> impl Strategy<Value = (DecoratedGraph, DecoratedGraph)> {
    (0..all_graphs().len()).prop_flat_map(|i| {
        let g = all_graphs()[i].clone();
        let (nv, ne) = (g.num_vertices(), g.num_edges());
        (
            Just(g),
            Just((0..nv).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..ne).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), ne),
        )
            .prop_map(|(g, vp, ep, fl)| {
                let h = relabel(&g, &vp, &ep, &fl);
                (g, h)
            })
    })
}
