//! A length-three aligned graph of type (1,5,7) with a four-edge core cycle,
//! and a genus-two graph with one weight-one vertex. All expected values
//! below were worked out by hand.

use mdc_core::genus_one::{AlignedGraph, NonemptyCriterion};
use mdc_core::graph::{DecoratedGraph, Vertex};
use mdc_core::retract::{embed_dual, in_z, project_to_dual, DualPoint};
use num_bigint::BigInt;
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Core 0-1-2-3, tree edges 1→4, 3→5, 4→6, 5→7, 5→8.
fn example() -> AlignedGraph {
    let vertices = vec![
        Vertex::new(0, 0, [1]),
        Vertex::new(0, 0, []),
        Vertex::new(0, 2, []),
        Vertex::new(0, 0, []),
        Vertex::new(0, 2, [2]),
        Vertex::new(0, 0, []),
        Vertex::new(0, 1, [3]),
        Vertex::new(0, 1, []),
        Vertex::new(0, 1, [4, 5]),
    ];
    let edges = vec![[0, 1], [1, 2], [2, 3], [3, 0], [1, 4], [3, 5], [4, 6], [5, 7], [5, 8]];
    let g = DecoratedGraph::new(1, 5, 7, vertices, edges).unwrap();
    assert!(g.is_stable());
    AlignedGraph::new(g, vec![0, 0, 0, 0, 1, 2, 3, 3, 3]).unwrap()
}

#[test]
fn radius_and_nonemptiness() {
    let a = example();
    assert_eq!(a.core_edges(), vec![0, 1, 2, 3]);
    assert_eq!(a.contraction_radius().unwrap(), (0, 2));
    assert!(a.is_nonempty(NonemptyCriterion::Dmin));
    assert_eq!(a.label_count(), 7);
}

#[test]
fn canonical_subdivision() {
    let s = example().canonical_subdivision();
    // 3→5 crosses level 1 and 4→6 crosses level 2
    assert_eq!(s.graph.num_vertices(), 11);
    assert_eq!(s.synthetic.iter().filter(|&&x| x).count(), 2);
    assert_eq!(&s.fiber_sizes[1..], &[2, 2, 3]);
    assert_eq!(s.graph.marking_count(), 5);
}

#[test]
fn subdivision_at_radius_one() {
    let s = example().subdivision_at_radius(1).unwrap();
    // one crossing edge (3→5) and one marking below the radius (on vertex 0)
    assert_eq!(s.graph.num_vertices(), 11);
    assert_eq!(s.marking_leaf.iter().filter(|&&x| x).count(), 1);
    assert!(s.levels.iter().skip(9).all(|&l| l == 1));
}

#[test]
fn radial_merges() {
    let a = example();
    let m1 = a.radial_merge(1).unwrap().aligned;
    assert_eq!((m1.length(), m1.graph().num_vertices()), (2, 8));
    assert_eq!(m1.core_edges().len(), 4);
    // no edge joins levels 1 and 2, so only the levels fuse
    let m2 = a.radial_merge(2).unwrap().aligned;
    assert_eq!((m2.length(), m2.graph().num_vertices()), (2, 9));
    let m3 = a.radial_merge(3).unwrap().aligned;
    assert_eq!((m3.length(), m3.graph().num_vertices()), (2, 7));
    let merged = m3.graph().vertices().iter().find(|v| v.marks == vec![4, 5]).unwrap();
    assert_eq!(merged.degree, 2);
    for m in [&m1, &m2, &m3] {
        assert!(m.contraction_radius().unwrap().1 >= 2);
    }
}

#[test]
fn embedded_point() {
    let a = example();
    let core = vec![q(1, 10), q(1, 10), q(1, 10), q(7, 100)];
    let levels = vec![q(21, 100); 3];
    let qp = DualPoint::new(a, core, levels, NonemptyCriterion::Dmin).unwrap();
    let p = embed_dual(&qp);
    let expected = [q(1, 10), q(1, 10), q(1, 10), q(7, 100), q(21, 200), q(21, 100), q(7, 40), q(7, 100), q(7, 100)];
    assert_eq!(p.lengths(), &expected);
    assert!(in_z(&p).unwrap());
    assert_eq!(project_to_dual(&p).unwrap().canonical_key(), qp.canonical_key());
}

#[test]
fn sprouting_a_genus_two_graph() {
    let g = DecoratedGraph::new(
        2,
        2,
        9,
        vec![Vertex::new(1, 3, [1]), Vertex::new(0, 2, []), Vertex::new(0, 0, [2]), Vertex::new(0, 4, [])],
        vec![[0, 1], [1, 2], [2, 0], [2, 3]],
    )
    .unwrap();
    assert!(g.is_stable());
    let sp = g.sprout();
    assert_eq!(sp.new_edges.len(), 9);
    assert_eq!(sp.graph.one_ends().len(), 9);
    assert_eq!(sp.graph.genus(), 2);
    assert!(sp.graph.is_stable());
    assert!((0..4).all(|v| sp.graph.vertex(v).degree == 0));
}
