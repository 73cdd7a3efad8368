mod common;

use common::{catalogs, relabel};
use mdc_core::enumeration::aligned_graphs;
use mdc_core::genus_one::NonemptyCriterion;
use mdc_core::io::{lengths_from_json, lengths_to_json, GraphJson, PointJson};
use mdc_core::retract::{
    embed_dual, flow, flow_raw, in_z, project_to_dual, random_dual_point, random_metric_point, MetricPoint,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn point(cat: usize, seed: u64) -> MetricPoint {
    let graphs: Vec<_> = catalogs()[cat].boundary().cloned().collect();
    random_metric_point(&mut ChaCha8Rng::seed_from_u64(seed), &graphs, 5).unwrap()
}

fn time() -> impl Strategy<Value = BigRational> {
    (0i64..=12).prop_map(|n| BigRational::new(BigInt::from(n), BigInt::from(12)))
}

proptest! {
    #[test]
    fn flow_keeps_total_length_one(cat in 0..catalogs().len(), seed in any::<u64>(), t in time()) {
        let f = flow(&point(cat, seed), &t).unwrap();
        prop_assert!(f.lengths().iter().sum::<BigRational>().is_one());
        prop_assert!(f.lengths().iter().all(|l| l > &BigRational::zero()));
    }

    #[test]
    fn one_end_lengths_follow_the_formula(cat in 0..catalogs().len(), seed in any::<u64>(), t in time()) {
        let p = point(cat, seed);
        let start = flow_raw(p.graph(), p.lengths(), &BigRational::zero()).unwrap();
        let now = flow_raw(p.graph(), p.lengths(), &t).unwrap();
        let d = BigRational::from_integer(BigInt::from(p.graph().degree_target()));
        for e in now.sprouted.one_ends() {
            let expected = &t / &d + (BigRational::one() - &t) * &start.sprouted_lengths[e];
            prop_assert_eq!(&now.sprouted_lengths[e], &expected);
        }
    }

    #[test]
    fn shells_keep_their_order(cat in 3..catalogs().len(), seed in any::<u64>(), t in time()) {
        let p = point(cat, seed);
        prop_assume!(t < BigRational::one());
        let start = flow_raw(p.graph(), p.lengths(), &BigRational::zero()).unwrap();
        let now = flow_raw(p.graph(), p.lengths(), &t).unwrap();
        let d0 = start.point.core_distances().unwrap();
        let dt = now.point.core_distances().unwrap();
        let leaves: Vec<usize> = (0..now.sprouted.num_vertices()).filter(|&v| now.sprouted.is_one_end_vertex(v)).collect();
        for &v in &leaves {
            for &w in &leaves {
                let before = d0[start.vertex_map[v]] <= d0[start.vertex_map[w]];
                let after = dt[now.vertex_map[v]] <= dt[now.vertex_map[w]];
                prop_assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn canonical_key_ignores_labels(cat in 0..catalogs().len(), seed in any::<u64>(), rot in 0usize..8) {
        let p = point(cat, seed);
        let g = p.graph();
        let nv = g.num_vertices();
        let ne = g.num_edges();
        let vp: Vec<usize> = (0..nv).map(|v| (v + rot) % nv).collect();
        let ep: Vec<usize> = (0..ne).map(|e| (e + rot) % ne).collect();
        let h = relabel(g, &vp, &ep, &vec![true; ne]);
        let mut lengths = vec![BigRational::zero(); ne];
        for e in 0..ne {
            lengths[ep[e]] = p.lengths()[e].clone();
        }
        let q = MetricPoint::new(h, lengths).unwrap();
        prop_assert!(q.same_point(&p));
    }

    #[test]
    fn point_json_round_trip(cat in 0..catalogs().len(), seed in any::<u64>()) {
        let p = point(cat, seed);
        let json = PointJson { graph: GraphJson::from(p.graph()), lengths: lengths_to_json(p.lengths()) };
        let text = serde_json::to_string(&json).unwrap();
        let back: PointJson = serde_json::from_str(&text).unwrap();
        let g = back.graph.to_graph().unwrap();
        let lengths = lengths_from_json(&back.lengths, g.num_edges()).unwrap();
        prop_assert_eq!(MetricPoint::new(g, lengths).unwrap(), p);
    }

    #[test]
    fn embedded_points_lie_in_z(cat in 3..catalogs().len(), seed in any::<u64>()) {
        let aligned = aligned_graphs(&catalogs()[cat], NonemptyCriterion::Dmin).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let qp = random_dual_point(&mut rng, &aligned, 5, NonemptyCriterion::Dmin).unwrap();
        let p = embed_dual(&qp);
        prop_assert!(p.lengths().iter().sum::<BigRational>().is_one());
        prop_assert!(in_z(&p).unwrap());
        prop_assert_eq!(project_to_dual(&p).unwrap().canonical_key(), qp.canonical_key());
        let json = GraphJson::from(qp.aligned());
        prop_assert_eq!(json.to_aligned().unwrap(), qp.aligned().clone());
    }
}
