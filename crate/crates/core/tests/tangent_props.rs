use mdc_core::reference::{dependency_by_circuits, dependency_by_sampling};
use mdc_core::tangent::{
    derivative_at_marked_point, fiber_witness, has_basepoint, has_nonvanishing_dependency, TangentClass,
    TangentVectorList,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vectors(max_m: usize, max_dim: usize, range: i64) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1..=max_m, 1..=max_dim).prop_flat_map(move |(m, dim)| {
        (Just(dim), proptest::collection::vec(proptest::collection::vec(-range..=range, dim), m))
    })
}

fn holds(dim: usize, vs: &[Vec<i64>]) -> bool {
    has_nonvanishing_dependency(&TangentVectorList::from_integers(dim, vs).unwrap())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn a_single_nonzero_vector_has_no_dependency() {
    for dim in 1..=4 {
        let mut v = vec![0; dim];
        v[dim - 1] = 3;
        assert!(!holds(dim, &[v]));
    }
}

proptest! {
    #[test]
    fn matches_circuit_oracle((dim, vs) in vectors(5, 4, 3)) {
        prop_assert_eq!(holds(dim, &vs), dependency_by_circuits(&vs));
    }

    #[test]
    fn sampled_certificates_are_sound((dim, vs) in vectors(6, 4, 4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if dependency_by_sampling(&mut rng, &vs, 20) {
            prop_assert!(holds(dim, &vs));
        }
    }

    #[test]
    fn invariant_under_reordering_and_scaling((dim, vs) in vectors(5, 4, 3), seed in any::<u64>(), scales in proptest::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 5)) {
        let mut w: Vec<Vec<i64>> = vs.iter().zip(&scales).map(|(v, s)| v.iter().map(|x| x * s).collect()).collect();
        let n = w.len();
        w.rotate_left((seed as usize) % n);
        prop_assert_eq!(holds(dim, &vs), holds(dim, &w));
    }

    #[test]
    fn invariant_under_change_of_basis((dim, vs) in vectors(5, 3, 3), a in -2i64..=2, i in 0usize..3, j in 0usize..3) {
        prop_assume!(i < dim && j < dim && i != j);
        // add a multiple of coordinate j to coordinate i
        let w: Vec<Vec<i64>> = vs.iter().map(|v| { let mut v = v.clone(); v[i] += a * v[j]; v }).collect();
        prop_assert_eq!(holds(dim, &vs), holds(dim, &w));
    }

    #[test]
    fn witness_has_the_requested_derivative(d in 1usize..=5, coords in proptest::collection::vec(-4i64..=4, 2..=5)) {
        let r = coords.len() - 1;
        let v = TangentClass::from_vector(coords.iter().map(|&x| q(x)).collect()).unwrap();
        match fiber_witness(&v, d, r).unwrap() {
            None => prop_assert!(d == 1 && v.is_zero()),
            Some(w) => {
                prop_assert!(!(d == 1 && v.is_zero()));
                prop_assert_eq!(derivative_at_marked_point(&w), v);
                prop_assert!(!has_basepoint(&w));
                prop_assert_eq!((w.degree(), w.r()), (d, r));
            }
        }
    }

    #[test]
    fn tangent_class_ignores_diagonal_shift(coords in proptest::collection::vec(-4i64..=4, 2..=5), shift in -5i64..=5) {
        let a = TangentClass::from_vector(coords.iter().map(|&x| q(x)).collect()).unwrap();
        let b = TangentClass::from_vector(coords.iter().map(|&x| q(x + shift)).collect()).unwrap();
        prop_assert_eq!(a, b);
    }
}
