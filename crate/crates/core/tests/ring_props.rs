use proptest::prelude::*;
use shapedecomp::decompose::permuted_point;
use shapedecomp::ringcore::NVARS;
use shapedecomp::symgroup::{compose, element, inverse, relative};
use shapedecomp::{Perm3, Poly9, Q};

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Q::new(n, d))
}

fn poly() -> impl Strategy<Value = Poly9> {
    prop::collection::vec((prop::array::uniform9(0u8..=2), rational()), 0..5)
        .prop_map(|ts| ts.into_iter().fold(Poly9::zero(), |acc, (e, c)| &acc + &Poly9::monomial(e, c)))
}

fn nonzero_poly() -> impl Strategy<Value = Poly9> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = [Q; NVARS]> {
    prop::array::uniform9(rational())
}

fn perm3() -> impl Strategy<Value = Perm3> {
    (0usize..6).prop_map(|i| ["123", "132", "213", "231", "312", "321"].map(|s| Perm3::parse(s).unwrap())[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly9::zero());
        prop_assert_eq!(&a * &Poly9::one(), a.clone());
    }

    #[test]
    fn exact_division_round_trip(a in poly(), b in nonzero_poly()) {
        let q = (&a * &b).divide_exact(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn division_with_remainder_fails(a in nonzero_poly()) {
        let x1 = Poly9::coord(shapedecomp::Axis::X, 1);
        let num = &(&a * &x1) + &Poly9::one();
        prop_assert!(num.divide_exact(&x1).is_err());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), pt in point()) {
        prop_assert_eq!((&a * &b).evaluate(&pt), &a.evaluate(&pt) * &b.evaluate(&pt));
        prop_assert_eq!((&a + &b).evaluate(&pt), &a.evaluate(&pt) + &b.evaluate(&pt));
    }

    #[test]
    fn float_evaluation_tracks_exact(a in poly(), pt in point()) {
        let f: [f64; NVARS] = std::array::from_fn(|i| pt[i].to_f64());
        let exact = a.evaluate(&pt).to_f64();
        prop_assert!((a.evaluate_f64(&f) - exact).abs() <= 1e-12 * (1.0 + exact.abs()));
    }

    #[test]
    fn group_action_composes(a in poly(), i in 0usize..36, j in 0usize..36) {
        let two = a.permute_vars(&element(i)).permute_vars(&element(j));
        prop_assert_eq!(two, a.permute_vars(&element(j).compose(element(i))));
        prop_assert_eq!(element(compose(i, j)), element(i).compose(element(j)));
    }

    #[test]
    fn action_matches_permuted_point(a in poly(), j in 0usize..36, pt in point()) {
        prop_assert_eq!(a.permute_vars(&element(j)).evaluate(&pt), a.evaluate(&permuted_point(&pt, j)));
    }

    #[test]
    fn inverse_and_relative(i in 0usize..36, j in 0usize..36) {
        prop_assert_eq!(compose(i, inverse(i)), 0);
        prop_assert_eq!(compose(i, relative(i, j)), j);
    }

    #[test]
    fn multiplication_respects_symmetry(s in perm3(), a in poly(), b in poly()) {
        let lhs = (&a * &b).full_diag_permute(s);
        prop_assert_eq!(lhs, &a.full_diag_permute(s) * &b.full_diag_permute(s));
    }
}

#[test]
fn group_has_36_distinct_elements() {
    let set: std::collections::HashSet<String> = (0..36).map(|j| element(j).to_string()).collect();
    assert_eq!(set.len(), 36);
    assert_eq!(element(0), shapedecomp::PermPair::ID);
}
