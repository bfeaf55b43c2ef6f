use proptest::prelude::*;
use shapedecomp::ecg::*;
use shapedecomp::symgroup::inverse;

fn primitive() -> impl Strategy<Value = EcgPrimitive> {
    (
        -3.0f64..-1.0,
        prop::array::uniform2(-0.5f64..-0.05),
        prop::array::uniform3(-0.02f64..0.02),
        prop::array::uniform2(-0.3f64..0.3),
        0.1f64..0.8,
    )
        .prop_map(|(a0, a, beta, g, gz)| EcgPrimitive { alpha: [a0, a[0], a[1]], beta, gamma: [g[0], g[1], gz] })
        .prop_filter("normalizable", |p| p.is_valid())
}

fn basis() -> impl Strategy<Value = EcgBasis> {
    prop::collection::vec(primitive(), 1..=3).prop_filter_map("solvable", |ps| {
        let mut b = EcgBasis::new(ps);
        b.solve().ok().map(|_| b)
    })
}

fn point() -> impl Strategy<Value = [f64; 9]> {
    prop::array::uniform9(-2.0f64..2.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn matrices_are_symmetric_and_overlap_positive(b in basis()) {
        let m = matrix_elements(&b).unwrap();
        prop_assert!((&m.s - m.s.transpose()).amax() <= 1e-12 * m.s.amax());
        prop_assert!((&m.h - m.h.transpose()).amax() <= 1e-12 * m.h.amax());
        prop_assert!(m.s.clone().cholesky().is_some());
    }

    #[test]
    fn wave_function_is_antisymmetric(b in basis(), u in point(), swap in 0usize..3) {
        let (i, j) = [(0, 1), (0, 2), (1, 2)][swap];
        let mut v = u;
        for c in 0..3 {
            v.swap(3 * c + i, 3 * c + j);
        }
        let a = ecg_value(&b, &u);
        prop_assert!((ecg_value(&b, &v) + a).abs() <= 1e-12 * (1.0 + a.abs()));
    }

    #[test]
    fn scaling_law_and_virial(b in basis(), lambda in 0.6f64..1.6) {
        let (t, v) = kinetic_potential(&b).unwrap();
        let mut s = b.clone();
        s.primitives = b.primitives.iter().map(|p| p.scaled(lambda)).collect();
        let (ts, vs) = kinetic_potential(&s).unwrap();
        prop_assert!((ts - lambda * lambda * t).abs() <= 1e-9 * t.abs());
        prop_assert!((vs - lambda * v).abs() <= 1e-9 * v.abs());
        let best = -v / (2.0 * t);
        s.primitives = b.primitives.iter().map(|p| p.scaled(best)).collect();
        let (tb, vb) = kinetic_potential(&s).unwrap();
        prop_assert!((vb / tb + 2.0).abs() < 1e-9);
    }

    #[test]
    fn virial_rescale_never_raises_energy(b in basis()) {
        let mut r = b.clone();
        let e = virial_rescale(&mut r).unwrap();
        prop_assert!(e <= b.energy.unwrap() + 1e-12);
    }

    #[test]
    fn weights_invariant_under_rescaling(b in basis()) {
        let w = block_amplitudes(&b).unwrap();
        let mut d = b.clone();
        d.coefficients.iter_mut().for_each(|c| *c *= 2.0);
        let o: Vec<f64> = (0..36).map(|j| permuted_overlap(&d, j)).collect();
        let w2 = weights_from_overlaps(&o, &d).unwrap();
        for k in 0..11 {
            prop_assert!((w.w[k] - w2.w[k]).abs() <= 1e-10);
        }
    }

    #[test]
    fn block_weight_identities(b in basis()) {
        let w = block_amplitudes(&b).unwrap();
        prop_assert!((w.w.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        prop_assert!((w.w[0] - w.w[3]).abs() < 1e-10);
        prop_assert!((w.w[6] - w.w[8]).abs() < 1e-10);
        prop_assert!((w.w[7] - w.w[9]).abs() < 1e-10);
        for k in 0..11 {
            prop_assert!((w.a[k] * w.a[k] - w.w[k]).abs() < 1e-12);
        }
    }

    #[test]
    fn group_consistency_of_overlaps(b in basis(), j in 0usize..36) {
        let lhs = permuted_pair_overlap(&b, 0, j);
        let rhs = permuted_pair_overlap(&b, inverse(j), 0);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * permuted_overlap(&b, 0));
    }
}

#[test]
fn orthonormality_routes_agree() {
    let mut b = EcgBasis::new(vec![
        EcgPrimitive { alpha: [-2.2, -0.2, -0.1], beta: [0.02, -0.01, 0.005], gamma: [0.03, -0.05, 0.4] },
        EcgPrimitive { alpha: [-1.4, -0.3, -0.15], beta: [-0.03, 0.01, 0.01], gamma: [0.08, 0.1, 0.5] },
    ]);
    b.solve().unwrap();
    let o: Vec<f64> = (0..36).map(|j| permuted_overlap(&b, j)).collect();
    let g = orthonormality_residual_group(&o);
    let d = orthonormality_residual_direct(&b);
    assert!(g < 1e-8 && d < 1e-8, "group {g:e}, direct {d:e}");
}

#[test]
fn basis_json_round_trip() {
    let mut b = EcgBasis::new(vec![EcgPrimitive { alpha: [-2.0, -0.2, -0.1], beta: [0.0, 0.01, -0.01], gamma: [0.0, 0.1, 0.4] }]);
    b.solve().unwrap();
    assert_eq!(EcgBasis::from_json(&b.to_json()).unwrap(), b);
    assert!(EcgBasis::from_json("{\"primitives\":[],\"coefficients\":[1.0],\"energy\":null,\"stage\":null}").is_err());
}
