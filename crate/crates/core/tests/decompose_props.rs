use proptest::prelude::*;
use rand::SeedableRng;
use shapedecomp::decompose::*;
use shapedecomp::shapes::shapes;
use shapedecomp::{Perm3, Poly9};

fn point() -> impl Strategy<Value = [f64; 9]> {
    prop::array::uniform9(-1.0f64..1.0).prop_filter("off coincidences", |p| {
        (0..3).all(|a| {
            let (x, y, z) = (p[3 * a], p[3 * a + 1], p[3 * a + 2]);
            ((x - y) * (x - z) * (y - z)).abs() > 1e-3
        })
    })
}

fn perm3() -> impl Strategy<Value = Perm3> {
    (0usize..6).prop_map(|i| Perm3::ALL[i])
}

fn fixed_psi(seed: u64) -> Poly9 {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    random_alternating(&mut rng, 3, 2).0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn numeric_round_trip_reconstructs(seed in 0u64..4, pt in point()) {
        let psi = fixed_psi(seed);
        let phi = extract_bosonic_numeric(|v| psi.evaluate_f64(v), &pt).unwrap();
        let v = psi.evaluate_f64(&pt);
        let r = reconstruct_numeric(&phi, &pt);
        prop_assert!((r - v).abs() <= 1e-9 * v.abs().max(1e-3), "{r} vs {v}");
    }

    #[test]
    fn numeric_extraction_is_linear(pt in point(), a in -3.0f64..3.0, b in -3.0f64..3.0) {
        let (p, q) = (fixed_psi(10), fixed_psi(11));
        let both = extract_bosonic_numeric(|v| a * p.evaluate_f64(v) + b * q.evaluate_f64(v), &pt).unwrap();
        let fp = extract_bosonic_numeric(|v| p.evaluate_f64(v), &pt).unwrap();
        let fq = extract_bosonic_numeric(|v| q.evaluate_f64(v), &pt).unwrap();
        for i in 0..36 {
            let want = a * fp.phi[i] + b * fq.phi[i];
            prop_assert!((both.phi[i] - want).abs() <= 1e-7 * (1.0 + want.abs()));
        }
    }

    #[test]
    fn extracted_functions_are_bosonic_pointwise(pt in point(), sy in perm3(), sz in perm3(), sx in perm3()) {
        let psi = fixed_psi(20);
        let a = extract_bosonic_numeric(|v| psi.evaluate_f64(v), &pt).unwrap();
        let mut q = pt;
        for i in 0..3 {
            q[sx.apply(i)] = pt[i];
            q[3 + sy.apply(i)] = pt[3 + i];
            q[6 + sz.apply(i)] = pt[6 + i];
        }
        let b = extract_bosonic_numeric(|v| psi.evaluate_f64(v), &q).unwrap();
        let scale = a.phi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for i in 0..36 {
            prop_assert!((a.phi[i] - b.phi[i]).abs() <= 1e-7 * scale.max(1.0));
        }
    }

    #[test]
    fn shapes_alternate_under_diagonal_relabelling(s in perm3(), pt in point()) {
        let set = shapes();
        let mut q = pt;
        for c in 0..3 {
            for i in 0..3 {
                q[3 * c + s.apply(i)] = pt[3 * c + i];
            }
        }
        let sign = s.sign() as f64;
        for sh in &set.shapes {
            let (a, b) = (sh.evaluate_f64(&pt), sh.evaluate_f64(&q));
            prop_assert!((b - sign * a).abs() <= 1e-12 * (1.0 + a.abs()));
        }
    }
}

#[test]
fn coincident_point_is_rejected() {
    let psi = fixed_psi(1);
    let mut pt = [0.1, 0.2, 0.3, -0.4, 0.5, 0.6, 0.7, -0.8, 0.9];
    pt[4] = pt[3];
    assert!(matches!(extract_bosonic_numeric(|v| psi.evaluate_f64(v), &pt), Err(DecomposeError::SingularPoint)));
}

#[test]
fn symbolic_rejects_non_alternating_input() {
    let p = Poly9::coord(shapedecomp::Axis::X, 1);
    assert!(matches!(extract_bosonic_symbolic(&p), Err(DecomposeError::NotAlternating)));
}

#[test]
fn symbolic_and_numeric_agree_on_a_shape() {
    let s = &shapes().shapes[23];
    let phi = extract_bosonic_symbolic(s).unwrap();
    let pt = [0.11, -0.52, 0.73, 0.29, -0.64, 0.05, -0.37, 0.81, 0.18];
    let num = extract_bosonic_numeric(|v| s.evaluate_f64(v), &pt).unwrap();
    for i in 0..36 {
        let want = phi.phi[i].evaluate_f64(&pt);
        assert!((num.phi[i] - want).abs() < 1e-9, "{i}: {} vs {want}", num.phi[i]);
    }
    assert!((phi.phi[23].evaluate_f64(&pt) - 1.0).abs() < 1e-15);
}
