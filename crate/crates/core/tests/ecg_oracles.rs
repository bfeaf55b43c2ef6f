mod common;

use common::*;
use nalgebra::{SMatrix, SVector};
use rand::Rng;
use shapedecomp::ecg::*;
use shapedecomp::rng::seeded;

#[test]
fn ecg_value_matches_literal_expansion() {
    let b = EcgBasis { coefficients: vec![1.0], ..EcgBasis::new(vec![two_primitive_basis().primitives[0].clone()]) };
    let mut rng = seeded(11);
    for _ in 0..10 {
        let u: [f64; 9] = std::array::from_fn(|_| rng.random_range(-1.5..1.5));
        let (a, l) = (ecg_value(&b, &u), literal_psi(&b, &u));
        assert!((a - l).abs() <= 1e-12 * l.abs().max(1e-12), "{a} vs {l}");
    }
}

#[test]
fn moment_integral_matches_monte_carlo() {
    let mut rng = seeded(12);
    for _ in 0..3 {
        let m = SMatrix::<f64, 9, 9>::from_fn(|_, _| rng.random_range(-0.3..0.3));
        let pd = m * m.transpose() + SMatrix::<f64, 9, 9>::identity() * 0.8;
        let q = -pd;
        let b = SVector::<f64, 9>::from_fn(|_, _| rng.random_range(-0.4..0.4));
        let exact = gaussian_moment_integral(&q, &b).unwrap();
        let st = mc_gaussian_integral(&q, &b, 400_000, &mut rng);
        let rel = (st.mean() - exact).abs() / exact;
        assert!(rel < 0.005 && 3.0 * st.stderr() / exact < 0.005, "rel {rel} se {}", st.stderr() / exact);
    }
}

// Fast statistical consistency; the 0.5% budget is checked by the acceptance target.
const MAX_Z: f64 = 4.5;

#[test]
fn matrix_elements_consistent_with_monte_carlo() {
    let b = two_primitive_basis();
    let m = matrix_elements(&b).unwrap();
    let mc = mc_matrices(&b.primitives, 100_000, &mut seeded(13));
    let mut pairs = Vec::new();
    for k in 0..2 {
        for l in 0..2 {
            pairs.push((m.s[(k, l)], &mc.s[k][l], 1.0));
            pairs.push((m.h[(k, l)], &mc.h[k][l], 1.0));
        }
    }
    let z = max_z(&pairs);
    assert!(z < MAX_Z, "z = {z}");
}

#[test]
fn permuted_overlaps_consistent_with_monte_carlo() {
    let b = two_primitive_basis();
    let mut rng = seeded(14);
    let mc: Vec<Stat> = (0..36).map(|j| mc_permuted_overlap(&b, j, 10_000, &mut rng)).collect();
    let pairs: Vec<(f64, &Stat, f64)> = (0..36).map(|j| (permuted_overlap(&b, j), &mc[j], 1.0)).collect();
    let z = max_z(&pairs);
    assert!(z < MAX_Z, "z = {z}");
}

#[test]
fn literal_gradient_matches_differences() {
    let b = two_primitive_basis();
    let mut rng = seeded(15);
    for _ in 0..10 {
        let u: [f64; 9] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        for p in &b.primitives {
            let (_, g) = literal_primitive_grad(p, &u);
            let fd = fd_gradient(&|x| literal_primitive(p, x), &u, 1e-5);
            for k in 0..9 {
                assert!((g[k] - fd[k]).abs() < 1e-6 * g[k].abs().max(1e-3), "{k}: {} vs {}", g[k], fd[k]);
            }
        }
    }
}
