// One PASS/FAIL line per acceptance criterion. Runs without the libtest
// harness so the table is always printed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use common::*;
use rand::Rng;
use shapedecomp::decompose::*;
use shapedecomp::density::*;
use shapedecomp::ecg::*;
use shapedecomp::harmonics::{check_syzygies, degree_dimensions};
use shapedecomp::ringcore::rank;
use shapedecomp::rng::seeded;
use shapedecomp::shapes::*;
use shapedecomp::symgroup::verify_character_identities;
use shapedecomp::{Poly9, Q};

// Pinned tolerances and budgets.
const C1_SECONDS: f64 = 60.0;
const C2_SECONDS: f64 = 300.0;
const C3_TRIALS: usize = 100;
const C3_POINTS: usize = 1000;
const C3_RTOL: f64 = 1e-9;
const C4_POINTS: usize = 5;
const C7_SEED: u64 = 7;
const C7_SECONDS: f64 = 1800.0;
const C7_E9: f64 = -5.35;
const C7_E13: f64 = -5.358;
const C7_VIRIAL: f64 = 1e-3;
const C8_SUM: f64 = 1e-8;
const C8_PAIR: f64 = 1e-6;
const C8_MAJOR: f64 = 0.80;
const C8_ORTHO: f64 = 1e-8;
const C8_W2: (f64, f64) = (0.26900, 0.02);
const C8_W7: (f64, f64) = (0.29747, 0.02);
const C9_RTOL: f64 = 0.005;
const C9_MATRIX_SAMPLES: usize = 8_000_000;
const C9_OVERLAP_SAMPLES: usize = 800_000;
const C10_NORM: f64 = 0.01;
const C10_SPHERE: f64 = 1.05;
const C10_SIGMA: f64 = 3.0;
const C10_ANISO_SAMPLES: usize = 80_000;
const C10_SCALING: f64 = 0.20;
const C10_SCALING_SAMPLES: usize = 20_000;

fn stages() -> &'static Vec<StageResult> {
    static S: OnceLock<Vec<StageResult>> = OnceLock::new();
    S.get_or_init(|| {
        let opts = OptimizeOptions { sizes: narayana_sizes(7), seed: C7_SEED, ..Default::default() };
        let t = Instant::now();
        let r = optimize_basis(&opts).expect("optimizer runs");
        STAGE_SECONDS.get_or_init(|| t.elapsed().as_secs_f64());
        r
    })
}
static STAGE_SECONDS: OnceLock<f64> = OnceLock::new();

fn basis9() -> &'static EcgBasis {
    &stages().iter().find(|s| s.basis.size() == 9).unwrap().basis
}

type Outcome = (bool, String);

fn c1() -> Outcome {
    let t = Instant::now();
    let syz = check_syzygies().all_zero();
    let deg = degree_dimensions(3) == vec![1, 2, 2, 1];
    let set = shapes();
    let alt = set.shapes.len() == 36 && set.shapes.iter().all(|s| s.is_alternating());
    let indep = rank(&set.shapes) == 36;
    let sizes = set.block_sizes() == vec![1, 1, 1, 1, 4, 4, 4, 4, 4, 4, 8];
    let chars = verify_character_identities();
    let secs = t.elapsed().as_secs_f64();
    let ok = syz && deg && alt && indep && sizes && chars.passed() && secs < C1_SECONDS;
    (
        ok,
        format!(
            "syzygies {syz}, degrees (1,2,2,1) {deg}, 36 alternating {alt}, independent {indep}, block sizes {sizes}, character identities {} ({} checks), {secs:.1}s",
            chars.passed(),
            chars.checks.len()
        ),
    )
}

fn c2() -> Outcome {
    let t = Instant::now();
    let r = verify_derivative_span();
    let secs = t.elapsed().as_secs_f64();
    match r {
        Ok(rep) => (rep.missing.is_empty() && secs < C2_SECONDS, format!("rank {}, missing {:?}, {secs:.1}s", rep.rank, rep.missing)),
        Err(e) => (false, format!("{e}")),
    }
}

fn c3() -> Outcome {
    let t = Instant::now();
    let mut rng = seeded(31);
    let mut exact = 0;
    let mut bosonic = 0;
    let mut samples: Vec<(Poly9, Vec<Poly9>)> = Vec::new();
    for _ in 0..C3_TRIALS {
        let (psi, p) = random_alternating(&mut rng, 4, 2);
        if let Ok(phi) = extract_bosonic_symbolic(&psi) {
            exact += (phi.phi == p) as usize;
            bosonic += phi.all_bosonic() as usize;
        }
        if samples.len() < 10 {
            samples.push((psi, p));
        }
    }
    let mut worst: f64 = 0.0;
    let mut recon: f64 = 0.0;
    let mut over = 0;
    let mut evaluated = 0;
    while evaluated < C3_POINTS {
        let pt: [f64; 9] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let (psi, p) = &samples[evaluated % samples.len()];
        let Ok(num) = extract_bosonic_numeric(|v| psi.evaluate_f64(v), &pt) else { continue };
        let sym: Vec<f64> = p.iter().map(|q| q.evaluate_f64(&pt)).collect();
        let scale = sym.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let diff = num.phi.iter().zip(&sym).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        worst = worst.max(diff / scale);
        over += (diff / scale > C3_RTOL) as usize;
        let v = psi.evaluate_f64(&pt);
        recon = recon.max((reconstruct_numeric(&num, &pt) - v).abs() / v.abs());
        evaluated += 1;
    }
    let ok = exact == C3_TRIALS && bosonic == C3_TRIALS && worst <= C3_RTOL;
    (
        ok,
        format!(
            "{exact}/{C3_TRIALS} exact recoveries, {bosonic}/{C3_TRIALS} bosonic, numeric vs symbolic Φ worst relative {worst:.1e} ({over}/{C3_POINTS} points above {C3_RTOL:.0e}), numeric Ψ reconstruction worst relative {recon:.1e}, {:.1}s",
            t.elapsed().as_secs_f64()
        ),
    )
}

fn random_rational_point<R: Rng>(rng: &mut R) -> [Q; 9] {
    loop {
        let pt: [Q; 9] = std::array::from_fn(|_| Q::new(rng.random_range(-40i64..=40), rng.random_range(1i64..=9)));
        let off = (0..3).all(|a| {
            let (x, y, z) = (&pt[3 * a], &pt[3 * a + 1], &pt[3 * a + 2]);
            x != y && x != z && y != z
        });
        if off {
            return pt;
        }
    }
}

fn c4() -> Outcome {
    let mut rng = seeded(41);
    let mut good = 0;
    let mut total = 0;
    for _ in 0..C4_POINTS {
        let pt = random_rational_point(&mut rng);
        for which in 4..=7 {
            good += linear_block_inverse_holds_at(which, &pt) as usize;
            total += 1;
        }
        good += chi8_inverse_holds_at(&pt) as usize;
        total += 1;
    }
    (good == total, format!("{good}/{total} products equal the identity exactly (blocks 4-7 and the chi8 system at {C4_POINTS} rational points)"))
}

fn c5() -> Outcome {
    let ok = septiplet_identity();
    (ok, format!("septiplet identity exact over Gaussian rationals: {ok}"))
}

fn c6() -> Outcome {
    let rows = q_basis();
    let orth = orthogonality_violations(&rows);
    let parity = parity_violations(&rows);
    let printed = parity_violations(&q_basis_as_printed());
    (
        orth.is_empty() && parity.is_empty(),
        format!(
            "{} rows, orthogonality violations {}, parity violations {} (rows {:?} corrected; as printed they violate parity at {:?})",
            rows.len(),
            orth.len(),
            parity.len(),
            corrected_rows(),
            printed
        ),
    )
}

fn c7() -> Outcome {
    let st = stages();
    let secs = *STAGE_SECONDS.get().unwrap_or(&0.0);
    let e: Vec<f64> = st.iter().map(|s| s.basis.energy.unwrap()).collect();
    let e9 = e[5];
    let e13 = e[6];
    let monotone = e.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    let mut virial: f64 = 0.0;
    for s in st {
        let (t, v) = kinetic_potential(&s.basis).unwrap();
        virial = virial.max((v / t + 2.0).abs());
    }
    let sizes: Vec<usize> = st.iter().map(|s| s.basis.size()).collect();
    let ok = e9 <= C7_E9 && e13 <= C7_E13 && monotone && virial < C7_VIRIAL && secs <= C7_SECONDS;
    (
        ok,
        format!(
            "seed {C7_SEED}, sizes {sizes:?}, E(9) = {e9:.7}, E(13) = {e13:.7}, monotone {monotone}, max |V/T + 2| = {virial:.1e}, {secs:.0}s"
        ),
    )
}

fn c8() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for s in stages() {
        let b = &s.basis;
        let o: Vec<f64> = (0..36).map(|j| permuted_overlap(b, j)).collect();
        let w = match weights_from_overlaps(&o, b) {
            Ok(w) => w.w,
            Err(e) => {
                notes.push(format!("N={}: {e}", b.size()));
                ok = false;
                continue;
            }
        };
        let sum = (w.iter().sum::<f64>() - 1.0).abs();
        let pairs = [(0, 3), (6, 8), (7, 9)].iter().map(|&(a, c)| (w[a] - w[c]).abs()).fold(0.0f64, f64::max);
        let major = w[2] + w[7] + w[9];
        let ortho = orthonormality_residual_group(&o);
        let stage_ok = sum < C8_SUM && pairs < C8_PAIR && major > C8_MAJOR && ortho < C8_ORTHO;
        ok &= stage_ok;
        notes.push(format!("N={} sum-1 {sum:.0e} pairs {pairs:.0e} w2+w7+w9 {major:.4} ortho {ortho:.0e}", b.size()));
        if b.size() == 9 {
            let direct = orthonormality_residual_direct(b);
            let w2 = (w[2] - C8_W2.0).abs() <= C8_W2.1;
            let w7 = (w[7] - C8_W7.0).abs() <= C8_W7.1;
            ok &= w2 && w7 && direct < C8_ORTHO;
            notes.push(format!("N=9 w2 {:.5} w7 {:.5} direct ortho {direct:.0e}", w[2], w[7]));
        }
    }
    (ok, notes.join("; "))
}

fn c9() -> Outcome {
    let t = Instant::now();
    let b = two_primitive_basis();
    let m = matrix_elements(&b).unwrap();
    let mc = mc_matrices(&b.primitives, C9_MATRIX_SAMPLES, &mut seeded(91));
    let mut entries: Vec<(f64, &Stat, f64)> = Vec::new();
    for k in 0..2 {
        for l in 0..2 {
            entries.push((m.s[(k, l)], &mc.s[k][l], (m.s[(k, k)] * m.s[(l, l)]).sqrt()));
            entries.push((m.h[(k, l)], &mc.h[k][l], (m.h[(k, k)] * m.h[(l, l)]).abs().sqrt()));
        }
    }
    let (dm, sm) = worst(&entries);
    let mut rng = seeded(92);
    let ov: Vec<Stat> = (0..36).map(|j| mc_permuted_overlap(&b, j, C9_OVERLAP_SAMPLES, &mut rng)).collect();
    let an: Vec<(f64, &Stat, f64)> = (0..36).map(|j| (permuted_overlap(&b, j), &ov[j], 1.0)).collect();
    let (dp, sp) = worst(&an);
    let ok = dm <= C9_RTOL && sm <= C9_RTOL && dp <= C9_RTOL && sp <= C9_RTOL;
    (
        ok,
        format!(
            "S,H: worst deviation {:.2}% (3σ {:.2}%); permuted overlaps: worst {:.2}% (3σ {:.2}%); {:.0}s",
            100.0 * dm,
            100.0 * sm,
            100.0 * dp,
            100.0 * sp,
            t.elapsed().as_secs_f64()
        ),
    )
}

fn c10() -> Outcome {
    let b = basis9();
    let model = RhoModel::new(b);
    let (norm, change) = adaptive_spherical_integral(&|p| model.value(p), 1.0, 1e-6);
    let (lo, hi) = sphere_extremes(&|p| model.value(p), 0.2, 24);
    let ratio = hi / lo;
    let a = bosonic_density(b, 23, &[0.3, 0.0, 0.0], C10_ANISO_SAMPLES, 101).unwrap();
    let c = bosonic_density(b, 23, &[0.0, 0.0, 0.3], C10_ANISO_SAMPLES, 102).unwrap();
    let sig = (a.value - c.value).abs() / (a.stderr.powi(2) + c.stderr.powi(2)).sqrt();
    let s1 = bosonic_density(b, 23, &[0.3, 0.0, 0.0], C10_SCALING_SAMPLES, 103).unwrap();
    let s2 = bosonic_density(b, 23, &[0.3, 0.0, 0.0], 2 * C10_SCALING_SAMPLES, 104).unwrap();
    let shrink = s2.stderr / s1.stderr * 2f64.sqrt();
    let ok = (norm - 3.0).abs() / 3.0 < C10_NORM && ratio <= C10_SPHERE && sig > C10_SIGMA && (shrink - 1.0).abs() <= C10_SCALING;
    (
        ok,
        format!(
            "∫ρ = {norm:.6} (grid change {change:.0e}), max/min on r=0.2 sphere {ratio:.4}, D23 (0.3,0,0) vs (0,0,0.3): {:.3e} vs {:.3e}, {sig:.1}σ, stderr ratio × √2 = {shrink:.3}",
            a.value, c.value
        ),
    )
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 10] = [
        (1, "exact identity suite", c1),
        (2, "derivative span", c2),
        (3, "extraction round trip", c3),
        (4, "M-matrix inverses", c4),
        (5, "septiplet identity", c5),
        (6, "Q-basis", c6),
        (7, "ECG stage energies", c7),
        (8, "block-weight properties", c8),
        (9, "integral engine vs Monte Carlo", c9),
        (10, "density suite", c10),
    ];
    let only: Option<Vec<usize>> = std::env::var("ACCEPTANCE_ONLY").ok().map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect());
    let mut failed = 0;
    for (n, name, f) in criteria {
        if only.as_ref().is_some_and(|o| !o.contains(&n)) {
            continue;
        }
        let t = Instant::now();
        let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r,
            Err(e) => (false, format!("panicked: {}", e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())),
        };
        failed += (!ok) as usize;
        println!("criterion {n:>2} {}: {name}: {detail} [{:.1}s]", if ok { "PASS" } else { "FAIL" }, t.elapsed().as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        // The table is the verdict; set ACCEPTANCE_STRICT=1 to turn failures into a nonzero exit.
        if std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
            std::process::exit(1);
        }
    } else {
        println!("all criteria passed");
    }
}
