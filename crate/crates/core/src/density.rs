//! One-electron and bosonic densities of an ECG wave function.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use nalgebra::{Matrix2, Matrix3, Vector2, Vector3};
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use thiserror::Error;

use crate::decompose::{extract_bosonic_numeric_guarded, DecomposeError, EPS};
use crate::ecg::{ecg_value, perm_matrix, EcgBasis};
use crate::ringcore::Perm3;
use crate::rng::substream;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DensityError {
    #[error("coincidence guard rejected {rejected} draws for {accepted} accepted samples")]
    BudgetExhausted { accepted: usize, rejected: usize },
    #[error("invalid grid specification: {0}")]
    BadGrid(String),
    #[error("unknown density kind {0}")]
    BadKind(String),
    #[error("malformed grid file: {0}")]
    BadFile(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityKind {
    Rho,
    Bosonic(usize),
}

impl DensityKind {
    pub fn parse(s: &str) -> Result<DensityKind, DensityError> {
        if s == "rho" {
            return Ok(DensityKind::Rho);
        }
        match s.strip_prefix('D').and_then(|n| n.parse::<usize>().ok()) {
            Some(i) if i < 36 => Ok(DensityKind::Bosonic(i)),
            _ => Err(DensityError::BadKind(s.to_string())),
        }
    }

    pub fn label(&self) -> String {
        match self {
            DensityKind::Rho => "rho".into(),
            DensityKind::Bosonic(i) => format!("D{i}"),
        }
    }
}

/// ∫ exp(−vᵀMv + cᵀv) dv₂dv₃ at fixed v₁, as pref·exp(−a v₁² + b v₁ + k).
#[derive(Clone, Copy, Debug)]
struct Marginal {
    pref: f64,
    a: f64,
    b: f64,
    k: f64,
}

impl Marginal {
    fn new(m: &Matrix3<f64>, c: &Vector3<f64>) -> Marginal {
        let mww = Matrix2::new(m[(1, 1)], m[(1, 2)], m[(2, 1)], m[(2, 2)]);
        let mw1 = Vector2::new(m[(1, 0)], m[(2, 0)]);
        let cw = Vector2::new(c[1], c[2]);
        let n = mww.try_inverse().expect("positive definite block");
        Marginal {
            pref: PI / mww.determinant().sqrt(),
            a: m[(0, 0)] - mw1.dot(&(n * mw1)),
            b: c[0] - cw.dot(&(n * mw1)),
            k: 0.25 * cw.dot(&(n * cw)),
        }
    }

    fn value(&self, v1: f64) -> f64 {
        self.pref * (-self.a * v1 * v1 + self.b * v1 + self.k).exp()
    }
}

/// ρ(r) = Σ coef·exp(−a|r|² + b z + k), from integrating every Gaussian pair
/// product of |Ψ|² over particles 2 and 3.
pub struct RhoModel {
    terms: Vec<[f64; 4]>,
}

fn perm_data() -> Vec<(Matrix3<f64>, f64)> {
    Perm3::ALL.iter().map(|&p| (perm_matrix(p), p.sign() as f64)).collect()
}

impl RhoModel {
    pub fn new(basis: &EcgBasis) -> RhoModel {
        let perms = perm_data();
        let prims: Vec<(Matrix3<f64>, Vector3<f64>)> = basis.primitives.iter().map(|p| (p.a_matrix(), p.gamma_vec())).collect();
        let mut terms = Vec::new();
        for (n, (an, gn)) in prims.iter().enumerate() {
            for (m, (am, gm)) in prims.iter().enumerate() {
                let cc = basis.coefficients[n] * basis.coefficients[m];
                for (p, sp) in &perms {
                    for (q, sq) in &perms {
                        let mat = p.transpose() * an * p + q.transpose() * am * q;
                        let flat = Marginal::new(&mat, &Vector3::zeros());
                        let (ga, gb) = (p.transpose() * gn, q.transpose() * gm);
                        // sinh·sinh = ¼ Σ_{s,t} s t e^{(s γa + t γb)·u}
                        for (s, t) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                            let z = Marginal::new(&mat, &(ga * s + gb * t));
                            let coef = 3.0 * cc * sp * sq * 0.25 * s * t * flat.pref * flat.pref * z.pref;
                            terms.push([coef, flat.a, z.b, z.k]);
                        }
                    }
                }
            }
        }
        RhoModel { terms }
    }

    pub fn value(&self, r: &[f64; 3]) -> f64 {
        let r2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        self.terms.iter().map(|t| t[0] * (-t[1] * r2 + t[2] * r[2] + t[3]).exp()).sum()
    }
}

pub fn one_electron_density(basis: &EcgBasis, r1: &[f64; 3]) -> f64 {
    RhoModel::new(basis).value(r1)
}

/// ∫ f over ℝ³ on a spherical product grid: Gauss–Legendre in r = s·t/(1−t),
/// in cos θ, and in φ.
pub fn spherical_integral(f: &(dyn Fn(&[f64; 3]) -> f64 + Sync), scale: f64, nr: usize, nang: usize) -> f64 {
    let gr = GaussLegendre::new(NonZeroUsize::new(nr).unwrap());
    let ga = GaussLegendre::new(NonZeroUsize::new(nang).unwrap());
    let gp = GaussLegendre::new(NonZeroUsize::new(2 * nang).unwrap());
    let radial: Vec<(f64, f64)> = gr
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, w)| {
            let t = 0.5 * (x + 1.0);
            let r = scale * t / (1.0 - t);
            let jac = scale / ((1.0 - t) * (1.0 - t)) * 0.5;
            (r, w * jac * r * r)
        })
        .collect();
    radial
        .par_iter()
        .map(|&(r, wr)| {
            let mut acc = 0.0;
            for &(ct, wt) in ga.as_node_weight_pairs() {
                let st = (1.0 - ct * ct).sqrt();
                for &(x, wp) in gp.as_node_weight_pairs() {
                    let phi = PI * (x + 1.0);
                    let p = [r * st * phi.cos(), r * st * phi.sin(), r * ct];
                    acc += wt * wp * PI * f(&p);
                }
            }
            wr * acc
        })
        .sum()
}

/// Refines the spherical grid until two successive estimates agree to `rtol`.
pub fn adaptive_spherical_integral(f: &(dyn Fn(&[f64; 3]) -> f64 + Sync), scale: f64, rtol: f64) -> (f64, f64) {
    let (mut nr, mut na) = (16, 8);
    let mut prev = spherical_integral(f, scale, nr, na);
    loop {
        nr = nr * 3 / 2;
        na = na * 3 / 2;
        let next = spherical_integral(f, scale, nr, na);
        let change = (next - prev).abs() / next.abs().max(f64::MIN_POSITIVE);
        if change < rtol || nr > 200 {
            return (next, change);
        }
        prev = next;
    }
}

/// Smallest and largest value of f over a θ,φ grid on the sphere of radius r.
pub fn sphere_extremes(f: &dyn Fn(&[f64; 3]) -> f64, radius: f64, n: usize) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..=n {
        let th = PI * i as f64 / n as f64;
        for j in 0..2 * n {
            let ph = PI * j as f64 / n as f64;
            let v = f(&[radius * th.sin() * ph.cos(), radius * th.sin() * ph.sin(), radius * th.cos()]);
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    (lo, hi)
}

/// One 2D Gaussian factor of the proposal for (v₂, v₃) on one axis.
#[derive(Clone, Debug)]
struct Gauss2 {
    mean: Vector2<f64>,
    prec: Matrix2<f64>,
    lower_inv_t: Matrix2<f64>,
    lognorm: f64,
}

impl Gauss2 {
    fn new(prec: Matrix2<f64>, mean: Vector2<f64>) -> Gauss2 {
        let l = prec.cholesky().expect("positive definite").l();
        let lower_inv_t = l.try_inverse().unwrap().transpose();
        Gauss2 { mean, prec, lower_inv_t, lognorm: 0.5 * prec.determinant().ln() - (2.0 * PI).ln() }
    }
    fn logpdf(&self, x: &Vector2<f64>) -> f64 {
        let d = x - self.mean;
        self.lognorm - 0.5 * d.dot(&(self.prec * d))
    }
}

/// Importance proposal for (r₂, r₃) at fixed r₁: a mixture over primitives
/// and particle relabellings of the conditional Gaussians of |φ|², broadened
/// by 1/κ; the z factor also carries the two sinh-lobe shifts. Copies
/// contracted in z cover the z-coincidence plane, where Ψ vanishes but the
/// Φᵢ need not.
#[derive(Clone)]
pub struct ConditionalProposal {
    comps: Vec<[Gauss2; 3]>,
    zshift: Vec<Vector2<f64>>,
}

const KAPPAS: [f64; 1] = [0.6];
const ZSCALES: [f64; 4] = [1.0, 10.0, 100.0, 1000.0];
const LOBES: [f64; 3] = [0.0, 1.0, -1.0];

impl ConditionalProposal {
    pub fn new(basis: &EcgBasis, r1: &[f64; 3]) -> ConditionalProposal {
        Self::with_options(basis, r1, &KAPPAS, &ZSCALES)
    }

    /// Even mixture over broadening factors `kappas` and z precision multipliers `zscales`.
    pub fn with_options(basis: &EcgBasis, r1: &[f64; 3], kappas: &[f64], zscales: &[f64]) -> ConditionalProposal {
        let perms = perm_data();
        let mut comps = Vec::new();
        let mut zshift = Vec::new();
        for prim in &basis.primitives {
            let a = prim.a_matrix();
            let g = prim.gamma_vec();
            for (p, _) in &perms {
                let ap = p.transpose() * a * p;
                let gp = p.transpose() * g;
                let aww = Matrix2::new(ap[(1, 1)], ap[(1, 2)], ap[(2, 1)], ap[(2, 2)]);
                let aw1 = Vector2::new(ap[(1, 0)], ap[(2, 0)]);
                let inv = aww.try_inverse().unwrap();
                for &kappa in kappas {
                    for &zs in zscales {
                        let prec = aww * (4.0 * kappa);
                        let axes: [Gauss2; 3] = std::array::from_fn(|c| {
                            let m = -(inv * aw1) * r1[c];
                            if c == 2 { Gauss2::new(prec * zs, m) } else { Gauss2::new(prec, m) }
                        });
                        comps.push(axes);
                        zshift.push(inv * Vector2::new(gp[1], gp[2]) * 0.5);
                    }
                }
            }
        }
        ConditionalProposal { comps, zshift }
    }

    fn component_densities(&self, w: &[f64; 6]) -> Vec<f64> {
        let z = Vector2::new(w[4], w[5]);
        self.comps
            .iter()
            .zip(&self.zshift)
            .map(|(axes, shift)| {
                let lp = axes[0].logpdf(&Vector2::new(w[0], w[1])) + axes[1].logpdf(&Vector2::new(w[2], w[3]));
                let zsum: f64 = LOBES.iter().map(|s| axes[2].logpdf(&(z - shift * *s)).exp()).sum::<f64>() / 3.0;
                lp.exp() * zsum
            })
            .collect()
    }

    /// Draws (x₂,x₃,y₂,y₃,z₂,z₃).
    pub fn sample<G: rand::Rng>(&self, rng: &mut G) -> [f64; 6] {
        let k = rng.random_range(0..self.comps.len());
        let lobe = rng.random_range(0..3usize);
        let mut out = [0.0; 6];
        for c in 0..3 {
            let g = &self.comps[k][c];
            let z = Vector2::new(StandardNormal.sample(rng), StandardNormal.sample(rng));
            let mut x = g.lower_inv_t * z + g.mean;
            if c == 2 {
                x += self.zshift[k] * LOBES[lobe];
            }
            out[2 * c] = x[0];
            out[2 * c + 1] = x[1];
        }
        out
    }

    pub fn density(&self, w: &[f64; 6]) -> f64 {
        self.component_densities(w).iter().sum::<f64>() / self.comps.len() as f64
    }
}

fn assemble(r1: &[f64; 3], w: &[f64; 6]) -> [f64; 9] {
    [r1[0], w[0], w[1], r1[1], w[2], w[3], r1[2], w[4], w[5]]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub stderr: f64,
    pub samples: usize,
    pub rejected: usize,
}

fn estimate(xs: &[f64], rejected: usize) -> McEstimate {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    McEstimate { value: mean, stderr: (var / n).sqrt(), samples: xs.len(), rejected }
}

/// Samples are drawn in fixed batches, each from its own counter-based substream.
const BATCH: usize = 1024;

fn sample_integrand(
    basis: &EcgBasis,
    r1: &[f64; 3],
    samples: usize,
    seed: u64,
    eps: f64,
    f: &(dyn Fn(&[f64; 9]) -> Result<f64, DecomposeError> + Sync),
) -> Result<McEstimate, DensityError> {
    let prop = ConditionalProposal::new(basis, r1);
    let nbatch = samples.div_ceil(BATCH);
    let batches: Vec<(Vec<f64>, usize)> = (0..nbatch)
        .into_par_iter()
        .map(|b| {
            let mut rng = substream(seed, b as u64);
            let want = BATCH.min(samples - b * BATCH);
            let mut vals = Vec::with_capacity(want);
            let mut rejected = 0;
            while vals.len() < want && rejected <= 10 * want {
                let w = prop.sample(&mut rng);
                let u = assemble(r1, &w);
                if crate::decompose::check_point_with(&u, eps).is_err() {
                    rejected += 1;
                    continue;
                }
                match f(&u) {
                    Ok(v) => vals.push(v / prop.density(&w)),
                    Err(_) => rejected += 1,
                }
            }
            (vals, rejected)
        })
        .collect();
    let rejected: usize = batches.iter().map(|b| b.1).sum();
    let vals: Vec<f64> = batches.into_iter().flat_map(|b| b.0).collect();
    if vals.len() < samples {
        return Err(DensityError::BudgetExhausted { accepted: vals.len(), rejected });
    }
    Ok(estimate(&vals, rejected))
}

/// 𝒟ᵢ(r₁) = ∫∫|Φᵢ|² dr₂dr₃ by importance sampling with a coincidence guard.
pub fn bosonic_density_guarded(basis: &EcgBasis, i: usize, r1: &[f64; 3], samples: usize, seed: u64, eps: f64) -> Result<McEstimate, DensityError> {
    let psi = |v: &[f64; 9]| ecg_value(basis, v);
    sample_integrand(basis, r1, samples, seed, eps, &|u| {
        let phi = extract_bosonic_numeric_guarded(psi, u, eps)?;
        Ok(phi.phi[i] * phi.phi[i])
    })
}

pub fn bosonic_density(basis: &EcgBasis, i: usize, r1: &[f64; 3], samples: usize, seed: u64) -> Result<McEstimate, DensityError> {
    bosonic_density_guarded(basis, i, r1, samples, seed, EPS)
}

/// Monte Carlo ρ(r₁) with the same sampler, for cross-checking the closed form.
pub fn one_electron_density_mc(basis: &EcgBasis, r1: &[f64; 3], samples: usize, seed: u64) -> Result<McEstimate, DensityError> {
    sample_integrand(basis, r1, samples, seed, 0.0, &|u| {
        let v = ecg_value(basis, u);
        Ok(3.0 * v * v)
    })
}

/// 𝒟₃₂ through the polar form of ∫∫ F/(c² Δx²) dx₂dx₃, where F = ∫|Σⱼ Ψ(σⱼ v)|²
/// over the y and z coordinates of particles 2 and 3 is closed form. The
/// disc r < r_min, worth O(r_min²), is left out because F ~ r⁶ there cancels
/// catastrophically.
pub fn d32_quadrature(basis: &EcgBasis, r1: &[f64; 3], nr: usize, nphi: usize) -> f64 {
    let perms = perm_data();
    let prims: Vec<(Matrix3<f64>, Vector3<f64>)> = basis.primitives.iter().map(|p| (p.a_matrix(), p.gamma_vec())).collect();
    let nb = prims.len();
    // Σⱼ Ψ(σⱼ v) = Σ_n C_n a_n(x) b_n(y) c_n(z) with independent relabellings per axis
    let mut yz = vec![vec![0.0; nb]; nb];
    for n in 0..nb {
        for m in 0..nb {
            let (mut ysum, mut zsum) = (0.0, 0.0);
            for (p, _) in &perms {
                for (q, _) in &perms {
                    let mat = p.transpose() * prims[n].0 * p + q.transpose() * prims[m].0 * q;
                    ysum += Marginal::new(&mat, &Vector3::zeros()).value(r1[1]);
                    let (ga, gb) = (p.transpose() * prims[n].1, q.transpose() * prims[m].1);
                    for (s, t) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                        zsum += 0.25 * s * t * Marginal::new(&mat, &(ga * s + gb * t)).value(r1[2]);
                    }
                }
            }
            yz[n][m] = basis.coefficients[n] * basis.coefficients[m] * ysum * zsum;
        }
    }
    let x1 = r1[0];
    let xpart = |x: &Vector3<f64>| -> Vec<f64> {
        prims
            .iter()
            .map(|(a, _)| perms.iter().map(|(p, s)| s * (-(p * x).dot(&(a * (p * x)))).exp()).sum())
            .collect()
    };
    let f = |x2: f64, x3: f64| -> f64 {
        let a = xpart(&Vector3::new(x1, x2, x3));
        let mut tot = 0.0;
        for n in 0..nb {
            for m in 0..nb {
                tot += a[n] * a[m] * yz[n][m];
            }
        }
        tot
    };
    let c = 108.0f64;
    let gr = GaussLegendre::new(NonZeroUsize::new(nr).unwrap());
    let gp = GaussLegendre::new(NonZeroUsize::new(nphi).unwrap());
    let cuts = [0.0, 0.25 * PI, 0.5 * PI, PI, 1.25 * PI, 1.5 * PI, 2.0 * PI];
    let scale = 1.0;
    let r_min = 1e-2;
    let tmin = r_min / (scale + r_min);
    gr.as_node_weight_pairs()
        .par_iter()
        .map(|&(xr, wr)| {
            let t = tmin + (1.0 - tmin) * 0.5 * (xr + 1.0);
            let r = scale * t / (1.0 - t);
            let jac = scale / ((1.0 - t) * (1.0 - t)) * 0.5 * (1.0 - tmin);
            let mut ang = 0.0;
            for w in cuts.windows(2) {
                let half = 0.5 * (w[1] - w[0]);
                for &(xp, wp) in gp.as_node_weight_pairs() {
                    let phi = w[0] + half * (xp + 1.0);
                    let (s, co) = phi.sin_cos();
                    let den = c * c * s * s * co * co * (s - co) * (s - co);
                    ang += half * wp * f(x1 + r * s, x1 + r * co) / den;
                }
            }
            wr * jac * ang * r.powi(-5)
        })
        .sum()
}

/// Inclusive range "min:max:count".
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisRange {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl AxisRange {
    pub fn parse(s: &str) -> Result<AxisRange, DensityError> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || DensityError::BadGrid(s.to_string());
        if parts.len() != 3 {
            return Err(bad());
        }
        let min: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let max: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        if count == 0 || !(max >= min) || !min.is_finite() || !max.is_finite() || (count == 1 && max != min) {
            return Err(bad());
        }
        Ok(AxisRange { min, max, count })
    }

    pub fn point(&self, i: usize) -> f64 {
        if self.count == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
        }
    }
}

/// A density sampled on a regular grid, z index fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityGrid {
    pub kind: DensityKind,
    pub axes: [AxisRange; 3],
    pub values: Vec<f64>,
    pub errors: Option<Vec<f64>>,
}

impl DensityGrid {
    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.axes[1].count + j) * self.axes[2].count + k
    }

    pub fn points(axes: &[AxisRange; 3]) -> Vec<[f64; 3]> {
        let mut out = Vec::with_capacity(axes[0].count * axes[1].count * axes[2].count);
        for i in 0..axes[0].count {
            for j in 0..axes[1].count {
                for k in 0..axes[2].count {
                    out.push([axes[0].point(i), axes[1].point(j), axes[2].point(k)]);
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("# shapedecomp density grid\n");
        writeln!(s, "kind {}", self.kind.label()).unwrap();
        for (name, a) in ["x", "y", "z"].iter().zip(&self.axes) {
            writeln!(s, "axis {name} {:?} {:?} {}", a.min, a.max, a.count).unwrap();
        }
        writeln!(s, "order z-fastest").unwrap();
        writeln!(s, "values {}", self.values.len()).unwrap();
        for v in &self.values {
            writeln!(s, "{v:?}").unwrap();
        }
        if let Some(e) = &self.errors {
            writeln!(s, "errors {}", e.len()).unwrap();
            for v in e {
                writeln!(s, "{v:?}").unwrap();
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<DensityGrid, DensityError> {
        let bad = |m: &str| DensityError::BadFile(m.to_string());
        let mut lines = text.lines().filter(|l| !l.starts_with('#'));
        let kind_line = lines.next().ok_or(bad("missing kind"))?;
        let kind = DensityKind::parse(kind_line.strip_prefix("kind ").ok_or(bad("missing kind"))?)?;
        let mut axes = [AxisRange { min: 0.0, max: 0.0, count: 1 }; 3];
        for a in axes.iter_mut() {
            let l = lines.next().ok_or(bad("missing axis"))?;
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 5 || f[0] != "axis" {
                return Err(bad("malformed axis line"));
            }
            *a = AxisRange::parse(&format!("{}:{}:{}", f[2], f[3], f[4]))?;
        }
        if lines.next() != Some("order z-fastest") {
            return Err(bad("unsupported ordering"));
        }
        let mut read_block = |tag: &str| -> Result<Option<Vec<f64>>, DensityError> {
            let Some(head) = lines.next() else { return Ok(None) };
            let n: usize = head.strip_prefix(tag).and_then(|r| r.trim().parse().ok()).ok_or(bad("malformed block header"))?;
            (0..n).map(|_| lines.next().and_then(|l| l.trim().parse().ok()).ok_or(bad("truncated values"))).collect::<Result<Vec<f64>, _>>().map(Some)
        };
        let values = read_block("values ")?.ok_or(bad("missing values"))?;
        let errors = read_block("errors ")?;
        let grid = DensityGrid { kind, axes, values, errors };
        if grid.values.len() != axes.iter().map(|a| a.count).product::<usize>() {
            return Err(bad("value count differs from grid size"));
        }
        Ok(grid)
    }
}

/// Samples a density on a grid; Monte Carlo kinds use one substream per point.
pub fn density_grid(basis: &EcgBasis, kind: DensityKind, axes: [AxisRange; 3], samples: usize, seed: u64) -> Result<DensityGrid, DensityError> {
    density_grid_guarded(basis, kind, axes, samples, seed, EPS)
}

pub fn density_grid_guarded(
    basis: &EcgBasis,
    kind: DensityKind,
    axes: [AxisRange; 3],
    samples: usize,
    seed: u64,
    eps: f64,
) -> Result<DensityGrid, DensityError> {
    let pts = DensityGrid::points(&axes);
    match kind {
        DensityKind::Rho => {
            let model = RhoModel::new(basis);
            let values = pts.par_iter().map(|p| model.value(p)).collect();
            Ok(DensityGrid { kind, axes, values, errors: None })
        }
        DensityKind::Bosonic(i) => {
            let est: Vec<McEstimate> = pts
                .iter()
                .enumerate()
                .map(|(n, p)| bosonic_density_guarded(basis, i, p, samples, seed.wrapping_mul(1_000_003).wrapping_add(n as u64), eps))
                .collect::<Result<_, _>>()?;
            Ok(DensityGrid { kind, axes, values: est.iter().map(|e| e.value).collect(), errors: Some(est.iter().map(|e| e.stderr).collect()) })
        }
    }
}
