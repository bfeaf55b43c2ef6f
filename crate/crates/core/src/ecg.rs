//! Explicitly correlated Gaussians with a sinh lobe for the three-electron
//! quartet, their analytic matrix elements, a stagewise optimizer and the
//! shape-block weights of the optimized wave function.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector, Matrix3, SMatrix, SVector, Vector3};
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ringcore::Perm3;
use crate::symgroup::{element, eta_bar, relative, ORDER};

/// Nuclear charge.
pub const Z_NUCLEUS: f64 = 3.0;
/// Largest acceptable condition number of the scaled overlap matrix.
pub const MAX_CONDITION: f64 = 1e12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EcgError {
    #[error("quadratic form is not negative definite")]
    NotNegativeDefinite,
    #[error("overlap matrix condition number {0:e} exceeds the threshold")]
    IllConditionedOverlap(f64),
    #[error("block {0} has a negative norm ({1:e})")]
    NegativeBlockNorm(usize, f64),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
}

/// exp(Σ α_i |r_i|² + Σ β_ij |r_i − r_j|²) · sinh(γ·z), with β ordered as
/// (1,2), (1,3), (2,3).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EcgPrimitive {
    pub alpha: [f64; 3],
    pub beta: [f64; 3],
    pub gamma: [f64; 3],
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl EcgPrimitive {
    /// The positive form A with exponent −Σ_c u_cᵀ A u_c per Cartesian component.
    pub fn a_matrix(&self) -> Matrix3<f64> {
        let mut a = Matrix3::zeros();
        for i in 0..3 {
            a[(i, i)] = -self.alpha[i];
        }
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let b = self.beta[k];
            a[(i, i)] -= b;
            a[(j, j)] -= b;
            a[(i, j)] += b;
            a[(j, i)] += b;
        }
        a
    }

    pub fn from_a_matrix(a: &Matrix3<f64>, gamma: [f64; 3]) -> EcgPrimitive {
        let mut beta = [0.0; 3];
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            beta[k] = a[(i, j)];
        }
        let mut alpha = [0.0; 3];
        for (i, al) in alpha.iter_mut().enumerate() {
            let pair_sum: f64 = PAIRS.iter().enumerate().filter(|(_, p)| p.0 == i || p.1 == i).map(|(k, _)| beta[k]).sum();
            *al = -a[(i, i)] - pair_sum;
        }
        EcgPrimitive { alpha, beta, gamma }
    }

    pub fn is_valid(&self) -> bool {
        self.a_matrix().cholesky().is_some() && self.gamma.iter().chain(&self.alpha).chain(&self.beta).all(|v| v.is_finite())
    }

    pub fn gamma_vec(&self) -> Vector3<f64> {
        Vector3::from(self.gamma)
    }

    /// Value at a point in slot order x1..x3, y1..y3, z1..z3.
    pub fn value(&self, u: &[f64; 9]) -> f64 {
        let a = self.a_matrix();
        let mut q = 0.0;
        for c in 0..3 {
            let v = Vector3::new(u[3 * c], u[3 * c + 1], u[3 * c + 2]);
            q += v.dot(&(a * v));
        }
        let arg = self.gamma[0] * u[6] + self.gamma[1] * u[7] + self.gamma[2] * u[8];
        (-q).exp() * arg.sinh()
    }

    /// Scaling r → λr of the primitive.
    pub fn scaled(&self, lambda: f64) -> EcgPrimitive {
        let l2 = lambda * lambda;
        EcgPrimitive {
            alpha: self.alpha.map(|v| v * l2),
            beta: self.beta.map(|v| v * l2),
            gamma: self.gamma.map(|v| v * lambda),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EcgBasis {
    pub primitives: Vec<EcgPrimitive>,
    pub coefficients: Vec<f64>,
    pub energy: Option<f64>,
    pub stage: Option<usize>,
}

impl EcgBasis {
    pub fn new(primitives: Vec<EcgPrimitive>) -> EcgBasis {
        let n = primitives.len();
        EcgBasis { primitives, coefficients: vec![0.0; n], energy: None, stage: None }
    }

    pub fn size(&self) -> usize {
        self.primitives.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<EcgBasis, EcgError> {
        let b: EcgBasis = serde_json::from_str(s).map_err(|e| EcgError::InvalidBasis(e.to_string()))?;
        if b.coefficients.len() != b.primitives.len() {
            return Err(EcgError::InvalidBasis("coefficient count differs from primitive count".into()));
        }
        if let Some(i) = b.primitives.iter().position(|p| !p.is_valid()) {
            return Err(EcgError::InvalidBasis(format!("primitive {i} is not normalizable")));
        }
        Ok(b)
    }

    /// Solves the secular problem and stores the energy and normalized coefficients.
    pub fn solve(&mut self) -> Result<f64, EcgError> {
        let m = matrix_elements(self)?;
        let (e, c) = solve_secular(&m.h, &m.s)?;
        self.coefficients = c.iter().copied().collect();
        self.energy = Some(e);
        Ok(e)
    }
}

/// Permutation matrix with (Π u)_i = u_{p[i]}.
pub fn perm_matrix(p: Perm3) -> Matrix3<f64> {
    let mut m = Matrix3::zeros();
    for i in 0..3 {
        m[(i, p.0[i])] = 1.0;
    }
    m
}

/// Σ_n C_n Σ_P sign(P) φ_n(P u), with P relabelling particles in all axes.
pub fn ecg_value(basis: &EcgBasis, u: &[f64; 9]) -> f64 {
    let mut total = 0.0;
    for p in Perm3::ALL {
        let mut v = [0.0; 9];
        for c in 0..3 {
            for i in 0..3 {
                v[3 * c + i] = u[3 * c + p.0[i]];
            }
        }
        let s = p.sign() as f64;
        for (prim, c) in basis.primitives.iter().zip(&basis.coefficients) {
            total += s * c * prim.value(&v);
        }
    }
    total
}

/// ∫ exp(uᵀQu + bᵀu) du over nine dimensions.
pub fn gaussian_moment_integral(q: &SMatrix<f64, 9, 9>, b: &SVector<f64, 9>) -> Result<f64, EcgError> {
    let m: SMatrix<f64, 9, 9> = -q;
    let ch = m.cholesky().ok_or(EcgError::NotNegativeDefinite)?;
    let det = ch.l().diagonal().iter().map(|d| d * d).product::<f64>();
    let minv_b = ch.solve(b);
    Ok(PI.powf(4.5) / det.sqrt() * (0.25 * b.dot(&minv_b)).exp())
}

/// E[1/|w|] for w ~ N(m e_z, s² I₃); the Boys F₀ form erf(|m|/(√2 s))/|m|.
fn coulomb_mean(m: f64, s2: f64) -> f64 {
    let s = s2.sqrt();
    let am = m.abs();
    if am < 1e-8 * s {
        (2.0 / PI).sqrt() / s * (1.0 - am * am / (6.0 * s2))
    } else {
        libm::erf(am / (std::f64::consts::SQRT_2 * s)) / am
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Elements {
    pub s: f64,
    pub t: f64,
    pub v: f64,
}

impl std::ops::AddAssign for Elements {
    fn add_assign(&mut self, o: Elements) {
        self.s += o.s;
        self.t += o.t;
        self.v += o.v;
    }
}

impl Elements {
    fn scale(self, f: f64) -> Elements {
        Elements { s: self.s * f, t: self.t * f, v: self.v * f }
    }
}

/// ⟨g_a|1, T, V|g_b⟩ for g = exp(−Σ_c u_cᵀ A u_c + cᵀ u_z).
fn pure_kernel(aa: &Matrix3<f64>, ca: &Vector3<f64>, ab: &Matrix3<f64>, cb: &Vector3<f64>) -> Option<Elements> {
    let m = aa + ab;
    let det = m.determinant();
    if !(det > 0.0) {
        return None;
    }
    let minv = m.try_inverse()?;
    let c = ca + cb;
    let s = (PI.powi(3) / det).powf(1.5) * (0.25 * c.dot(&(minv * c))).exp();
    let sigma = minv * 0.5;
    let mu = sigma * c;
    let ab_prod = aa * ab;
    let tr = (ab_prod * sigma).trace();
    let kin = 12.0 * tr + 4.0 * mu.dot(&(ab_prod * mu)) - 2.0 * mu.dot(&(aa * cb)) - 2.0 * ca.dot(&(ab * mu)) + ca.dot(cb);
    let mut pot = 0.0;
    for i in 0..3 {
        pot -= Z_NUCLEUS * coulomb_mean(mu[i], sigma[(i, i)]);
    }
    for &(i, j) in &PAIRS {
        let s2 = sigma[(i, i)] + sigma[(j, j)] - 2.0 * sigma[(i, j)];
        pot += coulomb_mean(mu[i] - mu[j], s2);
    }
    Some(Elements { s, t: 0.5 * s * kin, v: s * pot })
}

/// ⟨φ_a | 1, T, V | φ_b⟩ for two sinh-lobe primitives given by (A, γ).
fn lobe_kernel(aa: &Matrix3<f64>, ga: &Vector3<f64>, ab: &Matrix3<f64>, gb: &Vector3<f64>) -> Option<Elements> {
    let plus = pure_kernel(aa, ga, ab, gb)?;
    let minus = pure_kernel(aa, ga, ab, &-gb)?;
    Some(Elements { s: 0.5 * (plus.s - minus.s), t: 0.5 * (plus.t - minus.t), v: 0.5 * (plus.v - minus.v) })
}

struct Prepared {
    a: Matrix3<f64>,
    g: Vector3<f64>,
}

fn prepare(p: &EcgPrimitive) -> Prepared {
    Prepared { a: p.a_matrix(), g: p.gamma_vec() }
}

fn perm_mats() -> [(Matrix3<f64>, f64); 6] {
    Perm3::ALL.map(|p| (perm_matrix(p), p.sign() as f64))
}

/// ⟨Âφ_a|O|Âφ_b⟩ = 6 Σ_P sign(P) ⟨φ_a|O|φ_b∘P⟩.
fn antisym_elements(a: &Prepared, b: &Prepared, perms: &[(Matrix3<f64>, f64); 6]) -> Result<Elements, EcgError> {
    let mut acc = Elements::default();
    for (p, sign) in perms {
        let ap = p.transpose() * b.a * p;
        let gp = p.transpose() * b.g;
        let e = lobe_kernel(&a.a, &a.g, &ap, &gp).ok_or(EcgError::NotNegativeDefinite)?;
        acc += e.scale(6.0 * sign);
    }
    Ok(acc)
}

/// Primitive-pair matrix elements between antisymmetrized primitives.
pub fn pair_elements(a: &EcgPrimitive, b: &EcgPrimitive) -> Result<Elements, EcgError> {
    antisym_elements(&prepare(a), &prepare(b), &perm_mats())
}

#[derive(Clone, Debug)]
pub struct Matrices {
    pub s: DMatrix<f64>,
    pub t: DMatrix<f64>,
    pub v: DMatrix<f64>,
    pub h: DMatrix<f64>,
}

pub fn matrix_elements(basis: &EcgBasis) -> Result<Matrices, EcgError> {
    let n = basis.size();
    let prep: Vec<Prepared> = basis.primitives.iter().map(prepare).collect();
    let perms = perm_mats();
    let mut s = DMatrix::zeros(n, n);
    let mut t = DMatrix::zeros(n, n);
    let mut v = DMatrix::zeros(n, n);
    for k in 0..n {
        for l in k..n {
            let e = antisym_elements(&prep[k], &prep[l], &perms)?;
            s[(k, l)] = e.s;
            s[(l, k)] = e.s;
            t[(k, l)] = e.t;
            t[(l, k)] = e.t;
            v[(k, l)] = e.v;
            v[(l, k)] = e.v;
        }
    }
    let h = &t + &v;
    Ok(Matrices { s, t, v, h })
}

/// Condition number of D S D with D = diag(S_ii^{-1/2}).
pub fn overlap_condition(s: &DMatrix<f64>) -> f64 {
    let n = s.nrows();
    let d: Vec<f64> = (0..n).map(|i| 1.0 / s[(i, i)].sqrt()).collect();
    let scaled = DMatrix::from_fn(n, n, |i, j| s[(i, j)] * d[i] * d[j]);
    let ev = scaled.symmetric_eigenvalues();
    let max = ev.iter().cloned().fold(f64::MIN, f64::max);
    let min = ev.iter().cloned().fold(f64::MAX, f64::min);
    if min <= 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Lowest root of H C = E S C with Cᵀ S C = 1.
pub fn solve_secular(h: &DMatrix<f64>, s: &DMatrix<f64>) -> Result<(f64, DVector<f64>), EcgError> {
    let n = s.nrows();
    if n == 0 || s.iter().any(|v| !v.is_finite()) || h.iter().any(|v| !v.is_finite()) {
        return Err(EcgError::InvalidBasis("empty or non-finite matrices".into()));
    }
    if (0..n).any(|i| !(s[(i, i)] > 0.0)) {
        return Err(EcgError::IllConditionedOverlap(f64::INFINITY));
    }
    let d: Vec<f64> = (0..n).map(|i| 1.0 / s[(i, i)].sqrt()).collect();
    let ss = DMatrix::from_fn(n, n, |i, j| s[(i, j)] * d[i] * d[j]);
    let hs = DMatrix::from_fn(n, n, |i, j| h[(i, j)] * d[i] * d[j]);
    let cond = overlap_condition(s);
    if !(cond <= MAX_CONDITION) {
        return Err(EcgError::IllConditionedOverlap(cond));
    }
    let ch = ss.clone().cholesky().ok_or(EcgError::IllConditionedOverlap(f64::INFINITY))?;
    let l = ch.l();
    let linv = l.clone().try_inverse().ok_or(EcgError::IllConditionedOverlap(f64::INFINITY))?;
    let reduced = &linv * &hs * linv.transpose();
    let reduced = (&reduced + reduced.transpose()) * 0.5;
    let eig = reduced.symmetric_eigen();
    let (imin, &e) = eig.eigenvalues.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap();
    let y = eig.eigenvectors.column(imin).into_owned();
    let cs = linv.transpose() * y;
    let mut c = DVector::from_fn(n, |i, _| cs[i] * d[i]);
    let norm = c.dot(&(s * &c)).sqrt();
    c /= norm;
    // fix the overall sign so the largest coefficient is positive
    let imax = c.iamax();
    if c[imax] < 0.0 {
        c = -c;
    }
    Ok((e, c))
}

/// Expectation values ⟨T⟩ and ⟨V⟩ of the normalized wave function.
pub fn kinetic_potential(basis: &EcgBasis) -> Result<(f64, f64), EcgError> {
    let m = matrix_elements(basis)?;
    let c = DVector::from_column_slice(&basis.coefficients);
    let norm = c.dot(&(&m.s * &c));
    Ok((c.dot(&(&m.t * &c)) / norm, c.dot(&(&m.v * &c)) / norm))
}

/// ⟨φ_a | φ_b∘T⟩ with separate permutation matrices per axis.
fn permuted_lobe_overlap(a: &Prepared, b: &Prepared, t: &[Matrix3<f64>; 3]) -> f64 {
    let mut pref = 1.0;
    let mut mz = Matrix3::zeros();
    for (c, tc) in t.iter().enumerate() {
        let m = a.a + tc.transpose() * b.a * tc;
        let det = m.determinant();
        pref *= (PI.powi(3) / det).sqrt();
        if c == 2 {
            mz = m;
        }
    }
    let minv = mz.try_inverse().expect("positive definite");
    let gb = t[2].transpose() * b.g;
    let e = |c: Vector3<f64>| (0.25 * c.dot(&(minv * c))).exp();
    0.5 * pref * (e(a.g + gb) - e(a.g - gb))
}

/// Per-axis matrices of σ_j: identity on x.
fn sigma_mats(j: usize) -> [Matrix3<f64>; 3] {
    let p = element(j);
    [Matrix3::identity(), perm_matrix(p.y), perm_matrix(p.z)]
}

/// ⟨Ψ(σ_j v_0) | Ψ(σ_j' v_0)⟩ evaluated directly from the primitives.
pub fn permuted_pair_overlap(basis: &EcgBasis, j: usize, jp: usize) -> f64 {
    let prep: Vec<Prepared> = basis.primitives.iter().map(prepare).collect();
    let perms = perm_mats();
    let (sj, sjp) = (sigma_mats(j), sigma_mats(jp));
    // X_c = Σ_{j',c} Σ_{j,c}ᵀ
    let x: [Matrix3<f64>; 3] = std::array::from_fn(|c| sjp[c] * sj[c].transpose());
    let mut total = 0.0;
    for (k, pk) in prep.iter().enumerate() {
        for (l, pl) in prep.iter().enumerate() {
            let cc = basis.coefficients[k] * basis.coefficients[l];
            if cc == 0.0 {
                continue;
            }
            let mut acc = 0.0;
            for (p, sp) in &perms {
                for (q, sq) in &perms {
                    let t: [Matrix3<f64>; 3] = std::array::from_fn(|c| p * x[c] * q.transpose());
                    acc += sp * sq * permuted_lobe_overlap(pk, pl, &t);
                }
            }
            total += cc * acc;
        }
    }
    total
}

/// O_j = ⟨Ψ(v_0) | Ψ(σ_j v_0)⟩.
pub fn permuted_overlap(basis: &EcgBasis, j: usize) -> f64 {
    permuted_pair_overlap(basis, 0, j)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockWeights {
    pub a: Vec<f64>,
    pub w: Vec<f64>,
    pub basis_size: usize,
    pub energy: Option<f64>,
}

impl BlockWeights {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,a_k,w_k\n");
        for k in 0..self.w.len() {
            s.push_str(&format!("{},{:.12e},{:.12e}\n", k, self.a[k], self.w[k]));
        }
        s
    }
}

/// Block norms n_k = (1/36) Σ_j η̄_k(σ_j) O_j from the 36 permuted overlaps.
pub fn block_norms(overlaps: &[f64]) -> Vec<f64> {
    (0..11)
        .map(|k| (0..ORDER).map(|j| eta_bar(k, j) as f64 * overlaps[j]).sum::<f64>() / ORDER as f64)
        .collect()
}

/// Amplitudes a_k = √n_k and weights w_k = n_k, with Ψ = Σ a_k Ξ_k.
pub fn block_amplitudes(basis: &EcgBasis) -> Result<BlockWeights, EcgError> {
    let o: Vec<f64> = (0..ORDER).map(|j| permuted_overlap(basis, j)).collect();
    weights_from_overlaps(&o, basis)
}

pub fn weights_from_overlaps(o: &[f64], basis: &EcgBasis) -> Result<BlockWeights, EcgError> {
    let n = block_norms(o);
    let tol = 1e-10 * o[0].abs().max(1.0);
    let mut a = Vec::with_capacity(11);
    let mut w = Vec::with_capacity(11);
    for (k, &v) in n.iter().enumerate() {
        if v < -tol {
            return Err(EcgError::NegativeBlockNorm(k, v));
        }
        let v = v.max(0.0) / o[0];
        w.push(v);
        a.push(v.sqrt());
    }
    Ok(BlockWeights { a, w, basis_size: basis.size(), energy: basis.energy })
}

/// ⟨Ξ_k|Ξ_k'⟩ − δ_kk' from the permuted overlaps and the group product.
pub fn orthonormality_residual_group(o: &[f64]) -> f64 {
    gram_residual(&block_norms(o), |j, jp| o[relative(j, jp)])
}

/// The same Gram matrix from directly computed ⟨Ψ(σ_j v_0)|Ψ(σ_j' v_0)⟩.
pub fn orthonormality_residual_direct(basis: &EcgBasis) -> f64 {
    let g: Vec<Vec<f64>> = (0..ORDER).map(|j| (0..ORDER).map(|jp| permuted_pair_overlap(basis, j, jp)).collect()).collect();
    let o: Vec<f64> = (0..ORDER).map(|j| g[0][j]).collect();
    gram_residual(&block_norms(&o), |j, jp| g[j][jp])
}

fn gram_residual(n: &[f64], pair: impl Fn(usize, usize) -> f64) -> f64 {
    let mut worst: f64 = 0.0;
    let cut = 1e-14;
    for k in 0..11 {
        for kp in 0..11 {
            if n[k] <= cut || n[kp] <= cut {
                continue;
            }
            let mut acc = 0.0;
            for j in 0..ORDER {
                let ek = eta_bar(k, j) as f64;
                if ek == 0.0 {
                    continue;
                }
                for jp in 0..ORDER {
                    let ekp = eta_bar(kp, jp) as f64;
                    if ekp != 0.0 {
                        acc += ek * ekp * pair(j, jp);
                    }
                }
            }
            let g = acc / (ORDER * ORDER) as f64 / (n[k] * n[kp]).sqrt();
            let target = if k == kp { 1.0 } else { 0.0 };
            worst = worst.max((g - target).abs());
        }
    }
    worst
}

/// 1, 2, 3, 4, 6, 9, 13, 19, ...
pub fn narayana_sizes(count: usize) -> Vec<usize> {
    let mut s = vec![1usize, 2, 3];
    while s.len() < count {
        let n = s.len();
        s.push(s[n - 1] + s[n - 3]);
    }
    s.truncate(count);
    s
}

/// Unconstrained coordinates of a primitive: log-Cholesky factor of A and γ.
fn to_params(p: &EcgPrimitive) -> [f64; 9] {
    let l = p.a_matrix().cholesky().expect("valid primitive").l();
    [l[(0, 0)].ln(), l[(1, 1)].ln(), l[(2, 2)].ln(), l[(1, 0)], l[(2, 0)], l[(2, 1)], p.gamma[0], p.gamma[1], p.gamma[2]]
}

fn from_params(x: &[f64; 9]) -> EcgPrimitive {
    let l = Matrix3::new(x[0].exp(), 0.0, 0.0, x[3], x[1].exp(), 0.0, x[4], x[5], x[2].exp());
    EcgPrimitive::from_a_matrix(&(l * l.transpose()), [x[6], x[7], x[8]])
}

#[derive(Clone, Debug)]
pub struct OptimizeOptions {
    pub sizes: Vec<usize>,
    pub seed: u64,
    /// Maximum sweeps over the primitives per stage.
    pub max_sweeps: usize,
    /// Random proposals per primitive and sweep.
    pub trials: usize,
    /// Stop a stage when a sweep gains less than this (hartree).
    pub tolerance: f64,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        OptimizeOptions { sizes: narayana_sizes(6), seed: 7, max_sweeps: 3000, trials: 12, tolerance: 1e-9 }
    }
}

#[derive(Clone, Debug)]
pub struct StageResult {
    pub basis: EcgBasis,
    pub sweeps: usize,
    pub stalled: bool,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OptimizeError {
    #[error("sizes must follow 1, 2, 3, N_J = N_(J-1) + N_(J-3)")]
    BadSchedule,
    #[error(transparent)]
    Ecg(#[from] EcgError),
}

/// Row-updatable energy of a basis.
struct Workspace {
    prep: Vec<Prepared>,
    s: DMatrix<f64>,
    h: DMatrix<f64>,
    perms: [(Matrix3<f64>, f64); 6],
}

impl Workspace {
    fn new(basis: &EcgBasis) -> Result<Workspace, EcgError> {
        let m = matrix_elements(basis)?;
        Ok(Workspace { prep: basis.primitives.iter().map(prepare).collect(), s: m.s, h: m.h, perms: perm_mats() })
    }

    fn energy(&self) -> Result<f64, EcgError> {
        solve_secular(&self.h, &self.s).map(|r| r.0)
    }

    /// Energy with primitive n replaced; returns the new row on success.
    fn trial(&self, n: usize, p: &EcgPrimitive) -> Result<(f64, Vec<Elements>), EcgError> {
        if !p.is_valid() {
            return Err(EcgError::NotNegativeDefinite);
        }
        let pp = prepare(p);
        let row: Vec<Elements> = (0..self.prep.len())
            .map(|l| if l == n { antisym_elements(&pp, &pp, &self.perms) } else { antisym_elements(&pp, &self.prep[l], &self.perms) })
            .collect::<Result<_, _>>()?;
        let mut s = self.s.clone();
        let mut h = self.h.clone();
        for (l, e) in row.iter().enumerate() {
            s[(n, l)] = e.s;
            s[(l, n)] = e.s;
            h[(n, l)] = e.t + e.v;
            h[(l, n)] = e.t + e.v;
        }
        Ok((solve_secular(&h, &s)?.0, row))
    }

    fn accept(&mut self, n: usize, p: &EcgPrimitive, row: &[Elements]) {
        self.prep[n] = prepare(p);
        for (l, e) in row.iter().enumerate() {
            self.s[(n, l)] = e.s;
            self.s[(l, n)] = e.s;
            self.h[(n, l)] = e.t + e.v;
            self.h[(l, n)] = e.t + e.v;
        }
    }
}

/// Applies the optimal uniform scaling r → λr, which enforces the virial ratio.
pub fn virial_rescale(basis: &mut EcgBasis) -> Result<f64, EcgError> {
    basis.solve()?;
    let (t, v) = kinetic_potential(basis)?;
    let lambda = -v / (2.0 * t);
    let old = basis.clone();
    basis.primitives = basis.primitives.iter().map(|p| p.scaled(lambda)).collect();
    match basis.solve() {
        Ok(e) if e <= old.energy.unwrap() + 1e-12 => Ok(e),
        _ => {
            *basis = old;
            Ok(basis.energy.unwrap())
        }
    }
}

fn random_primitive<G: rand::Rng>(rng: &mut G) -> EcgPrimitive {
    let mut n = || -> f64 { StandardNormal.sample(rng) };
    let d = [(2.5f64).ln() + 0.4 * n(), (0.12f64).ln() + 0.4 * n(), (0.07f64).ln() + 0.4 * n()];
    let mut a = Matrix3::from_diagonal(&Vector3::new(d[0].exp(), d[1].exp(), d[2].exp()));
    for &(i, j) in &PAIRS {
        let off = 0.01 * n();
        a[(i, j)] = off;
        a[(j, i)] = off;
    }
    if a.cholesky().is_none() {
        a = Matrix3::from_diagonal(&a.diagonal());
    }
    EcgPrimitive::from_a_matrix(&a, [0.05 * n(), 0.05 * n(), 0.3 + 0.1 * n()])
}

/// Local stochastic search over one primitive at a time, accepting only
/// energy-lowering moves, with a per-primitive adaptive step.
pub fn optimize_stage<G: rand::Rng>(basis: &mut EcgBasis, rng: &mut G, opts: &OptimizeOptions) -> Result<StageResult, EcgError> {
    let n = basis.size();
    let mut ws = Workspace::new(basis)?;
    let mut energy = ws.energy()?;
    let mut steps = vec![0.3f64; n];
    let mut params: Vec<[f64; 9]> = basis.primitives.iter().map(to_params).collect();
    let mut sweeps = 0;
    let mut quiet = 0;
    let mut stalled = false;
    while sweeps < opts.max_sweeps {
        sweeps += 1;
        let start = energy;
        for k in 0..n {
            for _ in 0..opts.trials {
                let mut x = params[k];
                let nmove = rng.random_range(1..=3usize);
                for _ in 0..nmove {
                    let i = rng.random_range(0..9usize);
                    let z: f64 = StandardNormal.sample(rng);
                    x[i] += steps[k] * z * if i < 3 { 1.0 } else { 0.5 };
                }
                let cand = from_params(&x);
                match ws.trial(k, &cand) {
                    Ok((e, row)) if e < energy => {
                        energy = e;
                        params[k] = x;
                        ws.accept(k, &cand, &row);
                        steps[k] = (steps[k] * 1.3).min(1.0);
                    }
                    _ => steps[k] = (steps[k] * 0.93).max(1e-4),
                }
            }
        }
        if start - energy < opts.tolerance {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if sweeps == opts.max_sweeps && quiet == 0 {
        stalled = true;
    }
    basis.primitives = params.iter().map(from_params).collect();
    basis.solve()?;
    virial_rescale(basis)?;
    Ok(StageResult { basis: basis.clone(), sweeps, stalled })
}

/// Merges two optimized sets, nudging exact or near duplicates apart.
fn merge<G: rand::Rng>(a: &EcgBasis, b: &EcgBasis, rng: &mut G) -> Result<EcgBasis, EcgError> {
    let mut prims = a.primitives.clone();
    prims.extend(b.primitives.iter().cloned());
    let mut basis = EcgBasis::new(prims);
    for _ in 0..50 {
        let m = matrix_elements(&basis)?;
        if overlap_condition(&m.s) < 1e8 {
            break;
        }
        // perturb the later copy of the most overlapping pair
        let n = basis.size();
        let mut worst = (0, 1, 0.0);
        for i in 0..n {
            for j in i + 1..n {
                let r = m.s[(i, j)].abs() / (m.s[(i, i)] * m.s[(j, j)]).sqrt();
                if r > worst.2 {
                    worst = (i, j, r);
                }
            }
        }
        let mut x = to_params(&basis.primitives[worst.1]);
        for v in x.iter_mut() {
            let z: f64 = StandardNormal.sample(rng);
            *v += 0.05 * z;
        }
        basis.primitives[worst.1] = from_params(&x);
    }
    Ok(basis)
}

/// Stagewise optimization along a Narayana schedule: stages 1..3 start from
/// random guesses, later stages from the union of the stages three and one
/// back. Returns every stage.
pub fn optimize_basis(opts: &OptimizeOptions) -> Result<Vec<StageResult>, OptimizeError> {
    let expected = narayana_sizes(opts.sizes.len());
    if opts.sizes != expected {
        return Err(OptimizeError::BadSchedule);
    }
    let mut out: Vec<StageResult> = Vec::new();
    for (i, &size) in opts.sizes.iter().enumerate() {
        let mut rng = crate::rng::substream(opts.seed, i as u64);
        let mut basis = if i < 3 {
            // a few random starts, keep the best
            let mut best: Option<EcgBasis> = None;
            for _ in 0..8 {
                let mut b = EcgBasis::new((0..size).map(|_| random_primitive(&mut rng)).collect());
                if b.solve().is_ok() && best.as_ref().is_none_or(|x| b.energy < x.energy) {
                    best = Some(b);
                }
            }
            best.ok_or(EcgError::InvalidBasis("no valid starting basis".into()))?
        } else {
            merge(&out[i - 3].basis, &out[i - 1].basis, &mut rng)?
        };
        let mut res = optimize_stage(&mut basis, &mut rng, opts)?;
        // a larger merged basis can always reproduce the previous stage
        if i > 0 {
            let prev = out[i - 1].basis.energy.unwrap();
            if res.basis.energy.unwrap() > prev {
                res.stalled = true;
            }
        }
        res.basis.stage = Some(i + 1);
        out.push(res);
    }
    Ok(out)
}
