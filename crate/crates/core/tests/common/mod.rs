// Independent numerical oracles shared by the integration tests.
#![allow(dead_code)]

use nalgebra::{Matrix3, SMatrix, SVector, Vector3};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use shapedecomp::decompose::permuted_point;
use shapedecomp::ecg::{EcgBasis, EcgPrimitive};

pub const PERMS: [([usize; 3], f64); 6] =
    [([0, 1, 2], 1.0), ([1, 0, 2], -1.0), ([2, 1, 0], -1.0), ([0, 2, 1], -1.0), ([1, 2, 0], 1.0), ([2, 0, 1], 1.0)];

fn r(u: &[f64; 9], i: usize) -> [f64; 3] {
    [u[i], u[3 + i], u[6 + i]]
}

fn d2(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|c| (a[c] - b[c]).powi(2)).sum()
}

/// The antisymmetrized primitive written out term by term from α, β, γ.
pub fn literal_primitive(p: &EcgPrimitive, u: &[f64; 9]) -> f64 {
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut total = 0.0;
    for (s, sign) in PERMS {
        let rr = [r(u, s[0]), r(u, s[1]), r(u, s[2])];
        let mut e = 0.0;
        for i in 0..3 {
            e += p.alpha[i] * d2(rr[i], [0.0; 3]);
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            e += p.beta[k] * d2(rr[i], rr[j]);
        }
        let arg: f64 = (0..3).map(|i| p.gamma[i] * rr[i][2]).sum();
        total += sign * e.exp() * arg.sinh();
    }
    total
}

/// Value and gradient of the literal expansion, differentiated term by term.
pub fn literal_primitive_grad(p: &EcgPrimitive, u: &[f64; 9]) -> (f64, [f64; 9]) {
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut total = 0.0;
    let mut grad = [0.0; 9];
    for (s, sign) in PERMS {
        let rr = [r(u, s[0]), r(u, s[1]), r(u, s[2])];
        let mut e = 0.0;
        // de[i][c]: derivative of the exponent with respect to component c of rr[i]
        let mut de = [[0.0; 3]; 3];
        for i in 0..3 {
            e += p.alpha[i] * d2(rr[i], [0.0; 3]);
            for c in 0..3 {
                de[i][c] += 2.0 * p.alpha[i] * rr[i][c];
            }
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            e += p.beta[k] * d2(rr[i], rr[j]);
            for c in 0..3 {
                let t = 2.0 * p.beta[k] * (rr[i][c] - rr[j][c]);
                de[i][c] += t;
                de[j][c] -= t;
            }
        }
        let arg: f64 = (0..3).map(|i| p.gamma[i] * rr[i][2]).sum();
        let (sh, ch, ex) = (arg.sinh(), arg.cosh(), e.exp());
        total += sign * ex * sh;
        for i in 0..3 {
            for c in 0..3 {
                let mut d = de[i][c] * sh;
                if c == 2 {
                    d += p.gamma[i] * ch;
                }
                grad[3 * c + s[i]] += sign * ex * d;
            }
        }
    }
    (total, grad)
}

pub fn literal_psi(b: &EcgBasis, u: &[f64; 9]) -> f64 {
    b.primitives.iter().zip(&b.coefficients).map(|(p, c)| c * literal_primitive(p, u)).sum()
}

pub fn potential(u: &[f64; 9]) -> f64 {
    let mut v = 0.0;
    for i in 0..3 {
        v -= 3.0 / d2(r(u, i), [0.0; 3]).sqrt();
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        v += 1.0 / d2(r(u, i), r(u, j)).sqrt();
    }
    v
}

pub fn fd_gradient(f: &dyn Fn(&[f64; 9]) -> f64, u: &[f64; 9], h: f64) -> [f64; 9] {
    let mut g = [0.0; 9];
    for k in 0..9 {
        let mut a = *u;
        let mut b = *u;
        a[k] += h;
        b[k] -= h;
        g[k] = (f(&a) - f(&b)) / (2.0 * h);
    }
    g
}

/// Running mean and standard error.
#[derive(Clone, Default, Debug)]
pub struct Stat {
    n: f64,
    sum: f64,
    sum2: f64,
}

impl Stat {
    pub fn push(&mut self, x: f64) {
        self.n += 1.0;
        self.sum += x;
        self.sum2 += x * x;
    }
    pub fn mean(&self) -> f64 {
        self.sum / self.n
    }
    pub fn stderr(&self) -> f64 {
        let m = self.mean();
        ((self.sum2 / self.n - m * m).max(0.0) / (self.n - 1.0)).sqrt()
    }
}

/// One Gaussian of a per-axis mixture: precision, its upper Cholesky factor,
/// mean, log normalization and weight.
struct Comp {
    prec: Matrix3<f64>,
    upper: Matrix3<f64>,
    mean: Vector3<f64>,
    lognorm: f64,
    weight: f64,
}

impl Comp {
    fn new(prec: Matrix3<f64>, mean: Vector3<f64>, weight: f64) -> Comp {
        let upper = prec.cholesky().expect("positive definite").l().transpose();
        let lognorm = 0.5 * prec.determinant().ln() - 1.5 * (2.0 * std::f64::consts::PI).ln();
        Comp { prec, upper, mean, lognorm, weight }
    }
    fn density(&self, x: &Vector3<f64>) -> f64 {
        let d = x - self.mean;
        (self.lognorm - 0.5 * d.dot(&(self.prec * d))).exp()
    }
}

/// Importance proposal for |Ψ|²-like integrands: a mixture of products over
/// axes of per-axis Gaussian mixtures, built from each primitive's own |φ|²
/// widths broadened by 1/κ. With `independent_axes` every axis is relabelled
/// separately, which also covers y/z-permuted copies of Ψ; otherwise the
/// relabelling is shared by all axes.
pub struct Proposal {
    terms: Vec<[Vec<Comp>; 3]>,
}

impl Proposal {
    pub fn new(prims: &[EcgPrimitive], kappa: f64, independent_axes: bool) -> Proposal {
        let mut terms = Vec::new();
        for p in prims {
            let a = p.a_matrix();
            let g = Vector3::from(p.gamma);
            let mut shared: [Vec<Comp>; 3] = [Vec::new(), Vec::new(), Vec::new()];
            for (s, _) in PERMS {
                let mut pm = Matrix3::zeros();
                for i in 0..3 {
                    pm[(i, s[i])] = 1.0;
                }
                let ap = pm.transpose() * a * pm;
                let apinv = ap.try_inverse().unwrap();
                let prec = ap * (4.0 * kappa);
                // sinh² = (e^{2γu} + e^{−2γu})/4 − 1/2
                let gp = pm.transpose() * g;
                let shift = apinv * gp * 0.5;
                let boost = 0.25 * (0.5 * gp.dot(&(apinv * gp))).exp();
                let axes: [Vec<Comp>; 3] = [
                    vec![Comp::new(prec, Vector3::zeros(), 1.0)],
                    vec![Comp::new(prec, Vector3::zeros(), 1.0)],
                    vec![Comp::new(prec, shift, boost), Comp::new(prec, -shift, boost), Comp::new(prec, Vector3::zeros(), 0.5)],
                ];
                if independent_axes {
                    for (c, v) in axes.into_iter().enumerate() {
                        shared[c].extend(v);
                    }
                } else {
                    terms.push(axes);
                }
            }
            if independent_axes {
                terms.push(shared);
            }
        }
        for axes in terms.iter_mut() {
            for axis in axes.iter_mut() {
                let total: f64 = axis.iter().map(|c| c.weight).sum();
                for c in axis.iter_mut() {
                    c.weight /= total;
                }
            }
        }
        Proposal { terms }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> [f64; 9] {
        let k = rng.random_range(0..self.terms.len());
        let mut u = [0.0; 9];
        for (c, comps) in self.terms[k].iter().enumerate() {
            let mut t: f64 = rng.random();
            let mut pick = comps.len() - 1;
            for (i, comp) in comps.iter().enumerate() {
                if t < comp.weight {
                    pick = i;
                    break;
                }
                t -= comp.weight;
            }
            let comp = &comps[pick];
            let z = Vector3::new(StandardNormal.sample(rng), StandardNormal.sample(rng), StandardNormal.sample(rng));
            let x = comp.upper.solve_upper_triangular(&z).unwrap() + comp.mean;
            for i in 0..3 {
                u[3 * c + i] = x[i];
            }
        }
        u
    }

    pub fn density(&self, u: &[f64; 9]) -> f64 {
        let mut total = 0.0;
        for axes in &self.terms {
            let mut prod = 1.0;
            for (c, comps) in axes.iter().enumerate() {
                let x = Vector3::new(u[3 * c], u[3 * c + 1], u[3 * c + 2]);
                prod *= comps.iter().map(|comp| comp.weight * comp.density(&x)).sum::<f64>();
            }
            total += prod;
        }
        total / self.terms.len() as f64
    }
}

pub struct McMatrices {
    pub s: Vec<Vec<Stat>>,
    pub h: Vec<Vec<Stat>>,
}

/// S and H between antisymmetrized primitives by importance sampling, with
/// kinetic energy as ½∇f_k·∇f_l.
pub fn mc_matrices<R: Rng>(prims: &[EcgPrimitive], samples: usize, rng: &mut R) -> McMatrices {
    let n = prims.len();
    let prop = Proposal::new(prims, 0.85, false);
    let mut s = vec![vec![Stat::default(); n]; n];
    let mut h = vec![vec![Stat::default(); n]; n];
    for _ in 0..samples {
        let u = prop.sample(rng);
        let q = prop.density(&u);
        let v = potential(&u);
        let (f, g): (Vec<f64>, Vec<[f64; 9]>) = prims.iter().map(|p| literal_primitive_grad(p, &u)).unzip();
        for k in 0..n {
            for l in 0..n {
                let kin: f64 = 0.5 * (0..9).map(|i| g[k][i] * g[l][i]).sum::<f64>();
                s[k][l].push(f[k] * f[l] / q);
                h[k][l].push((kin + v * f[k] * f[l]) / q);
            }
        }
    }
    McMatrices { s, h }
}

/// ⟨Ψ(v_0)|Ψ(σ_j v_0)⟩ with Ψ normalized by the analytic coefficients,
/// sampled from the even mixture of the proposal and its σ_j image.
pub fn mc_permuted_overlap<R: Rng>(b: &EcgBasis, j: usize, samples: usize, rng: &mut R) -> Stat {
    let prop = Proposal::new(&b.primitives, 0.85, false);
    let inv = shapedecomp::symgroup::inverse(j);
    let mut st = Stat::default();
    for _ in 0..samples {
        let mut u = prop.sample(rng);
        if rng.random::<bool>() {
            u = permuted_point(&u, inv);
        }
        let q = 0.5 * (prop.density(&u) + prop.density(&permuted_point(&u, j)));
        st.push(literal_psi(b, &u) * literal_psi(b, &permuted_point(&u, j)) / q);
    }
    st
}

/// ∫exp(uᵀQu + bᵀu) by importance sampling from the centred Gaussian with
/// covariance 1.5 times that of the integrand.
pub fn mc_gaussian_integral<R: Rng>(q: &SMatrix<f64, 9, 9>, b: &SVector<f64, 9>, samples: usize, rng: &mut R) -> Stat {
    let prec: SMatrix<f64, 9, 9> = -q * (2.0 / 1.5);
    let upper = prec.cholesky().unwrap().l().transpose();
    let norm = (2.0 * std::f64::consts::PI).powf(-4.5) * prec.determinant().sqrt();
    let mut st = Stat::default();
    for _ in 0..samples {
        let z = SVector::<f64, 9>::from_fn(|_, _| StandardNormal.sample(rng));
        let x = upper.solve_upper_triangular(&z).unwrap();
        let qd = norm * (-0.5 * x.dot(&(prec * x))).exp();
        st.push((x.dot(&(q * x)) + b.dot(&x)).exp() / qd);
    }
    st
}

/// A fixed two-primitive basis with every coupling switched on.
pub fn two_primitive_basis() -> EcgBasis {
    let mut b = EcgBasis::new(vec![
        EcgPrimitive { alpha: [-2.4, -0.18, -0.09], beta: [0.03, -0.02, 0.01], gamma: [0.05, -0.08, 0.45] },
        EcgPrimitive { alpha: [-1.6, -0.35, -0.12], beta: [-0.04, 0.02, 0.015], gamma: [0.1, 0.2, 0.6] },
    ]);
    b.solve().expect("well-conditioned");
    b
}

/// Largest |analytic − estimate| / scale and the largest 3σ / scale.
pub fn worst(pairs: &[(f64, &Stat, f64)]) -> (f64, f64) {
    let mut d: f64 = 0.0;
    let mut s: f64 = 0.0;
    for (a, st, scale) in pairs {
        d = d.max((a - st.mean()).abs() / scale);
        s = s.max(3.0 * st.stderr() / scale);
    }
    (d, s)
}

/// Largest |analytic − estimate| in standard errors.
pub fn max_z(pairs: &[(f64, &Stat, f64)]) -> f64 {
    pairs.iter().map(|(a, st, _)| (a - st.mean()).abs() / st.stderr()).fold(0.0, f64::max)
}
