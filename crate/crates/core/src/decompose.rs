//! Extraction of the 36 bosonic coefficients Φ_i of a three-fermion
//! polynomial, Ψ = Σ Φ_i S_i, from character transforms of its 36 permuted
//! evaluations. The same linear pipeline runs over exact polynomials, exact
//! rationals and floats.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::harmonics::{harmonic_value, HarmonicIndex};
use crate::ringcore::{vandermonde, Axis, Perm3, Poly9, PolyJson, Ring, RingError, Variable, NVARS, Q};
use crate::shapes::{self, harmonic, shape_value, NSHAPES};
use crate::symgroup::{self, chi, element, eta_bar, relative, ORDER};
use crate::tables;

/// Guard on every Vandermonde magnitude in the numeric route.
pub const EPS: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecomposeError {
    #[error("input is not diagonally alternating")]
    NotAlternating,
    #[error("exact division failed for coefficient {0}")]
    NotDivisible(usize),
    #[error("point is at or near a coincidence")]
    SingularPoint,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Φ_0..Φ_35, in shape order.
#[derive(Clone, Debug, PartialEq)]
pub struct BosonicVector<T> {
    pub phi: Vec<T>,
}

#[derive(Serialize, Deserialize)]
struct SymbolicJson {
    mode: String,
    phi: Vec<PolyJson>,
}

#[derive(Serialize, Deserialize)]
struct NumericJson {
    mode: String,
    point: Vec<f64>,
    phi: Vec<f64>,
}

impl BosonicVector<Poly9> {
    pub fn to_json(&self) -> String {
        let j = SymbolicJson { mode: "symbolic".into(), phi: self.phi.iter().map(|p| p.to_json_value()).collect() };
        serde_json::to_string(&j).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, DecomposeError> {
        let j: SymbolicJson = serde_json::from_str(s).map_err(|e| DecomposeError::InvalidInput(e.to_string()))?;
        let phi = j
            .phi
            .iter()
            .map(Poly9::from_json_value)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| DecomposeError::InvalidInput(e.to_string()))?;
        if phi.len() != NSHAPES {
            return Err(DecomposeError::InvalidInput(format!("expected {NSHAPES} entries")));
        }
        Ok(BosonicVector { phi })
    }

    pub fn all_bosonic(&self) -> bool {
        self.phi.iter().all(|p| p.is_bosonic())
    }
}

impl BosonicVector<f64> {
    pub fn to_json(&self, point: &[f64; NVARS]) -> String {
        let j = NumericJson { mode: "numeric".into(), point: point.to_vec(), phi: self.phi.clone() };
        serde_json::to_string(&j).expect("serializable")
    }
}

/// Harmonic polynomial values x_klm for all three axes at one point.
pub struct HarmTable<R> {
    v: Vec<R>,
}

fn harm_slot(axis: Axis, klm: [u8; 3]) -> usize {
    axis.offset() / 3 * 27 + klm[0] as usize * 9 + klm[1] as usize * 3 + klm[2] as usize
}

impl<R: Ring> HarmTable<R> {
    /// From coordinates in the slot order x1..x3, y1..y3, z1..z3.
    pub fn at(coords: &[R; NVARS]) -> HarmTable<R> {
        let mut v = vec![R::zero(); 81];
        for axis in Axis::ALL {
            let o = axis.offset();
            let a = [coords[o].clone(), coords[o + 1].clone(), coords[o + 2].clone()];
            for k in 0..3u8 {
                for l in 0..3u8 {
                    for m in 0..3u8 {
                        v[harm_slot(axis, [k, l, m])] = harmonic_value([k, l, m], &a);
                    }
                }
            }
        }
        HarmTable { v }
    }

    pub fn get(&self, axis: Axis, klm: [u8; 3]) -> &R {
        &self.v[harm_slot(axis, klm)]
    }

    pub fn shape(&self, i: usize) -> R {
        shape_value(i, &|a, klm| self.get(a, klm).clone())
    }
}

/// Table of the harmonic polynomials themselves.
pub fn symbolic_harm_table() -> &'static HarmTable<Poly9> {
    static T: OnceLock<HarmTable<Poly9>> = OnceLock::new();
    T.get_or_init(|| {
        let mut v = vec![Poly9::zero(); 81];
        for axis in Axis::ALL {
            for k in 0..3u8 {
                for l in 0..3u8 {
                    for m in 0..3u8 {
                        v[harm_slot(axis, [k, l, m])] = harmonic(HarmonicIndex::new(axis, k, l, m)).clone();
                    }
                }
            }
        }
        HarmTable { v }
    })
}

/// Coordinates of v_j = σ_j v_0: y_i ← y_{σy(i)}, z_i ← z_{σz(i)}.
pub fn permuted_point<T: Clone>(point: &[T; NVARS], j: usize) -> [T; NVARS] {
    let p = element(j);
    let mut out = point.clone();
    for i in 0..3 {
        out[3 + i] = point[3 + p.y.0[i]].clone();
        out[6 + i] = point[6 + p.z.0[i]].clone();
    }
    out
}

/// An M matrix parsed once: entries reference distinct harmonic products.
pub struct MTable {
    pub n: usize,
    products: Vec<Vec<HarmonicIndex>>,
    entries: Vec<Vec<(i64, usize)>>,
}

fn parse_m(raw: &[&[(i64, &str)]]) -> MTable {
    let n = (raw.len() as f64).sqrt() as usize;
    assert_eq!(n * n, raw.len());
    let mut products: Vec<Vec<HarmonicIndex>> = Vec::new();
    let mut ids: HashMap<Vec<HarmonicIndex>, usize> = HashMap::new();
    let entries = raw
        .iter()
        .map(|terms| {
            terms
                .iter()
                .map(|&(c, s)| {
                    let mut f: Vec<HarmonicIndex> =
                        s.split_whitespace().map(|h| HarmonicIndex::parse(h).expect("M-table harmonic")).collect();
                    f.sort();
                    let id = *ids.entry(f.clone()).or_insert_with(|| {
                        products.push(f);
                        products.len() - 1
                    });
                    (c, id)
                })
                .collect()
        })
        .collect();
    MTable { n, products, entries }
}

/// M_4..M_10.
pub fn m_table(which: usize) -> &'static MTable {
    static T: OnceLock<Vec<MTable>> = OnceLock::new();
    let all = T.get_or_init(|| {
        vec![
            parse_m(&tables::M4),
            parse_m(&tables::M5),
            parse_m(&tables::M6),
            parse_m(&tables::M7),
            parse_m(&tables::M8),
            parse_m(&tables::M9),
            parse_m(&tables::M10),
        ]
    });
    assert!((4..=10).contains(&which), "M matrices are numbered 4..10");
    &all[which - 4]
}

impl MTable {
    fn product_values<R: Ring>(&self, harm: &HarmTable<R>) -> Vec<R> {
        self.products
            .iter()
            .map(|fs| fs.iter().skip(1).fold(harm.get(fs[0].axis, fs[0].klm).clone(), |acc, h| acc.mul(harm.get(h.axis, h.klm))))
            .collect()
    }

    /// Entry (a, b), zero-based.
    pub fn entry<R: Ring>(&self, a: usize, b: usize, harm: &HarmTable<R>) -> R {
        let pv = self.product_values(harm);
        self.entries[a * self.n + b].iter().fold(R::zero(), |acc, &(c, p)| acc.add(&pv[p].scale(&Q::int(c))))
    }

    pub fn matrix<R: Ring>(&self, harm: &HarmTable<R>) -> Vec<Vec<R>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.entry(a, b, harm)).collect()).collect()
    }

    /// M·g, forming each product of a harmonic monomial with g_b once.
    fn apply<R: Ring>(&self, harm: &HarmTable<R>, g: &[R]) -> Vec<R> {
        let pv = self.product_values(harm);
        let mut cache: HashMap<(usize, usize), R> = HashMap::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if g[b].is_zero() {
                    continue;
                }
                for &(_, p) in &self.entries[a * self.n + b] {
                    cache.entry((p, b)).or_insert_with(|| pv[p].mul(&g[b]));
                }
            }
        }
        (0..self.n)
            .map(|a| {
                let items: Vec<(Q, &R)> = (0..self.n)
                    .filter(|&b| !g[b].is_zero())
                    .flat_map(|b| self.entries[a * self.n + b].iter().map(move |&(c, p)| (c, p, b)))
                    .map(|(c, p, b)| (Q::int(c), &cache[&(p, b)]))
                    .collect();
                R::lin_comb(&items)
            })
            .collect()
    }
}

/// Entries of M_which as polynomials.
pub fn m_matrix(which: usize) -> Vec<Vec<Poly9>> {
    m_table(which).matrix(symbolic_harm_table())
}

const XYZ: &[Axis] = &[Axis::X, Axis::Y, Axis::Z];

struct SingleBlock {
    shape: usize,
    chi: usize,
    c: (i64, i64),
    axes: &'static [Axis],
}

/// Blocks of size one: Φ = g_k(v_0) / (c · ΠΔ).
const SINGLE_BLOCKS: [SingleBlock; 4] = [
    SingleBlock { shape: 32, chi: 0, c: (108, 1), axes: &[Axis::X] },
    SingleBlock { shape: 0, chi: 1, c: (9, 2), axes: XYZ },
    SingleBlock { shape: 23, chi: 2, c: (108, 1), axes: &[Axis::Z] },
    SingleBlock { shape: 26, chi: 3, c: (108, 1), axes: &[Axis::Y] },
];

pub struct LinearBlock {
    pub block: usize,
    pub sets: [usize; 4],
    c: (i64, i64),
    axes: &'static [Axis],
}

/// Blocks 4..7: Φ_{I_k} = M_k · (g_k(v_m))_m / (c · ΠΔ), with χ_k = χ_block.
pub const LINEAR_BLOCKS: [LinearBlock; 4] = [
    LinearBlock { block: 4, sets: [0, 6, 7, 24], c: (243, 4), axes: XYZ },
    LinearBlock { block: 5, sets: [0, 6, 7, 24], c: (729, 2), axes: &[Axis::X, Axis::Y] },
    LinearBlock { block: 6, sets: [0, 1, 2, 4], c: (243, 4), axes: XYZ },
    LinearBlock { block: 7, sets: [0, 1, 2, 4], c: (729, 2), axes: &[Axis::X, Axis::Z] },
];

struct Chi8Group {
    m: usize,
    rows: std::ops::Range<usize>,
    c: (i64, i64),
    axes: &'static [Axis],
}

/// Diagonal blocks of the inverse of the eliminated χ_8 system.
const CHI8_GROUPS: [Chi8Group; 3] = [
    Chi8Group { m: 8, rows: 0..4, c: (243, 8), axes: XYZ },
    Chi8Group { m: 9, rows: 4..8, c: (243, 4), axes: &[Axis::Y, Axis::Z] },
    Chi8Group { m: 10, rows: 8..16, c: (729, 8), axes: XYZ },
];

/// Denominator of Φ_i as a constant times a product of Vandermonde forms.
pub fn row_denominator(i: usize) -> (Q, &'static [Axis]) {
    static D: OnceLock<Vec<(Q, &'static [Axis])>> = OnceLock::new();
    D.get_or_init(|| {
        let mut d: Vec<Option<(Q, &'static [Axis])>> = vec![None; NSHAPES];
        for b in &SINGLE_BLOCKS {
            d[b.shape] = Some((Q::new(b.c.0, b.c.1), b.axes));
        }
        let s = shapes::shapes();
        for lb in &LINEAR_BLOCKS {
            for &i in &s.blocks[lb.block] {
                d[i] = Some((Q::new(lb.c.0, lb.c.1), lb.axes));
            }
        }
        for g in &CHI8_GROUPS {
            for r in g.rows.clone() {
                d[tables::CHI8_ORDER[r]] = Some((Q::new(g.c.0, g.c.1), g.axes));
            }
        }
        d.into_iter().map(|x| x.expect("every shape has a row")).collect()
    })[i]
        .clone()
}

/// g_k(v_m) = Σ_j χ_k(σ_m⁻¹σ_j) Ψ(v_j), given the 36 values Ψ(v_j).
pub fn transform_g<R: Ring>(psi: &[R], k: usize, m: usize) -> R {
    let items: Vec<(Q, &R)> = psi
        .iter()
        .enumerate()
        .filter_map(|(j, p)| {
            let c = chi(k, relative(m, j));
            (c != 0 && !p.is_zero()).then(|| (Q::int(c as i64), p))
        })
        .collect();
    R::lin_comb(&items)
}

/// g_k(v_m) for a polynomial Ψ.
pub fn transform_g_poly(psi: &Poly9, k: usize, m: usize) -> Poly9 {
    let vals = permuted_polys(psi);
    Poly9::linear_combination(
        vals.iter().enumerate().map(|(j, p)| (Q::int(chi(k, relative(m, j)) as i64), p)),
    )
}

/// Ψ(v_j) for all j.
pub fn permuted_polys(psi: &Poly9) -> Vec<Poly9> {
    symgroup::group_elements().iter().map(|p| psi.permute_vars(p)).collect()
}

/// The eliminated χ_8 system: the 16 variable sets of the Gg column, the
/// Gg combinations, and the shape order of the solution.
pub struct Chi8System {
    pub sets: Vec<usize>,
    pub gg: Vec<Vec<(Q, usize)>>,
    pub order: [usize; 16],
}

pub fn chi8_system() -> Chi8System {
    let gg: Vec<Vec<(Q, usize)>> = tables::GG_ROWS
        .iter()
        .map(|(den, terms)| terms.iter().map(|&(c, m)| (Q::new(c, *den), m)).collect())
        .collect();
    let mut sets: Vec<usize> = gg.iter().flatten().map(|t| t.1).collect();
    sets.sort_unstable();
    sets.dedup();
    Chi8System { sets, gg, order: tables::CHI8_ORDER }
}

impl Chi8System {
    /// The block-diagonal inverse at a point, as a dense 16×16 matrix.
    pub fn inverse_at<R: Ring + DivRing>(&self, harm: &HarmTable<R>) -> Vec<Vec<R>> {
        let mut out = vec![vec![R::zero(); 16]; 16];
        for g in &CHI8_GROUPS {
            let den = vandermonde_value(harm, g.axes).scale(&Q::new(g.c.0, g.c.1));
            let m = m_table(g.m).matrix(harm);
            let o = g.rows.start;
            for (a, row) in m.iter().enumerate() {
                for (b, e) in row.iter().enumerate() {
                    out[o + a][o + b] = e.div(&den);
                }
            }
        }
        out
    }
}

/// Division for the pointwise routes.
pub trait DivRing {
    fn div(&self, other: &Self) -> Self;
}

impl DivRing for f64 {
    fn div(&self, o: &f64) -> f64 {
        self / o
    }
}

impl DivRing for Q {
    fn div(&self, o: &Q) -> Q {
        self / o
    }
}

/// ΠΔ over the given axes, from x222 = Δ/2.
fn vandermonde_value<R: Ring>(harm: &HarmTable<R>, axes: &[Axis]) -> R {
    axes.iter().fold(R::one(), |acc, &a| acc.mul(&harm.get(a, [2, 2, 2]).scale(&Q::int(2))))
}

/// Numerators of all 36 Φ_i: Φ_i = numerator_i / (c_i · ΠΔ).
pub fn numerators<R: Ring>(psi: &[R], harm: &HarmTable<R>) -> Vec<R> {
    assert_eq!(psi.len(), ORDER);
    let mut out = vec![R::zero(); NSHAPES];
    for b in &SINGLE_BLOCKS {
        out[b.shape] = transform_g(psi, b.chi, 0);
    }
    let s = shapes::shapes();
    for lb in &LINEAR_BLOCKS {
        let g: Vec<R> = lb.sets.iter().map(|&m| transform_g(psi, lb.block, m)).collect();
        let rows = m_table(lb.block).apply(harm, &g);
        for (a, &i) in s.blocks[lb.block].iter().enumerate() {
            out[i] = rows[a].clone();
        }
    }
    let sys = chi8_system();
    let g8: HashMap<usize, R> = sys.sets.iter().map(|&m| (m, transform_g(psi, 8, m))).collect();
    let gg: Vec<R> = sys
        .gg
        .iter()
        .map(|row| R::lin_comb(&row.iter().map(|(c, m)| (c.clone(), &g8[m])).collect::<Vec<_>>()))
        .collect();
    for g in &CHI8_GROUPS {
        let rows = m_table(g.m).apply(harm, &gg[g.rows.clone()]);
        for (a, r) in rows.into_iter().enumerate() {
            out[sys.order[g.rows.start + a]] = r;
        }
    }
    out
}

fn vandermonde_product(axes: &[Axis]) -> Poly9 {
    axes.iter().fold(Poly9::one(), |acc, &a| &acc * &vandermonde(a))
}

fn denominator_poly(i: usize) -> &'static Poly9 {
    static D: OnceLock<Vec<Poly9>> = OnceLock::new();
    &D.get_or_init(|| {
        (0..NSHAPES)
            .map(|i| {
                let (c, axes) = row_denominator(i);
                vandermonde_product(axes).scale(&c)
            })
            .collect()
    })[i]
}

/// Exact extraction for a polynomial in the alternating module.
pub fn extract_bosonic_symbolic(psi: &Poly9) -> Result<BosonicVector<Poly9>, DecomposeError> {
    if !psi.is_alternating() {
        return Err(DecomposeError::NotAlternating);
    }
    let vals = permuted_polys(psi);
    let nums = numerators(&vals, symbolic_harm_table());
    let phi = nums
        .iter()
        .enumerate()
        .map(|(i, n)| {
            if n.is_zero() {
                return Ok(Poly9::zero());
            }
            let (c, axes) = row_denominator(i);
            n.divide_exact(&vandermonde_product(axes))
                .map(|q| q.scale(&c.recip()))
                .map_err(|e| match e {
                    RingError::NotDivisible | RingError::DivisionByZero | RingError::Parse(_) => {
                        DecomposeError::NotDivisible(i)
                    }
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BosonicVector { phi })
}


/// Rejects points where some axis Vandermonde value is within `eps` of zero.
pub fn check_point_with(point: &[f64; NVARS], eps: f64) -> Result<(), DecomposeError> {
    for a in 0..3 {
        let (p, q, r) = (point[3 * a], point[3 * a + 1], point[3 * a + 2]);
        let d = (p - q) * (p - r) * (q - r);
        if !(d.abs() > eps) {
            return Err(DecomposeError::SingularPoint);
        }
    }
    Ok(())
}

/// Pointwise extraction for any evaluator of Ψ.
pub fn extract_bosonic_numeric<F>(psi: F, point: &[f64; NVARS]) -> Result<BosonicVector<f64>, DecomposeError>
where
    F: Fn(&[f64; NVARS]) -> f64,
{
    extract_bosonic_numeric_guarded(psi, point, EPS)
}

/// As [`extract_bosonic_numeric`] with an explicit coincidence guard.
pub fn extract_bosonic_numeric_guarded<F>(psi: F, point: &[f64; NVARS], eps: f64) -> Result<BosonicVector<f64>, DecomposeError>
where
    F: Fn(&[f64; NVARS]) -> f64,
{
    check_point_with(point, eps)?;
    let vals: Vec<f64> = (0..ORDER).map(|j| psi(&permuted_point(point, j))).collect();
    let harm = HarmTable::at(point);
    let nums = numerators(&vals, &harm);
    let phi = nums
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let (c, axes) = row_denominator(i);
            n / (c.to_f64() * vandermonde_value(&harm, axes))
        })
        .collect();
    Ok(BosonicVector { phi })
}

/// F as numerator polynomials over row denominators c_i · ΠΔ.
pub struct ExtractionMatrix {
    pub num: Vec<Vec<Poly9>>,
}

impl ExtractionMatrix {
    pub fn denominator(&self, i: usize) -> &'static Poly9 {
        denominator_poly(i)
    }

    pub fn evaluate_q(&self, point: &[Q; NVARS]) -> Vec<Vec<Q>> {
        (0..NSHAPES)
            .map(|i| {
                let d = self.denominator(i).evaluate(point);
                self.num[i].iter().map(|n| &n.evaluate(point) / &d).collect()
            })
            .collect()
    }

    pub fn evaluate_f64(&self, point: &[f64; NVARS]) -> Vec<Vec<f64>> {
        (0..NSHAPES)
            .map(|i| {
                let d = self.denominator(i).evaluate_f64(point);
                self.num[i].iter().map(|n| n.evaluate_f64(point) / d).collect()
            })
            .collect()
    }
}

/// F, materialized by running the pipeline on unit vectors of Ψ values.
pub fn extraction_matrix() -> &'static ExtractionMatrix {
    static F: OnceLock<ExtractionMatrix> = OnceLock::new();
    F.get_or_init(|| {
        let mut num = vec![Vec::with_capacity(ORDER); NSHAPES];
        for j in 0..ORDER {
            let unit: Vec<Poly9> = (0..ORDER).map(|m| if m == j { Poly9::one() } else { Poly9::zero() }).collect();
            for (i, n) in numerators(&unit, symbolic_harm_table()).into_iter().enumerate() {
                num[i].push(n);
            }
        }
        ExtractionMatrix { num }
    })
}

/// (k, j) pairs where 36·Σ_{i∈I_k} S_i F_ij differs from η̄_k(σ_j), checked as
/// exact polynomial identities.
pub fn eta_bar_mismatches_symbolic() -> Vec<(usize, usize)> {
    let f = extraction_matrix();
    let s = shapes::shapes();
    let mut bad = Vec::new();
    for (k, block) in s.blocks.iter().enumerate() {
        let den = denominator_poly(block[0]);
        for j in 0..ORDER {
            let mut lhs = Poly9::zero();
            for &i in block {
                lhs = &lhs + &(&s.shapes[i] * &f.num[i][j]);
            }
            let lhs = lhs.scale(&Q::int(36));
            if lhs != den.scale(&Q::int(eta_bar(k, j) as i64)) {
                bad.push((k, j));
            }
        }
    }
    bad
}

/// The same check at a rational point.
pub fn eta_bar_mismatches_at(point: &[Q; NVARS]) -> Vec<(usize, usize)> {
    let f = extraction_matrix().evaluate_q(point);
    let harm = HarmTable::at(point);
    let sv: Vec<Q> = (0..NSHAPES).map(|i| harm.shape(i)).collect();
    let s = shapes::shapes();
    let mut bad = Vec::new();
    for (k, block) in s.blocks.iter().enumerate() {
        for j in 0..ORDER {
            let v = block.iter().fold(Q::zero(), |acc, &i| &acc + &(&sv[i] * &f[i][j]));
            if &v * &Q::int(36) != Q::int(eta_bar(k, j) as i64) {
                bad.push((k, j));
            }
        }
    }
    bad
}

/// Σ Φ_i S_i.
pub fn reconstruct(phi: &BosonicVector<Poly9>) -> Poly9 {
    let s = shapes::shapes();
    let mut out = Poly9::zero();
    for (p, sh) in phi.phi.iter().zip(&s.shapes) {
        if !p.is_zero() {
            out = &out + &(p * sh);
        }
    }
    out
}

/// Σ Φ_i S_i(point).
pub fn reconstruct_numeric(phi: &BosonicVector<f64>, point: &[f64; NVARS]) -> f64 {
    let harm = HarmTable::at(point);
    phi.phi.iter().enumerate().map(|(i, p)| p * harm.shape(i)).sum()
}

/// Weights (1/36) Σ_k η̄_k(σ_j) of Ψ(σ_j v_0) in the direct inversion form.
pub fn inversion_weights() -> Vec<Q> {
    (0..ORDER)
        .map(|j| Q::new((0..11).map(|k| eta_bar(k, j) as i64).sum(), 36))
        .collect()
}

/// Shape values S_i(v_m) for the sets of a linear block, rows over sets.
pub fn forward_matrix(which: usize) -> Vec<Vec<Poly9>> {
    let lb = LINEAR_BLOCKS.iter().find(|b| b.block == which).expect("forward matrices exist for blocks 4..7");
    let s = shapes::shapes();
    lb.sets
        .iter()
        .map(|&m| s.blocks[which].iter().map(|&i| s.shapes[i].permute_vars(&element(m))).collect())
        .collect()
}

fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Vec<Vec<R>> {
    let n = a.len();
    let p = b[0].len();
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..b.len()).fold(R::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn is_identity(m: &[Vec<Q>]) -> bool {
    m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, v)| *v == if i == j { Q::one() } else { Q::zero() }))
}

/// (1/(c ΠΔ))·M_k · 18·U at a rational point, where U holds S_i(v_m).
pub fn linear_block_product_at(which: usize, point: &[Q; NVARS]) -> Vec<Vec<Q>> {
    let lb = LINEAR_BLOCKS.iter().find(|b| b.block == which).expect("blocks 4..7");
    let s = shapes::shapes();
    let harm = HarmTable::at(point);
    let u: Vec<Vec<Q>> = lb
        .sets
        .iter()
        .map(|&m| {
            let hm = HarmTable::at(&permuted_point(point, m));
            s.blocks[which].iter().map(|&i| hm.shape(i).scale(&Q::int(18))).collect()
        })
        .collect();
    let den = vandermonde_value(&harm, lb.axes).scale(&Q::new(lb.c.0, lb.c.1));
    let m: Vec<Vec<Q>> =
        m_table(which).matrix(&harm).into_iter().map(|r| r.into_iter().map(|e| &e / &den).collect()).collect();
    mat_mul(&m, &u)
}

pub fn linear_block_inverse_holds_at(which: usize, point: &[Q; NVARS]) -> bool {
    is_identity(&linear_block_product_at(which, point))
}

/// Ũ⁻¹ · Gg · 9U at a rational point.
pub fn chi8_product_at(point: &[Q; NVARS]) -> Vec<Vec<Q>> {
    let sys = chi8_system();
    let harm = HarmTable::at(point);
    let u: HashMap<usize, Vec<Q>> = sys
        .sets
        .iter()
        .map(|&m| {
            let hm = HarmTable::at(&permuted_point(point, m));
            (m, sys.order.iter().map(|&i| hm.shape(i).scale(&Q::int(9))).collect())
        })
        .collect();
    let gu: Vec<Vec<Q>> = sys
        .gg
        .iter()
        .map(|row| (0..16).map(|c| row.iter().fold(Q::zero(), |acc, (w, m)| &acc + &(w * &u[m][c]))).collect())
        .collect();
    mat_mul(&sys.inverse_at(&harm), &gu)
}

pub fn chi8_inverse_holds_at(point: &[Q; NVARS]) -> bool {
    is_identity(&chi8_product_at(point))
}

/// Two particles: Ψ = Φ_0 xyz + Φ_1 x + Φ_2 y + Φ_3 z with x = x1 − x2 etc.
/// Rows of the forward matrix are Ψ, Ψ with x1↔x2, y1↔y2, z1↔z2.
pub fn two_fermion_matrix<R: Ring>(x: &R, y: &R, z: &R) -> [[R; 4]; 4] {
    let xyz = x.mul(y).mul(z);
    let n = |v: &R| R::zero().sub(v);
    [
        [xyz.clone(), x.clone(), y.clone(), z.clone()],
        [n(&xyz), n(x), y.clone(), z.clone()],
        [n(&xyz), x.clone(), n(y), z.clone()],
        [n(&xyz), x.clone(), y.clone(), n(z)],
    ]
}

/// Inverse of the two-particle matrix as (sign row, divisor index): Φ_r =
/// Σ_c s_rc Ψ_c / (4·d_r) with d = (xyz, x, y, z).
pub const TWO_FERMION_INVERSE: [[i64; 4]; 4] = [[1, -1, -1, -1], [1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]];

fn uses_third_particle(p: &Poly9) -> bool {
    Axis::ALL.iter().any(|&a| p.terms().iter().any(|(m, _)| m.exp(Variable::new(a, 3).slot()) > 0))
}

/// Exact two-particle decomposition; Ψ may use x1, x2, y1, y2, z1, z2.
pub fn decompose_two_fermion(psi: &Poly9) -> Result<[Poly9; 4], DecomposeError> {
    if uses_third_particle(psi) {
        return Err(DecomposeError::InvalidInput("two-particle input uses index 3".into()));
    }
    let swap = Perm3([1, 0, 2]);
    if psi.full_diag_permute(swap) != -psi.clone() {
        return Err(DecomposeError::NotAlternating);
    }
    let vals = [psi.clone(), psi.permute_axis(Axis::X, swap), psi.permute_axis(Axis::Y, swap), psi.permute_axis(Axis::Z, swap)];
    let d = |a: Axis| &Poly9::coord(a, 1) - &Poly9::coord(a, 2);
    let (x, y, z) = (d(Axis::X), d(Axis::Y), d(Axis::Z));
    let divs = [&(&x * &y) * &z, x, y, z];
    let mut out: [Poly9; 4] = Default::default();
    for r in 0..4 {
        let num = Poly9::linear_combination((0..4).map(|c| (Q::int(TWO_FERMION_INVERSE[r][c]), &vals[c])));
        out[r] = num.divide_exact(&divs[r]).map_err(|_| DecomposeError::NotDivisible(r))?.scale(&Q::new(1, 4));
    }
    Ok(out)
}

/// Pointwise two-particle decomposition at (x1, x2, y1, y2, z1, z2).
pub fn decompose_two_fermion_numeric<F>(psi: F, p: &[f64; 6]) -> Result<[f64; 4], DecomposeError>
where
    F: Fn(&[f64; 6]) -> f64,
{
    let (x, y, z) = (p[0] - p[1], p[2] - p[3], p[4] - p[5]);
    if !(x.abs() > EPS && y.abs() > EPS && z.abs() > EPS) {
        return Err(DecomposeError::SingularPoint);
    }
    let sw = |k: usize| {
        let mut q = *p;
        q.swap(2 * k, 2 * k + 1);
        q
    };
    let vals = [psi(p), psi(&sw(0)), psi(&sw(1)), psi(&sw(2))];
    let divs = [x * y * z, x, y, z];
    let mut out = [0.0; 4];
    for r in 0..4 {
        out[r] = (0..4).map(|c| TWO_FERMION_INVERSE[r][c] as f64 * vals[c]).sum::<f64>() / (4.0 * divs[r]);
    }
    Ok(out)
}

/// Rows g_123, g_132, g_213, g_312 of the one-dimensional E system, without
/// the overall factor 3, acting on (Φ_1..Φ_4).
pub fn one_dim_matrix<R: Ring>(h: &dyn Fn(&str) -> R) -> [[R; 4]; 4] {
    let n = |v: R| R::zero().sub(&v);
    let (a, b, c, d) = (h("212"), h("221"), h("211"), h("121"));
    [
        [a.clone(), b.clone(), c.clone(), d.clone()],
        [n(b.clone()), n(a.clone()), n(c.clone()), c.add(&d)],
        [a.add(&b), n(b.clone()), n(d.clone()), n(c.clone())],
        [n(a.add(&b)), a.clone(), n(c.add(&d)), c.clone()],
    ]
}

/// The permutations at which g_E is evaluated, as images of (1, 2, 3).
pub const ONE_DIM_SETS: [Perm3; 4] = [Perm3([0, 1, 2]), Perm3([0, 2, 1]), Perm3([1, 0, 2]), Perm3([2, 0, 1])];

pub fn det4<R: Ring>(m: &[[R; 4]; 4]) -> R {
    let det3 = |skip_row: usize, skip_col: usize| -> R {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip_row).collect();
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip_col).collect();
        let e = |r: usize, c: usize| &m[rows[r]][cols[c]];
        let minor = |r1, r2, c1, c2| e(r1, c1).mul(e(r2, c2)).sub(&e(r1, c2).mul(e(r2, c1)));
        e(0, 0).mul(&minor(1, 2, 1, 2)).sub(&e(0, 1).mul(&minor(1, 2, 0, 2))).add(&e(0, 2).mul(&minor(1, 2, 0, 1)))
    };
    (0..4).fold(R::zero(), |acc, c| {
        let t = m[0][c].mul(&det3(0, c));
        if c % 2 == 0 {
            acc.add(&t)
        } else {
            acc.sub(&t)
        }
    })
}

/// adj(m), so that m · adj(m) = det(m) · I.
pub fn adjugate4<R: Ring>(m: &[[R; 4]; 4]) -> [[R; 4]; 4] {
    let mut out: [[R; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| R::zero()));
    for r in 0..4 {
        for c in 0..4 {
            let mut sub: [[R; 4]; 4] = m.clone();
            // replace row r with e_c: the determinant is then the (r, c) cofactor
            for k in 0..4 {
                sub[r][k] = if k == c { R::one() } else { R::zero() };
            }
            out[c][r] = det4(&sub);
        }
    }
    out
}

/// Ψ(x1, x2, x3) = Φ_0 x222 + Φ_1 x212 + Φ_2 x221 + Φ_3 x211 + Φ_4 x121 + Φ_5 x210.
pub fn decompose_1d_three(psi: &Poly9) -> Result<[Poly9; 6], DecomposeError> {
    if Axis::ALL[1..].iter().any(|&a| (1..=3).any(|i| psi.terms().iter().any(|(m, _)| m.exp(Variable::new(a, i).slot()) > 0))) {
        return Err(DecomposeError::InvalidInput("one-dimensional input uses y or z".into()));
    }
    // g_R = Σ_σ χ_R(σ) Ψ(x_σ(1), x_σ(2), x_σ(3))
    let g = |row: usize| -> Poly9 {
        let perms: Vec<Poly9> = Perm3::ALL.iter().map(|&sg| psi.permute_axis(Axis::X, sg)).collect();
        Poly9::linear_combination(perms.iter().enumerate().map(|(s, p)| (Q::int(symgroup::S3_CHARS[row][s] as i64), p)))
    };
    let gs = g(0);
    let ga = g(1);
    let ge = g(2);
    let h = |s: &str| harmonic(HarmonicIndex::parse_digits(Axis::X, s).unwrap()).clone();
    let mut out: [Poly9; 6] = Default::default();
    out[5] = gs.scale(&Q::new(-1, 6));
    out[0] = ga.divide_exact(&vandermonde(Axis::X)).map_err(|_| DecomposeError::NotDivisible(0))?.scale(&Q::new(1, 3));
    let rhs: Vec<Poly9> = ONE_DIM_SETS.iter().map(|&sg| ge.permute_axis(Axis::X, sg)).collect();
    let c = one_dim_matrix(&h);
    let det = det4(&c);
    let adj = adjugate4(&c);
    for r in 0..4 {
        let mut num = Poly9::zero();
        for k in 0..4 {
            num = &num + &(&adj[r][k] * &rhs[k]);
        }
        out[r + 1] = num.divide_exact(&det).map_err(|_| DecomposeError::NotDivisible(r + 1))?.scale(&Q::new(1, 3));
    }
    Ok(out)
}

/// e_k of one axis triplet.
pub fn elementary_symmetric(axis: Axis, k: usize) -> Poly9 {
    let a = |i| Poly9::coord(axis, i);
    match k {
        0 => Poly9::one(),
        1 => &(&a(1) + &a(2)) + &a(3),
        2 => &(&(&a(1) * &a(2)) + &(&a(1) * &a(3))) + &(&a(2) * &a(3)),
        3 => &(&a(1) * &a(2)) * &a(3),
        _ => Poly9::zero(),
    }
}

/// Random rational point with distinct coordinates on every axis.
pub fn random_generic_point<G: rand::Rng>(rng: &mut G) -> [Q; NVARS] {
    loop {
        let pt: [Q; NVARS] = std::array::from_fn(|_| Q::new(rng.random_range(-40..=40), rng.random_range(1..=9)));
        let distinct = (0..3).all(|a| pt[3 * a] != pt[3 * a + 1] && pt[3 * a] != pt[3 * a + 2] && pt[3 * a + 1] != pt[3 * a + 2]);
        if distinct {
            return pt;
        }
    }
}

/// A random bosonic polynomial: a few products of elementary symmetric
/// polynomials of total degree ≤ `max_degree` with small rational coefficients.
pub fn random_bosonic<G: rand::Rng>(rng: &mut G, max_degree: u32, max_terms: usize) -> Poly9 {
    let mut out = Poly9::zero();
    let n = rng.random_range(0..=max_terms);
    for _ in 0..n {
        let mut t = Poly9::constant(Q::new(rng.random_range(-9..=9), rng.random_range(1..=6)));
        let mut deg = 0;
        for axis in Axis::ALL {
            let k = rng.random_range(0..=3usize);
            if deg + k as u32 <= max_degree {
                deg += k as u32;
                t = &t * &elementary_symmetric(axis, k);
            }
        }
        out = &out + &t;
    }
    out
}

/// Σ p_i S_i with random bosonic p_i; returns (Ψ, p).
pub fn random_alternating<G: rand::Rng>(rng: &mut G, max_degree: u32, max_terms: usize) -> (Poly9, Vec<Poly9>) {
    let p: Vec<Poly9> = (0..NSHAPES).map(|_| random_bosonic(rng, max_degree, max_terms)).collect();
    let psi = reconstruct(&BosonicVector { phi: p.clone() });
    (psi, p)
}
