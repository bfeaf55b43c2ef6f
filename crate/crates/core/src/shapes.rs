//! The 36 shapes: antisymmetric generators built from the source shape
//! x222·y222·z222, their block structure and the Q-basis classification.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use thiserror::Error;

use crate::harmonics::{harmonic_poly, HarmonicIndex};
use crate::ringcore::{Axis, Perm3, Poly9, PolySpan, Variable, Q};
use crate::tables;

pub const NSHAPES: usize = 36;
pub const NBLOCKS: usize = 11;

/// Block index sets as listed in the block table, kept separate from the
/// per-shape block column so the two transcriptions can be compared.
pub const BLOCK_TABLE: [&[usize]; NBLOCKS] = [
    &[32],
    &[0],
    &[23],
    &[26],
    &[1, 4, 6, 11],
    &[22, 29, 31, 35],
    &[2, 5, 8, 13],
    &[20, 27, 30, 34],
    &[3, 9, 10, 16],
    &[17, 24, 25, 33],
    &[7, 12, 14, 15, 18, 19, 21, 28],
];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShapeError {
    #[error("block column disagrees with the block table at block {0}")]
    TableMismatch(usize),
    #[error("shape S{0} is outside the generated derivative span")]
    SpanFailure(usize),
}

fn harmonic_cache() -> &'static HashMap<HarmonicIndex, Poly9> {
    static C: OnceLock<HashMap<HarmonicIndex, Poly9>> = OnceLock::new();
    C.get_or_init(|| {
        let mut m = HashMap::new();
        for axis in Axis::ALL {
            for k in 0..3 {
                for l in 0..3 {
                    for n in 0..3 {
                        let h = HarmonicIndex::new(axis, k, l, n);
                        m.insert(h, harmonic_poly(h));
                    }
                }
            }
        }
        m
    })
}

/// Cached x_klm.
pub fn harmonic(h: HarmonicIndex) -> &'static Poly9 {
    &harmonic_cache()[&h]
}

/// x222·y222·z222, which is also S0.
pub fn source_shape() -> Poly9 {
    let h = |a| harmonic(HarmonicIndex::new(a, 2, 2, 2)).clone();
    &(&h(Axis::X) * &h(Axis::Y)) * &h(Axis::Z)
}

/// Σ_i ∂^a/∂x_i^a ∂^b/∂y_i^b ∂^c/∂z_i^c p.
pub fn symmetrized_derivative(p: &Poly9, a: u32, b: u32, c: u32) -> Poly9 {
    let mut out = Poly9::zero();
    for i in 1..=3 {
        let d = p
            .differentiate(Variable::new(Axis::X, i), a)
            .differentiate(Variable::new(Axis::Y, i), b)
            .differentiate(Variable::new(Axis::Z, i), c);
        out = &out + &d;
    }
    out
}

fn expand_entry(terms: &[(i64, &str, &str, &str)]) -> Poly9 {
    let mut out = Poly9::zero();
    for &(c, xs, ys, zs) in terms {
        let h = |a: Axis, s: &str| harmonic(HarmonicIndex::parse_digits(a, s).expect("table index"));
        let t = &(h(Axis::X, xs) * h(Axis::Y, ys)) * h(Axis::Z, zs);
        out = &out + &t.scale(&Q::int(c));
    }
    out
}

#[derive(Clone, Debug)]
pub struct ShapeSet {
    pub shapes: Vec<Poly9>,
    pub blocks: Vec<Vec<usize>>,
}

impl ShapeSet {
    pub fn block_of(&self, i: usize) -> usize {
        tables::SHAPE_BLOCK[i]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

fn build_shapes() -> Result<ShapeSet, ShapeError> {
    let shapes: Vec<Poly9> = tables::SHAPES.iter().map(|t| expand_entry(t)).collect();
    let mut blocks = vec![Vec::new(); NBLOCKS];
    for (i, &b) in tables::SHAPE_BLOCK.iter().enumerate() {
        blocks[b].push(i);
    }
    for (k, listed) in BLOCK_TABLE.iter().enumerate() {
        let a: BTreeSet<usize> = blocks[k].iter().copied().collect();
        let b: BTreeSet<usize> = listed.iter().copied().collect();
        if a != b {
            return Err(ShapeError::TableMismatch(k));
        }
    }
    Ok(ShapeSet { shapes, blocks })
}

/// The expanded shape table, built once.
pub fn canonical_shapes() -> Result<&'static ShapeSet, ShapeError> {
    static S: OnceLock<Result<ShapeSet, ShapeError>> = OnceLock::new();
    S.get_or_init(build_shapes).as_ref().map_err(|e| e.clone())
}

pub fn shapes() -> &'static ShapeSet {
    canonical_shapes().expect("shape table is consistent")
}

/// Evaluates S_i from its harmonic form at a point over any ring.
pub fn shape_value<R: crate::ringcore::Ring>(i: usize, h: &dyn Fn(Axis, [u8; 3]) -> R) -> R {
    let mut out = R::zero();
    for &(c, xs, ys, zs) in tables::SHAPES[i] {
        let d = |a: Axis, s: &str| HarmonicIndex::parse_digits(a, s).unwrap().klm;
        let t = h(Axis::X, d(Axis::X, xs)).mul(&h(Axis::Y, d(Axis::Y, ys))).mul(&h(Axis::Z, d(Axis::Z, zs)));
        out = out.add(&t.scale(&Q::int(c)));
    }
    out
}

#[derive(Clone, Debug)]
pub struct SpanReport {
    pub generated: usize,
    pub rank: usize,
    pub missing: Vec<usize>,
}

impl SpanReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Applies commuting products of ∇^(a,b,c) (each order ≤ `max_order`, at most
/// `max_depth` factors) to the source shape and checks that every shape lies
/// in the rational span of the results.
pub fn verify_derivative_span_with(max_order: u32, max_depth: usize) -> SpanReport {
    let mut ops: Vec<(u32, u32, u32)> = Vec::new();
    for a in 0..=max_order {
        for b in 0..=max_order {
            for c in 0..=max_order {
                if a + b + c > 0 {
                    ops.push((a, b, c));
                }
            }
        }
    }
    let mut span = PolySpan::new();
    let source = source_shape();
    span.insert(&source);
    // frontier holds (last operator index, accumulated orders, polynomial);
    // operators are applied in non-decreasing index order so each multiset
    // is generated once
    let mut frontier: Vec<(usize, (u32, u32, u32), Poly9)> = vec![(0, (0, 0, 0), source)];
    let mut generated = 1;
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for (start, acc, p) in &frontier {
            for (k, &(a, b, c)) in ops.iter().enumerate().skip(*start) {
                let tot = (acc.0 + a, acc.1 + b, acc.2 + c);
                if tot.0 > 3 || tot.1 > 3 || tot.2 > 3 {
                    continue;
                }
                let d = symmetrized_derivative(p, a, b, c);
                if d.is_zero() {
                    continue;
                }
                generated += 1;
                span.insert(&d);
                next.push((k, tot, d));
            }
        }
        frontier = next;
    }
    let s = shapes();
    let missing = (0..NSHAPES).filter(|&i| !span.contains(&s.shapes[i])).collect();
    SpanReport { generated, rank: span.rank(), missing }
}

pub fn verify_derivative_span() -> Result<SpanReport, ShapeError> {
    let r = verify_derivative_span_with(3, 3);
    match r.missing.first() {
        Some(&i) => Err(ShapeError::SpanFailure(i)),
        None => Ok(r),
    }
}

/// One row of the Q-basis: `Q = (Σ c_i S_i) / divisor`.
#[derive(Clone, Debug)]
pub struct QCombo {
    pub label: usize,
    pub rep: &'static str,
    pub parity: i32,
    pub coeffs: Vec<(usize, i64)>,
    pub divisor: i64,
}

impl QCombo {
    pub fn poly(&self) -> Poly9 {
        let s = shapes();
        let inv = Q::new(1, self.divisor);
        Poly9::linear_combination(self.coeffs.iter().map(|&(i, c)| (&Q::int(c) * &inv, &s.shapes[i])))
    }

    pub fn degree(&self) -> u32 {
        shapes().shapes[self.coeffs[0].0].degree().unwrap()
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.iter().find(|c| c.0 == i).map_or(0, |c| c.1)
    }
}

/// Scales a polynomial to integer coefficients with unit content and a
/// positive leading coefficient.
pub fn primitive_part(p: &Poly9) -> Poly9 {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    if p.is_zero() {
        return p.clone();
    }
    let mut lcm = num_bigint::BigInt::one();
    for (_, c) in p.terms() {
        lcm = lcm.lcm(&c.parts().1);
    }
    let mut g = num_bigint::BigInt::zero();
    for (_, c) in p.terms() {
        let (n, d) = c.parts();
        g = g.gcd(&(n * (&lcm / d)));
    }
    let mut f = num_rational::BigRational::new(lcm, g);
    if p.leading().unwrap().1.is_negative() {
        f = -f;
    }
    let f = Q::from_big(f);
    debug_assert!(!f.to_big().is_negative() || p.leading().unwrap().1.is_negative());
    p.scale(&f)
}

// (label, representation, parity, [(shape, coefficient)], divisor)
type QRow = (usize, &'static str, i32, &'static [(usize, i64)], i64);

const Q_ROWS_PRINTED: [QRow; 36] = [
    (0, "S", 1, &[(0, 1)], 1),
    (1, "S", 1, &[(1, 1), (2, 1), (3, 1)], 1),
    (2, "E", -1, &[(2, 1), (3, -1)], 1),
    (3, "E", 1, &[(1, 2), (2, -1), (3, -1)], 1),
    (4, "S", 1, &[(4, 1), (5, 1), (6, 1), (8, 1), (9, 1), (10, 1)], 1),
    (5, "A", -1, &[(4, 1), (5, -1), (6, -1), (8, 1), (9, 1), (10, -1)], 1),
    (6, "E", -1, &[(4, -1), (5, 1), (6, 1), (8, 2), (9, -1), (10, -2)], 1),
    (7, "E", 1, &[(4, 3), (6, -3), (8, 3), (10, -3)], 1),
    (8, "E'", -1, &[(4, 1), (5, 1), (6, -1), (9, -1)], 1),
    (9, "E'", 1, &[(4, 1), (5, 1), (6, 1), (8, -2), (9, 1), (10, -2)], 1),
    (10, "S'", 1, &[(7, 1)], 1),
    (11, "S", 1, &[(11, 1), (13, 1), (16, 1)], 1),
    (12, "E", -1, &[(13, 1), (16, -1)], 1),
    (13, "E", 1, &[(11, 2), (13, -1), (16, -1)], 1),
    (14, "S'", 1, &[(12, 1), (14, 1), (15, 1)], 1),
    (15, "E'", -1, &[(12, 1), (14, -1)], 1),
    (16, "E'", 1, &[(12, 1), (14, 1), (15, -2)], 1),
    (17, "A", -1, &[(17, 1), (20, -1), (22, 1)], 3),
    (18, "Ebar", -1, &[(17, -1), (20, 1), (22, 2)], 3),
    (19, "Ebar", 1, &[(17, 1), (20, 1)], 3),
    (20, "S", 1, &[(18, 1), (19, 1), (21, 1)], 1),
    (21, "E", -1, &[(19, 1), (21, -1)], 1),
    (22, "E", 1, &[(18, 2), (19, -1), (21, -1)], 1),
    (23, "S", 1, &[(24, 1), (25, 1), (27, 1), (29, 1), (30, 1), (31, 1)], 3),
    (24, "A", -1, &[(24, 1), (25, -1), (27, -1), (29, 1), (30, 1), (31, -1)], 3),
    (25, "E", -1, &[(24, -1), (25, -2), (27, 1), (30, 1)], 3),
    (26, "E", 1, &[(24, -1), (25, -1), (27, -1), (29, 2), (30, -1), (31, 2)], 3),
    (27, "E'", -1, &[(24, 1), (25, -1), (27, -1), (29, -2), (30, 1), (31, 2)], 3),
    (28, "E'", 1, &[(24, -1), (25, 1), (27, -1), (30, 1)], 3),
    (29, "S'", 1, &[(28, 1)], 1),
    (30, "S''", 1, &[(23, 1), (26, 1), (32, 1)], 6),
    (31, "E''", -1, &[(26, -1), (32, 1)], 6),
    (32, "E''", 1, &[(23, -2), (26, 1), (32, 1)], 6),
    (33, "A", -1, &[(33, 1), (34, -1), (35, 1)], 3),
    (34, "Ebar", -1, &[(33, -1), (34, 1), (35, 2)], 3),
    (35, "Ebar", 1, &[(33, 1), (34, 1)], 3),
];

/// Rows that are replaced in the working basis. As printed, Q7 is odd under
/// x↔y and Q25 is not a parity eigenvector; the replacements are the unique
/// vectors satisfying the stated parity and row orthogonality, scaled so that
/// each E pair transforms by the E matrices.
const Q_ROW_FIXES: [QRow; 2] = [
    (7, "E", 1, &[(4, 3), (5, -3), (6, 3), (9, -3)], 1),
    (25, "E", -1, &[(24, -1), (25, -1), (27, 1), (30, 1)], 3),
];

fn to_combo(r: &QRow) -> QCombo {
    QCombo { label: r.0, rep: r.1, parity: r.2, coeffs: r.3.to_vec(), divisor: r.4 }
}

/// The Q-basis exactly as printed.
pub fn q_basis_as_printed() -> Vec<QCombo> {
    Q_ROWS_PRINTED.iter().map(to_combo).collect()
}

/// The Q-basis with the two inconsistent rows replaced.
pub fn q_basis() -> Vec<QCombo> {
    let mut rows = q_basis_as_printed();
    for fix in &Q_ROW_FIXES {
        rows[fix.0] = to_combo(fix);
    }
    rows
}

pub fn corrected_rows() -> Vec<usize> {
    Q_ROW_FIXES.iter().map(|r| r.0).collect()
}

/// Integer dot product of two rows over shape indices.
pub fn row_dot(a: &QCombo, b: &QCombo) -> i64 {
    a.coeffs.iter().map(|&(i, c)| c * b.coeff(i)).sum()
}

/// Pairs of distinct same-degree rows with nonzero dot product.
pub fn orthogonality_violations(rows: &[QCombo]) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            if rows[a].degree() != rows[b].degree() {
                continue;
            }
            let d = row_dot(&rows[a], &rows[b]);
            if d != 0 {
                out.push((rows[a].label, rows[b].label, d));
            }
        }
    }
    out
}

/// The x↔y relabelling.
pub fn swap_xy(p: &Poly9) -> Poly9 {
    p.permute_axes([Axis::Y, Axis::X, Axis::Z])
}

/// Rows whose polynomial is not mapped to `parity * itself` by x↔y.
pub fn parity_violations(rows: &[QCombo]) -> Vec<usize> {
    rows.iter()
        .filter(|r| {
            let p = r.poly();
            swap_xy(&p) != p.scale(&Q::int(r.parity as i64))
        })
        .map(|r| r.label)
        .collect()
}

/// Complex polynomial with exact rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussPoly {
    pub re: Poly9,
    pub im: Poly9,
}

impl GaussPoly {
    pub fn new(re: Poly9, im: Poly9) -> GaussPoly {
        GaussPoly { re, im }
    }

    pub fn mul(&self, o: &GaussPoly) -> GaussPoly {
        GaussPoly {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SeptipletReport {
    pub lhs: GaussPoly,
    pub rhs: GaussPoly,
}

impl SeptipletReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn real_parts_agree(&self) -> bool {
        self.lhs.re == self.rhs.re
    }
}

/// [2S29 + S32 − i(2S31 + S26)]/3 against Π_{i<j} [x_i − x_j + i(y_i − y_j)].
pub fn septiplet_report() -> SeptipletReport {
    let s = &shapes().shapes;
    let third = Q::new(1, 3);
    let lhs = GaussPoly::new(
        (&s[29].scale(&Q::int(2)) + &s[32]).scale(&third),
        (&s[31].scale(&Q::int(2)) + &s[26]).scale(&-third.clone()),
    );
    let d = |a: Axis, i, j| &Poly9::coord(a, i) - &Poly9::coord(a, j);
    let factor = |i, j| GaussPoly::new(d(Axis::X, i, j), d(Axis::Y, i, j));
    let rhs = factor(1, 2).mul(&factor(2, 3)).mul(&factor(1, 3));
    SeptipletReport { lhs, rhs }
}

pub fn septiplet_identity() -> bool {
    septiplet_report().holds()
}

/// Whether the span of the given shapes is mapped into itself by every
/// diagonal permutation and every permutation of the axes.
pub fn closed_under_permutations(indices: &[usize]) -> bool {
    let s = shapes();
    let mut span = PolySpan::new();
    for &i in indices {
        span.insert(&s.shapes[i]);
    }
    let axes_perms: Vec<[Axis; 3]> = Perm3::ALL
        .iter()
        .map(|p| [Axis::ALL[p.0[0]], Axis::ALL[p.0[1]], Axis::ALL[p.0[2]]])
        .collect();
    indices.iter().all(|&i| {
        Perm3::ALL.iter().all(|&sg| span.contains(&s.shapes[i].full_diag_permute(sg)))
            && axes_perms.iter().all(|&ax| span.contains(&s.shapes[i].permute_axes(ax)))
    })
}
