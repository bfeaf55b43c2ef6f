//! Harmonic polynomials x_klm: derivatives of the three-point Vandermonde form.

use std::fmt;

use thiserror::Error;

use crate::ringcore::{vandermonde, Axis, Poly9, PolySpan, Ring, Q};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct HarmonicIndex {
    pub axis: Axis,
    pub klm: [u8; 3],
}

impl HarmonicIndex {
    pub fn new(axis: Axis, k: u8, l: u8, m: u8) -> HarmonicIndex {
        assert!(k <= 2 && l <= 2 && m <= 2, "harmonic indices are 0..=2");
        HarmonicIndex { axis, klm: [k, l, m] }
    }

    /// Parses "x121" or, with an explicit axis, "121".
    pub fn parse(s: &str) -> Option<HarmonicIndex> {
        let mut chars = s.chars();
        let axis = Axis::from_char(chars.next()?)?;
        HarmonicIndex::parse_digits(axis, chars.as_str())
    }

    pub fn parse_digits(axis: Axis, digits: &str) -> Option<HarmonicIndex> {
        let d: Vec<u8> = digits.chars().map(|c| c.to_digit(10).map(|v| v as u8)).collect::<Option<_>>()?;
        if d.len() != 3 || d.iter().any(|&v| v > 2) {
            return None;
        }
        Some(HarmonicIndex::new(axis, d[0], d[1], d[2]))
    }

    pub fn degree(self) -> i32 {
        self.klm.iter().map(|&v| v as i32).sum::<i32>() - 3
    }
}

impl fmt::Display for HarmonicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.axis.name(), self.klm[0], self.klm[1], self.klm[2])
    }
}

fn factorial(n: u8) -> i64 {
    (1..=n as i64).product()
}

/// Evaluates the determinant with rows `a_c^{e}/e!`, `e = klm[c] - r`, over
/// any ring. Entries with negative `e` are zero.
pub fn harmonic_value<R: Ring>(klm: [u8; 3], a: &[R; 3]) -> R {
    let entry = |r: usize, c: usize| -> R {
        let e = klm[c] as i32 - r as i32;
        if e < 0 {
            return R::zero();
        }
        let mut v = R::one();
        for _ in 0..e {
            v = v.mul(&a[c]);
        }
        v.scale(&Q::new(1, factorial(e as u8)))
    };
    let m: Vec<Vec<R>> = (0..3).map(|r| (0..3).map(|c| entry(r, c)).collect()).collect();
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]));
    m[0][0].mul(&minor(1, 2, 1, 2)).sub(&m[0][1].mul(&minor(1, 2, 0, 2))).add(&m[0][2].mul(&minor(1, 2, 0, 1)))
}

/// x_klm as an exact polynomial in the chosen axis triplet.
pub fn harmonic_poly(h: HarmonicIndex) -> Poly9 {
    let a = [1, 2, 3].map(|i| Poly9::coord(h.axis, i));
    harmonic_value(h.klm, &a)
}

/// Δ_axis = (a1-a2)(a1-a3)(a2-a3).
pub fn vandermonde_form(axis: Axis) -> Poly9 {
    vandermonde(axis)
}

/// Coefficients of the q-factorial [N]_q!, lowest degree first.
pub fn degree_dimensions(n: usize) -> Vec<u64> {
    assert!(n >= 1);
    let mut coeffs = vec![1u64];
    for k in 1..=n {
        let mut next = vec![0u64; coeffs.len() + k - 1];
        for (i, c) in coeffs.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// The six basis triples, by decreasing degree.
pub const BASIS_TRIPLES: [[u8; 3]; 6] = [[2, 2, 2], [2, 1, 2], [2, 2, 1], [2, 1, 1], [1, 2, 1], [2, 1, 0]];

pub fn independent_harmonics(axis: Axis) -> Vec<Poly9> {
    BASIS_TRIPLES.iter().map(|&t| harmonic_poly(HarmonicIndex { axis, klm: t })).collect()
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HarmonicsError {
    #[error("syzygy `{0}` leaves a nonzero residual")]
    SyzygyViolation(String),
}

#[derive(Debug, Clone)]
pub struct SyzygyReport {
    pub residuals: Vec<(String, Poly9)>,
}

impl SyzygyReport {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn into_result(self) -> Result<SyzygyReport, HarmonicsError> {
        match self.residuals.iter().find(|(_, r)| !r.is_zero()) {
            Some((name, _)) => Err(HarmonicsError::SyzygyViolation(name.clone())),
            None => Ok(self),
        }
    }
}

/// Residuals of the two linear syzygies and the quadratic one, per axis.
pub fn check_syzygies() -> SyzygyReport {
    let mut residuals = Vec::new();
    for axis in Axis::ALL {
        let h = |s: &str| harmonic_poly(HarmonicIndex::parse_digits(axis, s).unwrap());
        let a = axis.name();
        residuals.push((format!("{a}112+{a}121+{a}211"), &(&h("112") + &h("121")) + &h("211")));
        residuals.push((format!("{a}122+{a}212+{a}221"), &(&h("122") + &h("212")) + &h("221")));
        let quad = &(&(&(&h("121") * &h("212")) + &(&h("211") * &h("212"))) + &(&h("121") * &h("221")))
            - &h("222").scale(&Q::int(3));
        residuals.push((format!("{a}121*{a}212+{a}211*{a}212+{a}121*{a}221-3{a}222"), quad));
    }
    SyzygyReport { residuals }
}

/// Every admissible triple, with its expansion in the six-element basis.
/// Triples whose determinant vanishes map to an empty combination.
pub fn rewrite_table(axis: Axis) -> Vec<(HarmonicIndex, Vec<(Q, usize)>)> {
    let basis = independent_harmonics(axis);
    let mut span = PolySpan::new();
    for b in &basis {
        span.insert(b);
    }
    let mut out = Vec::new();
    for k in 0..3u8 {
        for l in 0..3u8 {
            for m in 0..3u8 {
                let h = HarmonicIndex::new(axis, k, l, m);
                let p = harmonic_poly(h);
                let combo = span.express(&p).expect("every harmonic lies in the span of the basis");
                out.push((h, combo.into_iter().map(|(g, c)| (c, g)).collect()));
            }
        }
    }
    out
}
