//! The group S3 × S3 acting on the y and z triplets, its product characters χ
//! and the composite characters η̄ that project onto the shape blocks.

use std::sync::OnceLock;

use thiserror::Error;

use crate::ringcore::{Axis, Perm3, PermPair, Poly9, Q};
use crate::tables;

pub const ORDER: usize = 36;

/// S3 characters (S, A, E) over `Perm3::ALL`.
pub const S3_CHARS: [[i32; 6]; 3] = [[1, 1, 1, 1, 1, 1], [1, -1, -1, -1, 1, 1], [2, 0, 0, 0, -1, -1]];

/// (y, z) representation pair behind each χ row; 0 = S, 1 = A, 2 = E.
pub const CHI_REPS: [(usize, usize); 9] = [(0, 0), (1, 1), (0, 1), (1, 0), (2, 1), (2, 0), (1, 2), (0, 2), (2, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S3Rep {
    S,
    A,
    E,
}

impl S3Rep {
    fn row(self) -> usize {
        match self {
            S3Rep::S => 0,
            S3Rep::A => 1,
            S3Rep::E => 2,
        }
    }
}

struct Group {
    elements: Vec<PermPair>,
    /// `mul[a][b]` is the index of σ_a ∘ σ_b.
    mul: Vec<[usize; ORDER]>,
    inv: [usize; ORDER],
}

fn group() -> &'static Group {
    static G: OnceLock<Group> = OnceLock::new();
    G.get_or_init(|| {
        let elements: Vec<PermPair> = tables::VARIABLE_SETS
            .iter()
            .map(|(y, z)| PermPair::new(Perm3::parse(y).unwrap(), Perm3::parse(z).unwrap()))
            .collect();
        let find = |p: PermPair| elements.iter().position(|&e| e == p).expect("group is closed");
        let mut mul = vec![[0usize; ORDER]; ORDER];
        let mut inv = [0usize; ORDER];
        for a in 0..ORDER {
            for b in 0..ORDER {
                mul[a][b] = find(elements[a].compose(elements[b]));
            }
            inv[a] = find(elements[a].inverse());
        }
        Group { elements, mul, inv }
    })
}

/// The 36 variable sets in table order; element 0 is the identity.
pub fn group_elements() -> &'static [PermPair] {
    &group().elements
}

pub fn element(j: usize) -> PermPair {
    group().elements[j]
}

pub fn index_of(p: PermPair) -> usize {
    group().elements.iter().position(|&e| e == p).expect("element of S3 x S3")
}

/// Index of σ_a ∘ σ_b (σ_b applied first).
pub fn compose(a: usize, b: usize) -> usize {
    group().mul[a][b]
}

pub fn inverse(a: usize) -> usize {
    group().inv[a]
}

/// Index of the element q with σ_q v_m = v_j, i.e. q = σ_m⁻¹ ∘ σ_j.
pub fn relative(m: usize, j: usize) -> usize {
    compose(inverse(m), j)
}

pub fn chi(k: usize, j: usize) -> i32 {
    tables::CHI[k][j]
}

pub fn eta_bar(k: usize, j: usize) -> i32 {
    tables::ETA_BAR[k][j]
}

/// χ_k rebuilt from the S3 characters.
pub fn chi_from_outer_product(k: usize, j: usize) -> i32 {
    let (ry, rz) = CHI_REPS[k];
    let e = element(j);
    S3_CHARS[ry][e.y.index()] * S3_CHARS[rz][e.z.index()]
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("table mismatch: {0}")]
    TableMismatch(String),
}

#[derive(Debug, Clone, Default)]
pub struct IdentityReport {
    pub checks: Vec<(String, bool)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect()
    }
}

/// Block sizes from the shape table, used by the square-sum identity.
pub fn block_sizes() -> [usize; 11] {
    let mut n = [0usize; 11];
    for &b in &tables::SHAPE_BLOCK {
        n[b] += 1;
    }
    n
}

/// Exact sweeps over the character tables: outer-product reconstruction and
/// orthogonality of χ, column delta, row square sums, the multiplication rule
/// and inversion symmetry of η̄.
pub fn verify_character_identities() -> IdentityReport {
    let mut r = IdentityReport::default();
    let sizes = block_sizes();

    let outer = (0..9).all(|k| (0..ORDER).all(|j| chi(k, j) == chi_from_outer_product(k, j)));
    r.checks.push(("chi equals the outer product of S3 characters".into(), outer));

    let orth = (0..9).all(|k| {
        (0..9).all(|l| {
            let s: i32 = (0..ORDER).map(|j| chi(k, j) * chi(l, j)).sum();
            s == if k == l { 36 } else { 0 }
        })
    });
    r.checks.push(("sum_j chi_k chi_l = 36 delta_kl".into(), orth));

    let mut col = true;
    for j in 0..ORDER {
        let s: i32 = (0..11).map(|k| eta_bar(k, j)).sum();
        col &= s == if j == 0 { 36 } else { 0 };
    }
    r.checks.push(("(1/36) sum_k eta_k(sigma_j) = delta_j0".into(), col));

    let mut sq = true;
    for (k, &size) in sizes.iter().enumerate() {
        let s: i32 = (0..ORDER).map(|j| eta_bar(k, j).pow(2)).sum();
        sq &= s == 36 * size as i32;
    }
    r.checks.push(("(1/36) sum_j eta_k(sigma_j)^2 = |I_k|".into(), sq));

    let mut rule = true;
    for k in 0..11 {
        for l in 0..11 {
            for big_j in 0..ORDER {
                let s: i32 = (0..ORDER).map(|j| eta_bar(k, j) * eta_bar(l, compose(j, big_j))).sum();
                let expect = if k == l { 36 * eta_bar(k, big_j) } else { 0 };
                rule &= s == expect;
            }
        }
    }
    r.checks.push(("(1/36) sum_j eta_k(s_j) eta_l(s_j s_J) = delta_kl eta_k(s_J)".into(), rule));

    let self_adjoint = (0..11).all(|k| (0..ORDER).all(|j| eta_bar(k, j) == eta_bar(k, inverse(j))));
    r.checks.push(("eta_k(sigma^-1) = eta_k(sigma)".into(), self_adjoint));

    let closed = (0..ORDER).all(|a| (0..ORDER).all(|b| compose(a, b) < ORDER)) && element(0) == PermPair::ID;
    r.checks.push(("group closure with identity first".into(), closed));
    r
}

pub fn verify_character_identities_strict() -> Result<IdentityReport, GroupError> {
    let r = verify_character_identities();
    match r.failures().first() {
        Some(f) => Err(GroupError::TableMismatch((*f).to_string())),
        None => Ok(r),
    }
}

/// g_R = Σ_σ χ_R(σ) f(σ-permuted coordinates) for a function of one axis.
pub fn s3_transform(f: &Poly9, axis: Axis, rep: S3Rep) -> Poly9 {
    let items: Vec<(Q, Poly9)> = Perm3::ALL
        .iter()
        .enumerate()
        .map(|(i, &s)| (Q::int(S3_CHARS[rep.row()][i] as i64), f.permute_axis(axis, s)))
        .collect();
    Poly9::linear_combination(items.iter().map(|(c, p)| (c.clone(), p)))
}

/// 2×2 rational matrix, row-major.
pub type Mat2 = [[Q; 2]; 2];

fn m2(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> Mat2 {
    [[Q::new(a.0, a.1), Q::new(b.0, b.1)], [Q::new(c.0, c.1), Q::new(d.0, d.1)]]
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// The E matrices over `Perm3::ALL`, acting on the column (x-y, x+y-2z).
pub fn rep_e() -> [Mat2; 6] {
    [
        m2((1, 1), (0, 1), (0, 1), (1, 1)),
        m2((1, 2), (1, 2), (3, 2), (-1, 2)),
        m2((-1, 1), (0, 1), (0, 1), (1, 1)),
        m2((1, 2), (-1, 2), (-3, 2), (-1, 2)),
        m2((-1, 2), (1, 2), (-3, 2), (-1, 2)),
        m2((-1, 2), (-1, 2), (3, 2), (-1, 2)),
    ]
}

/// The companion list, Ē(g) = E(g⁻¹)ᵀ.
pub fn rep_e_bar() -> [Mat2; 6] {
    [
        m2((1, 1), (0, 1), (0, 1), (1, 1)),
        m2((1, 2), (3, 2), (1, 2), (-1, 2)),
        m2((-1, 1), (0, 1), (0, 1), (1, 1)),
        m2((1, 2), (-3, 2), (-1, 2), (-1, 2)),
        m2((-1, 2), (3, 2), (-1, 2), (-1, 2)),
        m2((-1, 2), (-3, 2), (1, 2), (-1, 2)),
    ]
}

/// True when `mats[a]·mats[b] = mats[b∘a]` for all pairs, which is the
/// multiplication table read with the left factor applied first.
pub fn reproduces_multiplication_table(mats: &[Mat2; 6]) -> bool {
    (0..6).all(|a| {
        (0..6).all(|b| {
            let ab = Perm3::ALL[b].compose(Perm3::ALL[a]).index();
            mat2_mul(&mats[a], &mats[b]) == mats[ab]
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::{harmonic_poly, HarmonicIndex};

    #[test]
    fn table_elements() {
        assert_eq!(element(0), PermPair::ID);
        assert_eq!(element(1), PermPair::new(Perm3::ID, Perm3([0, 2, 1])));
        assert_eq!(element(7), PermPair::new(Perm3([1, 0, 2]), Perm3::ID));
        let mut seen = std::collections::HashSet::new();
        for &e in group_elements() {
            assert!(seen.insert(e));
        }
    }

    #[test]
    fn chi_spot_values() {
        assert!((0..ORDER).all(|j| chi(0, j) == 1));
        assert_eq!(chi(8, 0), 4);
        assert_eq!(chi(8, 4), -2);
    }

    #[test]
    fn all_identities_hold() {
        let r = verify_character_identities();
        assert!(r.passed(), "{:?}", r.failures());
    }

    #[test]
    fn eta_rows_below_eight_are_scaled_chis() {
        let d = [1, 1, 1, 1, 2, 2, 2, 2];
        for k in 0..8 {
            for j in 0..ORDER {
                assert_eq!(eta_bar(k, j), d[k] * chi(k, j));
            }
        }
        for j in 0..ORDER {
            assert_eq!(eta_bar(8, j) + eta_bar(9, j) + eta_bar(10, j), 4 * chi(8, j));
        }
    }

    #[test]
    fn one_axis_transforms() {
        let x222 = harmonic_poly(HarmonicIndex::parse("x222").unwrap());
        assert_eq!(s3_transform(&x222, Axis::X, S3Rep::A), x222.scale(&Q::int(6)));
        assert!(s3_transform(&x222, Axis::X, S3Rep::E).is_zero());
        let e3 = &(&Poly9::coord(Axis::X, 1) * &Poly9::coord(Axis::X, 2)) * &Poly9::coord(Axis::X, 3);
        assert_eq!(s3_transform(&e3, Axis::X, S3Rep::S), e3.scale(&Q::int(6)));
    }

    #[test]
    fn representation_lists() {
        let e = rep_e();
        let eb = rep_e_bar();
        assert!(reproduces_multiplication_table(&e));
        assert!(reproduces_multiplication_table(&eb));
        for i in 0..6 {
            let tr = &e[i][0][0] + &e[i][1][1];
            assert_eq!(tr, Q::int(S3_CHARS[2][i] as i64));
            // Ē(g) = E(g⁻¹)ᵀ
            let inv = Perm3::ALL[i].inverse().index();
            for r in 0..2 {
                for c in 0..2 {
                    assert_eq!(eb[i][r][c], e[inv][c][r]);
                }
            }
        }
    }
}
