//! Packed exponent vectors.
//!
//! Layout: bits 54..63 hold the total degree, then six bits per variable with
//! x1 most significant. Integer comparison of the packed word is graded lex
//! order, and multiplying monomials is integer addition.

use std::fmt;

pub const NVARS: usize = 9;
const FIELD: u32 = 6;
const FIELD_MASK: u64 = (1 << FIELD) - 1;
const DEG_SHIFT: u32 = 54;
pub const MAX_EXP: u8 = FIELD_MASK as u8;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub u64);

#[inline]
fn shift(var: usize) -> u32 {
    FIELD * (NVARS - 1 - var) as u32
}

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn from_exps(e: &[u8; NVARS]) -> Mono {
        let mut w = 0u64;
        let mut deg = 0u64;
        for (v, &x) in e.iter().enumerate() {
            assert!(x <= MAX_EXP, "exponent {x} exceeds {MAX_EXP}");
            w |= (x as u64) << shift(v);
            deg += x as u64;
        }
        Mono(w | (deg << DEG_SHIFT))
    }

    pub fn var(v: usize, power: u8) -> Mono {
        let mut e = [0u8; NVARS];
        e[v] = power;
        Mono::from_exps(&e)
    }

    #[inline]
    pub fn exp(self, v: usize) -> u8 {
        ((self.0 >> shift(v)) & FIELD_MASK) as u8
    }

    pub fn exps(self) -> [u8; NVARS] {
        let mut e = [0u8; NVARS];
        for (v, x) in e.iter_mut().enumerate() {
            *x = self.exp(v);
        }
        e
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    /// Product of monomials. Callers keep per-variable exponents below 64.
    #[inline]
    pub fn mul(self, other: Mono) -> Mono {
        Mono(self.0 + other.0)
    }

    pub fn divides(self, other: Mono) -> bool {
        (0..NVARS).all(|v| self.exp(v) <= other.exp(v))
    }

    /// `self / other`, assuming `other.divides(self)`.
    #[inline]
    pub fn div(self, other: Mono) -> Mono {
        Mono(self.0 - other.0)
    }

    pub fn relabel(self, map: &[usize; NVARS]) -> Mono {
        let mut e = [0u8; NVARS];
        for v in 0..NVARS {
            e[map[v]] = self.exp(v);
        }
        Mono::from_exps(&e)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}
