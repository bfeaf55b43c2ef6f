use super::{Poly9, Q};

/// Minimal commutative-ring interface shared by exact rationals, floats and
/// polynomials, so that formulas built from harmonic polynomials can be
/// evaluated symbolically or pointwise by the same code.
pub trait Ring: Clone + Send + Sync {
    fn zero() -> Self;
    fn from_q(c: &Q) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;
    fn is_zero(&self) -> bool;

    fn one() -> Self {
        Self::from_q(&Q::one())
    }

    /// Σ c_i · v_i.
    fn lin_comb(items: &[(Q, &Self)]) -> Self {
        items.iter().fold(Self::zero(), |acc, (c, v)| acc.add(&v.scale(c)))
    }
}

impl Ring for f64 {
    fn zero() -> f64 {
        0.0
    }
    fn from_q(c: &Q) -> f64 {
        c.to_f64()
    }
    fn add(&self, o: &f64) -> f64 {
        self + o
    }
    fn sub(&self, o: &f64) -> f64 {
        self - o
    }
    fn mul(&self, o: &f64) -> f64 {
        self * o
    }
    fn scale(&self, c: &Q) -> f64 {
        self * c.to_f64()
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Ring for Q {
    fn zero() -> Q {
        Q::zero()
    }
    fn from_q(c: &Q) -> Q {
        c.clone()
    }
    fn add(&self, o: &Q) -> Q {
        self + o
    }
    fn sub(&self, o: &Q) -> Q {
        self - o
    }
    fn mul(&self, o: &Q) -> Q {
        self * o
    }
    fn scale(&self, c: &Q) -> Q {
        self * c
    }
    fn is_zero(&self) -> bool {
        Q::is_zero(self)
    }
}

impl Ring for Poly9 {
    fn zero() -> Poly9 {
        Poly9::zero()
    }
    fn from_q(c: &Q) -> Poly9 {
        Poly9::constant(c.clone())
    }
    fn add(&self, o: &Poly9) -> Poly9 {
        self.add_poly(o)
    }
    fn sub(&self, o: &Poly9) -> Poly9 {
        self.sub_poly(o)
    }
    fn mul(&self, o: &Poly9) -> Poly9 {
        self.mul_poly(o)
    }
    fn scale(&self, c: &Q) -> Poly9 {
        Poly9::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        Poly9::is_zero(self)
    }
    fn lin_comb(items: &[(Q, &Poly9)]) -> Poly9 {
        Poly9::linear_combination(items.iter().map(|(c, p)| (c.clone(), *p)))
    }
}
