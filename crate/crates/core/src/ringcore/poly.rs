use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::monomial::{Mono, NVARS};
use super::perm::{Perm3, PermPair};
use super::rational::Q;
use super::RingError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn offset(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 3,
            Axis::Z => 6,
        }
    }

    pub fn name(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }

    pub fn from_char(c: char) -> Option<Axis> {
        match c {
            'x' => Some(Axis::X),
            'y' => Some(Axis::Y),
            'z' => Some(Axis::Z),
            _ => None,
        }
    }
}

/// One of the nine coordinates; `index` is 1-based as in x1, x2, x3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Variable {
    pub axis: Axis,
    pub index: usize,
}

impl Variable {
    pub fn new(axis: Axis, index: usize) -> Variable {
        assert!((1..=3).contains(&index), "variable index must be 1..3");
        Variable { axis, index }
    }

    pub fn slot(self) -> usize {
        self.axis.offset() + self.index - 1
    }

    pub fn all() -> [Variable; 9] {
        let mut out = [Variable::new(Axis::X, 1); 9];
        for (k, v) in out.iter_mut().enumerate() {
            *v = Variable::new(Axis::ALL[k / 3], k % 3 + 1);
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    Bosonic,
    Alternating,
}

/// Sparse polynomial in x1..x3, y1..y3, z1..z3 with exact rational
/// coefficients. Terms are kept sorted ascending in graded lex order with no
/// zero coefficients, so the leading term is the last one.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly9 {
    terms: Vec<(Mono, Q)>,
}

impl Poly9 {
    pub fn zero() -> Poly9 {
        Poly9 { terms: Vec::new() }
    }

    pub fn constant(c: Q) -> Poly9 {
        if c.is_zero() {
            Poly9::zero()
        } else {
            Poly9 { terms: vec![(Mono::ONE, c)] }
        }
    }

    pub fn one() -> Poly9 {
        Poly9::constant(Q::one())
    }

    pub fn var(v: Variable) -> Poly9 {
        Poly9 { terms: vec![(Mono::var(v.slot(), 1), Q::one())] }
    }

    /// Shorthand used in tests and tables: `x(1)`, `y(3)`, ...
    pub fn coord(axis: Axis, index: usize) -> Poly9 {
        Poly9::var(Variable::new(axis, index))
    }

    pub fn monomial(exps: [u8; NVARS], c: Q) -> Poly9 {
        Poly9::from_terms(vec![(Mono::from_exps(&exps), c)])
    }

    /// Builds a polynomial from arbitrary terms, collecting duplicates.
    pub fn from_terms(terms: Vec<(Mono, Q)>) -> Poly9 {
        let mut acc: FxHashMap<Mono, Q> = FxHashMap::default();
        for (m, c) in terms {
            accumulate(&mut acc, m, c);
        }
        Poly9::from_map(acc)
    }

    fn from_map(acc: FxHashMap<Mono, Q>) -> Poly9 {
        let mut terms: Vec<(Mono, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        Poly9 { terms }
    }

    pub fn terms(&self) -> &[(Mono, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn leading(&self) -> Option<&(Mono, Q)> {
        self.terms.last()
    }

    pub fn coeff(&self, m: Mono) -> Q {
        match self.terms.binary_search_by_key(&m, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly9 {
        if c.is_zero() {
            return Poly9::zero();
        }
        Poly9 { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    fn merge(&self, other: &Poly9, sign: bool) -> Poly9 {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if sign { -b[j].1.clone() } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if sign { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly9 { terms: out }
    }

    pub fn add_poly(&self, other: &Poly9) -> Poly9 {
        self.merge(other, false)
    }

    pub fn sub_poly(&self, other: &Poly9) -> Poly9 {
        self.merge(other, true)
    }

    pub fn mul_poly(&self, other: &Poly9) -> Poly9 {
        if self.is_zero() || other.is_zero() {
            return Poly9::zero();
        }
        let mut acc: FxHashMap<Mono, Q> = FxHashMap::default();
        acc.reserve(self.len() * other.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut acc, ma.mul(*mb), ca * cb);
            }
        }
        Poly9::from_map(acc)
    }

    pub fn pow(&self, n: u32) -> Poly9 {
        let mut out = Poly9::one();
        for _ in 0..n {
            out = out.mul_poly(self);
        }
        out
    }

    /// Sum of `c_i * p_i`, collected in one pass.
    pub fn linear_combination<'a, I>(items: I) -> Poly9
    where
        I: IntoIterator<Item = (Q, &'a Poly9)>,
    {
        let mut acc: FxHashMap<Mono, Q> = FxHashMap::default();
        for (c, p) in items {
            if c.is_zero() {
                continue;
            }
            for (m, a) in &p.terms {
                accumulate(&mut acc, *m, a * &c);
            }
        }
        Poly9::from_map(acc)
    }

    pub fn differentiate(&self, v: Variable, order: u32) -> Poly9 {
        let slot = v.slot();
        let mut out = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let e = m.exp(slot) as u32;
            if e < order {
                continue;
            }
            let mut falling = 1i64;
            for k in 0..order {
                falling *= (e - k) as i64;
            }
            let mut exps = m.exps();
            exps[slot] = (e - order) as u8;
            out.push((Mono::from_exps(&exps), c * &Q::int(falling)));
        }
        Poly9::from_terms(out)
    }

    /// Applies a relabelling of variable slots: the variable in slot `v` is
    /// replaced by the one in slot `map[v]`.
    pub fn relabel(&self, map: &[usize; NVARS]) -> Poly9 {
        let mut terms: Vec<(Mono, Q)> = self.terms.iter().map(|(m, c)| (m.relabel(map), c.clone())).collect();
        terms.sort_unstable_by_key(|t| t.0);
        Poly9 { terms }
    }

    /// Replaces y_i by y_{σy(i)} and z_i by z_{σz(i)}; x is untouched.
    pub fn permute_vars(&self, perm: &PermPair) -> Poly9 {
        self.relabel(&slot_map(Perm3::ID, perm.y, perm.z))
    }

    /// Relabels particle indices of all three axes by the same permutation.
    pub fn full_diag_permute(&self, sigma: Perm3) -> Poly9 {
        self.relabel(&slot_map(sigma, sigma, sigma))
    }

    /// Relabels one axis triplet only.
    pub fn permute_axis(&self, axis: Axis, sigma: Perm3) -> Poly9 {
        let mut p = [Perm3::ID; 3];
        p[axis.offset() / 3] = sigma;
        self.relabel(&slot_map(p[0], p[1], p[2]))
    }

    /// Substitutes axes: every variable of axis `a` becomes the same-index
    /// variable of axis `to[a]`.
    pub fn permute_axes(&self, to: [Axis; 3]) -> Poly9 {
        let mut map = [0usize; NVARS];
        for a in 0..3 {
            for i in 0..3 {
                map[3 * a + i] = to[a].offset() + i;
            }
        }
        self.relabel(&map)
    }

    pub fn evaluate(&self, point: &[Q; NVARS]) -> Q {
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                for _ in 0..m.exp(v) {
                    t = &t * x;
                }
            }
            total = &total + &t;
        }
        total
    }

    pub fn evaluate_f64(&self, point: &[f64; NVARS]) -> f64 {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64();
            for (v, x) in point.iter().enumerate() {
                let e = m.exp(v);
                if e > 0 {
                    t *= x.powi(e as i32);
                }
            }
            total += t;
        }
        total
    }

    /// Exact quotient by `den`; fails unless the remainder is identically zero.
    pub fn divide_exact(&self, den: &Poly9) -> Result<Poly9, RingError> {
        let (lt_m, lt_c) = den.leading().cloned().ok_or(RingError::DivisionByZero)?;
        let lt_inv = lt_c.recip();
        let mut rem: BTreeMap<Mono, Q> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Q)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            if !lt_m.divides(m) {
                return Err(RingError::NotDivisible);
            }
            let qm = m.div(lt_m);
            let qc = c * &lt_inv;
            for (dm, dc) in &den.terms {
                let key = qm.mul(*dm);
                let delta = &qc * dc;
                let remove = match rem.get_mut(&key) {
                    Some(e) => {
                        *e = &*e - &delta;
                        e.is_zero()
                    }
                    None => {
                        rem.insert(key, -delta);
                        false
                    }
                };
                if remove {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        quot.sort_unstable_by_key(|t| t.0);
        Ok(Poly9 { terms: quot })
    }

    pub fn is_bosonic(&self) -> bool {
        self.symmetry_check(Symmetry::Bosonic)
    }

    pub fn is_alternating(&self) -> bool {
        self.symmetry_check(Symmetry::Alternating)
    }

    /// Bosonic: invariant under adjacent transpositions within each axis.
    /// Alternating: negated by every diagonal transposition.
    pub fn symmetry_check(&self, mode: Symmetry) -> bool {
        let adjacent = [Perm3([1, 0, 2]), Perm3([0, 2, 1])];
        match mode {
            Symmetry::Bosonic => Axis::ALL
                .iter()
                .all(|&a| adjacent.iter().all(|&s| self.permute_axis(a, s) == *self)),
            Symmetry::Alternating => {
                let neg = -self.clone();
                [Perm3([1, 0, 2]), Perm3([0, 2, 1]), Perm3([2, 1, 0])]
                    .iter()
                    .all(|&s| self.full_diag_permute(s) == neg)
            }
        }
    }

    /// Rational multiple `c` such that `self = c * other`, if one exists.
    pub fn ratio_to(&self, other: &Poly9) -> Option<Q> {
        if other.is_zero() {
            return if self.is_zero() { Some(Q::zero()) } else { None };
        }
        if self.len() != other.len() {
            return if self.is_zero() { Some(Q::zero()) } else { None };
        }
        let (m0, c0) = other.leading().unwrap();
        let r = &self.coeff(*m0) / c0;
        if other.scale(&r) == *self {
            Some(r)
        } else {
            None
        }
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson { exp: m.exps(), num: c.numer_string(), den: c.denom_string() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json_value(v: &PolyJson) -> Result<Poly9, RingError> {
        let mut terms = Vec::with_capacity(v.terms.len());
        for t in &v.terms {
            if t.exp.iter().any(|&e| e > super::monomial::MAX_EXP) {
                return Err(RingError::Parse(format!("exponent out of range in {:?}", t.exp)));
            }
            let c = Q::from_parts(&t.num, &t.den).map_err(RingError::Parse)?;
            terms.push((Mono::from_exps(&t.exp), c));
        }
        Ok(Poly9::from_terms(terms))
    }

    pub fn from_json(s: &str) -> Result<Poly9, RingError> {
        let v: PolyJson = serde_json::from_str(s).map_err(|e| RingError::Parse(e.to_string()))?;
        Poly9::from_json_value(&v)
    }
}

fn accumulate(acc: &mut FxHashMap<Mono, Q>, m: Mono, c: Q) {
    match acc.get_mut(&m) {
        Some(e) => *e = &*e + &c,
        None => {
            acc.insert(m, c);
        }
    }
}

fn slot_map(px: Perm3, py: Perm3, pz: Perm3) -> [usize; NVARS] {
    let mut map = [0usize; NVARS];
    for (a, p) in [px, py, pz].iter().enumerate() {
        for i in 0..3 {
            map[3 * a + i] = 3 * a + p.apply(i);
        }
    }
    map
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub exp: [u8; NVARS],
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

impl Add for &Poly9 {
    type Output = Poly9;
    fn add(self, rhs: &Poly9) -> Poly9 {
        self.add_poly(rhs)
    }
}

impl Sub for &Poly9 {
    type Output = Poly9;
    fn sub(self, rhs: &Poly9) -> Poly9 {
        self.sub_poly(rhs)
    }
}

impl Mul for &Poly9 {
    type Output = Poly9;
    fn mul(self, rhs: &Poly9) -> Poly9 {
        self.mul_poly(rhs)
    }
}

impl Add for Poly9 {
    type Output = Poly9;
    fn add(self, rhs: Poly9) -> Poly9 {
        self.add_poly(&rhs)
    }
}

impl Sub for Poly9 {
    type Output = Poly9;
    fn sub(self, rhs: Poly9) -> Poly9 {
        self.sub_poly(&rhs)
    }
}

impl Mul for Poly9 {
    type Output = Poly9;
    fn mul(self, rhs: Poly9) -> Poly9 {
        self.mul_poly(&rhs)
    }
}

impl Neg for Poly9 {
    type Output = Poly9;
    fn neg(self) -> Poly9 {
        Poly9 { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

const NAMES: [&str; NVARS] = ["x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"];

impl fmt::Display for Poly9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, name) in NAMES.iter().enumerate() {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly9({self})")
    }
}
