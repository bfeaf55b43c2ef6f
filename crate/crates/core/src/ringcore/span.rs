use std::collections::BTreeMap;

use super::{Mono, Poly9, Q};

/// Row-echelon basis of a set of polynomials, keyed by leading monomial.
/// Each stored row remembers how it was built from the inserted generators,
/// so membership queries can return explicit coefficients.
#[derive(Clone, Default)]
pub struct PolySpan {
    rows: BTreeMap<Mono, (Poly9, Vec<(usize, Q)>)>,
    inserted: usize,
}

impl PolySpan {
    pub fn new() -> PolySpan {
        PolySpan::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.inserted
    }

    /// Reduces `p` against the basis. Returns the remainder and the
    /// combination of generators that was subtracted.
    fn reduce(&self, p: &Poly9) -> (Poly9, Vec<(usize, Q)>) {
        let mut rem = p.clone();
        let mut used: BTreeMap<usize, Q> = BTreeMap::new();
        loop {
            // find the largest monomial of rem that is a pivot
            let hit = rem.terms().iter().rev().find(|(m, _)| self.rows.contains_key(m)).cloned();
            let Some((m, c)) = hit else { break };
            let (row, combo) = &self.rows[&m];
            let f = &c / &row.leading().unwrap().1;
            rem = rem.sub_poly(&row.scale(&f));
            for (g, a) in combo {
                let e = used.entry(*g).or_insert_with(Q::zero);
                *e = &*e + &(a * &f);
            }
        }
        (rem, used.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Inserts a generator; returns true if it enlarged the span.
    pub fn insert(&mut self, p: &Poly9) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (rem, used) = self.reduce(p);
        if rem.is_zero() {
            return false;
        }
        let mut combo: Vec<(usize, Q)> = used.into_iter().map(|(g, c)| (g, -c)).collect();
        combo.push((id, Q::one()));
        let lead = rem.leading().unwrap().0;
        self.rows.insert(lead, (rem, combo));
        true
    }

    pub fn contains(&self, p: &Poly9) -> bool {
        self.reduce(p).0.is_zero()
    }

    /// Coefficients `c_g` with `p = Σ c_g · generator_g`, if `p` is in the span.
    pub fn express(&self, p: &Poly9) -> Option<Vec<(usize, Q)>> {
        let (rem, used) = self.reduce(p);
        rem.is_zero().then_some(used)
    }
}

/// Exact rank of a list of polynomials.
pub fn rank(polys: &[Poly9]) -> usize {
    let mut s = PolySpan::new();
    for p in polys {
        s.insert(p);
    }
    s.rank()
}
