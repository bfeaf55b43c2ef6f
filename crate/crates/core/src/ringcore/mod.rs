//! Exact sparse polynomials in the nine coordinates x1..x3, y1..y3, z1..z3.

mod monomial;
mod perm;
mod poly;
mod rational;
mod ring;
mod span;

pub use monomial::{Mono, MAX_EXP, NVARS};
pub use perm::{Perm3, PermPair};
pub use poly::{Axis, PolyJson, Poly9, Symmetry, TermJson, Variable};
pub use rational::Q;
pub use ring::Ring;
pub use span::{rank, PolySpan};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RingError {
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// `(a1-a2)(a1-a3)(a2-a3)` in the given axis.
pub fn vandermonde(axis: Axis) -> Poly9 {
    let a = |i| Poly9::coord(axis, i);
    &(&(&a(1) - &a(2)) * &(&a(1) - &a(3))) * &(&a(2) - &a(3))
}

/// Exact point from small integers, mostly for tests and examples.
pub fn int_point(v: [i64; NVARS]) -> [Q; NVARS] {
    v.map(Q::int)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly9 {
        Poly9::coord(Axis::X, i)
    }
    fn y(i: usize) -> Poly9 {
        Poly9::coord(Axis::Y, i)
    }
    fn z(i: usize) -> Poly9 {
        Poly9::coord(Axis::Z, i)
    }

    #[test]
    fn additive_inverse_is_zero() {
        assert!((&x(1) - &x(1)).is_zero());
        assert!((x(1) + (-x(1))).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1) - &x(2)) * &(&x(1) + &x(2));
        assert_eq!(p, &x(1).pow(2) - &x(2).pow(2));
    }

    #[test]
    fn discriminant_matches_brute_force_expansion() {
        let d = vandermonde(Axis::X);
        let disc = &d * &d;
        assert_eq!(disc.degree(), Some(6));
        // brute force: expand the 6-term Vandermonde against itself term by term
        let mut acc: std::collections::HashMap<[u8; 9], i64> = Default::default();
        for (ma, ca) in d.terms() {
            for (mb, cb) in d.terms() {
                let mut e = ma.exps();
                for (k, v) in mb.exps().iter().enumerate() {
                    e[k] += v;
                }
                *acc.entry(e).or_default() += (ca * cb).to_f64() as i64;
            }
        }
        acc.retain(|_, v| *v != 0);
        assert_eq!(disc.len(), acc.len());
        for (e, v) in acc {
            assert_eq!(disc.coeff(Mono::from_exps(&e)), Q::int(v));
        }
    }

    #[test]
    fn derivatives() {
        let v = Variable::new(Axis::X, 1);
        assert_eq!(x(1).pow(2).differentiate(v, 1), x(1).scale(&Q::int(2)));
        assert!(y(2).pow(3).differentiate(v, 1).is_zero());
        let p = &z(3).pow(2) * &x(1);
        assert_eq!(p.differentiate(Variable::new(Axis::Z, 3), 2), x(1).scale(&Q::int(2)));
        assert_eq!(p.differentiate(v, 0), p);
    }

    #[test]
    fn permutations_of_variables() {
        let swap_y = PermPair::new(Perm3([1, 0, 2]), Perm3::ID);
        assert_eq!(y(1).permute_vars(&swap_y), y(2));
        let cycle_z = PermPair::new(Perm3::ID, Perm3([1, 2, 0]));
        assert_eq!((&x(1) * &z(3)).permute_vars(&cycle_z), &x(1) * &z(1));
        let t = Perm3([1, 0, 2]);
        assert_eq!((&x(1) * &y(2)).full_diag_permute(t), &x(2) * &y(1));
        let e1 = &(&x(1) + &x(2)) + &x(3);
        for s in Perm3::ALL {
            assert_eq!(e1.full_diag_permute(s), e1);
        }
    }

    #[test]
    fn evaluation() {
        let p = &x(1) - &x(2);
        assert_eq!(p.evaluate(&int_point([1, 2, 3, 4, 5, 6, 7, 8, 9])), Q::int(-1));
        let d = vandermonde(Axis::X);
        assert_eq!(d.evaluate(&int_point([5, 5, 2, 1, 1, 1, 1, 1, 1])), Q::zero());
        assert_eq!(d.evaluate(&int_point([0, 1, 2, 0, 0, 0, 0, 0, 0])), Q::int(-2));
    }

    #[test]
    fn exact_division() {
        let num = &x(1).pow(2) - &x(2).pow(2);
        assert_eq!(num.divide_exact(&(&x(1) - &x(2))).unwrap(), &x(1) + &x(2));
        let d = vandermonde(Axis::X);
        assert_eq!((&d * &d).divide_exact(&d).unwrap(), d);
        assert_eq!((&x(1) + &y(1)).divide_exact(&x(1)), Err(RingError::NotDivisible));
        assert_eq!(x(1).divide_exact(&Poly9::zero()), Err(RingError::DivisionByZero));
    }

    #[test]
    fn symmetry_checks() {
        let e1 = &(&x(1) + &x(2)) + &x(3);
        assert!(e1.symmetry_check(Symmetry::Bosonic));
        let d = &(&vandermonde(Axis::X) * &vandermonde(Axis::Y)) * &vandermonde(Axis::Z);
        assert!(d.symmetry_check(Symmetry::Alternating));
        assert!(!(&x(1) * &y(1)).symmetry_check(Symmetry::Bosonic));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let p = (&x(1).scale(&Q::new(-3, 7)) + &(&y(2) * &z(3)).scale(&Q::new(5, 2)))
            + Poly9::constant(Q::int(i64::MAX) * Q::int(1000));
        let s = p.to_json();
        assert!(s.starts_with("{\"terms\":[{\"exp\":["));
        let back = Poly9::from_json(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn display_reads_naturally() {
        let p = &x(1).pow(2) - &y(2).scale(&Q::new(1, 2));
        assert_eq!(p.to_string(), "x1^2 - 1/2*y2");
    }
}
