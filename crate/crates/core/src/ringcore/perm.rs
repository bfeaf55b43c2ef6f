use std::fmt;

/// Permutation of three indices stored as an image array: `i -> p[i]`, 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm3(pub [usize; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([0, 1, 2]);

    /// All six permutations in the order id, (23), (12), (13), (123), (132).
    pub const ALL: [Perm3; 6] = [
        Perm3([0, 1, 2]),
        Perm3([0, 2, 1]),
        Perm3([1, 0, 2]),
        Perm3([2, 1, 0]),
        Perm3([1, 2, 0]),
        Perm3([2, 0, 1]),
    ];

    /// Parses a one-line image such as "231" (1-based).
    pub fn parse(s: &str) -> Option<Perm3> {
        let d: Vec<usize> = s.chars().map(|c| c.to_digit(10).map(|v| v as usize)).collect::<Option<_>>()?;
        if d.len() != 3 {
            return None;
        }
        let p = [d[0].checked_sub(1)?, d[1].checked_sub(1)?, d[2].checked_sub(1)?];
        let mut seen = [false; 3];
        for &v in &p {
            if v > 2 || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm3(p))
    }

    pub fn apply(self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([self.0[other.0[0]], self.0[other.0[1]], self.0[other.0[2]]])
    }

    pub fn inverse(self) -> Perm3 {
        let mut r = [0; 3];
        for i in 0..3 {
            r[self.0[i]] = i;
        }
        Perm3(r)
    }

    pub fn sign(self) -> i32 {
        let p = self.0;
        let mut inv = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position in `Perm3::ALL`.
    pub fn index(self) -> usize {
        Perm3::ALL.iter().position(|&p| p == self).unwrap()
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0] + 1, self.0[1] + 1, self.0[2] + 1)
    }
}

/// An element of S3 × S3 acting on the y and z triplets; x is left alone.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PermPair {
    pub y: Perm3,
    pub z: Perm3,
}

impl PermPair {
    pub const ID: PermPair = PermPair { y: Perm3::ID, z: Perm3::ID };

    pub fn new(y: Perm3, z: Perm3) -> PermPair {
        PermPair { y, z }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: PermPair) -> PermPair {
        PermPair { y: self.y.compose(other.y), z: self.z.compose(other.z) }
    }

    pub fn inverse(self) -> PermPair {
        PermPair { y: self.y.inverse(), z: self.z.inverse() }
    }
}

impl fmt::Display for PermPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm3::parse("231").unwrap();
        assert_eq!(p.0, [1, 2, 0]);
        assert_eq!(p.to_string(), "231");
        assert!(Perm3::parse("112").is_none());
        assert!(Perm3::parse("1234").is_none());
    }

    #[test]
    fn signs_and_inverses() {
        let signs: Vec<i32> = Perm3::ALL.iter().map(|p| p.sign()).collect();
        assert_eq!(signs, vec![1, -1, -1, -1, 1, 1]);
        for p in Perm3::ALL {
            assert_eq!(p.compose(p.inverse()), Perm3::ID);
        }
    }
}
