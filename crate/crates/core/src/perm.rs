use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..=n}`, written in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[j - 1] = π(j), stored 0-based
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-line notation `[π(1), π(2), ..., π(n)]` with 1-based values.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    /// `j ↦ j + shift` on `{1..=n}`, wrapping around.
    pub fn rotation(n: usize, shift: usize) -> Self {
        Permutation {
            images: (0..n).map(|j| (j + shift) % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `π(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x] = j;
        }
        Permutation { images: inv }
    }

    /// `self^e` for any integer exponent, by repeated squaring.
    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.len());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Smallest positive `e` with `self^e = id`.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut lcm = 1usize;
        for start in 0..self.len() {
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            if len > 0 {
                lcm = lcm / gcd(lcm, len) * len;
            }
        }
        lcm
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_line())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> Permutation {
        Permutation::from_one_line(&[2, 9, 1, 8, 3, 7, 6, 5, 4, 10]).unwrap()
    }

    #[test]
    fn power_laws_exhaustive() {
        let s = sigma();
        for a in 0..=12 {
            for b in 0..=12 {
                let lhs = s.pow(a + b);
                let rhs = s.pow(a).compose(&s.pow(b));
                for j in 1..=10 {
                    assert_eq!(lhs.apply(j), rhs.apply(j), "a={a} b={b} j={j}");
                    assert_eq!(lhs.apply(j), s.pow(a).apply(s.pow(b).apply(j)));
                }
            }
        }
    }

    #[test]
    fn inverse_and_negative_powers() {
        let s = sigma();
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(10));
        assert_eq!(s.pow(-3).compose(&s.pow(3)), Permutation::identity(10));
        assert_eq!(s.pow(s.order() as i64), Permutation::identity(10));
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // σ²β(2) with β(2) = 7 and σ(7) = 6, σ(6) = 5
        let beta = Permutation::from_one_line(&[2, 7, 1, 5, 3, 6, 8, 10, 9, 4]).unwrap();
        let s = Permutation::from_one_line(&[2, 3, 1, 7, 4, 5, 6, 9, 10, 8]).unwrap();
        assert_eq!(s.pow(2).compose(&beta).apply(2), 5);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 4, 2]).is_err());
    }

    #[test]
    fn rotation_wraps() {
        let r = Permutation::rotation(4, 2);
        assert_eq!(r.one_line(), vec![3, 4, 1, 2]);
        assert_eq!(r.order(), 2);
    }
}
