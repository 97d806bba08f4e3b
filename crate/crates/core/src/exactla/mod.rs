//! Dense exact linear algebra over a prime field GF(p).
//!
//! Field elements are plain `u32` values in `[0, p)`; the [`Fp`] handle
//! carries the modulus and does the arithmetic.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::{Quotient, Subspace};

use crate::error::{Error, Result};

/// The prime field GF(p). The modulus is checked for primality on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p: p as u32 })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    /// Reduce an arbitrary integer into `[0, p)`.
    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// `(-1)^e` as a field element.
    pub fn sign(self, e: i64) -> u32 {
        if e.rem_euclid(2) == 0 {
            1
        } else {
            self.neg(1)
        }
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b*c`
    #[inline]
    pub fn fma(self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    /// Render as a signed representative in `(-p/2, p/2]`, handy for printing signs.
    pub fn signed(self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    pub fn add_vec(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }

    pub fn scale_vec(self, c: u32, a: &[u32]) -> Vec<u32> {
        a.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// `acc += c * v`
    pub fn axpy(self, acc: &mut [u32], c: u32, v: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = self.fma(*a, c, x);
        }
    }

    pub fn dot(self, a: &[u32], b: &[u32]) -> u32 {
        let p = self.p as u64;
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + x as u64 * y as u64) % p;
        }
        acc as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_enforced() {
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(3).is_ok());
        assert_eq!(Fp::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Fp::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Fp::new(0), Err(Error::NotPrime(0)));
    }

    #[test]
    fn inverses_by_enumeration() {
        for p in [2u64, 3, 5, 7, 13] {
            let f = Fp::new(p).unwrap();
            for a in 1..p as u32 {
                let b = f.inv(a).unwrap();
                assert_eq!(f.mul(a, b), 1);
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn signs() {
        let f = Fp::new(3).unwrap();
        assert_eq!(f.sign(0), 1);
        assert_eq!(f.sign(-1), 2);
        assert_eq!(f.signed(2), -1);
        let two = Fp::new(2).unwrap();
        assert_eq!(two.sign(1), 1);
    }
}
