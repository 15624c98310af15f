//! Arithmetic in the prime field F_p.

use crate::error::{Error, Result};

/// The prime field F_p. Elements are canonical residues in `[0, p)` stored as `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
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

impl PrimeField {
    /// Largest supported modulus; products of two residues must fit in a `u64`.
    pub const MAX_MODULUS: u64 = (1 << 31) - 1;

    pub fn new(p: u64) -> Result<Self> {
        if p > Self::MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Canonical residue of an arbitrary signed integer.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        self.from_i64(s0)
    }

    /// Signed representative in `(-p/2, p/2]`, used for printing.
    pub fn symmetric(&self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        for n in [0u64, 1, 4, 6, 9, 15, 91] {
            assert_eq!(PrimeField::new(n), Err(Error::NotPrime(n)));
        }
        for p in [2u64, 3, 5, 7, 101, 65521] {
            assert!(PrimeField::new(p).is_ok());
        }
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 13] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p as u32 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn canonical_residues() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.from_i64(-1), 2);
        assert_eq!(f.from_i64(-7), 2);
        assert_eq!(f.sub(0, 1), 2);
        assert_eq!(f.neg(1), 2);
        assert_eq!(f.symmetric(2), -1);
    }
}
