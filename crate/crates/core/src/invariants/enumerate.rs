//! Enumeration of nonzero standard polynomials of a fixed degree, up to scalar multiples.
//!
//! Coefficient vectors `c ∈ F_q^n \ {0}` are listed by the position of their first nonzero
//! entry, normalized to 1, followed by the remaining entries as a base-`q` odometer. Index
//! `idx` maps to a unique vector, so the work splits across threads by index range.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Ring};

/// `q^n - 1`, saturating.
pub fn candidate_count(q: u32, n: usize) -> u128 {
    u32::try_from(n)
        .ok()
        .and_then(|n| (q as u128).checked_pow(n))
        .map_or(u128::MAX, |v| v - 1)
}

pub(crate) struct Candidates {
    monomials: Vec<Monomial>,
    ring: Ring,
    order: MonomialOrder,
    /// `blocks[k] = q^(n-k-1)`: vectors whose first nonzero entry is at `k`.
    blocks: Vec<u64>,
    total: u64,
}

impl Candidates {
    pub(crate) fn new(
        monomials: Vec<Monomial>,
        ring: Ring,
        order: MonomialOrder,
        max_candidates: u64,
    ) -> Result<Self> {
        let q = ring.p();
        let n = monomials.len();
        let candidates = candidate_count(q, n);
        if candidates > max_candidates as u128 {
            return Err(Error::BudgetExceeded {
                n,
                q,
                candidates,
                budget: max_candidates,
            });
        }
        // q^n - 1 fits in u64 here, so every block does too
        let blocks: Vec<u64> = (0..n).map(|k| (q as u64).pow((n - k - 1) as u32)).collect();
        let total = blocks.iter().sum();
        Ok(Candidates {
            monomials,
            ring,
            order,
            blocks,
            total,
        })
    }

    /// Number of projective representatives, `(q^n - 1) / (q - 1)`.
    pub(crate) fn len(&self) -> u64 {
        self.total
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub(crate) fn coefficients(&self, mut idx: u64) -> Vec<u32> {
        debug_assert!(idx < self.total);
        let q = self.ring.p() as u64;
        let n = self.monomials.len();
        let mut c = vec![0u32; n];
        for (k, &block) in self.blocks.iter().enumerate() {
            if idx < block {
                c[k] = 1;
                for slot in c[k + 1..].iter_mut().rev() {
                    *slot = (idx % q) as u32;
                    idx /= q;
                }
                return c;
            }
            idx -= block;
        }
        unreachable!("index beyond the candidate range")
    }

    pub(crate) fn polynomial(&self, idx: u64) -> Polynomial {
        let c = self.coefficients(idx);
        Polynomial::from_terms(
            self.ring,
            self.order,
            self.monomials
                .iter()
                .zip(c)
                .filter(|(_, c)| *c != 0)
                .map(|(m, c)| (m.clone(), c as i64)),
        )
        .expect("standard monomials live in the ring")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn candidates(q: u64, n: usize) -> Candidates {
        let ring = Ring::new(q, n).unwrap();
        let monomials = (0..n).map(|i| Monomial::var(n, i)).collect();
        Candidates::new(monomials, ring, MonomialOrder::GrevLex, u64::MAX).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(candidate_count(2, 7), 127);
        assert_eq!(candidate_count(3, 4), 80);
        assert_eq!(candidate_count(2, 0), 0);
        assert_eq!(candidate_count(3, 200), u128::MAX);
    }

    #[test]
    fn representatives_are_distinct_and_normalized() {
        for (q, n) in [(2, 4), (3, 3), (5, 2)] {
            let c = candidates(q, n);
            assert_eq!(
                c.len() as u128,
                candidate_count(q as u32, n) / (q as u128 - 1)
            );
            let all: HashSet<Vec<u32>> = (0..c.len()).map(|i| c.coefficients(i)).collect();
            assert_eq!(all.len() as u64, c.len());
            for v in &all {
                assert_eq!(v.iter().find(|&&x| x != 0), Some(&1));
            }
        }
    }

    #[test]
    fn over_budget() {
        let ring = Ring::new(2, 3).unwrap();
        let monomials = Monomial::all_of_degree(3, 1);
        assert_eq!(
            Candidates::new(monomials, ring, MonomialOrder::GrevLex, 6).err(),
            Some(Error::BudgetExceeded {
                n: 3,
                q: 2,
                candidates: 7,
                budget: 6
            })
        );
    }
}
