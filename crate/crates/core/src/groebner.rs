//! Buchberger's algorithm producing reduced Gröbner bases.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Ring};

/// A reduced Gröbner basis: monic, interreduced, sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    // both monic
    let mf = lcm.div(f.leading_monomial().unwrap()).unwrap();
    let mg = lcm.div(g.leading_monomial().unwrap()).unwrap();
    let minus_one = f.ring().field.neg(1);
    f.mul_term(&mf, 1).add_scaled(g, minus_one, &mg)
}

impl GroebnerBasis {
    /// Computes the reduced Gröbner basis of the ideal generated by `gens`.
    ///
    /// Pairs are processed with the normal strategy (smallest lcm first, degree then
    /// order), skipping those removed by the coprime and chain criteria.
    pub fn compute(gens: &[Polynomial], order: MonomialOrder) -> Result<Self> {
        let ring = match gens.first() {
            Some(g) => g.ring(),
            None => return Err(Error::ZeroIdeal),
        };
        let mut basis: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                basis.push(g.with_order(order).monic());
            }
        }
        if basis.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if let Some(unit) = basis.iter().find(|g| g.is_constant()) {
            return Ok(Self::unit_basis(unit));
        }

        let mut pairs: Vec<Pair> = Vec::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                let lcm = basis[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(basis[j].leading_monomial().unwrap());
                pairs.push(Pair { i, j, lcm });
                pending.insert((i, j));
            }
        }

        while !pairs.is_empty() {
            let pick = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    a.lcm
                        .degree()
                        .cmp(&b.lcm.degree())
                        .then_with(|| order.cmp(&a.lcm, &b.lcm))
                })
                .map(|(k, _)| k)
                .unwrap();
            let Pair { i, j, lcm } = pairs.swap_remove(pick);
            pending.remove(&(i, j));

            let (fi, fj) = (&basis[i], &basis[j]);
            if fi
                .leading_monomial()
                .unwrap()
                .is_coprime(fj.leading_monomial().unwrap())
            {
                continue;
            }
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
                    && basis[k].leading_monomial().unwrap().divides(&lcm)
            });
            if chain {
                continue;
            }

            let h = s_polynomial(fi, fj, &lcm).reduce_by_monic(&basis);
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            if h.is_constant() {
                return Ok(Self::unit_basis(&h));
            }
            let new = basis.len();
            for (k, g) in basis.iter().enumerate() {
                let lcm = g
                    .leading_monomial()
                    .unwrap()
                    .lcm(h.leading_monomial().unwrap());
                pairs.push(Pair { i: k, j: new, lcm });
                pending.insert((k, new));
            }
            basis.push(h);
        }

        Ok(Self::interreduce(ring, order, basis))
    }

    fn unit_basis(any: &Polynomial) -> Self {
        GroebnerBasis {
            ring: any.ring(),
            order: any.order(),
            elements: vec![Polynomial::constant(any.ring(), any.order(), 1)],
        }
    }

    fn interreduce(ring: Ring, order: MonomialOrder, basis: Vec<Polynomial>) -> Self {
        // minimal basis: drop elements whose leading monomial is a multiple of another's
        let mut minimal: Vec<Polynomial> = Vec::new();
        for (k, g) in basis.iter().enumerate() {
            let lm = g.leading_monomial().unwrap();
            let redundant = basis.iter().enumerate().any(|(l, h)| {
                let hl = h.leading_monomial().unwrap();
                l != k && hl.divides(lm) && (hl != lm || l < k)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, g)| g.clone())
                .collect();
            reduced.push(minimal[k].reduce_by_monic(&others).monic());
        }
        reduced.sort_by(|a, b| {
            order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
        });
        GroebnerBasis {
            ring,
            order,
            elements: reduced,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// Unique normal form of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(f.with_order(self.order).reduce_by_monic(&self.elements))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks Buchberger's criterion directly: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.elements;
        for j in 0..g.len() {
            for i in 0..j {
                let lcm = g[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(g[j].leading_monomial().unwrap());
                if !s_polynomial(&g[i], &g[j], &lcm)
                    .reduce_by_monic(g)
                    .is_zero()
                {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced-ness: every element monic and no term divisible by another element's
    /// leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.elements.iter().enumerate().all(|(k, g)| {
            g.leading_coeff() == Some(1)
                && g.terms().iter().all(|(m, _)| {
                    lms.iter()
                        .enumerate()
                        .all(|(l, lm)| l == k || !lm.divides(m))
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::default_names;

    fn polys(texts: &[&str], p: u64, s: usize, order: MonomialOrder) -> Vec<Polynomial> {
        let ring = Ring::new(p, s).unwrap();
        texts
            .iter()
            .map(|t| Polynomial::parse(t, ring, order, &default_names(s)).unwrap())
            .collect()
    }

    #[test]
    fn monomial_generators_are_already_reduced() {
        for order in [
            MonomialOrder::Lex,
            MonomialOrder::GrLex,
            MonomialOrder::GrevLex,
        ] {
            let gens = polys(&["t1", "t2"], 3, 3, order);
            let gb = GroebnerBasis::compute(&gens, order).unwrap();
            assert_eq!(gb.elements(), &gens[..]);
        }
    }

    #[test]
    fn lex_example() {
        let order = MonomialOrder::Lex;
        let gens = polys(&["t1*t2 - t3^2", "t2 - t3"], 5, 3, order);
        let gb = GroebnerBasis::compute(&gens, order).unwrap();
        let expected = polys(&["t1*t3 - t3^2", "t2 - t3"], 5, 3, order);
        assert_eq!(gb.elements(), &expected[..]);
        assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn empty_input_is_zero_ideal() {
        assert_eq!(
            GroebnerBasis::compute(&[], MonomialOrder::GrevLex),
            Err(Error::ZeroIdeal)
        );
        let ring = Ring::new(2, 2).unwrap();
        let z = Polynomial::zero(ring, MonomialOrder::GrevLex);
        assert_eq!(
            GroebnerBasis::compute(&[z], MonomialOrder::GrevLex),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn unit_ideal_detected() {
        let order = MonomialOrder::GrevLex;
        let gens = polys(&["t1 + 1", "t1"], 3, 2, order);
        let gb = GroebnerBasis::compute(&gens, order).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn generator_order_does_not_matter() {
        let order = MonomialOrder::GrevLex;
        let gens = polys(
            &[
                "t1*t2^2 - t1^2*t2",
                "t1*t3^2 - t1^2*t3",
                "t2^2*t3 - t2*t3^2",
            ],
            2,
            3,
            order,
        );
        let a = GroebnerBasis::compute(&gens, order).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let b = GroebnerBasis::compute(&rev, order).unwrap();
        assert_eq!(a, b);
        assert!(a.is_reduced());
        assert!(a.satisfies_buchberger_criterion());
    }
}
