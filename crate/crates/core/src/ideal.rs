//! Polynomial ideals with cached Gröbner bases, colon ideals and intersections.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::hilbert::HilbertData;
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Ring};

/// An ideal of `F_p[t_1, ..., t_s]` given by nonzero generators.
///
/// Reduced Gröbner bases are computed lazily, once per order; concurrent readers
/// share the same basis.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    graded: bool,
    cache: RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring,
            generators: self.generators.clone(),
            graded: self.graded,
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring)
            .field(
                "generators",
                &self
                    .generators
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Generators of `I ∩ J` in the ambient ring, using `u·I + (1-u)·J` with `u` eliminated.
fn intersect_generators(
    ring: Ring,
    a: &[Polynomial],
    b: &[Polynomial],
    order: MonomialOrder,
) -> Result<Vec<Polynomial>> {
    let elim = MonomialOrder::Elimination { block: 1 };
    let big = ring.extend(1);
    let u = Polynomial::var(big, elim, 0);
    let one_minus_u = &Polynomial::constant(big, elim, 1) - &u;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a {
        gens.push(&u * &g.prepend_vars(1, elim));
    }
    for g in b {
        gens.push(&one_minus_u * &g.prepend_vars(1, elim));
    }
    let gb = GroebnerBasis::compute(&gens, elim)?;
    Ok(gb
        .elements()
        .iter()
        .filter_map(|g| g.strip_vars(1, order))
        .collect())
}

impl Ideal {
    /// Ideal generated by `gens`; zero polynomials are dropped.
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut generators = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                generators.push(g);
            }
        }
        let graded = generators.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            ring,
            generators,
            graded,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn from_monomial_ideal(ring: Ring, m: &MonomialIdeal) -> Result<Self> {
        if m.nvars() != ring.nvars {
            return Err(Error::DimensionMismatch(ring.nvars, m.nvars()));
        }
        let order = MonomialOrder::default();
        Ideal::new(
            ring,
            m.generators()
                .iter()
                .map(|g| Polynomial::term(ring, order, g.clone(), 1)),
        )
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// All generators are homogeneous.
    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generators are all monomials.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.len() == 1)
    }

    /// The reduced Gröbner basis for `order`, computed on first use.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.generators, order)?);
        let mut cache = self.cache.write().unwrap();
        Ok(cache.entry(order).or_insert(gb).clone())
    }

    /// `in_≺(I)`, generated by the leading monomials of the reduced basis.
    pub fn initial_ideal(&self, order: MonomialOrder) -> Result<MonomialIdeal> {
        let gb = self.groebner(order)?;
        Ok(MonomialIdeal::from_monomials(
            self.ring.nvars,
            gb.leading_monomials(),
        ))
    }

    /// Hilbert data of `S/I`, read off `S/in_≺(I)`.
    pub fn hilbert_data(&self, order: MonomialOrder) -> Result<HilbertData> {
        self.initial_ideal(order)?.hilbert_data()
    }

    pub fn degree(&self, order: MonomialOrder) -> Result<u64> {
        Ok(self.hilbert_data(order)?.degree)
    }

    pub fn contains(&self, f: &Polynomial, order: MonomialOrder) -> Result<bool> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() {
            return Ok(f.is_zero());
        }
        self.groebner(order)?.contains(f)
    }

    /// Equality of ideals via their reduced bases.
    pub fn equals(&self, other: &Ideal, order: MonomialOrder) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ok(true),
            (false, false) => Ok(*self.groebner(order)? == *other.groebner(order)?),
            _ => Ok(false),
        }
    }

    /// `(I, f)`.
    pub fn sum(&self, f: &Polynomial) -> Result<Ideal> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::Precondition(
                "cannot adjoin the zero polynomial".into(),
            ));
        }
        let mut gens = self.generators.clone();
        gens.push(f.clone());
        Ideal::new(self.ring, gens)
    }

    /// `I ∩ J`.
    pub fn intersection(&self, other: &Ideal, order: MonomialOrder) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ideal::new(self.ring, std::iter::empty());
        }
        let gens = intersect_generators(self.ring, &self.generators, &other.generators, order)?;
        Ideal::new(self.ring, gens)
    }

    /// `(I : f) = {h : hf ∈ I}` for a nonzero homogeneous `f`.
    ///
    /// Each generator of `I ∩ (f)` is divided exactly by `f`.
    pub fn colon(&self, f: &Polynomial, order: MonomialOrder) -> Result<Ideal> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::Precondition("colon by the zero polynomial".into()));
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if self.is_zero() {
            return Ideal::new(self.ring, std::iter::empty());
        }
        let f = f.with_order(order);
        let meet =
            intersect_generators(self.ring, &self.generators, std::slice::from_ref(&f), order)?;
        let mut quotients = Vec::with_capacity(meet.len());
        for g in &meet {
            let (q, r) = g.divide(std::slice::from_ref(&f))?;
            if !r.is_zero() {
                return Err(Error::Internal(format!(
                    "{g} in I ∩ (f) is not divisible by f = {f}"
                )));
            }
            let q = q.into_iter().next().unwrap();
            if !self.contains(&(&q * &f), order)? {
                return Err(Error::Internal(format!("({q})·f is not in I")));
            }
            quotients.push(q);
        }
        Ideal::new(self.ring, quotients)
    }

    /// `(I : t^a)` for a monomial.
    pub fn colon_by_monomial(&self, a: &Monomial, order: MonomialOrder) -> Result<Ideal> {
        if a.nvars() != self.ring.nvars {
            return Err(Error::DimensionMismatch(self.ring.nvars, a.nvars()));
        }
        self.colon(&Polynomial::term(self.ring, order, a.clone(), 1), order)
    }

    pub fn to_string_with(&self, names: Option<&[String]>) -> String {
        let body: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.to_string_with(names))
            .collect();
        format!("({})", body.join(", "))
    }
}
