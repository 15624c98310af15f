//! Sparse multivariate polynomials over F_p and the multivariate division algorithm.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

/// The polynomial ring `F_p[t_1, ..., t_s]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub field: PrimeField,
    pub nvars: usize,
}

impl Ring {
    pub fn new(p: u64, nvars: usize) -> Result<Self> {
        Ok(Ring {
            field: PrimeField::new(p)?,
            nvars,
        })
    }

    pub fn p(&self) -> u32 {
        self.field.modulus()
    }

    /// Same field, `extra` more variables.
    pub fn extend(&self, extra: usize) -> Ring {
        Ring {
            field: self.field,
            nvars: self.nvars + extra,
        }
    }
}

pub type Term = (Monomial, u32);

/// A polynomial stored as a list of `(monomial, coefficient)` pairs, strictly
/// decreasing under its monomial order, with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: Ring, order: MonomialOrder) -> Self {
        Polynomial {
            ring,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, order: MonomialOrder, c: i64) -> Self {
        Self::term(ring, order, Monomial::one(ring.nvars), c)
    }

    pub fn term(ring: Ring, order: MonomialOrder, m: Monomial, c: i64) -> Self {
        assert_eq!(m.nvars(), ring.nvars, "monomial lives in a different ring");
        let c = ring.field.from_i64(c);
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring, order, terms }
    }

    /// The variable `t_{i+1}`.
    pub fn var(ring: Ring, order: MonomialOrder, i: usize) -> Self {
        Self::term(ring, order, Monomial::var(ring.nvars, i), 1)
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(
        ring: Ring,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, i64)>,
    ) -> Result<Self> {
        let mut raw: Vec<Term> = Vec::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars {
                return Err(Error::DimensionMismatch(m.nvars(), ring.nvars));
            }
            raw.push((m, ring.field.from_i64(c)));
        }
        Ok(Self::normalize(ring, order, raw))
    }

    fn normalize(ring: Ring, order: MonomialOrder, mut raw: Vec<Term>) -> Self {
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.field.add(*lc, c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| *c != 0);
        Polynomial { ring, order, terms }
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u32)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    /// `in_≺(f)`.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| *c)
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// All support monomials share one total degree. The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring,
            order,
            terms,
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `self + c * m * other`, assuming both are sorted under `self.order`.
    pub(crate) fn add_scaled(&self, other: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        debug_assert_eq!(self.order, other.order);
        let field = self.ring.field;
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let mut shifted: Option<Term> = None;
        let next = |j: usize| -> Option<Term> {
            other
                .terms
                .get(j)
                .map(|(om, oc)| (om.mul(m), field.mul(*oc, c)))
        };
        if j < other.terms.len() {
            shifted = next(j);
        }
        while i < self.terms.len() || shifted.is_some() {
            match (&self.terms.get(i), &shifted) {
                (Some((a, ac)), Some((b, bc))) => match self.order.cmp(a, b) {
                    Ordering::Greater => {
                        out.push((a.clone(), *ac));
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((b.clone(), *bc));
                        j += 1;
                        shifted = next(j);
                    }
                    Ordering::Equal => {
                        let s = field.add(*ac, *bc);
                        if s != 0 {
                            out.push((a.clone(), s));
                        }
                        i += 1;
                        j += 1;
                        shifted = next(j);
                    }
                },
                (Some((a, ac)), None) => {
                    out.push((a.clone(), *ac));
                    i += 1;
                }
                (None, Some((b, bc))) => {
                    out.push((b.clone(), *bc));
                    j += 1;
                    shifted = next(j);
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial {
            ring: self.ring,
            order: self.order,
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let o = other.with_order(self.order);
        Ok(self.add_scaled(&o, 1, &Monomial::one(self.ring.nvars)))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let o = other.with_order(self.order);
        let minus_one = self.ring.field.neg(1);
        Ok(self.add_scaled(&o, minus_one, &Monomial::one(self.ring.nvars)))
    }

    /// Exact product over F_p.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let o = other.with_order(self.order);
        let mut acc = Polynomial::zero(self.ring, self.order);
        for (m, c) in &self.terms {
            acc = acc.add_scaled(&o, *c, m);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let field = self.ring.field;
        let c = c % field.modulus();
        if c == 0 {
            return Polynomial::zero(self.ring, self.order);
        }
        Polynomial {
            ring: self.ring,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        Polynomial::zero(self.ring, self.order).add_scaled(self, c, m)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c)),
        }
    }

    /// Multivariate division of `self` by an ordered list of divisors.
    ///
    /// Returns `(quotients, remainder)` with `self = Σ q_i g_i + h` and no term of `h`
    /// divisible by any `in_≺(g_i)`. At each step the first divisor (in list order)
    /// whose leading monomial divides the current leading term is used.
    pub fn divide(&self, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
        let mut divs = Vec::with_capacity(divisors.len());
        for g in divisors {
            self.same_ring(g)?;
            if g.is_zero() {
                return Err(Error::ZeroDivisorPolynomial);
            }
            divs.push(g.with_order(self.order));
        }
        let field = self.ring.field;
        let mut quotients: Vec<Polynomial> = divs
            .iter()
            .map(|_| Polynomial::zero(self.ring, self.order))
            .collect();
        let mut rem_terms: Vec<Term> = Vec::new();
        let mut p = self.clone();
        while let Some((lm, lc)) = p.leading_term() {
            let hit = divs
                .iter()
                .position(|g| g.leading_monomial().unwrap().divides(lm));
            match hit {
                Some(k) => {
                    let g = &divs[k];
                    let (glm, glc) = g.leading_term().unwrap();
                    let m = lm.div(glm).unwrap();
                    let c = field.mul(lc, field.inv(glc));
                    quotients[k] = quotients[k].add_scaled(
                        &Polynomial::constant(self.ring, self.order, 1),
                        c,
                        &m,
                    );
                    p = p.add_scaled(g, field.neg(c), &m);
                }
                None => {
                    rem_terms.push((lm.clone(), lc));
                    p.terms.remove(0);
                }
            }
        }
        let remainder = Polynomial {
            ring: self.ring,
            order: self.order,
            terms: rem_terms,
        };
        Ok((quotients, remainder))
    }

    /// Remainder of division by `divisors`, which must already be sorted under
    /// `self.order`, be nonzero and monic. Skips quotient bookkeeping.
    pub(crate) fn reduce_by_monic(&self, divisors: &[Polynomial]) -> Polynomial {
        let field = self.ring.field;
        let mut rem_terms: Vec<Term> = Vec::new();
        let mut p = self.clone();
        while let Some((lm, lc)) = p.leading_term() {
            let hit = divisors
                .iter()
                .find(|g| g.leading_monomial().unwrap().divides(lm));
            match hit {
                Some(g) => {
                    let m = lm.div(g.leading_monomial().unwrap()).unwrap();
                    p = p.add_scaled(g, field.neg(lc), &m);
                }
                None => {
                    let t = p.terms.remove(0);
                    rem_terms.push(t);
                }
            }
        }
        Polynomial {
            ring: self.ring,
            order: self.order,
            terms: rem_terms,
        }
    }

    /// Embeds into the ring with `extra` new variables placed first.
    pub fn prepend_vars(&self, extra: usize, order: MonomialOrder) -> Polynomial {
        let ring = self.ring.extend(extra);
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| (m.prepend_vars(extra), *c))
            .collect();
        Polynomial::normalize(ring, order, raw)
    }

    /// Drops the first `count` variables; `None` if any of them occurs.
    pub fn strip_vars(&self, count: usize, order: MonomialOrder) -> Option<Polynomial> {
        let ring = Ring {
            field: self.ring.field,
            nvars: self.ring.nvars - count,
        };
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            raw.push((m.strip_vars(count)?, *c));
        }
        Some(Polynomial::normalize(ring, order, raw))
    }

    /// Formats with the given variable names (defaults to `t1, t2, ...` when `None`).
    pub fn to_string_with(&self, names: Option<&[String]>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let field = self.ring.field;
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let v = field.symmetric(*c);
            let (neg, abs) = (v < 0, v.unsigned_abs());
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != 1 || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = match names {
                    Some(n) => n[i].clone(),
                    None => format!("t{}", i + 1),
                };
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the text grammar: terms joined by `+`/`-`, each term a `*`-product of an
    /// optional integer coefficient and variables with optional `^exponent`.
    /// Variables are looked up in `names`; whitespace is ignored.
    pub fn parse(text: &str, ring: Ring, order: MonomialOrder, names: &[String]) -> Result<Self> {
        if names.len() != ring.nvars {
            return Err(Error::Parse(format!(
                "{} variable names for a ring with {} variables",
                names.len(),
                ring.nvars
            )));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut raw: Vec<(Monomial, i64)> = Vec::new();
        let bytes: Vec<char> = compact.chars().collect();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == '+' || bytes[pos] == '-' {
                if bytes[pos] == '-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(Error::Parse(format!(
                    "expected + or - at offset {pos} in {text:?}"
                )));
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != '+' && bytes[pos] != '-' {
                pos += 1;
            }
            let term: String = bytes[start..pos].iter().collect();
            let (m, c) = parse_term(&term, ring, names)?;
            raw.push((m, sign * c));
        }
        Polynomial::from_terms(ring, order, raw)
    }
}

fn parse_term(term: &str, ring: Ring, names: &[String]) -> Result<(Monomial, i64)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut exps = vec![0u32; ring.nvars];
    let mut coeff: i64 = 1;
    let p = ring.p() as i64;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term {term:?}")));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            let v: i64 = factor
                .parse::<u128>()
                .map(|v| (v % p as u128) as i64)
                .map_err(|e| Error::Parse(format!("bad coefficient {factor:?}: {e}")))?;
            coeff = (coeff * v) % p;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                (n, e)
            }
            None => (factor, 1),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
        exps[idx] += exp;
    }
    Ok((Monomial::new(exps), coeff))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(None))
    }
}

// Operator sugar; panics on ring mismatch. Use the `try_*` methods for checked arithmetic.
impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }
}

/// Default variable names `t1, ..., ts`.
pub fn default_names(s: usize) -> Vec<String> {
    (1..=s).map(|i| format!("t{i}")).collect()
}
