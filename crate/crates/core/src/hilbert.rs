//! Hilbert series of `S/M` for monomial ideals `M`.
//!
//! The numerator `N(x)` of `F(x) = N(x) / (1-x)^s` is computed by removing one generator
//! at a time:
//!
//! ```text
//! N(M) = N(M') - x^deg(g) * N(M' : g),     M = M' + (g)
//! ```
//!
//! with the base case of pairwise variable-disjoint generators, where
//! `N = ∏ (1 - x^deg(g_i))`. Variable-disjoint blocks of generators are split off and their
//! numerators multiplied. `N` is then divided by `(1-x)` while it vanishes at `x = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;

/// Hilbert series data of `S/M`: `F(x) = h(x) / (1-x)^k` with `h(1) > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Number of variables `s` of the ambient ring.
    pub nvars: usize,
    /// Numerator over `(1-x)^s`, lowest degree first.
    pub full_numerator: Vec<BigInt>,
    /// `h(x)`, lowest degree first.
    pub numerator: Vec<BigInt>,
    /// Krull dimension `k`.
    pub dimension: usize,
    /// `h(1) = deg(S/M)`.
    pub degree: u64,
    /// `deg h - k`.
    pub a_invariant: i64,
}

pub(crate) type Poly = Vec<BigInt>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// `a - x^shift * b`
pub(crate) fn poly_sub_shifted(a: &Poly, b: &Poly, shift: usize) -> Poly {
    let len = a.len().max(b.len() + shift);
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i + shift] -= y;
    }
    trim(&mut out);
    out
}

/// `1 - x^d`
pub(crate) fn one_minus_power(d: u32) -> Poly {
    if d == 0 {
        return Vec::new();
    }
    let mut p = vec![BigInt::zero(); d as usize + 1];
    p[0] = BigInt::one();
    p[d as usize] = -BigInt::one();
    p
}

/// Splits generators into classes connected by shared variables.
fn variable_components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let n = gens.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !gens[i].is_coprime(&gens[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Monomial>)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, v)) => v.push(g.clone()),
            None => groups.push((r, vec![g.clone()])),
        }
    }
    groups.into_iter().map(|(_, v)| v).collect()
}

/// Generator removed at each recursion step: among generators containing the variable
/// that occurs in the most generators, the one with the highest power of it.
fn pivot_index(gens: &[Monomial]) -> usize {
    let s = gens[0].nvars();
    let mut best_var = 0;
    let mut best_count = 0;
    for v in 0..s {
        let c = gens.iter().filter(|g| g.exponents()[v] > 0).count();
        if c > best_count {
            best_count = c;
            best_var = v;
        }
    }
    let mut best = 0;
    for (i, g) in gens.iter().enumerate() {
        if g.exponents()[best_var] > gens[best].exponents()[best_var] {
            best = i;
        }
    }
    best
}

/// Numerator of the Hilbert series over `(1-x)^s` for the ideal minimally generated by `gens`.
pub(crate) fn kpoly(gens: &[Monomial]) -> Poly {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(vec![BigInt::one()], |acc, g| {
            poly_mul(&acc, &one_minus_power(g.degree()))
        });
    }
    let components = variable_components(gens);
    if components.len() > 1 {
        return components
            .iter()
            .fold(vec![BigInt::one()], |acc, c| poly_mul(&acc, &kpoly(c)));
    }
    let k = pivot_index(gens);
    let pivot = &gens[k];
    let rest: Vec<Monomial> = gens
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, g)| g.clone())
        .collect();
    let colon = MonomialIdeal::minimal_generators(rest.iter().map(|g| g.colon(pivot)).collect());
    poly_sub_shifted(&kpoly(&rest), &kpoly(&colon), pivot.degree() as usize)
}

/// Generalized binomial coefficient `C(m, r)` for any integer `m` and `r >= 0`.
fn binomial(m: i64, r: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..r {
        num *= BigInt::from(m - j as i64);
        den *= BigInt::from(j as i64 + 1);
    }
    num / den
}

impl HilbertData {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::ImproperIdeal);
        }
        Self::from_full_numerator(ideal.nvars(), kpoly(ideal.generators()))
    }

    pub(crate) fn from_full_numerator(nvars: usize, full: Poly) -> Result<Self> {
        if full.is_empty() {
            return Err(Error::ImproperIdeal);
        }
        let mut h = full.clone();
        let mut divisions = 0;
        loop {
            let at_one: BigInt = h.iter().sum();
            if !at_one.is_zero() {
                break;
            }
            // synthetic division by (1 - x): quotient coefficients are prefix sums
            let mut q = Vec::with_capacity(h.len() - 1);
            let mut acc = BigInt::zero();
            for c in &h[..h.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            trim(&mut q);
            h = q;
            divisions += 1;
        }
        if divisions > nvars {
            return Err(Error::Internal(
                "Hilbert numerator divisible by (1-x)^(s+1)".into(),
            ));
        }
        let degree: BigInt = h.iter().sum();
        if !degree.is_positive() {
            return Err(Error::Internal(format!("h(1) = {degree} is not positive")));
        }
        let dimension = nvars - divisions;
        Ok(HilbertData {
            nvars,
            a_invariant: (h.len() as i64 - 1) - dimension as i64,
            degree: degree
                .to_u64()
                .ok_or_else(|| Error::Internal("degree exceeds u64".into()))?,
            full_numerator: full,
            numerator: h,
            dimension,
        })
    }

    /// `deg h(x)`.
    pub fn numerator_degree(&self) -> usize {
        self.numerator.len() - 1
    }

    /// Coefficient of `x^d` in `h(x) / (1-x)^k`, i.e. the Hilbert function `H(d)`.
    pub fn hilbert_function(&self, d: usize) -> BigInt {
        let k = self.dimension;
        if k == 0 {
            return self.numerator.get(d).cloned().unwrap_or_default();
        }
        self.numerator
            .iter()
            .enumerate()
            .take_while(|(i, _)| *i <= d)
            .map(|(i, c)| c * binomial((d - i + k - 1) as i64, k - 1))
            .sum()
    }

    /// The Hilbert polynomial `Σ_i h_i C(d - i + k - 1, k - 1)` evaluated at any integer `d`.
    pub fn hilbert_polynomial(&self, d: i64) -> BigInt {
        let k = self.dimension;
        if k == 0 {
            return BigInt::zero();
        }
        self.numerator
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial(d - i as i64 + k as i64 - 1, k - 1))
            .sum()
    }

    /// Least `n >= 0` with `H(d) = h_I(d)` for every `d >= n`.
    ///
    /// For `d >= deg h` every binomial has a non-negative top argument, so the two agree;
    /// scanning downward from `deg h + 1` finds the first disagreement.
    pub fn regularity_index(&self) -> usize {
        let top = self.numerator_degree() + 1;
        let mut n = top;
        while n > 0 {
            let d = n - 1;
            if self.hilbert_function(d) != self.hilbert_polynomial(d as i64) {
                break;
            }
            n -= 1;
        }
        n
    }
}
