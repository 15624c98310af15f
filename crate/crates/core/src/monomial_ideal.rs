//! Monomial ideals given by minimal generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::hilbert::HilbertData;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;

/// Largest `s` for the exhaustive height computation.
pub const HEIGHT_GUARD: usize = 16;
/// Largest `s` for minimal-cover enumeration.
pub const COVER_GUARD: usize = 20;

/// A monomial ideal in `s` variables, stored by its minimal generators sorted
/// decreasingly in grevlex.
///
/// The zero ideal (no generators) and the unit ideal (`{1}`) are representable so that
/// colon and sum operations stay closed; [`MonomialIdeal::minimalize`] rejects both.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Complete-intersection data of a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIProfile {
    pub is_ci: bool,
    /// Generator degrees, ascending.
    pub degrees: Vec<u32>,
    pub height: usize,
}

fn canonical_sort(gens: &mut [Monomial]) {
    gens.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b, a));
}

fn mask(m: &Monomial) -> u32 {
    m.support().fold(0u32, |acc, i| acc | (1 << i))
}

/// Inclusion-minimal vertex sets meeting every support in `edges` (bitmasks over `s` bits),
/// sorted by their sorted index lists.
pub(crate) fn minimal_transversals(edges: &[u32]) -> Vec<u32> {
    fn rec(edges: &[u32], chosen: u32, out: &mut Vec<u32>) {
        match edges.iter().find(|&&e| e & chosen == 0) {
            None => out.push(chosen),
            Some(&e) => {
                let mut rest = e;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    rec(edges, chosen | bit, out);
                }
            }
        }
    }
    let mut found = Vec::new();
    rec(edges, 0, &mut found);
    found.sort_unstable();
    found.dedup();
    let is_cover = |c: u32| edges.iter().all(|&e| e & c != 0);
    let mut minimal: Vec<u32> = found
        .into_iter()
        .filter(|&c| {
            let mut bits = c;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                bits ^= bit;
                if is_cover(c ^ bit) {
                    return false;
                }
            }
            true
        })
        .collect();
    minimal.sort_by_key(|&c| mask_to_indices(c));
    minimal
}

pub(crate) fn mask_to_indices(c: u32) -> Vec<usize> {
    (0..32).filter(|i| c & (1 << i) != 0).collect()
}

impl MonomialIdeal {
    /// Divisibility-minimal subset of `monomials`.
    pub fn minimal_generators(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
        monomials.sort_by_key(|m| m.degree());
        monomials.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(monomials.len());
        for m in monomials {
            // candidates come in non-decreasing degree, so only earlier ones can divide
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        canonical_sort(&mut kept);
        kept
    }

    /// The proper nonzero ideal generated by `monomials`.
    pub fn minimalize(nvars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let monomials: Vec<Monomial> = monomials.into_iter().collect();
        if monomials.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for m in &monomials {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch(nvars, m.nvars()));
            }
            if m.is_one() {
                return Err(Error::UnitMonomial);
            }
        }
        Ok(Self::from_monomials(nvars, monomials))
    }

    /// No validation; may produce the zero or unit ideal.
    pub(crate) fn from_monomials(nvars: usize, monomials: Vec<Monomial>) -> Self {
        MonomialIdeal {
            nvars,
            gens: Self::minimal_generators(monomials),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// `(t_1, ..., t_s)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::from_monomials(nvars, (0..nvars).map(|i| Monomial::var(nvars, i)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    fn check_dim(&self, a: &Monomial) -> Result<()> {
        if a.nvars() == self.nvars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.nvars, a.nvars()))
        }
    }

    /// `t^a ∈ M`.
    pub fn contains(&self, a: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    /// `(M : t^a)`, generated by `m_i / gcd(m_i, t^a)`.
    pub fn colon_by_monomial(&self, a: &Monomial) -> Result<Self> {
        self.check_dim(a)?;
        Ok(Self::from_monomials(
            self.nvars,
            self.gens.iter().map(|g| g.colon(a)).collect(),
        ))
    }

    /// `(M, t^a)`.
    pub fn add_generator(&self, a: &Monomial) -> Result<Self> {
        self.check_dim(a)?;
        let mut gens = self.gens.clone();
        gens.push(a.clone());
        Ok(Self::from_monomials(self.nvars, gens))
    }

    /// Degree-`d` monomials outside `M`, in lex-descending order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(self.nvars, d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// `t^a` is a zero-divisor on `S/M`, i.e. `(M : t^a) ≠ M`.
    pub fn is_zero_divisor(&self, a: &Monomial) -> Result<bool> {
        Ok(self.colon_by_monomial(a)? != *self)
    }

    /// Standard monomials of degree `d` that are zero-divisors on `S/M`.
    pub fn zero_divisor_standard_monomials(&self, d: u32) -> Vec<Monomial> {
        self.standard_monomials(d)
            .into_iter()
            .filter(|m| {
                self.colon_by_monomial(m)
                    .map(|c| c != *self)
                    .unwrap_or(false)
            })
            .collect()
    }

    pub fn hilbert_data(&self) -> Result<HilbertData> {
        HilbertData::of(self)
    }

    pub fn degree(&self) -> Result<u64> {
        Ok(self.hilbert_data()?.degree)
    }

    pub fn dimension(&self) -> Result<usize> {
        Ok(self.hilbert_data()?.dimension)
    }

    pub fn a_invariant(&self) -> Result<i64> {
        Ok(self.hilbert_data()?.a_invariant)
    }

    fn check_proper(&self) -> Result<()> {
        if self.is_unit() {
            Err(Error::ImproperIdeal)
        } else if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    /// Minimum number of variables meeting every generator's support.
    pub fn height(&self) -> Result<usize> {
        self.check_proper()?;
        if self.nvars > HEIGHT_GUARD {
            return Err(Error::SizeGuard {
                what: "variables for height computation",
                limit: HEIGHT_GUARD,
                got: self.nvars,
            });
        }
        let supports: Vec<u32> = self.gens.iter().map(mask).collect();
        let best = (0u32..(1u32 << self.nvars))
            .filter(|&c| supports.iter().all(|&e| e & c != 0))
            .map(|c| c.count_ones() as usize)
            .min()
            .expect("the full variable set meets every support");
        Ok(best)
    }

    pub fn ci_profile(&self) -> Result<CIProfile> {
        let height = self.height()?;
        let disjoint = self
            .gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.is_coprime(b)));
        let mut degrees: Vec<u32> = self.gens.iter().map(|g| g.degree()).collect();
        degrees.sort_unstable();
        Ok(CIProfile {
            is_ci: disjoint && self.gens.len() == height,
            degrees,
            height,
        })
    }

    /// For a complete intersection `M` and a standard zero-divisor `t^a`, the divisor
    /// `t^β | t^a` with `(M : t^a) = (M : t^β)` obtained by dropping variables that occur in
    /// no generator and capping each remaining exponent at the generator's exponent.
    pub fn reduce_exponents(&self, a: &Monomial) -> Result<Monomial> {
        self.check_dim(a)?;
        if !self.ci_profile()?.is_ci {
            return Err(Error::Precondition(
                "ideal is not a complete intersection".into(),
            ));
        }
        if self.contains(a) {
            return Err(Error::Precondition(format!("{a} lies in the ideal")));
        }
        if !self.is_zero_divisor(a)? {
            return Err(Error::Precondition(format!(
                "{a} is regular on the quotient"
            )));
        }
        let beta = Monomial::new((0..self.nvars).map(|j| {
            // supports are disjoint: at most one generator involves t_j
            let cap = self
                .gens
                .iter()
                .map(|g| g.exponents()[j])
                .find(|&e| e > 0)
                .unwrap_or(0);
            a.exponents()[j].min(cap)
        }));
        if self.colon_by_monomial(&beta)? != self.colon_by_monomial(a)? {
            return Err(Error::Internal(format!(
                "reduced exponent {beta} changes the colon of {a}"
            )));
        }
        Ok(beta)
    }

    /// Minimal vertex covers of the support hypergraph of a square-free ideal, as sorted
    /// 0-based variable index lists. These are the associated primes.
    pub fn squarefree_associated_primes(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        self.check_proper()?;
        if self.nvars > COVER_GUARD {
            return Err(Error::SizeGuard {
                what: "variables for minimal cover enumeration",
                limit: COVER_GUARD,
                got: self.nvars,
            });
        }
        let supports: Vec<u32> = self.gens.iter().map(mask).collect();
        Ok(minimal_transversals(&supports)
            .into_iter()
            .map(mask_to_indices)
            .collect())
    }

    /// All associated primes of a square-free ideal have the same height.
    pub fn is_unmixed_squarefree(&self) -> Result<bool> {
        let primes = self.squarefree_associated_primes()?;
        Ok(primes.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    /// Unmixedness decidable from the generators alone: complete intersections and
    /// square-free ideals. `None` when neither applies.
    pub fn certified_unmixed(&self) -> Option<bool> {
        if self.nvars <= HEIGHT_GUARD {
            if let Ok(p) = self.ci_profile() {
                if p.is_ci {
                    return Some(true);
                }
            }
        }
        if self.is_squarefree() && self.nvars <= COVER_GUARD {
            return self.is_unmixed_squarefree().ok();
        }
        None
    }

    pub fn to_string_with(&self, names: Option<&[String]>) -> String {
        let body: Vec<String> = self
            .gens
            .iter()
            .map(|g| match names {
                None => g.to_string(),
                Some(names) => {
                    if g.is_one() {
                        return "1".into();
                    }
                    g.exponents()
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(i, &e)| {
                            if e == 1 {
                                names[i].clone()
                            } else {
                                format!("{}^{e}", names[i])
                            }
                        })
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        format!("({})", body.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{}", self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(None))
    }
}
