//! Exponent vectors `a = (a_1, ..., a_s)` standing for `t^a = t_1^a_1 ... t_s^a_s`.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exps = SmallVec<[u32; 8]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Exps);

impl Monomial {
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        Monomial(exponents.into_iter().collect())
    }

    /// The unit monomial `1` in `s` variables.
    pub fn one(s: usize) -> Self {
        Monomial(SmallVec::from_elem(0, s))
    }

    /// The variable `t_{i+1}` (0-based index `i`).
    pub fn var(s: usize, i: usize) -> Self {
        let mut m = Self::one(s);
        m.0[i] = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.nvars(), other.nvars()))
        }
    }

    /// `self | other`, i.e. `self_i <= other_i` for every `i`.
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn try_divides(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides(other))
    }

    /// Product `t^a t^b`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = Exps::with_capacity(self.nvars());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`: the generator of `((self) : other)`.
    pub fn colon(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Embeds into a ring with `extra` new variables placed before the existing ones.
    pub fn prepend_vars(&self, extra: usize) -> Self {
        let mut out = Exps::from_elem(0, extra);
        out.extend_from_slice(&self.0);
        Monomial(out)
    }

    /// Drops the first `count` variables; `None` if any of them occurs.
    pub fn strip_vars(&self, count: usize) -> Option<Self> {
        if self.0[..count].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial(self.0[count..].iter().copied().collect()))
    }

    /// All exponent vectors of total degree `d` in `s` variables, in lex-descending order.
    pub fn all_of_degree(s: usize, d: u32) -> Vec<Monomial> {
        fn rec(s: usize, i: usize, left: u32, cur: &mut Exps, out: &mut Vec<Monomial>) {
            if i + 1 == s {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for e in (0..=left).rev() {
                cur.push(e);
                rec(s, i + 1, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if s == 0 {
            if d == 0 {
                out.push(Monomial(Exps::new()));
            }
            return out;
        }
        rec(s, 0, d, &mut Exps::new(), &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for Monomial {
    /// Prints with default names `t1, t2, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "t{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
