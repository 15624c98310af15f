//! Monomial orders with variable priority `t_1 > t_2 > ... > t_s`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GrevLex,
    /// Product order used for elimination: the first `block` variables are
    /// compared first (graded reverse lex among themselves), ties are broken by
    /// graded reverse lex on the remaining variables.
    Elimination {
        block: usize,
    },
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    // the last variable with differing exponent decides; the smaller exponent wins
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Compares two exponent vectors, `Greater` meaning `a ≻ b`.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| lex(a, b))
            }
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination { block } => {
                let k = block.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// Checked comparison for externally supplied vectors.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrLex | MonomialOrder::GrevLex)
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Elimination { .. } => "elimination",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Elimination { block } => write!(f, "elimination({block})"),
            o => f.write_str(o.name()),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(Error::Parse(format!(
                "unknown monomial order {other:?} (expected lex, grlex or grevlex)"
            ))),
        }
    }
}
