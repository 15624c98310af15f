//! Tables of `H(d)`, `δ(d)`, `fp(d)` and `ϑ(d)` for `d = 1, ..., d_max`.

use num_traits::ToPrimitive;

use super::{delta, fp, vasconcelos, EnumerationBudget, Prepared};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::order::MonomialOrder;

/// Which functions to tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Which {
    pub delta: bool,
    pub fp: bool,
    pub vasconcelos: bool,
}

impl Which {
    pub const ALL: Which = Which {
        delta: true,
        fp: true,
        vasconcelos: true,
    };
}

/// A computed value, or the candidate count that exceeded the budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Value(i64),
    OverBudget { n: usize, candidates: u128 },
}

impl Cell {
    pub fn value(&self) -> Option<i64> {
        match self {
            Cell::Value(v) => Some(*v),
            Cell::OverBudget { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub d: u32,
    pub hilbert: u64,
    pub delta: Option<Cell>,
    pub fp: Option<i64>,
    pub vasconcelos: Option<Cell>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    pub degree: u64,
    pub dimension: usize,
    pub order: MonomialOrder,
    pub p: u32,
    pub rows: Vec<Row>,
}

fn cell(result: Result<i64>) -> Result<Cell> {
    match result {
        Ok(v) => Ok(Cell::Value(v)),
        Err(Error::BudgetExceeded { n, candidates, .. }) => Ok(Cell::OverBudget { n, candidates }),
        Err(e) => Err(e),
    }
}

/// Builds rows `1..=d_max`. Cells whose enumeration exceeds the budget are marked rather
/// than failing the whole table.
pub fn table(
    ideal: &Ideal,
    order: MonomialOrder,
    d_max: u32,
    budget: &EnumerationBudget,
    which: Which,
) -> Result<FunctionTable> {
    let prepared = Prepared::new(ideal, order)?;
    let mut rows = Vec::with_capacity(d_max as usize);
    for d in 1..=d_max {
        let hilbert = prepared
            .hilbert
            .hilbert_function(d as usize)
            .to_u64()
            .ok_or_else(|| Error::Internal("Hilbert function value exceeds 64 bits".into()))?;
        rows.push(Row {
            d,
            hilbert,
            delta: which
                .delta
                .then(|| cell(delta(ideal, order, d, budget)))
                .transpose()?,
            fp: which.fp.then(|| fp(ideal, order, d)).transpose()?,
            vasconcelos: which
                .vasconcelos
                .then(|| cell(vasconcelos(ideal, order, d, budget)))
                .transpose()?,
        });
    }
    Ok(FunctionTable {
        degree: prepared.hilbert.degree,
        dimension: prepared.hilbert.dimension,
        order,
        p: ideal.ring().p(),
        rows,
    })
}
