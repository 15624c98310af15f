//! Colon degrees of radical unmixed ideals whose associated primes are generated by linear
//! forms: each prime not containing `f` contributes 1.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ideal::Ideal;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Coefficient vector of a linear form.
fn linear_coefficients(f: &Polynomial) -> Result<Vec<u32>> {
    let s = f.ring().nvars;
    let mut v = vec![0u32; s];
    for (m, c) in f.terms() {
        if m.degree() != 1 {
            return Err(Error::Precondition(format!("{f} is not a linear form")));
        }
        let i = m.support().next().expect("degree-1 monomial");
        v[i] = *c;
    }
    Ok(v)
}

/// Row-reduces `rows` in place; returns the rank.
fn rank(field: PrimeField, rows: &mut [Vec<u32>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = field.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let factor = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, p));
                }
            }
        }
        r += 1;
    }
    r
}

/// Number of primes `p_i` (each given by independent linear forms) with `f ∉ p_i`.
///
/// Membership is decided by linear algebra for linear `f` and by Gröbner bases otherwise.
pub fn degree_via_linear_primes(
    primes: &[Vec<Polynomial>],
    f: &Polynomial,
    order: MonomialOrder,
) -> Result<u64> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let field = f.ring().field;
    let mut count = 0;
    for (k, prime) in primes.iter().enumerate() {
        if prime.iter().any(|g| g.ring() != f.ring()) {
            return Err(Error::RingMismatch);
        }
        let mut rows = prime
            .iter()
            .map(linear_coefficients)
            .collect::<Result<Vec<_>>>()?;
        let r = rank(field, &mut rows);
        if r != prime.len() {
            return Err(Error::Precondition(format!(
                "the linear forms of prime {} are dependent",
                k + 1
            )));
        }
        let contains = if f.is_zero() {
            true
        } else if f.total_degree() == Some(1) {
            rows.push(linear_coefficients(f)?);
            rank(field, &mut rows) == r
        } else {
            Ideal::new(f.ring(), prime.iter().cloned())?.contains(f, order)?
        };
        if !contains {
            count += 1;
        }
    }
    Ok(count)
}
