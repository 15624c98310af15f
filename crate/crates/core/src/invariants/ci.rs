//! Closed formulas for complete intersections with generator degrees `d_1 <= ... <= d_r`.

use crate::error::{Error, Result};

/// `d = Σ_{i<=k} (d_i - 1) + ell` with `0 <= k <= r-1` and `1 <= ell <= d_{k+1} - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CIDecomposition {
    pub k: usize,
    pub ell: u64,
}

fn check_degrees(degrees: &[u64]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::Precondition(
            "at least one generator degree is required".into(),
        ));
    }
    if degrees.contains(&0) {
        return Err(Error::Precondition(
            "generator degrees must be positive".into(),
        ));
    }
    if degrees.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition(
            "generator degrees must be sorted ascending".into(),
        ));
    }
    Ok(())
}

fn overflow() -> Error {
    Error::Precondition("closed-form value exceeds 64 bits".into())
}

/// `∏ d_i`.
pub fn ci_degree(degrees: &[u64]) -> Result<u64> {
    degrees
        .iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x))
        .ok_or_else(overflow)
}

/// `Σ (d_i - 1)`.
pub fn ci_regularity(degrees: &[u64]) -> Result<u64> {
    if degrees.contains(&0) {
        return Err(Error::Precondition(
            "generator degrees must be positive".into(),
        ));
    }
    Ok(degrees.iter().map(|x| x - 1).sum())
}

/// The decomposition of `d`, or `None` when `d >= Σ (d_i - 1)`.
pub fn ci_decomposition(degrees: &[u64], d: u64) -> Result<Option<CIDecomposition>> {
    check_degrees(degrees)?;
    if d < 1 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    if d >= ci_regularity(degrees)? {
        return Ok(None);
    }
    let mut prefix = 0u64;
    for (k, &dk) in degrees.iter().enumerate() {
        // first block whose cumulative sum reaches d; prefix < d so ell >= 1
        if d <= prefix + (dk - 1) {
            return Ok(Some(CIDecomposition { k, ell: d - prefix }));
        }
        prefix += dk - 1;
    }
    unreachable!("d below the total is reached by some block")
}

/// `(d_{k+1} - ell) d_{k+2} ... d_r` for `d < Σ (d_i - 1)`, else 1.
pub fn ci_fp_formula(degrees: &[u64], d: u64) -> Result<u64> {
    match ci_decomposition(degrees, d)? {
        None => Ok(1),
        Some(CIDecomposition { k, ell }) => {
            let tail = ci_degree(&degrees[k + 1..])?;
            (degrees[k] - ell).checked_mul(tail).ok_or_else(overflow)
        }
    }
}

/// Evaluates
/// `∏ (e_i - b_i) >= (Σ_{i<=k+1} (e_i - b_i) - (k - 1) - b_0 - Σ_{i>=k+2} b_i) e_{k+2} ... e_m`.
pub fn product_inequality_holds(e: &[i64], b: &[i64], b0: i64, k: usize) -> Result<bool> {
    let m = e.len();
    if m == 0 || b.len() != m {
        return Err(Error::Precondition(
            "e and b must be nonempty and of equal length".into(),
        ));
    }
    if e[0] < 1 || e.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("need 1 <= e_1 <= ... <= e_m".into()));
    }
    if e.iter().zip(b).any(|(&ei, &bi)| bi < 0 || bi > ei - 1) {
        return Err(Error::Precondition("need 0 <= b_i <= e_i - 1".into()));
    }
    if b0 < 1 {
        return Err(Error::Precondition("need b_0 >= 1".into()));
    }
    if k >= m {
        return Err(Error::Precondition("need 0 <= k <= m - 1".into()));
    }
    let lhs: i128 = e
        .iter()
        .zip(b)
        .map(|(&ei, &bi)| (ei - bi) as i128)
        .product();
    let head: i128 = e[..=k]
        .iter()
        .zip(&b[..=k])
        .map(|(&ei, &bi)| (ei - bi) as i128)
        .sum();
    let tail_b: i128 = b[k + 1..].iter().map(|&x| x as i128).sum();
    let tail_e: i128 = e[k + 1..].iter().map(|&x| x as i128).product();
    let rhs = (head - (k as i128 - 1) - b0 as i128 - tail_b) * tail_e;
    Ok(lhs >= rhs)
}
