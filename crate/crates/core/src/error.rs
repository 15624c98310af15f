use thiserror::Error;

/// Errors raised by the algebra, ideal and invariant layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("zero polynomial in divisor list")]
    ZeroDivisorPolynomial,
    #[error("the zero ideal is not supported here")]
    ZeroIdeal,
    #[error("the ideal is not proper")]
    ImproperIdeal,
    #[error("the unit monomial cannot be an ideal generator")]
    UnitMonomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is not graded (some generator is not homogeneous)")]
    NotGraded,
    #[error("{what}: size {got} exceeds the supported limit {limit}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error(
        "enumeration budget exceeded: {n} standard monomials over F_{q} give {candidates} candidates (budget {budget})"
    )]
    BudgetExceeded {
        n: usize,
        q: u32,
        /// q^n - 1, saturating at `u128::MAX`.
        candidates: u128,
        budget: u64,
    },
    #[error("unmixedness is neither certified nor asserted")]
    UnmixednessUnknown,
    #[error("delta did not reach 1 for d <= {cap}")]
    Inconclusive { cap: usize },
    #[error("square-free monomial ideal required")]
    NotSquarefree,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph has no edges")]
    DiscreteGraph,
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
