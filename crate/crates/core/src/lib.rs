//! Exact computation of the minimum distance function `δ_I`, the footprint function
//! `fp_I` and the Vasconcelos function `ϑ_I` of graded ideals `I ⊂ F_p[t_1, ..., t_s]`,
//! with the Gröbner basis, Hilbert series and edge-ideal machinery they rest on.
//!
//! ```
//! use mindist_core::{delta, fp, EnumerationBudget, Ideal, MonomialOrder, Polynomial, Ring};
//!
//! let ring = Ring::new(2, 3).unwrap();
//! let names = mindist_core::default_names(3);
//! let order = MonomialOrder::GrevLex;
//! let gens = ["t1*t2^2 - t1^2*t2", "t1*t3^2 - t1^2*t3", "t2^2*t3 - t2*t3^2"]
//!     .iter()
//!     .map(|g| Polynomial::parse(g, ring, order, &names).unwrap());
//! let ideal = Ideal::new(ring, gens).unwrap();
//! assert_eq!(ideal.degree(order).unwrap(), 7);
//! assert_eq!(delta(&ideal, order, 1, &EnumerationBudget::default()).unwrap(), 4);
//! assert_eq!(fp(&ideal, order, 2).unwrap(), 1);
//! ```

pub mod error;
pub mod field;
pub mod graph;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod poly;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use graph::{Graph, HHLabeling, Witness};
pub use groebner::GroebnerBasis;
pub use hilbert::HilbertData;
pub use ideal::Ideal;
pub use invariants::{
    candidate_count, certify_unmixed, ci_decomposition, ci_degree, ci_fp_formula, ci_regularity,
    degree_via_linear_primes, delta, delta_regularity_index, delta_unmixed_via_colon, fp,
    fp_monomial, fp_monomial_via_colon, product_inequality_holds, regularity_index_hilbert, table,
    vasconcelos, CIDecomposition, Cell, EnumerationBudget, FunctionTable, Row, Unmixedness, Which,
};
pub use monomial::Monomial;
pub use monomial_ideal::{CIProfile, MonomialIdeal};
pub use order::MonomialOrder;
pub use poly::{default_names, Polynomial, Ring};
