//! The footprint, minimum distance and Vasconcelos functions of graded ideals, and the
//! closed formulas and auxiliary invariants around them.

mod ci;
mod enumerate;
mod linear;
mod table;

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

pub use ci::{
    ci_decomposition, ci_degree, ci_fp_formula, ci_regularity, product_inequality_holds,
    CIDecomposition,
};
pub use enumerate::candidate_count;
pub use linear::degree_via_linear_primes;
pub use table::{table, Cell, FunctionTable, Row, Which};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::hilbert::{kpoly, one_minus_power, poly_mul, poly_sub_shifted, HilbertData, Poly};
use crate::ideal::Ideal;
use crate::monomial_ideal::MonomialIdeal;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use enumerate::Candidates;

/// Caps the number of polynomials enumerated for `delta` and `vasconcelos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Upper bound on `q^n - 1`.
    pub max_candidates: u64,
    /// Skip `f` whose leading monomial is regular on `S/in(I)`.
    pub prune_regular_leading: bool,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_candidates: 1 << 24,
            prune_regular_leading: true,
        }
    }
}

impl EnumerationBudget {
    pub fn new(max_candidates: u64, prune_regular_leading: bool) -> Result<Self> {
        if max_candidates == 0 {
            return Err(Error::Precondition(
                "enumeration budget must be positive".into(),
            ));
        }
        Ok(EnumerationBudget {
            max_candidates,
            prune_regular_leading,
        })
    }
}

/// How much is known about the unmixedness of an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unmixedness {
    /// Decided from the ideal itself.
    Certified,
    /// Taken on the caller's word.
    Asserted,
    Unknown,
}

impl Unmixedness {
    pub fn holds(self) -> bool {
        !matches!(self, Unmixedness::Unknown)
    }

    pub fn name(self) -> &'static str {
        match self {
            Unmixedness::Certified => "certified",
            Unmixedness::Asserted => "asserted",
            Unmixedness::Unknown => "unknown",
        }
    }
}

/// `in(I)` is known to be unmixed: a complete intersection, square-free with equal-size
/// minimal covers, or of dimension 0 (its only associated prime is the maximal ideal).
fn monomial_unmixed(m: &MonomialIdeal) -> bool {
    m.certified_unmixed() == Some(true) || m.dimension().ok() == Some(0)
}

/// Certifies unmixedness of `I` when `in(I)` is a complete intersection (then so is `I`),
/// when `I` is a monomial ideal certified unmixed, or when `S/I` has dimension 0.
pub fn certify_unmixed(ideal: &Ideal, order: MonomialOrder) -> Result<Unmixedness> {
    let prepared = Prepared::new(ideal, order)?;
    let m = &prepared.initial;
    let ci = m.nvars() <= crate::monomial_ideal::HEIGHT_GUARD && m.ci_profile()?.is_ci;
    let certified =
        ci || prepared.hilbert.dimension == 0 || (ideal.is_monomial() && monomial_unmixed(m));
    Ok(if certified {
        Unmixedness::Certified
    } else {
        Unmixedness::Unknown
    })
}

/// Validated inputs shared by every invariant: a nonzero proper graded ideal, a graded
/// order, its reduced basis and the Hilbert data of the initial ideal.
struct Prepared<'a> {
    ideal: &'a Ideal,
    order: MonomialOrder,
    gb: Arc<GroebnerBasis>,
    initial: MonomialIdeal,
    hilbert: HilbertData,
}

impl<'a> Prepared<'a> {
    fn new(ideal: &'a Ideal, order: MonomialOrder) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if !ideal.is_graded() {
            return Err(Error::NotGraded);
        }
        if !order.is_graded() {
            return Err(Error::Precondition(format!(
                "a graded monomial order is required, got {order}"
            )));
        }
        let gb = ideal.groebner(order)?;
        if gb.is_unit() {
            return Err(Error::ImproperIdeal);
        }
        let initial = MonomialIdeal::from_monomials(ideal.ring().nvars, gb.leading_monomials());
        let hilbert = initial.hilbert_data()?;
        Ok(Prepared {
            ideal,
            order,
            gb,
            initial,
            hilbert,
        })
    }

    fn degree(&self) -> i64 {
        self.hilbert.degree as i64
    }

    fn candidates(&self, d: u32, budget: &EnumerationBudget) -> Result<Candidates> {
        Candidates::new(
            self.initial.standard_monomials(d),
            self.ideal.ring(),
            self.order,
            budget.max_candidates,
        )
    }

    /// `in(f)` is regular on `S/in(I)`.
    fn leading_regular(&self, f: &Polynomial) -> bool {
        let lm = f.leading_monomial().expect("candidates are nonzero");
        !self
            .initial
            .is_zero_divisor(lm)
            .expect("candidate lives in the ideal's ring")
    }

    /// Hilbert numerator over `(1-x)^s` of `S/(I, f)`, from a basis seeded with that of `I`.
    fn sum_numerator(&self, f: &Polynomial) -> Result<Poly> {
        let mut gens = self.gb.elements().to_vec();
        gens.push(f.clone());
        let gb = GroebnerBasis::compute(&gens, self.order)?;
        Ok(kpoly(&MonomialIdeal::minimal_generators(
            gb.leading_monomials(),
        )))
    }

    /// Numerator of `S/(I : f)` for `f` of degree `d`, or `None` when `(I : f) = I`.
    ///
    /// Multiplication by `f` gives `F(S/(I,f)) = (1 - x^d) F(S/I) + x^d F((I:f)/I)`, hence
    /// `N(S/(I:f)) = (N(S/I) - N(S/(I,f))) / x^d`, and `f` is regular exactly when
    /// `N(S/(I,f)) = (1 - x^d) N(S/I)`.
    fn colon_numerator(&self, sum_numerator: &Poly, d: u32) -> Result<Option<Poly>> {
        let base = &self.hilbert.full_numerator;
        if *sum_numerator == poly_mul(base, &one_minus_power(d)) {
            return Ok(None);
        }
        let diff = poly_sub_shifted(base, sum_numerator, 0);
        if diff.iter().take(d as usize).any(|c| !c.is_zero()) {
            return Err(Error::Internal(
                "Hilbert series of (I, f) is inconsistent with that of I".into(),
            ));
        }
        Ok(Some(diff.get(d as usize..).unwrap_or_default().to_vec()))
    }

    fn nvars(&self) -> usize {
        self.ideal.ring().nvars
    }
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 {
        Err(Error::Precondition("d must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Footprint of a monomial ideal `M`:
/// `deg(S/M) - max{deg(S/(M, t^a)) : t^a standard of degree d, (M : t^a) ≠ M}`,
/// or `deg(S/M)` when no such `t^a` exists.
pub fn fp_monomial(m: &MonomialIdeal, d: u32) -> Result<i64> {
    check_d(d)?;
    let degree = m.degree()? as i64;
    let mut best: Option<i64> = None;
    for a in m.zero_divisor_standard_monomials(d) {
        let value = m.add_generator(&a)?.degree()? as i64;
        best = Some(best.map_or(value, |b| b.max(value)));
    }
    Ok(degree - best.unwrap_or(0))
}

/// `min{deg(S/(M : t^a)) : t^a standard of degree d}`, or `deg(S/M)` if there is none.
/// Equals [`fp_monomial`] when `M` is unmixed.
pub fn fp_monomial_via_colon(m: &MonomialIdeal, d: u32) -> Result<i64> {
    check_d(d)?;
    let mut best = m.degree()? as i64;
    for a in m.standard_monomials(d) {
        best = best.min(m.colon_by_monomial(&a)?.degree()? as i64);
    }
    Ok(best)
}

/// The footprint function `fp_I(d)`, computed on `in_≺(I)`.
///
/// When `in_≺(I)` is certified unmixed, the colon-degree expression is evaluated as well
/// and any disagreement is reported as an internal error.
pub fn fp(ideal: &Ideal, order: MonomialOrder, d: u32) -> Result<i64> {
    let prepared = Prepared::new(ideal, order)?;
    let value = fp_monomial(&prepared.initial, d)?;
    if monomial_unmixed(&prepared.initial) {
        let via_colon = fp_monomial_via_colon(&prepared.initial, d)?;
        if via_colon != value {
            return Err(Error::Internal(format!(
                "footprint {value} differs from the colon-degree minimum {via_colon} at d = {d}"
            )));
        }
    }
    Ok(value)
}

/// The minimum distance function `δ_I(d)`.
///
/// Enumerates nonzero standard polynomials `f` of degree `d` up to scalars; those with
/// `(I : f) ≠ I` contribute `deg(S/(I, f))` and the largest contribution is subtracted from
/// `deg(S/I)`.
pub fn delta(
    ideal: &Ideal,
    order: MonomialOrder,
    d: u32,
    budget: &EnumerationBudget,
) -> Result<i64> {
    check_d(d)?;
    let prepared = Prepared::new(ideal, order)?;
    let candidates = prepared.candidates(d, budget)?;
    let best = (0..candidates.len())
        .into_par_iter()
        .map(|idx| -> Result<Option<i64>> {
            let f = candidates.polynomial(idx);
            if budget.prune_regular_leading && prepared.leading_regular(&f) {
                return Ok(None);
            }
            let sum = prepared.sum_numerator(&f)?;
            if prepared.colon_numerator(&sum, d)?.is_none() {
                return Ok(None);
            }
            Ok(Some(
                HilbertData::from_full_numerator(prepared.nvars(), sum)?.degree as i64,
            ))
        })
        .try_reduce(|| None, |a, b| Ok(a.max(b)))?;
    Ok(match best {
        Some(b) => prepared.degree() - b,
        None => prepared.degree(),
    })
}

/// `min{deg(S/(I : f)) : f ∈ S_d \ I}` over nonzero standard polynomials up to scalars.
fn min_colon_degree(
    prepared: &Prepared,
    candidates: &Candidates,
    d: u32,
    budget: &EnumerationBudget,
) -> Result<i64> {
    let degree = prepared.degree();
    (0..candidates.len())
        .into_par_iter()
        .map(|idx| -> Result<i64> {
            let f = candidates.polynomial(idx);
            if budget.prune_regular_leading && prepared.leading_regular(&f) {
                return Ok(degree);
            }
            let sum = prepared.sum_numerator(&f)?;
            Ok(match prepared.colon_numerator(&sum, d)? {
                None => degree,
                Some(colon) => {
                    HilbertData::from_full_numerator(prepared.nvars(), colon)?.degree as i64
                }
            })
        })
        .try_reduce(|| degree, |a, b| Ok(a.min(b)))
}

/// The Vasconcelos function `ϑ_I(d)`.
pub fn vasconcelos(
    ideal: &Ideal,
    order: MonomialOrder,
    d: u32,
    budget: &EnumerationBudget,
) -> Result<i64> {
    check_d(d)?;
    let prepared = Prepared::new(ideal, order)?;
    let candidates = prepared.candidates(d, budget)?;
    if candidates.is_empty() {
        // m^d ⊂ I
        return Ok(prepared.degree());
    }
    min_colon_degree(&prepared, &candidates, d, budget)
}

/// `δ_I(d)` as the least colon degree, valid for unmixed `I` with `m^d ⊄ I`.
pub fn delta_unmixed_via_colon(
    ideal: &Ideal,
    order: MonomialOrder,
    d: u32,
    budget: &EnumerationBudget,
    unmixed: Unmixedness,
) -> Result<i64> {
    check_d(d)?;
    if !unmixed.holds() {
        return Err(Error::UnmixednessUnknown);
    }
    let prepared = Prepared::new(ideal, order)?;
    let candidates = prepared.candidates(d, budget)?;
    if candidates.is_empty() {
        return Err(Error::Precondition(format!(
            "every form of degree {d} lies in the ideal"
        )));
    }
    min_colon_degree(&prepared, &candidates, d, budget)
}

/// Regularity index of the Hilbert function of `S/M`.
pub fn regularity_index_hilbert(m: &MonomialIdeal) -> Result<usize> {
    Ok(m.hilbert_data()?.regularity_index())
}

/// Least `d <= cap` with `δ_I(d) = 1`.
///
/// Requires either `hypotheses_asserted` (unmixed, radical, linear associated primes) or a
/// complete-intersection monomial ideal of positive dimension.
pub fn delta_regularity_index(
    ideal: &Ideal,
    order: MonomialOrder,
    budget: &EnumerationBudget,
    cap: u32,
    hypotheses_asserted: bool,
) -> Result<u32> {
    if !hypotheses_asserted {
        let prepared = Prepared::new(ideal, order)?;
        let ci = ideal.is_monomial()
            && prepared.initial.nvars() <= crate::monomial_ideal::HEIGHT_GUARD
            && prepared.initial.ci_profile()?.is_ci;
        if !ci || prepared.hilbert.dimension == 0 {
            return Err(Error::Precondition(
                "the stabilization degree of delta needs an unmixed radical ideal with linear \
                 associated primes, or a monomial complete intersection of positive dimension"
                    .into(),
            ));
        }
    }
    for d in 1..=cap {
        if delta(ideal, order, d, budget)? == 1 {
            return Ok(d);
        }
    }
    Err(Error::Inconclusive { cap: cap as usize })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, Ring};

    const GREVLEX: MonomialOrder = MonomialOrder::GrevLex;

    fn ideal(p: u64, s: usize, gens: &[&str]) -> Ideal {
        let ring = Ring::new(p, s).unwrap();
        let names = default_names(s);
        Ideal::new(
            ring,
            gens.iter()
                .map(|g| Polynomial::parse(g, ring, GREVLEX, &names).unwrap()),
        )
        .unwrap()
    }

    fn three_binomials() -> Ideal {
        ideal(
            2,
            3,
            &[
                "t1*t2^2 - t1^2*t2",
                "t1*t3^2 - t1^2*t3",
                "t2^2*t3 - t2*t3^2",
            ],
        )
    }

    #[test]
    fn three_binomial_table_values() {
        let i = three_binomials();
        let budget = EnumerationBudget::default();
        let deltas: Vec<i64> = (1..=3)
            .map(|d| delta(&i, GREVLEX, d, &budget).unwrap())
            .collect();
        let fps: Vec<i64> = (1..=3).map(|d| fp(&i, GREVLEX, d).unwrap()).collect();
        assert_eq!(deltas, vec![4, 2, 1]);
        assert_eq!(fps, vec![4, 1, 1]);
        assert_eq!(vasconcelos(&i, GREVLEX, 1, &budget).unwrap(), 4);
        assert_eq!(
            delta_unmixed_via_colon(&i, GREVLEX, 1, &budget, Unmixedness::Asserted).unwrap(),
            4
        );
    }

    #[test]
    fn series_colon_matches_elimination_colon() {
        let order = GREVLEX;
        for i in [three_binomials(), ideal(3, 3, &["t1^2 - t2*t3", "t2^2"])] {
            let prepared = Prepared::new(&i, order).unwrap();
            for d in 1..=2 {
                let candidates = prepared
                    .candidates(d, &EnumerationBudget::default())
                    .unwrap();
                for idx in 0..candidates.len() {
                    let f = candidates.polynomial(idx);
                    let colon = i.colon(&f, order).unwrap();
                    let regular = colon.equals(&i, order).unwrap();
                    let sum = prepared.sum_numerator(&f).unwrap();
                    assert_eq!(
                        sum,
                        i.sum(&f)
                            .unwrap()
                            .hilbert_data(order)
                            .unwrap()
                            .full_numerator
                    );
                    match prepared.colon_numerator(&sum, d).unwrap() {
                        None => assert!(regular, "{f}"),
                        Some(n) => {
                            assert!(!regular, "{f}");
                            assert_eq!(n, colon.hilbert_data(order).unwrap().full_numerator);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pruning_does_not_change_delta() {
        let i = three_binomials();
        let off = EnumerationBudget::new(1 << 20, false).unwrap();
        let on = EnumerationBudget::default();
        for d in 1..=3 {
            assert_eq!(
                delta(&i, GREVLEX, d, &off).unwrap(),
                delta(&i, GREVLEX, d, &on).unwrap()
            );
        }
    }

    #[test]
    fn complete_intersection_two_three() {
        let i = ideal(3, 3, &["t1^2", "t2^3"]);
        let budget = EnumerationBudget::default();
        let fps: Vec<i64> = (1..=4).map(|d| fp(&i, GREVLEX, d).unwrap()).collect();
        assert_eq!(fps, vec![3, 2, 1, 1]);
        for d in 1..=4 {
            assert_eq!(delta(&i, GREVLEX, d, &budget).unwrap(), fps[d as usize - 1]);
            assert_eq!(
                ci_fp_formula(&[2, 3], d as u64).unwrap() as i64,
                fps[d as usize - 1]
            );
        }
        assert_eq!(
            delta_unmixed_via_colon(&i, GREVLEX, 1, &budget, Unmixedness::Certified).unwrap(),
            3
        );
        assert_eq!(
            certify_unmixed(&i, GREVLEX).unwrap(),
            Unmixedness::Certified
        );
        assert_eq!(
            delta_regularity_index(&i, GREVLEX, &budget, 6, false).unwrap(),
            3
        );
    }

    #[test]
    fn zero_dimensional_beyond_socle() {
        // every cubic lies in (t1^2, t2^2)
        let i = ideal(2, 2, &["t1^2", "t2^2"]);
        let budget = EnumerationBudget::default();
        assert_eq!(delta(&i, GREVLEX, 3, &budget).unwrap(), 4);
        assert_eq!(vasconcelos(&i, GREVLEX, 3, &budget).unwrap(), 4);
        assert!(matches!(
            delta_unmixed_via_colon(&i, GREVLEX, 3, &budget, Unmixedness::Certified),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn prime_monomial_ideal_has_trivial_footprint() {
        let i = ideal(2, 3, &["t1", "t2"]);
        for d in 1..=3 {
            assert_eq!(fp(&i, GREVLEX, d).unwrap(), 1);
            assert_eq!(
                vasconcelos(&i, GREVLEX, d, &EnumerationBudget::default()).unwrap(),
                1
            );
        }
        assert_eq!(
            delta_regularity_index(&i, GREVLEX, &EnumerationBudget::default(), 3, false).unwrap(),
            1
        );
    }

    #[test]
    fn budget_is_enforced() {
        let i = three_binomials();
        let tight = EnumerationBudget::new(10, true).unwrap();
        match delta(&i, GREVLEX, 2, &tight) {
            Err(Error::BudgetExceeded {
                n,
                q,
                candidates,
                budget,
            }) => {
                assert_eq!((n, q, candidates, budget), (6, 2, 63, 10));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(EnumerationBudget::new(0, true).is_err());
    }

    #[test]
    fn unknown_unmixedness_is_refused() {
        let i = three_binomials();
        assert_eq!(
            delta_unmixed_via_colon(
                &i,
                GREVLEX,
                1,
                &EnumerationBudget::default(),
                Unmixedness::Unknown
            ),
            Err(Error::UnmixednessUnknown)
        );
    }

    #[test]
    fn inputs_are_validated() {
        let i = ideal(3, 2, &["t1 + 1"]);
        assert_eq!(fp(&i, GREVLEX, 1), Err(Error::NotGraded));
        let i = ideal(3, 2, &["t1^2"]);
        assert!(matches!(
            fp(&i, MonomialOrder::Lex, 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(fp(&i, GREVLEX, 0), Err(Error::Precondition(_))));
        let i = Ideal::new(Ring::new(3, 2).unwrap(), std::iter::empty()).unwrap();
        assert_eq!(fp(&i, GREVLEX, 1), Err(Error::ZeroIdeal));
    }

    #[test]
    fn mixed_ideal_needs_assertion_for_stabilization_degree() {
        let i = ideal(2, 3, &["t1*t2", "t2*t3"]);
        assert!(matches!(
            delta_regularity_index(&i, GREVLEX, &EnumerationBudget::default(), 4, false),
            Err(Error::Precondition(_))
        ));
    }
}
