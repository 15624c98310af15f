//! Command layer of the `mindist` tool: runs one command on a [`ProblemFile`] and produces
//! a [`Report`] that renders either as text or as JSON.

pub mod error;
pub mod problem;

use std::fmt::Write as _;

use mindist_core::{
    certify_unmixed, ci_decomposition, ci_degree, ci_fp_formula, ci_regularity, delta, fp, table,
    vasconcelos, Cell, EnumerationBudget, Error, FunctionTable, Graph, Ideal, MonomialOrder,
    Unmixedness, Which,
};
use serde::Serialize;

pub use error::CliError;
pub use problem::{Assertions, GraphInput, Problem, ProblemFile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Gb,
    Initial,
    Hilbert {
        max_d: u32,
    },
    Fp {
        d: u32,
    },
    Delta {
        d: u32,
    },
    Vasconcelos {
        d: u32,
    },
    Table {
        max_d: u32,
    },
    Ci {
        degrees: Vec<u64>,
        d: Option<u32>,
        max_d: Option<u32>,
    },
    EdgeIdeal,
    Witness,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Initial => "initial",
            Command::Hilbert { .. } => "hilbert",
            Command::Fp { .. } => "fp",
            Command::Delta { .. } => "delta",
            Command::Vasconcelos { .. } => "vasconcelos",
            Command::Table { .. } => "table",
            Command::Ci { .. } => "ci",
            Command::EdgeIdeal => "edge-ideal",
            Command::Witness => "witness",
        }
    }

    pub fn needs_input(&self) -> bool {
        !matches!(self, Command::Ci { .. })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Overrides the order named in the problem.
    pub order: Option<MonomialOrder>,
    pub budget: EnumerationBudget,
    pub assert_unmixed: bool,
}

/// Everything needed to rerun a computation.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub version: &'static str,
    pub field: Option<u32>,
    pub variables: Vec<String>,
    pub order: Option<String>,
    pub budget: u64,
    pub prune_regular_leading: bool,
    pub unmixedness: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub provenance: Provenance,
    pub result: Output,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Output {
    Polynomials { generators: Vec<String> },
    Hilbert(HilbertReport),
    Value { d: u32, value: i64 },
    Table(TableReport),
    Ci(CiReport),
    EdgeIdeal(EdgeIdealReport),
    Witness(WitnessReport),
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub numerator: Vec<i64>,
    pub dimension: usize,
    pub degree: u64,
    pub a_invariant: i64,
    pub regularity_index: usize,
    /// `H(0), ..., H(max_d)`.
    pub values: Vec<i64>,
}

/// A table cell: a value, or the candidate count that exceeded the budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CellReport {
    Value(i64),
    OverBudget { over_budget: OverBudget },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverBudget {
    pub standard_monomials: usize,
    pub candidates: u128,
}

impl From<Cell> for CellReport {
    fn from(c: Cell) -> Self {
        match c {
            Cell::Value(v) => CellReport::Value(v),
            Cell::OverBudget { n, candidates } => CellReport::OverBudget {
                over_budget: OverBudget {
                    standard_monomials: n,
                    candidates,
                },
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub d: u32,
    #[serde(rename = "H")]
    pub hilbert: u64,
    pub delta: CellReport,
    pub fp: i64,
    pub vasconcelos: CellReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub degree: u64,
    pub dimension: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CiValue {
    pub d: u32,
    pub value: u64,
    /// Absent from the regularity on.
    pub decomposition: Option<Decomposition>,
}

/// `d = Σ_{i<=k} (d_i - 1) + ell`, `k` counted from 0.
#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub k: usize,
    pub ell: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CiReport {
    pub degrees: Vec<u64>,
    pub degree: u64,
    pub regularity: u64,
    pub values: Vec<CiValue>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeIdealReport {
    pub generators: Vec<String>,
    pub minimal_vertex_covers: Vec<Vec<String>>,
    pub unmixed: bool,
    pub bipartite: bool,
    pub induced_matching_number: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Labeling {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub labeling: Option<Labeling>,
    pub monomial: Option<String>,
    pub degree: Option<u32>,
    pub neighborhoods_disjoint: Option<bool>,
    /// Footprint at the witness degree.
    pub fp: Option<i64>,
}

fn to_i64(x: &impl std::fmt::Display) -> Result<i64, CliError> {
    x.to_string()
        .parse()
        .map_err(|_| CliError::Core(Error::Internal(format!("{x} does not fit in 64 bits"))))
}

fn names_of(names: &[String], indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| names[i].clone()).collect()
}

fn unmixedness(
    problem: &Problem,
    order: MonomialOrder,
    opts: &Options,
) -> Result<Unmixedness, CliError> {
    if opts.assert_unmixed || problem.assert.unmixed {
        return Ok(Unmixedness::Asserted);
    }
    Ok(certify_unmixed(&problem.ideal, order)?)
}

/// Positivity and `fp <= δ`, which hold whenever `I` is unmixed.
fn check_bounds(d: u32, delta: Option<i64>, fp: Option<i64>) -> Result<(), CliError> {
    if let Some(dl) = delta {
        if dl < 1 || fp.is_some_and(|f| f > dl) {
            return Err(CliError::Core(Error::Internal(format!(
                "unmixed ideal violates 1 <= delta and fp <= delta at d = {d}: delta {dl}, fp {fp:?}"
            ))));
        }
    }
    Ok(())
}

fn require_graph(problem: &Problem) -> Result<&Graph, CliError> {
    problem
        .graph
        .as_ref()
        .ok_or_else(|| CliError::Input("this command needs a graph input".into()))
}

fn ci_report(degrees: &[u64], d: Option<u32>, max_d: Option<u32>) -> Result<CiReport, CliError> {
    let mut degrees = degrees.to_vec();
    degrees.sort_unstable();
    let range = match (d, max_d) {
        (Some(d), None) => d..=d,
        (None, Some(m)) => 1..=m,
        _ => {
            return Err(CliError::Input(
                "ci needs exactly one of -d and --max-d".into(),
            ))
        }
    };
    let mut values = Vec::new();
    for d in range {
        values.push(CiValue {
            d,
            value: ci_fp_formula(&degrees, d as u64)?,
            decomposition: ci_decomposition(&degrees, d as u64)?
                .map(|c| Decomposition { k: c.k, ell: c.ell }),
        });
    }
    Ok(CiReport {
        degree: ci_degree(&degrees)?,
        regularity: ci_regularity(&degrees)?,
        degrees,
        values,
    })
}

fn table_report(t: FunctionTable, check: bool) -> Result<TableReport, CliError> {
    let mut rows = Vec::with_capacity(t.rows.len());
    for r in t.rows {
        let (delta, fp, vasconcelos) = match (r.delta, r.fp, r.vasconcelos) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => {
                return Err(CliError::Core(Error::Internal(
                    "incomplete table row".into(),
                )))
            }
        };
        if check {
            check_bounds(r.d, delta.value(), Some(fp))?;
        }
        rows.push(TableRow {
            d: r.d,
            hilbert: r.hilbert,
            delta: delta.into(),
            fp,
            vasconcelos: vasconcelos.into(),
        });
    }
    Ok(TableReport {
        degree: t.degree,
        dimension: t.dimension,
        rows,
    })
}

fn polynomials(ideal: &Ideal, names: &[String]) -> Vec<String> {
    ideal
        .generators()
        .iter()
        .map(|g| g.to_string_with(Some(names)))
        .collect()
}

/// Runs `command`; `input` is required for every command except `ci`.
pub fn run(
    command: &Command,
    input: Option<&ProblemFile>,
    opts: &Options,
) -> Result<Report, CliError> {
    let mut provenance = Provenance {
        version: env!("CARGO_PKG_VERSION"),
        field: None,
        variables: Vec::new(),
        order: None,
        budget: opts.budget.max_candidates,
        prune_regular_leading: opts.budget.prune_regular_leading,
        unmixedness: None,
    };
    let report = |provenance, result| Report {
        command: command.name(),
        provenance,
        result,
    };
    if let Command::Ci { degrees, d, max_d } = command {
        return Ok(report(
            provenance,
            Output::Ci(ci_report(degrees, *d, *max_d)?),
        ));
    }
    let input =
        input.ok_or_else(|| CliError::Input(format!("{} needs --input", command.name())))?;
    let order = match opts.order {
        Some(o) => o,
        None => input.order()?,
    };
    let problem = input.build(order)?;
    let names = &problem.names;
    let ideal = &problem.ideal;
    provenance.field = Some(problem.ring.p());
    provenance.variables = names.clone();
    provenance.order = Some(order.name().to_string());

    let result = match command {
        Command::Gb => {
            let gb = ideal.groebner(order)?;
            Output::Polynomials {
                generators: gb
                    .elements()
                    .iter()
                    .map(|g| g.to_string_with(Some(names)))
                    .collect(),
            }
        }
        Command::Initial => {
            let m = ideal.initial_ideal(order)?;
            let text = m.to_string_with(Some(names));
            let inner = text.trim_start_matches('(').trim_end_matches(')');
            Output::Polynomials {
                generators: inner.split(", ").map(str::to_string).collect(),
            }
        }
        Command::Hilbert { max_d } => {
            let h = ideal.hilbert_data(order)?;
            Output::Hilbert(HilbertReport {
                numerator: h.numerator.iter().map(to_i64).collect::<Result<_, _>>()?,
                dimension: h.dimension,
                degree: h.degree,
                a_invariant: h.a_invariant,
                regularity_index: h.regularity_index(),
                values: (0..=*max_d as usize)
                    .map(|d| to_i64(&h.hilbert_function(d)))
                    .collect::<Result<_, _>>()?,
            })
        }
        Command::Fp { d } => {
            let u = unmixedness(&problem, order, opts)?;
            provenance.unmixedness = Some(u.name());
            Output::Value {
                d: *d,
                value: fp(ideal, order, *d)?,
            }
        }
        Command::Delta { d } => {
            let u = unmixedness(&problem, order, opts)?;
            provenance.unmixedness = Some(u.name());
            let value = delta(ideal, order, *d, &opts.budget)?;
            if u.holds() {
                check_bounds(*d, Some(value), None)?;
            }
            Output::Value { d: *d, value }
        }
        Command::Vasconcelos { d } => {
            let u = unmixedness(&problem, order, opts)?;
            provenance.unmixedness = Some(u.name());
            Output::Value {
                d: *d,
                value: vasconcelos(ideal, order, *d, &opts.budget)?,
            }
        }
        Command::Table { max_d } => {
            let u = unmixedness(&problem, order, opts)?;
            provenance.unmixedness = Some(u.name());
            let t = table(ideal, order, *max_d, &opts.budget, Which::ALL)?;
            Output::Table(table_report(t, u.holds())?)
        }
        Command::EdgeIdeal => {
            let g = require_graph(&problem)?;
            Output::EdgeIdeal(EdgeIdealReport {
                generators: polynomials(ideal, names),
                minimal_vertex_covers: g
                    .minimal_vertex_covers()?
                    .iter()
                    .map(|c| names_of(names, c))
                    .collect(),
                unmixed: g.is_unmixed()?,
                bipartite: g.bipartition().is_some(),
                induced_matching_number: g.induced_matching_number()?,
            })
        }
        Command::Witness => {
            let g = require_graph(&problem)?;
            let mut w = WitnessReport {
                labeling: None,
                monomial: None,
                degree: None,
                neighborhoods_disjoint: None,
                fp: None,
            };
            if let Some(l) = g.find_hh_labeling()? {
                let witness = g.cm_witness_monomial(&l)?;
                let d = witness.monomial.degree();
                w.labeling = Some(Labeling {
                    x: names_of(names, &l.x),
                    y: names_of(names, &l.y),
                });
                w.monomial = Some(
                    mindist_core::Polynomial::term(
                        problem.ring,
                        order,
                        witness.monomial.clone(),
                        1,
                    )
                    .to_string_with(Some(names)),
                );
                w.degree = Some(d);
                w.neighborhoods_disjoint = Some(witness.neighborhoods_disjoint);
                w.fp = Some(fp(ideal, order, d)?);
            }
            Output::Witness(w)
        }
        Command::Ci { .. } => unreachable!("handled above"),
    };
    Ok(report(provenance, result))
}

fn cell_text(c: &CellReport) -> String {
    match c {
        CellReport::Value(v) => v.to_string(),
        CellReport::OverBudget { over_budget } => format!(">budget ({})", over_budget.candidates),
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(x, &w)| format!("{x:>w$}"))
            .collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
    out
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Output::Polynomials { generators } => {
                for g in generators {
                    let _ = writeln!(out, "{g}");
                }
            }
            Output::Hilbert(h) => {
                let _ = writeln!(out, "numerator: {:?}", h.numerator);
                let _ = writeln!(out, "dimension: {}", h.dimension);
                let _ = writeln!(out, "degree: {}", h.degree);
                let _ = writeln!(out, "a-invariant: {}", h.a_invariant);
                let _ = writeln!(out, "regularity index: {}", h.regularity_index);
                let _ = writeln!(out, "H(0..): {:?}", h.values);
            }
            Output::Value { value, .. } => {
                let _ = writeln!(out, "{value}");
            }
            Output::Table(t) => {
                let _ = writeln!(out, "degree {}, dimension {}", t.degree, t.dimension);
                let mut rows = vec![["d", "H", "delta", "fp", "vasconcelos"]
                    .map(String::from)
                    .to_vec()];
                for r in &t.rows {
                    rows.push(vec![
                        r.d.to_string(),
                        r.hilbert.to_string(),
                        cell_text(&r.delta),
                        r.fp.to_string(),
                        cell_text(&r.vasconcelos),
                    ]);
                }
                out.push_str(&aligned(&rows));
            }
            Output::Ci(c) => {
                let _ = writeln!(
                    out,
                    "degrees {:?}, degree {}, regularity {}",
                    c.degrees, c.degree, c.regularity
                );
                let mut rows = vec![vec!["d".to_string(), "fp = delta".to_string()]];
                for v in &c.values {
                    rows.push(vec![v.d.to_string(), v.value.to_string()]);
                }
                out.push_str(&aligned(&rows));
            }
            Output::EdgeIdeal(e) => {
                let _ = writeln!(out, "edge ideal: ({})", e.generators.join(", "));
                let covers: Vec<String> = e
                    .minimal_vertex_covers
                    .iter()
                    .map(|c| format!("{{{}}}", c.join(", ")))
                    .collect();
                let _ = writeln!(out, "minimal vertex covers: {}", covers.join(" "));
                let _ = writeln!(out, "unmixed: {}", e.unmixed);
                let _ = writeln!(out, "bipartite: {}", e.bipartite);
                let _ = writeln!(
                    out,
                    "induced matching number: {}",
                    e.induced_matching_number
                );
            }
            Output::Witness(w) => match (&w.labeling, &w.monomial) {
                (Some(l), Some(m)) => {
                    let _ = writeln!(out, "labeling: x = {:?}, y = {:?}", l.x, l.y);
                    let _ = writeln!(out, "witness: {m} (degree {})", w.degree.unwrap_or(0));
                    let _ = writeln!(
                        out,
                        "neighborhoods disjoint: {}",
                        w.neighborhoods_disjoint.unwrap_or(false)
                    );
                    if let Some(fp) = w.fp {
                        let _ = writeln!(out, "fp at witness degree: {fp}");
                    }
                }
                _ => {
                    let _ = writeln!(out, "no labeling exists");
                }
            },
        }
        out
    }
}
