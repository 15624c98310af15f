//! The JSON problem description and its conversion into core objects.

use std::collections::HashSet;

use mindist_core::{Graph, Ideal, MonomialOrder, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assertions {
    #[serde(default)]
    pub unmixed: bool,
    #[serde(default)]
    pub radical: bool,
    #[serde(default)]
    pub linear_primes: bool,
}

impl Assertions {
    fn is_empty(&self) -> bool {
        !(self.unmixed || self.radical || self.linear_primes)
    }
}

/// Vertices are numbered from 1 in the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInput {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub field: u64,
    /// May be omitted for graphs, which then use `t1, ..., tn`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variables: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphInput>,
    #[serde(default, skip_serializing_if = "Assertions::is_empty")]
    pub assert: Assertions,
}

fn default_order() -> String {
    "grevlex".into()
}

/// A validated problem: the ideal, and the graph when the input was one.
#[derive(Debug)]
pub struct Problem {
    pub ring: Ring,
    pub names: Vec<String>,
    pub ideal: Ideal,
    pub graph: Option<Graph>,
    pub assert: Assertions,
}

fn invalid(path: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{path}: {msg}"))
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name.chars().all(|c| c.is_ascii_digit())
        && name.chars().all(|c| c.is_alphanumeric() || c == '_')
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let input: ProblemFile = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("invalid problem: {e}")))?;
        input.validate()?;
        Ok(input)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files always serialize")
    }

    pub fn order(&self) -> Result<MonomialOrder, CliError> {
        self.order.parse().map_err(|e| invalid("order", e))
    }

    /// Schema checks that do not need any algebra.
    pub fn validate(&self) -> Result<(), CliError> {
        Ring::new(self.field, 1).map_err(|e| invalid("field", e))?;
        self.order()?;
        let present = [
            self.generators.is_some(),
            self.primes.is_some(),
            self.graph.is_some(),
        ];
        if present.iter().filter(|&&b| b).count() != 1 {
            return Err(CliError::Input(
                "exactly one of generators, primes or graph must be given".into(),
            ));
        }
        let mut seen = HashSet::new();
        for (k, name) in self.variables.iter().enumerate() {
            if !valid_name(name) {
                return Err(invalid(
                    &format!("variables[{k}]"),
                    format!("invalid name {name:?}"),
                ));
            }
            if !seen.insert(name) {
                return Err(invalid(
                    &format!("variables[{k}]"),
                    format!("duplicate name {name:?}"),
                ));
            }
        }
        if let Some(g) = &self.graph {
            if !self.variables.is_empty() && self.variables.len() != g.vertices {
                return Err(invalid(
                    "variables",
                    format!("{} names for {} vertices", self.variables.len(), g.vertices),
                ));
            }
            for (k, &[a, b]) in g.edges.iter().enumerate() {
                if a == 0 || b == 0 || a > g.vertices || b > g.vertices {
                    return Err(invalid(
                        &format!("graph.edges[{k}]"),
                        format!("vertices are numbered 1..={}", g.vertices),
                    ));
                }
            }
        } else if self.variables.is_empty() {
            return Err(invalid("variables", "at least one variable is required"));
        }
        Ok(())
    }

    fn names(&self) -> Vec<String> {
        match &self.graph {
            Some(g) if self.variables.is_empty() => mindist_core::default_names(g.vertices),
            _ => self.variables.clone(),
        }
    }

    fn parse_all(
        &self,
        texts: &[String],
        path: &str,
        ring: Ring,
        order: MonomialOrder,
        names: &[String],
    ) -> Result<Vec<Polynomial>, CliError> {
        texts
            .iter()
            .enumerate()
            .map(|(k, t)| {
                Polynomial::parse(t, ring, order, names)
                    .map_err(|e| invalid(&format!("{path}[{k}]"), e))
            })
            .collect()
    }

    /// Builds the ideal; a prime list is intersected, a graph gives its edge ideal.
    pub fn build(&self, order: MonomialOrder) -> Result<Problem, CliError> {
        self.validate()?;
        let names = self.names();
        let ring = Ring::new(self.field, names.len()).map_err(|e| invalid("field", e))?;
        let (ideal, graph) = if let Some(gens) = &self.generators {
            let polys = self.parse_all(gens, "generators", ring, order, &names)?;
            (
                Ideal::new(ring, polys).map_err(|e| invalid("generators", e))?,
                None,
            )
        } else if let Some(primes) = &self.primes {
            if primes.is_empty() {
                return Err(invalid("primes", "at least one prime is required"));
            }
            let mut acc: Option<Ideal> = None;
            for (k, prime) in primes.iter().enumerate() {
                let path = format!("primes[{k}]");
                let polys = self.parse_all(prime, &path, ring, order, &names)?;
                let p = Ideal::new(ring, polys).map_err(|e| invalid(&path, e))?;
                acc = Some(match acc {
                    None => p,
                    Some(a) => a.intersection(&p, order)?,
                });
            }
            (acc.expect("nonempty prime list"), None)
        } else {
            let g = self.graph.as_ref().expect("validated");
            let graph = Graph::new(g.vertices, g.edges.iter().map(|&[a, b]| (a - 1, b - 1)))
                .map_err(|e| invalid("graph", e))?;
            let edge_ideal = graph.edge_ideal().map_err(|e| invalid("graph", e))?;
            let ideal = Ideal::from_monomial_ideal(ring, &edge_ideal)?;
            (ideal, Some(graph))
        };
        Ok(Problem {
            ring,
            names,
            ideal,
            graph,
            assert: self.assert.clone(),
        })
    }
}
