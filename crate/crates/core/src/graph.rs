//! Simple graphs, their edge ideals, vertex covers, induced matchings and
//! Cohen–Macaulay bipartite labelings.
//!
//! Vertex `v` (0-based) corresponds to the variable `t_{v+1}`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::{mask_to_indices, minimal_transversals, MonomialIdeal};

pub const COVER_GUARD: usize = 20;
pub const MATCHING_EDGE_GUARD: usize = 24;
pub const LABELING_GUARD: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// `(i, j)` with `i < j`, sorted, no duplicates.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<bool>>,
}

/// Bipartition `x_1..x_g`, `y_1..y_g` (vertex indices) satisfying
/// (a) `x_i y_i` is an edge, (b) `x_i y_j` an edge implies `i <= j`,
/// (c) `x_i y_j` and `x_j y_k` edges with `i < j < k` imply `x_i y_k` is an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHLabeling {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// The monomial `x_{i_1} ... x_{i_d}` built greedily from a labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub monomial: Monomial,
    /// Chosen label positions `i_1 < ... < i_d` (0-based).
    pub indices: Vec<usize>,
    /// Whether the neighborhoods `N(x_{i_j})` are pairwise disjoint. They cover `V_2` in
    /// any case, but overlaps do occur for some labelings.
    pub neighborhoods_disjoint: bool,
}

impl Graph {
    /// Graph on vertices `0..n`; edges are unordered pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![vec![false; n]; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Precondition(format!(
                    "edge {{{a}, {b}}} references a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            if adjacency[a][b] {
                return Err(Error::Precondition(format!("duplicate edge {{{a}, {b}}}")));
            }
            adjacency[a][b] = true;
            adjacency[b][a] = true;
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| self.adjacency[v][w]).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| !self.adjacency[v].contains(&true))
            .collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    /// `I(G) = (t_i t_j : {i, j} ∈ E(G))`.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::DiscreteGraph);
        }
        MonomialIdeal::minimalize(
            self.n,
            self.edges
                .iter()
                .map(|&(a, b)| Monomial::var(self.n, a).mul(&Monomial::var(self.n, b))),
        )
    }

    /// Inclusion-minimal vertex covers, as sorted vertex lists.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<Vec<usize>>> {
        if self.n > COVER_GUARD {
            return Err(Error::SizeGuard {
                what: "vertices for minimal cover enumeration",
                limit: COVER_GUARD,
                got: self.n,
            });
        }
        let edges: Vec<u32> = self
            .edges
            .iter()
            .map(|&(a, b)| (1 << a) | (1 << b))
            .collect();
        Ok(minimal_transversals(&edges)
            .into_iter()
            .map(mask_to_indices)
            .collect())
    }

    /// All minimal vertex covers have the same size.
    pub fn is_unmixed(&self) -> Result<bool> {
        let covers = self.minimal_vertex_covers()?;
        Ok(covers.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    /// Largest number of pairwise disjoint edges whose vertex union spans no other edge.
    pub fn induced_matching_number(&self) -> Result<usize> {
        if self.edges.len() > MATCHING_EDGE_GUARD {
            return Err(Error::SizeGuard {
                what: "edges for induced matching search",
                limit: MATCHING_EDGE_GUARD,
                got: self.edges.len(),
            });
        }
        fn rec(g: &Graph, start: usize, used: &mut Vec<usize>, best: &mut usize, size: usize) {
            *best = (*best).max(size);
            // remaining edges cannot improve on best
            if size + (g.edges.len() - start) <= *best {
                return;
            }
            for k in start..g.edges.len() {
                let (a, b) = g.edges[k];
                let compatible = used
                    .iter()
                    .all(|&v| v != a && v != b && !g.adjacency[v][a] && !g.adjacency[v][b]);
                if compatible {
                    used.push(a);
                    used.push(b);
                    rec(g, k + 1, used, best, size + 1);
                    used.pop();
                    used.pop();
                }
            }
        }
        let mut best = 0;
        rec(self, 0, &mut Vec::new(), &mut best, 0);
        Ok(best)
    }

    /// Proper 2-coloring per connected component (`colors[v] ∈ {0, 1}`) and the component
    /// index of each vertex, or `None` if some component has an odd cycle.
    fn two_coloring(&self) -> Option<(Vec<u8>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        let mut component = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            component[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        component[w] = count;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
            count += 1;
        }
        Some((color, component))
    }

    /// A bipartition `(V_1, V_2)`, or `None` if the graph is not bipartite.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let (color, _) = self.two_coloring()?;
        let v1 = (0..self.n).filter(|&v| color[v] == 0).collect();
        let v2 = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((v1, v2))
    }

    /// Searches for a labeling satisfying (a), (b), (c).
    ///
    /// Given the sides and the matching `x_i y_i`, the relation `i → j` (`x_i y_j` an edge,
    /// `i ≠ j`) must be a strict partial order: (b) asks for an order extending it and (c)
    /// for its transitivity. Every balanced orientation of the component colorings and every
    /// perfect matching is tried; the labels follow a topological order of the relation.
    pub fn find_hh_labeling(&self) -> Result<Option<HHLabeling>> {
        if self.n > LABELING_GUARD {
            return Err(Error::SizeGuard {
                what: "vertices for labeling search",
                limit: LABELING_GUARD,
                got: self.n,
            });
        }
        let (color, component) = self.two_coloring().ok_or(Error::NotBipartite)?;
        if self.n == 0 || self.n % 2 == 1 || self.has_isolated_vertices() {
            return Ok(None);
        }
        let ncomp = component.iter().max().map_or(0, |c| c + 1);
        for flips in 0u32..(1u32 << ncomp) {
            let side = |v: usize| color[v] ^ ((flips >> component[v]) & 1) as u8;
            let v1: Vec<usize> = (0..self.n).filter(|&v| side(v) == 0).collect();
            let v2: Vec<usize> = (0..self.n).filter(|&v| side(v) == 1).collect();
            if v1.len() != v2.len() {
                continue;
            }
            if let Some(labeling) = self.labeling_for_sides(&v1, &v2) {
                return Ok(Some(labeling));
            }
        }
        Ok(None)
    }

    fn labeling_for_sides(&self, v1: &[usize], v2: &[usize]) -> Option<HHLabeling> {
        let g = v1.len();
        let mut partner = vec![usize::MAX; g];
        let mut taken = vec![false; g];
        self.try_matchings(v1, v2, 0, &mut partner, &mut taken)
    }

    fn try_matchings(
        &self,
        v1: &[usize],
        v2: &[usize],
        i: usize,
        partner: &mut Vec<usize>,
        taken: &mut Vec<bool>,
    ) -> Option<HHLabeling> {
        let g = v1.len();
        if i == g {
            let y: Vec<usize> = partner.iter().map(|&j| v2[j]).collect();
            return self.order_matching(v1, &y);
        }
        for j in 0..g {
            if !taken[j] && self.adjacency[v1[i]][v2[j]] {
                taken[j] = true;
                partner[i] = j;
                if let Some(l) = self.try_matchings(v1, v2, i + 1, partner, taken) {
                    return Some(l);
                }
                taken[j] = false;
            }
        }
        None
    }

    /// With `x[i] y[i]` matched, orders the pairs if the relation is a strict partial order.
    fn order_matching(&self, x: &[usize], y: &[usize]) -> Option<HHLabeling> {
        let g = x.len();
        let rel = |i: usize, j: usize| i != j && self.adjacency[x[i]][y[j]];
        for i in 0..g {
            for j in 0..g {
                if rel(i, j) && rel(j, i) {
                    return None;
                }
                for k in 0..g {
                    if i != k && rel(i, j) && rel(j, k) && !rel(i, k) {
                        return None;
                    }
                }
            }
        }
        // Kahn's algorithm, smallest available index first
        let mut indegree: Vec<usize> = (0..g)
            .map(|j| (0..g).filter(|&i| rel(i, j)).count())
            .collect();
        let mut done = vec![false; g];
        let mut order = Vec::with_capacity(g);
        while order.len() < g {
            let next = (0..g).find(|&v| !done[v] && indegree[v] == 0)?;
            done[next] = true;
            order.push(next);
            for (j, deg) in indegree.iter_mut().enumerate() {
                if rel(next, j) {
                    *deg -= 1;
                }
            }
        }
        let labeling = HHLabeling {
            x: order.iter().map(|&i| x[i]).collect(),
            y: order.iter().map(|&i| y[i]).collect(),
        };
        debug_assert!(labeling.validate(self).is_ok());
        Some(labeling)
    }

    /// The greedy witness: start with `x_1`; while some `y_l` is not adjacent to a chosen
    /// `x`, add `x_l` for the smallest such `l`. The chosen edges form an induced matching
    /// and `(I(G) : x^a) = (y_1, ..., y_g)`; both are verified.
    pub fn cm_witness_monomial(&self, labeling: &HHLabeling) -> Result<Witness> {
        labeling.validate(self)?;
        let g = labeling.x.len();
        let mut covered = vec![false; g];
        let mut indices = Vec::new();
        let mut disjoint = true;
        let mut next = Some(0);
        while let Some(l) = next {
            indices.push(l);
            for (j, c) in covered.iter_mut().enumerate() {
                if self.adjacency[labeling.x[l]][labeling.y[j]] {
                    disjoint &= !*c;
                    *c = true;
                }
            }
            next = covered.iter().position(|c| !c);
        }

        let matched: Vec<(usize, usize)> = indices
            .iter()
            .map(|&i| (labeling.x[i], labeling.y[i]))
            .collect();
        for (k, &(a, b)) in matched.iter().enumerate() {
            for &(c, d) in &matched[..k] {
                if self.adjacency[a][d] || self.adjacency[c][b] {
                    return Err(Error::Internal(
                        "witness edges are not an induced matching".into(),
                    ));
                }
            }
        }

        let monomial = indices.iter().fold(Monomial::one(self.n), |m, &i| {
            m.mul(&Monomial::var(self.n, labeling.x[i]))
        });
        let colon = self.edge_ideal()?.colon_by_monomial(&monomial)?;
        let expected = MonomialIdeal::minimalize(
            self.n,
            labeling.y.iter().map(|&v| Monomial::var(self.n, v)),
        )?;
        if colon != expected {
            return Err(Error::Internal(format!(
                "(I(G) : {monomial}) = {colon}, expected {expected}"
            )));
        }
        Ok(Witness {
            monomial,
            indices,
            neighborhoods_disjoint: disjoint,
        })
    }
}

impl HHLabeling {
    /// Checks that `x`, `y` split the vertex set into sides of a bipartition and that
    /// conditions (a), (b), (c) hold.
    pub fn validate(&self, graph: &Graph) -> Result<()> {
        let g = self.x.len();
        let bad = |msg: String| Err(Error::InvalidLabeling(msg));
        if self.y.len() != g {
            return bad("sides have different sizes".into());
        }
        let mut seen = vec![false; graph.n];
        for &v in self.x.iter().chain(&self.y) {
            if v >= graph.n || seen[v] {
                return bad(format!("vertex {v} is out of range or repeated"));
            }
            seen[v] = true;
        }
        if seen.contains(&false) {
            return bad("labeling does not cover every vertex".into());
        }
        let mut in_x = vec![false; graph.n];
        for &v in &self.x {
            in_x[v] = true;
        }
        if graph.edges.iter().any(|&(a, b)| in_x[a] == in_x[b]) {
            return bad("an edge lies within one side".into());
        }
        let e = |i: usize, j: usize| graph.adjacency[self.x[i]][self.y[j]];
        for i in 0..g {
            if !e(i, i) {
                return bad(format!("condition (a) fails at {}", i + 1));
            }
            for j in 0..g {
                if e(i, j) && i > j {
                    return bad(format!("condition (b) fails for x{} y{}", i + 1, j + 1));
                }
                for k in (j + 1)..g {
                    if i < j && e(i, j) && e(j, k) && !e(i, k) {
                        return bad(format!(
                            "condition (c) fails for {}, {}, {}",
                            i + 1,
                            j + 1,
                            k + 1
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}
