//! Fixtures and brute-force oracles shared by the integration tests. The oracles avoid the
//! crate's own enumeration helpers so that they can check them.
#![allow(dead_code)]

use std::collections::BTreeSet;

use mindist_core::{
    default_names, Graph, Ideal, Monomial, MonomialIdeal, MonomialOrder, Polynomial, Ring,
};
use rand::Rng;

pub const GREVLEX: MonomialOrder = MonomialOrder::GrevLex;

pub fn ideal(p: u64, s: usize, gens: &[&str]) -> Ideal {
    let ring = Ring::new(p, s).unwrap();
    let names = default_names(s);
    Ideal::new(
        ring,
        gens.iter()
            .map(|g| Polynomial::parse(g, ring, GREVLEX, &names).unwrap()),
    )
    .unwrap()
}

pub fn monomial(e: &[u32]) -> Monomial {
    Monomial::new(e.iter().copied())
}

pub fn three_binomials() -> Ideal {
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

pub fn five_primes() -> Vec<Ideal> {
    [
        ["t3 + t4", "t2 + t4", "t1 + t4"],
        ["t3 + t4", "t2", "t1 - t4"],
        ["t4", "t2", "t1"],
        ["t4", "t3", "t1"],
        ["t4", "t2 - t3", "t1"],
    ]
    .iter()
    .map(|p| ideal(3, 4, p))
    .collect()
}

pub fn intersect_all(ideals: &[Ideal]) -> Ideal {
    let mut acc = ideals[0].clone();
    for other in &ideals[1..] {
        acc = acc.intersection(other, GREVLEX).unwrap();
    }
    acc
}

/// Exponent vectors of total degree `d` in `s` variables, by an odometer over `0..=d`.
pub fn exponent_vectors(s: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut e = vec![0u32; s];
    loop {
        if e.iter().sum::<u32>() == d {
            out.push(e.clone());
        }
        let mut i = 0;
        loop {
            if i == s {
                return out;
            }
            if e[i] < d {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Number of degree-`d` monomials divisible by no generator.
pub fn count_standard(s: usize, gens: &[Vec<u32>], d: u32) -> u64 {
    exponent_vectors(s, d)
        .iter()
        .filter(|e| !gens.iter().any(|g| divides(g, e)))
        .count() as u64
}

fn compositions(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 1 {
        return vec![vec![total]];
    }
    (1..total)
        .flat_map(|first| {
            compositions(len - 1, total - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// Every complete intersection monomial ideal in `s` variables with `r` generators of
/// degree at most `max_degree`: pairwise disjoint supports, all exponent patterns.
pub fn ci_monomial_ideals(s: usize, r: usize, max_degree: u32) -> BTreeSet<Vec<Vec<u32>>> {
    let mut out = BTreeSet::new();
    // each variable goes to one generator or to none (value r)
    for code in 0..(r + 1).pow(s as u32) {
        let mut owner = vec![0; s];
        let mut c = code;
        for o in owner.iter_mut() {
            *o = c % (r + 1);
            c /= r + 1;
        }
        let supports: Vec<Vec<usize>> = (0..r)
            .map(|g| (0..s).filter(|&v| owner[v] == g).collect())
            .collect();
        if supports.iter().any(|x| x.is_empty()) {
            continue;
        }
        let mut partial: Vec<Vec<Vec<u32>>> = vec![vec![]];
        for sup in &supports {
            let mut next = Vec::new();
            for deg in sup.len() as u32..=max_degree {
                for comp in compositions(sup.len(), deg) {
                    let mut e = vec![0u32; s];
                    for (&v, &x) in sup.iter().zip(&comp) {
                        e[v] = x;
                    }
                    for p in &partial {
                        let mut q = p.clone();
                        q.push(e.clone());
                        next.push(q);
                    }
                }
            }
            partial = next;
        }
        for mut gens in partial {
            gens.sort();
            out.insert(gens);
        }
    }
    out
}

pub fn to_monomial_ideal(s: usize, gens: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::minimalize(s, gens.iter().map(|g| monomial(g))).unwrap()
}

pub fn to_ideal(p: u64, m: &MonomialIdeal) -> Ideal {
    Ideal::from_monomial_ideal(Ring::new(p, m.nvars()).unwrap(), m).unwrap()
}

/// A random proper monomial ideal with `1..=max_gens` generators of exponents `<= max_exp`.
pub fn random_monomial_gens(
    rng: &mut impl Rng,
    s: usize,
    max_gens: usize,
    max_exp: u32,
) -> Vec<Vec<u32>> {
    let count = rng.gen_range(1..=max_gens);
    let mut gens = Vec::new();
    while gens.len() < count {
        let e: Vec<u32> = (0..s).map(|_| rng.gen_range(0..=max_exp)).collect();
        if e.iter().any(|&x| x > 0) {
            gens.push(e);
        }
    }
    gens
}

/// A random complete intersection monomial ideal with `r < s` generators.
pub fn random_ci(rng: &mut impl Rng, s: usize, r: usize, max_exp: u32) -> Vec<Vec<u32>> {
    let mut vars: Vec<usize> = (0..s).collect();
    for i in (1..s).rev() {
        vars.swap(i, rng.gen_range(0..=i));
    }
    (0..r)
        .map(|g| {
            let mut e = vec![0u32; s];
            e[vars[g]] = rng.gen_range(1..=max_exp);
            // occasionally a second variable
            if rng.gen_bool(0.3) && r + g < s {
                e[vars[r + g]] = rng.gen_range(1..=max_exp);
            }
            e
        })
        .collect()
}

/// Brute-force minimal transversals of the sets (bit masks over `0..n`): subsets meeting
/// every set from which no element can be removed.
pub fn brute_force_transversals(n: usize, sets: &[u32]) -> Vec<Vec<usize>> {
    let meets = |c: u32| sets.iter().all(|&e| c & e != 0);
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|&c| meets(c) && (0..n).all(|v| c & (1 << v) == 0 || !meets(c & !(1 << v))))
        .map(|c| (0..n).filter(|&v| c & (1 << v) != 0).collect())
        .collect();
    out.sort();
    out
}

pub fn brute_force_covers(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let sets: Vec<u32> = edges.iter().map(|&(a, b)| (1 << a) | (1 << b)).collect();
    brute_force_transversals(n, &sets)
}

/// `∩_C (t_i : i ∈ C)` via pairwise least common multiples, minimalized at each step.
pub fn intersect_variable_primes(n: usize, primes: &[Vec<usize>]) -> Vec<Vec<u32>> {
    let mut acc: Vec<Vec<u32>> = vec![vec![0; n]];
    for prime in primes {
        let mut next: Vec<Vec<u32>> = Vec::new();
        for g in &acc {
            for &v in prime {
                let mut m = g.clone();
                m[v] = m[v].max(1);
                next.push(m);
            }
        }
        next.sort();
        next.dedup();
        let minimal: Vec<Vec<u32>> = next
            .iter()
            .filter(|m| !next.iter().any(|o| o != *m && divides(o, m)))
            .cloned()
            .collect();
        acc = minimal;
    }
    acc
}

/// All graphs on `n` labeled vertices, as edge lists.
pub fn all_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

/// Largest induced matching by brute force over edge subsets.
pub fn brute_force_induced_matching(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        if chosen.len() <= best {
            continue;
        }
        let mut used = vec![false; g.vertex_count()];
        let mut ok = true;
        for &(a, b) in &chosen {
            ok &= !used[a] && !used[b];
            used[a] = true;
            used[b] = true;
        }
        // no edge of the graph joins two different chosen edges
        ok &= edges
            .iter()
            .all(|&(a, b)| !(used[a] && used[b]) || chosen.contains(&(a, b)));
        if ok {
            best = chosen.len();
        }
    }
    best
}

/// Checks the three labeling axioms directly on vertex lists.
pub fn is_hh_labeling(g: &Graph, x: &[usize], y: &[usize]) -> bool {
    let m = x.len();
    let adj = |i: usize, j: usize| g.is_adjacent(x[i], y[j]);
    let mut all: Vec<usize> = x.iter().chain(y).copied().collect();
    all.sort();
    all.dedup();
    if y.len() != m || all.len() != g.vertex_count() || all.len() != 2 * m {
        return false;
    }
    // both sides independent
    for side in [x, y] {
        for (a, &u) in side.iter().enumerate() {
            if side[a + 1..].iter().any(|&v| g.is_adjacent(u, v)) {
                return false;
            }
        }
    }
    (0..m).all(|i| adj(i, i))
        && (0..m).all(|i| (0..m).all(|j| !adj(i, j) || i <= j))
        && (0..m)
            .all(|i| (i + 1..m).all(|j| (j + 1..m).all(|k| !(adj(i, j) && adj(j, k)) || adj(i, k))))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// Whether any labeling exists, trying every split of the vertices and every ordering.
pub fn brute_force_has_hh_labeling(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n % 2 == 1 || n == 0 {
        return false;
    }
    let m = n / 2;
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != m {
            continue;
        }
        let xs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let ys: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
        for px in permutations(&xs) {
            for py in permutations(&ys) {
                if is_hh_labeling(g, &px, &py) {
                    return true;
                }
            }
        }
    }
    false
}

/// Normalized points of projective space `P^{s-1}(F_p)`: first nonzero coordinate 1.
pub fn projective_points(p: u32, s: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for code in 0..(p as u64).pow(s as u32) {
        let mut c = code;
        let v: Vec<u32> = (0..s)
            .map(|_| {
                let x = (c % p as u64) as u32;
                c /= p as u64;
                x
            })
            .collect();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            out.push(v);
        }
    }
    out
}

/// The linear prime of a normalized point: `t_j - a_j t_k` for `j != k`, `k` its pivot.
pub fn point_prime(p: u64, point: &[u32]) -> Ideal {
    let s = point.len();
    let ring = Ring::new(p, s).unwrap();
    let k = point.iter().position(|&x| x != 0).unwrap();
    let gens = (0..s).filter(|&j| j != k).map(|j| {
        Polynomial::from_terms(
            ring,
            GREVLEX,
            [
                (Monomial::var(s, j), 1),
                (Monomial::var(s, k), -(point[j] as i64)),
            ],
        )
        .unwrap()
    });
    Ideal::new(ring, gens).unwrap()
}

pub fn point_ideal(p: u64, points: &[Vec<u32>]) -> Ideal {
    let primes: Vec<Ideal> = points.iter().map(|a| point_prime(p, a)).collect();
    intersect_all(&primes)
}

fn pow_mod(mut b: u64, mut e: u32, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Minimum Hamming weight of the nonzero codewords spanned by evaluating all degree-`d`
/// monomials at `points`. Returns `points.len()` as weight bound when the code is zero.
pub fn evaluation_code_min_distance(p: u32, points: &[Vec<u32>], d: u32) -> u64 {
    let p64 = p as u64;
    let s = points[0].len();
    let mut rows: Vec<Vec<u64>> = exponent_vectors(s, d)
        .iter()
        .map(|e| {
            points
                .iter()
                .map(|pt| {
                    pt.iter()
                        .zip(e)
                        .fold(1u64, |acc, (&x, &k)| acc * pow_mod(x as u64, k, p64) % p64)
                })
                .collect()
        })
        .collect();
    // row echelon form over F_p
    let cols = points.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p64);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p64;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p64 * p64 - f * y) % p64;
                }
            }
        }
        rank += 1;
    }
    let basis = &rows[..rank];
    let mut best = cols as u64;
    for code in 1..p64.pow(rank as u32) {
        let mut c = code;
        let mut word = vec![0u64; cols];
        for row in basis {
            let coef = c % p64;
            c /= p64;
            for (w, x) in word.iter_mut().zip(row) {
                *w = (*w + coef * x) % p64;
            }
        }
        best = best.min(word.iter().filter(|&&w| w != 0).count() as u64);
    }
    best
}
