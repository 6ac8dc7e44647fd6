//! Seeded random instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{CnfFormula, Lit};
use crate::csp::{Constraint, PermCspInstance};
use crate::error::{invalid, Result};
use crate::graph::{GridGraph, SimpleGraph};

const ATTEMPTS: usize = 1000;

/// The generator used everywhere a seed is given.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A CNF where every variable occurs in at most `f` clauses and clause
/// sizes are drawn from `sizes`. Clauses are sampled one at a time over
/// the variables with remaining budget; a dead end restarts the formula.
pub fn random_sparse_cnf<R: Rng>(
    rng: &mut R,
    num_vars: usize,
    num_clauses: usize,
    f: usize,
    sizes: std::ops::RangeInclusive<usize>,
) -> Result<CnfFormula> {
    let (lo, hi) = (*sizes.start(), *sizes.end());
    if lo == 0 || hi > 3 || lo > hi {
        return Err(invalid(format!("clause sizes {lo}..={hi} outside 1..=3")));
    }
    if lo > num_vars || num_clauses * lo > num_vars * f {
        return Err(invalid(format!(
            "{num_clauses} clauses of size >= {lo} do not fit {num_vars} variables with frequency <= {f}"
        )));
    }
    'attempt: for _ in 0..ATTEMPTS {
        let mut budget = vec![f; num_vars];
        let mut clauses = Vec::with_capacity(num_clauses);
        for _ in 0..num_clauses {
            let size = rng.gen_range(lo..=hi);
            let open: Vec<u32> = (0..num_vars as u32).filter(|&v| budget[v as usize] > 0).collect();
            if open.len() < size {
                continue 'attempt;
            }
            let vars: Vec<u32> = open.choose_multiple(rng, size).copied().collect();
            let clause = vars
                .into_iter()
                .map(|v| {
                    budget[v as usize] -= 1;
                    if rng.gen_bool(0.5) {
                        Lit::neg(v)
                    } else {
                        Lit::pos(v)
                    }
                })
                .collect();
            clauses.push(clause);
        }
        return CnfFormula::new(num_vars, clauses);
    }
    Err(invalid("could not sample a formula within the frequency bound"))
}

/// A graph with `num_edges` edges and maximum degree at most `max_degree`,
/// built by inserting random pairs whose endpoints still have room.
pub fn random_bounded_degree_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    max_degree: usize,
    num_edges: usize,
) -> Result<SimpleGraph> {
    if 2 * num_edges > n * max_degree || num_edges > n * n.saturating_sub(1) / 2 {
        return Err(invalid(format!(
            "{num_edges} edges do not fit {n} vertices of degree <= {max_degree}"
        )));
    }
    'attempt: for _ in 0..ATTEMPTS {
        let mut g = SimpleGraph::new(n);
        while g.num_edges() < num_edges {
            let cands: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| {
                    !g.has_edge(u, v) && g.degree(u) < max_degree && g.degree(v) < max_degree
                })
                .collect();
            let Some(&(u, v)) = cands.choose(rng) else {
                continue 'attempt;
            };
            g.add_edge(u, v)?;
        }
        return Ok(g);
    }
    Err(invalid("could not sample a graph within the degree bound"))
}

/// A grid graph on `[side] x [side]` where each pair of vertices in
/// different rows is an edge with probability `p`.
pub fn random_grid<R: Rng>(rng: &mut R, side: usize, p: f64) -> GridGraph {
    let mut g = GridGraph::new(side);
    for i in 0..side {
        for j in 0..side {
            for k in i + 1..side {
                for l in 0..side {
                    if rng.gen_bool(p) {
                        g.add_edge((i, j), (k, l)).expect("in range");
                    }
                }
            }
        }
    }
    g
}

/// `m` constraints with lengths drawn from `1..=arity` over distinct
/// variables.
pub fn random_pcsp<R: Rng>(rng: &mut R, n: usize, m: usize, arity: usize) -> Result<PermCspInstance> {
    if n == 0 || arity == 0 {
        return Err(invalid("need at least one variable and arity >= 1"));
    }
    let all: Vec<u32> = (0..n as u32).collect();
    let cons = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=arity.min(n));
            Constraint::new(all.choose_multiple(rng, len).copied().collect::<Vec<_>>())
        })
        .collect();
    PermCspInstance::with_arity(n, arity, cons)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnf_respects_frequency_and_seed() {
        for seed in 0..20 {
            let a = random_sparse_cnf(&mut rng_from_seed(seed), 6, 6, 3, 1..=3).unwrap();
            let b = random_sparse_cnf(&mut rng_from_seed(seed), 6, 6, 3, 1..=3).unwrap();
            assert_eq!(a, b);
            assert!(a.frequency_bound() <= 3);
        }
        assert!(random_sparse_cnf(&mut rng_from_seed(0), 2, 5, 1, 1..=3).is_err());
    }

    #[test]
    fn graph_respects_degree() {
        let mut rng = rng_from_seed(7);
        for _ in 0..10 {
            let g = random_bounded_degree_graph(&mut rng, 12, 3, 15).unwrap();
            assert_eq!(g.num_edges(), 15);
            assert!(g.max_degree() <= 3);
        }
        assert!(random_bounded_degree_graph(&mut rng, 4, 1, 3).is_err());
    }

    #[test]
    fn pcsp_is_valid() {
        let inst = random_pcsp(&mut rng_from_seed(1), 5, 30, 3).unwrap();
        assert_eq!(inst.num_constraints(), 30);
        assert!(inst.max_constraint_len() <= 3);
    }
}
