//! Optimum over convenient orderings of a reduction output.
//!
//! A convenient ordering is `d_1 ... d_d c_1 R_1 c_2 R_2 ... c_m R_m c_{m+1}`
//! and is determined by the row selection `phi` (row `i` sits in interval
//! `phi(i)`). Its count has a closed form in `|E(G[V_phi])|`, so the
//! search runs over selections. Every selection is also materialized and
//! evaluated; a disagreement with the closed form is reported as an
//! internal error.

use crate::csp::evaluate;
use crate::error::{invalid, Error, Result};
use crate::graph::{GridGraph, RowSelection};
use crate::reductions::certificate::{ReductionCertificate, ReductionKind};
use crate::reductions::{reduce_clique_to_perm6, reduce_dcnnb_to_perm4};
use crate::solvers::SolveResult;
use crate::validate::counts::{convenient_count_perm4, convenient_count_perm6};

/// Largest `n` the exhaustive search accepts.
pub const MAX_CONVENIENT_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvenientResult {
    pub result: SolveResult,
    pub selection: RowSelection,
}

/// Closed-form count of the convenient ordering for `sel`.
pub fn convenient_count(
    cert: &ReductionCertificate,
    grid: &GridGraph,
    sel: &RowSelection,
) -> Result<u64> {
    let lin = &cert.lineage;
    let (n, d) = (lin.n as u64, lin.dummies as u64);
    let induced = grid.induced_edges(&sel.choice);
    match lin.kind {
        ReductionKind::Perm6 => convenient_count_perm6(n, d, induced),
        ReductionKind::Perm4 => {
            let ds = lin
                .delta_sum
                .ok_or_else(|| invalid("arity-4 certificate has no Delta sum"))?;
            convenient_count_perm4(n, d, ds, induced)
        }
    }
}

/// Rebuilds the reduction from `grid` and the certificate's parameters and
/// requires the same instance and target.
fn check_matches(cert: &ReductionCertificate, grid: &GridGraph) -> Result<()> {
    let lin = &cert.lineage;
    let rebuilt = match lin.kind {
        ReductionKind::Perm6 => reduce_clique_to_perm6(grid, lin.dummies)?,
        ReductionKind::Perm4 => {
            let d = lin
                .degree_bound
                .ok_or_else(|| invalid("arity-4 certificate has no degree bound"))?;
            reduce_dcnnb_to_perm4(grid, d, lin.dummies)?
        }
    };
    if rebuilt != *cert {
        return Err(invalid("certificate was not produced from this graph"));
    }
    Ok(())
}

pub fn solve_convenient(cert: &ReductionCertificate, grid: &GridGraph) -> Result<ConvenientResult> {
    let lin = &cert.lineage;
    if lin.n > MAX_CONVENIENT_N {
        return Err(Error::SizeLimit {
            what: "convenient search n",
            value: lin.n as u64,
            limit: MAX_CONVENIENT_N as u64,
        });
    }
    check_matches(cert, grid)?;

    let rows = lin.num_rows();
    let ranges: Vec<_> = (0..rows).map(|i| lin.interval_range(i)).collect();
    let mut choice: Vec<usize> = ranges.iter().map(|r| r.start).collect();
    let mut best: Option<(u64, RowSelection)> = None;
    let mut nodes = 0u64;
    loop {
        nodes += 1;
        let sel = RowSelection::new(choice.clone());
        let closed = convenient_count(cert, grid, &sel)?;
        let ord = cert.ordering_for(&sel)?;
        let actual = evaluate(&cert.instance, &ord)?;
        if actual != closed {
            return Err(Error::InternalConsistency(format!(
                "convenient ordering for {:?} satisfies {actual} constraints, closed form says {closed}",
                sel.choice
            )));
        }
        if best.as_ref().is_none_or(|(b, _)| closed > *b) {
            best = Some((closed, sel));
        }
        // Odometer with the last row varying fastest.
        let mut i = rows;
        loop {
            if i == 0 {
                let (optimum, selection) = best.expect("at least one selection");
                let witness = cert.ordering_for(&selection)?;
                return Ok(ConvenientResult {
                    result: SolveResult {
                        optimum,
                        witness,
                        nodes_explored: nodes,
                    },
                    selection,
                });
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < ranges[i].end {
                break;
            }
            choice[i] = ranges[i].start;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DeltaTable;
    use crate::solvers::brute::{solve_brute, BruteOptions};

    #[test]
    fn n1_single_edge_matches_brute_force() {
        let mut h = GridGraph::new(2);
        h.add_edge((0, 0), (1, 1)).unwrap();
        let mut delta = DeltaTable::zeros(2);
        delta.set(0, 1, 1);
        h.delta_table = Some(delta);
        let cert = reduce_dcnnb_to_perm4(&h, 1, 2).unwrap();
        let conv = solve_convenient(&cert, &h).unwrap();
        assert_eq!(conv.result.optimum, 3 + 3 + 1);
        assert_eq!(conv.result.optimum, cert.target);
        let brute = solve_brute(&cert.instance, &BruteOptions::default()).unwrap();
        assert_eq!(brute.optimum, conv.result.optimum);
    }

    #[test]
    fn edgeless_n2_is_structural_only() {
        let mut h = GridGraph::new(4);
        h.delta_table = Some(DeltaTable::zeros(4));
        let cert = reduce_dcnnb_to_perm4(&h, 1, 4).unwrap();
        let conv = solve_convenient(&cert, &h).unwrap();
        assert_eq!(conv.result.optimum, 6 * 10);
        assert_eq!(conv.result.nodes_explored, 16);
    }

    #[test]
    fn mismatched_graph_rejected() {
        let g = GridGraph::new(2);
        let cert = reduce_clique_to_perm6(&g, 4).unwrap();
        let mut other = GridGraph::new(2);
        other.add_edge((0, 0), (1, 0)).unwrap();
        assert!(solve_convenient(&cert, &other).is_err());
        assert_eq!(solve_convenient(&cert, &g).unwrap().result.optimum, 3 + 2);
    }
}
