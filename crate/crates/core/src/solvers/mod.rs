//! Exact solvers and the oracles used to check reductions.

pub mod brute;
pub mod coloring;
pub mod convenient;
pub mod dp3;
pub mod sat;
pub mod transversal;

use crate::csp::Ordering;

pub use brute::{solve_brute, BruteOptions, DEFAULT_BRUTE_LIMIT};
pub use coloring::{solve_3coloring, solve_3coloring_counted};
pub use convenient::{convenient_count, solve_convenient, ConvenientResult};
pub use dp3::{solve_dp3, solve_dp3_with_limit, DEFAULT_DP_LIMIT};
pub use sat::solve_sat;
pub use transversal::{
    solve_row_biclique, solve_row_biclique_counted, solve_row_clique, solve_row_clique_counted,
    TransversalResult,
};

/// An optimum with one ordering attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: u64,
    pub witness: Ordering,
    pub nodes_explored: u64,
}
