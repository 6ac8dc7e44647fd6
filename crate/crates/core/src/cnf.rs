//! CNF formulas with per-variable frequency tracking.

use crate::error::{invalid, Result};

/// A literal over a 0-based variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: u32,
    pub negated: bool,
}

impl Lit {
    pub fn pos(var: u32) -> Self {
        Lit { var, negated: false }
    }

    pub fn neg(var: u32) -> Self {
        Lit { var, negated: true }
    }

    /// From a DIMACS literal (1-based, sign gives polarity).
    pub fn from_dimacs(l: i64) -> Option<Self> {
        if l == 0 {
            return None;
        }
        Some(Lit {
            var: (l.unsigned_abs() - 1) as u32,
            negated: l < 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    /// Truth value under `assignment`.
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var as usize] != self.negated
    }
}

/// A CNF formula. Clause sizes are not restricted here; the reductions
/// check their own size preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Lit>>) -> Result<Self> {
        for (ci, c) in clauses.iter().enumerate() {
            if let Some(l) = c.iter().find(|l| l.var as usize >= num_vars) {
                return Err(invalid(format!(
                    "clause {ci} references variable {} of {num_vars}",
                    l.var + 1
                )));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Number of clauses containing each variable (either polarity).
    pub fn frequencies(&self) -> Vec<usize> {
        let mut freq = vec![0; self.num_vars];
        for c in &self.clauses {
            let mut vars: Vec<u32> = c.iter().map(|l| l.var).collect();
            vars.sort_unstable();
            vars.dedup();
            for v in vars {
                freq[v as usize] += 1;
            }
        }
        freq
    }

    /// The frequency bound `f`: the largest number of clauses any
    /// variable occurs in.
    pub fn frequency_bound(&self) -> usize {
        self.frequencies().into_iter().max().unwrap_or(0)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|l| l.eval(assignment)))
    }
}
