//! A small DPLL solver used as the satisfiability oracle.

use crate::cnf::{CnfFormula, Lit};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Val {
    Unset,
    True,
    False,
}

fn lit_val(assign: &[Val], l: Lit) -> Val {
    match (assign[l.var as usize], l.negated) {
        (Val::Unset, _) => Val::Unset,
        (Val::True, false) | (Val::False, true) => Val::True,
        _ => Val::False,
    }
}

enum Propagation {
    Conflict,
    AllSatisfied,
    Open,
}

fn propagate(cnf: &CnfFormula, assign: &mut [Val]) -> Propagation {
    loop {
        let mut changed = false;
        let mut all_sat = true;
        for clause in cnf.clauses() {
            let mut unassigned = None;
            let mut open = 0;
            let mut sat = false;
            for &l in clause {
                match lit_val(assign, l) {
                    Val::True => {
                        sat = true;
                        break;
                    }
                    Val::Unset => {
                        open += 1;
                        unassigned = Some(l);
                    }
                    Val::False => {}
                }
            }
            if sat {
                continue;
            }
            all_sat = false;
            match (open, unassigned) {
                (0, _) => return Propagation::Conflict,
                (1, Some(l)) => {
                    assign[l.var as usize] = if l.negated { Val::False } else { Val::True };
                    changed = true;
                }
                _ => {}
            }
        }
        if all_sat {
            return Propagation::AllSatisfied;
        }
        if !changed {
            return Propagation::Open;
        }
    }
}

fn dpll(cnf: &CnfFormula, assign: &mut Vec<Val>) -> bool {
    match propagate(cnf, assign) {
        Propagation::Conflict => return false,
        Propagation::AllSatisfied => return true,
        Propagation::Open => {}
    }
    let Some(v) = assign.iter().position(|&a| a == Val::Unset) else {
        return false;
    };
    for choice in [Val::True, Val::False] {
        let mut trial = assign.clone();
        trial[v] = choice;
        if dpll(cnf, &mut trial) {
            *assign = trial;
            return true;
        }
    }
    false
}

/// Complete DPLL with unit propagation. Branches on the lowest unassigned
/// variable, `true` first. Variables left open once every clause is
/// satisfied are reported as `false`.
pub fn solve_sat(cnf: &CnfFormula) -> Option<Vec<bool>> {
    if cnf.clauses().iter().any(Vec::is_empty) {
        return None;
    }
    let mut assign = vec![Val::Unset; cnf.num_vars()];
    if !dpll(cnf, &mut assign) {
        return None;
    }
    Some(assign.into_iter().map(|a| a == Val::True).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contradiction() {
        let f = CnfFormula::new(1, vec![vec![Lit::pos(0)], vec![Lit::neg(0)]]).unwrap();
        assert_eq!(solve_sat(&f), None);
    }

    #[test]
    fn single_clause_prefers_true() {
        let f = CnfFormula::new(3, vec![vec![Lit::pos(0), Lit::pos(1), Lit::pos(2)]]).unwrap();
        let a = solve_sat(&f).unwrap();
        assert!(a[0]);
        assert!(f.is_satisfied_by(&a));
    }

    #[test]
    fn empty_clause_is_unsat() {
        let f = CnfFormula::new(1, vec![vec![]]).unwrap();
        assert_eq!(solve_sat(&f), None);
    }

    #[test]
    fn needs_backtracking() {
        // x1 -> x2, x1 -> !x2 forces x1 = false.
        let f = CnfFormula::new(
            2,
            vec![vec![Lit::neg(0), Lit::pos(1)], vec![Lit::neg(0), Lit::neg(1)]],
        )
        .unwrap();
        let a = solve_sat(&f).unwrap();
        assert!(!a[0]);
        assert!(f.is_satisfied_by(&a));
    }
}
