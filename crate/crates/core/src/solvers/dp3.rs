//! Subset dynamic programming for instances of arity at most 3.
//!
//! Build the ordering left to right. When a variable `v` is appended after
//! the already placed set `S`, the constraints whose fate is decided right
//! now are exactly those in which `v` is the last element that still matters:
//!
//! * a unary constraint `(v)` is always satisfied;
//! * a pair `(a, v)` is satisfied iff `a` is in `S`;
//! * a triple `(a, v, c)`, keyed on its *middle* element, is satisfied iff
//!   `a` is in `S` and `c` is not in `S + v`.
//!
//! The last rule is the whole trick: `pi(a) < pi(v) < pi(c)` holds exactly
//! when, at the moment `v` is placed, `a` is already down and `c` is not.
//! The gain therefore only depends on `(S, v)`, every constraint is counted
//! once (at its middle or last element), and
//!
//! ```text
//! f(empty) = 0
//! f(T)     = max over v in T of f(T - v) + gain(v, T - v)
//! ```
//!
//! gives the optimum as `f(V)` in `O(2^n * (n + m))` time. Arity 4 breaks
//! this: a quadruple `(a, b, c, d)` needs the relative order of two placed
//! or two unplaced elements, which a set cannot remember.

use crate::csp::{Ordering, PermCspInstance};
use crate::error::{Error, Result};
use crate::solvers::SolveResult;

pub const DEFAULT_DP_LIMIT: usize = 24;

#[derive(Default, Clone)]
struct Gains {
    unary: u64,
    /// Predecessors of pair constraints ending at this variable.
    pairs: Vec<u32>,
    /// `(first, last)` of triples whose middle is this variable.
    triples: Vec<(u32, u32)>,
}

impl Gains {
    #[inline]
    fn gain(&self, placed: u32) -> u64 {
        let mut g = self.unary;
        for &a in &self.pairs {
            g += (placed >> a & 1) as u64;
        }
        for &(a, c) in &self.triples {
            g += ((placed >> a & 1) & !(placed >> c) & 1) as u64;
        }
        g
    }
}

/// Exact optimum for arity <= 3 via subset DP, with the default size cap.
pub fn solve_dp3(instance: &PermCspInstance) -> Result<SolveResult> {
    solve_dp3_with_limit(instance, DEFAULT_DP_LIMIT)
}

/// Like [`solve_dp3`] with an explicit cap on the variable count.
/// Ties go to the smallest variable as the last placed element.
pub fn solve_dp3_with_limit(instance: &PermCspInstance, limit: usize) -> Result<SolveResult> {
    let arity = instance.max_constraint_len();
    if arity > 3 {
        return Err(Error::UnsupportedArity { arity });
    }
    let n = instance.num_vars();
    let limit = limit.min(31);
    if n > limit {
        return Err(Error::SizeLimit {
            what: "variable count",
            value: n as u64,
            limit: limit as u64,
        });
    }

    let mut gains = vec![Gains::default(); n];
    for c in instance.constraints() {
        match *c.vars() {
            [v] => gains[v as usize].unary += 1,
            [a, v] => gains[v as usize].pairs.push(a),
            [a, v, c] => gains[v as usize].triples.push((a, c)),
            _ => unreachable!("arity checked above"),
        }
    }

    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let size = 1usize << n;
    let mut best = vec![0u64; size];
    let mut last = vec![0u8; size];
    for t in 1..size as u32 {
        let mut top = 0u64;
        let mut arg = u8::MAX;
        let mut rest = t;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let s = t & !(1 << v);
            let val = best[s as usize] + gains[v as usize].gain(s);
            if arg == u8::MAX || val > top {
                top = val;
                arg = v as u8;
            }
        }
        best[t as usize] = top;
        last[t as usize] = arg;
    }

    let mut seq = vec![0u32; n];
    let mut t = full;
    for slot in (0..n).rev() {
        let v = last[t as usize] as u32;
        seq[slot] = v;
        t &= !(1 << v);
    }
    Ok(SolveResult {
        optimum: best[full as usize],
        witness: Ordering::from_sequence(&seq)?,
        nodes_explored: size as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csp::{evaluate, Constraint};

    fn inst(n: usize, cs: &[&[u32]]) -> PermCspInstance {
        PermCspInstance::new(n, cs.iter().map(|c| Constraint::new(c.to_vec())).collect()).unwrap()
    }

    #[test]
    fn empty_constraint_set() {
        let r = solve_dp3(&PermCspInstance::new(4, vec![]).unwrap()).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.witness.len(), 4);
    }

    #[test]
    fn contradictory_triples() {
        let i = inst(3, &[&[0, 1, 2], &[0, 2, 1]]);
        let r = solve_dp3(&i).unwrap();
        assert_eq!(r.optimum, 1);
        assert_eq!(evaluate(&i, &r.witness).unwrap(), 1);
    }

    #[test]
    fn feedback_arc_set_cycle() {
        // A directed 3-cycle: any ordering keeps exactly two arcs.
        let i = inst(3, &[&[0, 1], &[1, 2], &[2, 0]]);
        assert_eq!(solve_dp3(&i).unwrap().optimum, 2);
    }

    #[test]
    fn betweenness() {
        // 2 between 1 and 3, and 3 between 1 and 2: only one can hold.
        let i = inst(3, &[&[0, 1, 2], &[2, 1, 0], &[0, 2, 1], &[1, 2, 0]]);
        let r = solve_dp3(&i).unwrap();
        assert_eq!(r.optimum, 1);
        assert_eq!(evaluate(&i, &r.witness).unwrap(), 1);
    }

    #[test]
    fn arity_four_is_refused() {
        let i = inst(4, &[&[0, 1, 2, 3]]);
        assert!(matches!(solve_dp3(&i), Err(Error::UnsupportedArity { arity: 4 })));
    }

    #[test]
    fn size_cap() {
        let i = PermCspInstance::new(6, vec![]).unwrap();
        assert!(matches!(
            solve_dp3_with_limit(&i, 5),
            Err(Error::SizeLimit { .. })
        ));
    }
}
