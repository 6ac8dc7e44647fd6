//! `n x n` Clique to arity-6 Permutation CSP.
//!
//! Elements are `d` dummies, `n` rows `r_i` and `n + 1` columns `c_j`.
//! The structural constraints pin the dummies first and the columns in
//! order; an optimal ordering then reads as a row selection, and each
//! edge contributes one constraint satisfied exactly when both endpoints
//! are selected.

use crate::csp::{Constraint, PermCspInstance};
use crate::error::{invalid, Result};
use crate::graph::GridGraph;
use crate::reductions::certificate::{Lineage, ReductionCertificate, ReductionKind};
use crate::validate::counts::target_perm6;

pub fn reduce_clique_to_perm6(g: &GridGraph, dummy_count: usize) -> Result<ReductionCertificate> {
    let n = g.side();
    if n == 0 {
        return Err(invalid("grid has no rows"));
    }
    if dummy_count < 2 * n {
        return Err(invalid(format!(
            "dummy count {dummy_count} is below 2n = {}",
            2 * n
        )));
    }
    let lin = Lineage {
        kind: ReductionKind::Perm6,
        n,
        degree_bound: None,
        dummies: dummy_count,
        delta_sum: None,
    };
    let (d, r, c) = (
        |a| lin.dummy(a),
        |i| lin.row(i),
        |j| lin.column(j),
    );

    let mut cons = Vec::new();
    for a in 0..dummy_count {
        for b in a + 1..dummy_count {
            for e in b + 1..dummy_count {
                for f in e + 1..dummy_count {
                    for j in 0..=n {
                        for jj in j + 1..=n {
                            cons.push(Constraint::from([d(a), d(b), d(e), d(f), c(j), c(jj)]));
                        }
                    }
                }
            }
        }
    }
    for i in 0..n {
        cons.push(Constraint::from([c(0), r(i), c(n)]));
    }
    for ((i, j), (k, l)) in g.edges() {
        if i == k {
            return Err(invalid(format!(
                "edge ({},{})-({},{}) lies inside a row",
                i + 1,
                j + 1,
                k + 1,
                l + 1
            )));
        }
        // Orient so the first endpoint has the smaller column, then the
        // smaller row.
        let ((ia, ja), (ib, jb)) = if (j, i) < (l, k) {
            ((i, j), (k, l))
        } else {
            ((k, l), (i, j))
        };
        let con = if jb >= ja + 2 {
            Constraint::from(vec![c(ja), r(ia), c(ja + 1), c(jb), r(ib), c(jb + 1)])
        } else if jb == ja + 1 {
            Constraint::from(vec![c(ja), r(ia), c(ja + 1), r(ib), c(ja + 2)])
        } else {
            Constraint::from(vec![c(ja), r(ia), r(ib), c(ja + 1)])
        };
        cons.push(con);
    }

    let instance = PermCspInstance::with_arity(lin.num_elements(), 6, cons)?;
    let target = target_perm6(n as u64, dummy_count as u64)?;
    Ok(ReductionCertificate {
        instance,
        target,
        lineage: lin,
    })
}
