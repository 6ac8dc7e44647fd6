//! Degree-constrained `2n x 2n` Biclique to arity-4 Permutation CSP.
//!
//! Elements are `d` dummies, `2n` rows and `2n + 1` columns. Each edge
//! `(i, j)(n + i', n + j')` yields four constraints (families crcr, crrc,
//! rcrc, rccr); in a convenient ordering with `r_i` in interval `p` and
//! `r_{n+i'}` in interval `q`, exactly `(1 + [j = p]) (1 + [n + j' = q])`
//! of them hold.

use crate::csp::{Constraint, PermCspInstance};
use crate::error::{invalid, Result};
use crate::graph::{GridGraph, Layout};
use crate::reductions::certificate::{Lineage, ReductionCertificate, ReductionKind};
use crate::validate::conditions::{check_biclique_structure, check_regularity, check_stability};
use crate::validate::counts::target_perm4;

pub fn reduce_dcnnb_to_perm4(
    h: &GridGraph,
    degree_bound: usize,
    dummy_count: usize,
) -> Result<ReductionCertificate> {
    let side = h.side();
    if side == 0 || side % 2 == 1 {
        return Err(invalid(format!("biclique instance needs a positive even side, got {side}")));
    }
    let n = side / 2;
    let recorded = h
        .delta_table
        .as_ref()
        .ok_or_else(|| invalid("biclique instance carries no Delta table"))?;
    let sym = check_biclique_structure(h)?;
    let reg = check_regularity(h, Layout::Biclique);
    let stab = check_stability(h, Layout::Biclique, degree_bound);
    for report in [&sym, &reg.report, &stab.report] {
        if !report.holds() {
            return Err(invalid(format!(
                "biclique instance fails {}: {}",
                report.condition, report.violations[0]
            )));
        }
    }
    let delta = reg.delta.expect("regularity holds");
    for i in 0..n {
        for k in n..side {
            if recorded.side() != side || recorded.get(i, k) != delta.get(i, k) {
                return Err(invalid(format!(
                    "recorded Delta for rows {} {} disagrees with the graph",
                    i + 1,
                    k + 1
                )));
            }
        }
    }
    if dummy_count < 2 * degree_bound * n {
        return Err(invalid(format!(
            "dummy count {dummy_count} is below 2Dn = {}",
            2 * degree_bound * n
        )));
    }
    let delta_sum = delta
        .cross_sum()
        .ok_or(crate::error::Error::Overflow("Delta sum"))?;

    let lin = Lineage {
        kind: ReductionKind::Perm4,
        n,
        degree_bound: Some(degree_bound),
        dummies: dummy_count,
        delta_sum: Some(delta_sum),
    };
    let (d, r, c) = (|a| lin.dummy(a), |i| lin.row(i), |j| lin.column(j));

    let mut cons = Vec::new();
    for a in 0..dummy_count {
        for b in a + 1..dummy_count {
            for j in 0..=side {
                for jj in j + 1..=side {
                    cons.push(Constraint::from([d(a), d(b), c(j), c(jj)]));
                }
            }
        }
    }
    for ((i, j), (k, l)) in h.edges() {
        cons.push(Constraint::from([c(j), r(i), c(l), r(k)]));
        cons.push(Constraint::from([c(j), r(i), r(k), c(l + 1)]));
        cons.push(Constraint::from([r(i), c(j + 1), r(k), c(l + 1)]));
        if j + 1 == l {
            if dummy_count == 0 {
                return Err(invalid("the degenerate rccr constraint needs a dummy"));
            }
            cons.push(Constraint::from([d(0), r(i), c(n), r(k)]));
        } else {
            cons.push(Constraint::from([r(i), c(j + 1), c(l), r(k)]));
        }
    }

    let instance = PermCspInstance::with_arity(lin.num_elements(), 4, cons)?;
    let target = target_perm4(n as u64, dummy_count as u64, delta_sum)?;
    Ok(ReductionCertificate {
        instance,
        target,
        lineage: lin,
    })
}
