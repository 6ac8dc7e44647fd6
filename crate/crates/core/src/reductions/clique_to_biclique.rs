//! Degree-constrained Clique to degree-constrained Biclique by doubling.

use crate::error::{invalid, Error, Result};
use crate::graph::{GridGraph, Layout, RowSelection};
use crate::validate::{check_biclique_structure, check_regularity, check_stability};

/// Builds `H` on `[2n] x [2n]` with `(i, j)(n + i', n + j')` an edge iff
/// `(i, j)(i', j')` is an edge of `g` or `(i, j) = (i', j')`.
///
/// Stability of `H` is checked against `D + 1`: the partner row `n + i`
/// of row `i` always changes between consecutive columns because of the
/// diagonal edges. The output records that bound.
pub fn reduce_dcnnc_to_dcnnb(g: &GridGraph) -> Result<GridGraph> {
    let d = g
        .degree_bound
        .ok_or_else(|| invalid("clique instance carries no degree bound D"))?;
    if !g.rows_independent() {
        return Err(invalid("clique instance has an edge inside a row"));
    }
    let reg = check_regularity(g, Layout::Clique);
    if !reg.report.holds() {
        return Err(invalid(format!(
            "clique instance is not regular: {}",
            reg.report.violations[0]
        )));
    }
    let stab = check_stability(g, Layout::Clique, d);
    if !stab.report.holds() {
        return Err(invalid(format!(
            "clique instance is not stable for D = {d}: {}",
            stab.report.violations[0]
        )));
    }

    let n = g.side();
    let mut h = GridGraph::new(2 * n);
    for i in 0..n {
        for j in 0..n {
            h.add_edge((i, j), (n + i, n + j))?;
        }
    }
    for ((i, j), (k, l)) in g.edges() {
        h.add_edge((i, j), (n + k, n + l))?;
        h.add_edge((k, l), (n + i, n + j))?;
    }

    let sym = check_biclique_structure(&h)?;
    let reg = check_regularity(&h, Layout::Biclique);
    let stab = check_stability(&h, Layout::Biclique, d + 1);
    for report in [&sym, &reg.report, &stab.report] {
        if !report.holds() {
            return Err(Error::InternalConsistency(format!(
                "doubled instance fails {}: {}",
                report.condition, report.violations[0]
            )));
        }
    }
    h.delta_table = reg.delta;
    h.degree_bound = Some(d + 1);
    Ok(h)
}

/// `(i, j) -> {(i, j), (n + i, n + j)}`.
pub fn map_clique_to_biclique(sel: &RowSelection) -> RowSelection {
    let n = sel.choice.len();
    let mut choice = sel.choice.clone();
    choice.extend(sel.choice.iter().map(|&j| n + j));
    RowSelection::new(choice)
}

/// Keeps the top half of a biclique selection.
pub fn map_biclique_to_clique(sel: &RowSelection) -> Result<RowSelection> {
    let side = sel.choice.len();
    if side % 2 == 1 {
        return Err(invalid("biclique selection has an odd number of rows"));
    }
    let n = side / 2;
    let top = &sel.choice[..n];
    if top.iter().any(|&j| j >= n) {
        return Err(invalid("top-half row selects a bottom-half column"));
    }
    Ok(RowSelection::new(top.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{solve_row_biclique, solve_row_clique};

    #[test]
    fn single_vertex_gives_single_edge() {
        let mut g = GridGraph::new(1);
        g.degree_bound = Some(0);
        let h = reduce_dcnnc_to_dcnnb(&g).unwrap();
        assert_eq!(h.edges(), vec![((0, 0), (1, 1))]);
        assert_eq!(h.delta_table.unwrap().cross_sum(), Some(1));
    }

    #[test]
    fn edge_count_and_witness() {
        // Two rows joined by the matching j -- j.
        let mut g = GridGraph::new(2);
        g.add_edge((0, 0), (1, 0)).unwrap();
        g.add_edge((0, 1), (1, 1)).unwrap();
        g.degree_bound = Some(1);
        let h = reduce_dcnnc_to_dcnnb(&g).unwrap();
        assert_eq!(h.num_edges(), 2 * g.num_edges() + 4);
        let sel = solve_row_clique(&g).unwrap();
        let hb = map_clique_to_biclique(&sel);
        assert!(hb.is_row_biclique(&h));
        let found = solve_row_biclique(&h).unwrap().unwrap();
        assert!(map_biclique_to_clique(&found).unwrap().is_row_clique(&g));
    }

    #[test]
    fn needs_degree_bound() {
        assert!(reduce_dcnnc_to_dcnnb(&GridGraph::new(2)).is_err());
    }
}
