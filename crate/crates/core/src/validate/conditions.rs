//! Checkers for the degree-constraint conditions on grid graphs.
//!
//! Everything is recomputed from adjacency; Delta tables or stable row
//! sets carried by a graph are never trusted.

use std::fmt;

use crate::error::{invalid, Result};
use crate::graph::{DeltaTable, GridGraph, Layout};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionId {
    Regularity,
    Stability,
    BicliqueSymmetry,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditionId::Regularity => "regularity",
            ConditionId::Stability => "stability",
            ConditionId::BicliqueSymmetry => "bipartite-symmetry",
        })
    }
}

/// One offending location, 0-based internally and 1-based when displayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionViolation {
    pub row: usize,
    pub other_row: usize,
    pub column: Option<usize>,
    pub detail: String,
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rows {} {}", self.row + 1, self.other_row + 1)?;
        if let Some(c) = self.column {
            write!(f, " column {}", c + 1)?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: ConditionId,
    pub violations: Vec<ConditionViolation>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// Line-oriented rendering: a status line, then one `violation` line
    /// per breach.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        if self.holds() {
            out.push_str(&format!("condition {} holds\n", self.condition));
        } else {
            out.push_str(&format!(
                "condition {} fails {}\n",
                self.condition,
                self.violations.len()
            ));
            for v in &self.violations {
                out.push_str(&format!("violation {v}\n"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub report: ConditionReport,
    /// The recomputed Delta table, when the condition holds.
    pub delta: Option<DeltaTable>,
}

/// Rows, the columns their vertices range over, and the partner rows
/// the condition is about.
fn ranges(
    side: usize,
    layout: Layout,
) -> (std::ops::Range<usize>, std::ops::Range<usize>, std::ops::Range<usize>) {
    match layout {
        Layout::Clique => (0..side, 0..side, 0..side),
        Layout::Biclique => {
            let n = side / 2;
            (0..n, 0..n, n..side)
        }
    }
}

/// Checks that `deg((i, j), R_k)` does not depend on `j`.
///
/// For the clique layout every ordered row pair is checked over all
/// columns. For the biclique layout only top rows against bottom rows,
/// over the first `n` columns.
pub fn check_regularity(g: &GridGraph, layout: Layout) -> RegularityReport {
    let side = g.side();
    let (rows, cols, partners) = ranges(side, layout);
    let mut delta = DeltaTable::zeros(side);
    let mut violations = Vec::new();
    for i in rows {
        for k in partners.clone() {
            let mut expected = None;
            for j in cols.clone() {
                let d = g.degree_into_row(i, j, k);
                match expected {
                    None => expected = Some(d),
                    Some(e) if e != d => violations.push(ConditionViolation {
                        row: i,
                        other_row: k,
                        column: Some(j),
                        detail: format!("degree {d}, expected {e}"),
                    }),
                    _ => {}
                }
            }
            delta.set(i, k, expected.unwrap_or(0));
        }
    }
    let holds = violations.is_empty();
    RegularityReport {
        report: ConditionReport {
            condition: ConditionId::Regularity,
            violations,
        },
        delta: holds.then_some(delta),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub report: ConditionReport,
    /// `stable_rows[i][j]` lists the rows `k` with
    /// `N(i, j) & R_k == N(i, j + 1) & R_k`.
    pub stable_rows: Vec<Vec<Vec<usize>>>,
}

/// Checks that consecutive columns of a row see identical neighborhoods
/// in all but at most `d` partner rows.
pub fn check_stability(g: &GridGraph, layout: Layout, d: usize) -> StabilityReport {
    let side = g.side();
    let (rows, cols, partners) = ranges(side, layout);
    let mut violations = Vec::new();
    let mut stable_rows = Vec::new();
    for i in rows {
        let mut per_col = Vec::new();
        for j in cols.clone().take(cols.len().saturating_sub(1)) {
            let stable: Vec<usize> = partners
                .clone()
                .filter(|&k| g.row_neighbors(i, j, k) == g.row_neighbors(i, j + 1, k))
                .collect();
            let unstable = partners.len() - stable.len();
            if unstable > d {
                violations.push(ConditionViolation {
                    row: i,
                    other_row: i,
                    column: Some(j),
                    detail: format!("{unstable} rows change between columns, bound {d}"),
                });
            }
            per_col.push(stable);
        }
        stable_rows.push(per_col);
    }
    StabilityReport {
        report: ConditionReport {
            condition: ConditionId::Stability,
            violations,
        },
        stable_rows,
    }
}

/// Checks the bipartite layout of a `2n x 2n` instance: every edge joins
/// the top-left quadrant to the bottom-right one, and
/// `(i, j)(n + i', n + j')` is an edge iff `(i', j')(n + i, n + j)` is.
pub fn check_biclique_structure(h: &GridGraph) -> Result<ConditionReport> {
    let side = h.side();
    if side % 2 == 1 {
        return Err(invalid(format!("biclique instance needs an even side, got {side}")));
    }
    let n = side / 2;
    let mut violations = Vec::new();
    for ((i, j), (k, l)) in h.edges() {
        let ok = i < n && j < n && k >= n && l >= n;
        if !ok {
            violations.push(ConditionViolation {
                row: i,
                other_row: k,
                column: Some(j),
                detail: format!(
                    "edge ({},{})-({},{}) leaves the quadrant structure",
                    i + 1,
                    j + 1,
                    k + 1,
                    l + 1
                ),
            });
            continue;
        }
        let mirror = ((k - n, l - n), (n + i, n + j));
        if !h.has_edge(mirror.0, mirror.1) {
            violations.push(ConditionViolation {
                row: i,
                other_row: k,
                column: Some(j),
                detail: format!(
                    "edge ({},{})-({},{}) has no mirror ({},{})-({},{})",
                    i + 1,
                    j + 1,
                    k + 1,
                    l + 1,
                    mirror.0 .0 + 1,
                    mirror.0 .1 + 1,
                    mirror.1 .0 + 1,
                    mirror.1 .1 + 1
                ),
            });
        }
    }
    Ok(ConditionReport {
        condition: ConditionId::BicliqueSymmetry,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular_pair() -> GridGraph {
        // Rows 0 and 1 joined by a perfect matching j -- j.
        let mut g = GridGraph::new(2);
        g.add_edge((0, 0), (1, 0)).unwrap();
        g.add_edge((0, 1), (1, 1)).unwrap();
        g
    }

    #[test]
    fn edgeless_grid_is_regular_and_stable() {
        let g = GridGraph::new(3);
        let r = check_regularity(&g, Layout::Clique);
        assert!(r.report.holds());
        assert_eq!(r.delta.unwrap(), DeltaTable::zeros(3));
        assert!(check_stability(&g, Layout::Clique, 0).report.holds());
        assert!(check_biclique_structure(&GridGraph::new(4)).unwrap().holds());
    }

    #[test]
    fn extra_edge_breaks_regularity() {
        let mut g = regular_pair();
        assert_eq!(check_regularity(&g, Layout::Clique).delta.unwrap().get(0, 1), 1);
        g.add_edge((0, 0), (1, 1)).unwrap();
        let r = check_regularity(&g, Layout::Clique);
        assert!(!r.report.holds());
        assert!(r.delta.is_none());
        let v = &r.report.violations[0];
        assert_eq!((v.row, v.other_row, v.column), (0, 1, Some(1)));
        assert!(r.report.to_lines().starts_with("condition regularity fails"));
    }

    #[test]
    fn matching_is_unstable_in_one_row() {
        let g = regular_pair();
        let s = check_stability(&g, Layout::Clique, 0);
        assert!(!s.report.holds());
        let s = check_stability(&g, Layout::Clique, 1);
        assert!(s.report.holds());
        // Row 0 itself is always stable (rows are independent).
        assert_eq!(s.stable_rows[0][0], vec![0]);
    }

    #[test]
    fn biclique_structure_violations() {
        let mut h = GridGraph::new(4);
        h.add_edge((0, 0), (1, 1)).unwrap();
        let r = check_biclique_structure(&h).unwrap();
        assert!(!r.holds());

        let mut h = GridGraph::new(4);
        h.add_edge((0, 1), (2, 2)).unwrap();
        assert!(!check_biclique_structure(&h).unwrap().holds());
        h.add_edge((0, 0), (2, 3)).unwrap();
        assert!(check_biclique_structure(&h).unwrap().holds());
        assert!(check_biclique_structure(&GridGraph::new(3)).is_err());
    }
}
