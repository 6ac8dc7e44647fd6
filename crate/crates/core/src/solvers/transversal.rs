//! Row-transversal clique and biclique search on grid graphs.
//!
//! Backtracking over rows with arc consistency maintained: every row keeps
//! the columns that still have a compatible column in each linked row, and
//! a row whose set runs empty cuts the branch. The next row minimizes
//! distinct candidate neighborhoods over accumulated wipe-out weight
//! (ties by index). Columns of a row with identical
//! neighborhoods lead to identical subtrees; only the first of each such
//! class is tried.

use std::collections::{HashMap, VecDeque};

use crate::error::{invalid, Result};
use crate::graph::{ColumnSet, GridGraph, RowSelection};
use crate::validate::check_biclique_structure;

struct Search<'a> {
    g: &'a GridGraph,
    side: usize,
    /// `linked[i][k]`: selected vertices of rows `i` and `k` must be adjacent.
    linked: Vec<Vec<bool>>,
    class_of: Vec<Vec<u32>>,
    stamp: Vec<u64>,
    epoch: u64,
    nodes: u64,
    /// Failure counts per row pair, steering the row choice toward rows
    /// that keep causing wipe-outs.
    weight: Vec<Vec<u64>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a GridGraph, linked: Vec<Vec<bool>>) -> Self {
        let side = g.side();
        let mut class_of = vec![vec![0u32; side]; side];
        let mut max_classes = 0;
        for (i, row) in class_of.iter_mut().enumerate() {
            let mut ids: HashMap<Vec<u64>, u32> = HashMap::new();
            for (j, slot) in row.iter_mut().enumerate() {
                let key: Vec<u64> = (0..side)
                    .flat_map(|k| g.row_neighbors(i, j, k).iter().copied())
                    .collect();
                let next = ids.len() as u32;
                *slot = *ids.entry(key).or_insert(next);
            }
            max_classes = max_classes.max(ids.len());
        }
        Search {
            g,
            side,
            linked,
            class_of,
            stamp: vec![0; max_classes.max(1)],
            epoch: 0,
            nodes: 0,
            weight: vec![vec![0; side]; side],
        }
    }

    fn distinct_classes(&mut self, row: usize, cands: &ColumnSet) -> usize {
        self.epoch += 1;
        let mut count = 0;
        for j in cands.iter() {
            let c = self.class_of[row][j] as usize;
            if self.stamp[c] != self.epoch {
                self.stamp[c] = self.epoch;
                count += 1;
            }
        }
        count
    }

    /// Arc consistency: drops every column with no compatible column left
    /// in some linked row. Returns false when a row runs empty.
    fn propagate(&mut self, cands: &mut [ColumnSet], start: impl IntoIterator<Item = usize>) -> bool {
        let mut queued = vec![false; self.side];
        let mut queue = VecDeque::new();
        for k in start {
            queued[k] = true;
            queue.push_back(k);
        }
        while let Some(src) = queue.pop_front() {
            queued[src] = false;
            for k in 0..self.side {
                if k == src || !self.linked[k][src] {
                    continue;
                }
                let before = cands[k].clone();
                let mut changed = false;
                for j in before.iter() {
                    if !cands[src].meets(self.g.row_neighbors(k, j, src)) {
                        cands[k].remove(j);
                        changed = true;
                    }
                }
                if changed {
                    if cands[k].is_empty() {
                        self.weight[k][src] += 1;
                        self.weight[src][k] += 1;
                        return false;
                    }
                    if !queued[k] {
                        queued[k] = true;
                        queue.push_back(k);
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, cands: &mut [ColumnSet], chosen: &mut [Option<usize>]) -> bool {
        self.nodes += 1;
        // Fewest candidate classes per unit of failure weight, ties by index.
        let mut pick: Option<(usize, usize, u64)> = None;
        for i in 0..self.side {
            if chosen[i].is_some() {
                continue;
            }
            let classes = self.distinct_classes(i, &cands[i]);
            if classes == 0 {
                return false;
            }
            let w = 1 + (0..self.side)
                .filter(|&k| chosen[k].is_none())
                .map(|k| self.weight[i][k])
                .sum::<u64>();
            let better = match pick {
                None => true,
                Some((_, bc, bw)) => (classes as u64) * bw < (bc as u64) * w,
            };
            if better {
                pick = Some((i, classes, w));
            }
        }
        let Some((row, _, _)) = pick else {
            return true;
        };

        let options: Vec<usize> = cands[row].iter().collect();
        let mut tried: Vec<u32> = Vec::new();
        for j in options {
            let class = self.class_of[row][j];
            if tried.contains(&class) {
                continue;
            }
            tried.push(class);

            let mut next = cands.to_vec();
            next[row] = ColumnSet::empty(self.side);
            next[row].insert(j);
            if !self.propagate(&mut next, [row]) {
                continue;
            }
            chosen[row] = Some(j);
            if self.run(&mut next, chosen) {
                cands.clone_from_slice(&next);
                return true;
            }
            chosen[row] = None;
        }
        false
    }
}

/// Outcome of a transversal search, with the number of search nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalResult {
    pub selection: Option<RowSelection>,
    pub nodes_explored: u64,
}

fn search(g: &GridGraph, linked: Vec<Vec<bool>>, cands: Vec<ColumnSet>) -> TransversalResult {
    let side = g.side();
    let mut s = Search::new(g, linked);
    let mut cands = cands;
    let mut chosen = vec![None; side];
    let found = s.propagate(&mut cands, 0..side) && s.run(&mut cands, &mut chosen);
    TransversalResult {
        selection: found.then(|| RowSelection::new(chosen.into_iter().map(|c| c.unwrap()).collect())),
        nodes_explored: s.nodes,
    }
}

/// One vertex per row, pairwise adjacent.
pub fn solve_row_clique(g: &GridGraph) -> Option<RowSelection> {
    solve_row_clique_counted(g).selection
}

pub fn solve_row_clique_counted(g: &GridGraph) -> TransversalResult {
    let side = g.side();
    let linked = (0..side)
        .map(|i| (0..side).map(|k| i != k).collect())
        .collect();
    search(g, linked, vec![ColumnSet::full(side); side])
}

/// One vertex per row of a `2n x 2n` biclique instance such that every
/// top-half selection is adjacent to every bottom-half selection. Top rows
/// choose among columns `0..n`, bottom rows among `n..2n`.
pub fn solve_row_biclique(h: &GridGraph) -> Result<Option<RowSelection>> {
    Ok(solve_row_biclique_counted(h)?.selection)
}

pub fn solve_row_biclique_counted(h: &GridGraph) -> Result<TransversalResult> {
    let report = check_biclique_structure(h)?;
    if !report.holds() {
        return Err(invalid(format!(
            "not a biclique instance: {}",
            report.violations[0]
        )));
    }
    let side = h.side();
    let n = side / 2;
    let linked = (0..side)
        .map(|i| (0..side).map(|k| (i < n) != (k < n)).collect())
        .collect();
    let cands = (0..side)
        .map(|i| {
            let mut s = ColumnSet::empty(side);
            let cols = if i < n { 0..n } else { n..side };
            for j in cols {
                s.insert(j);
            }
            s
        })
        .collect();
    Ok(search(h, linked, cands))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_multipartite(n: usize) -> GridGraph {
        let mut g = GridGraph::new(n);
        for i in 0..n {
            for k in i + 1..n {
                for j in 0..n {
                    for l in 0..n {
                        g.add_edge((i, j), (k, l)).unwrap();
                    }
                }
            }
        }
        g
    }

    #[test]
    fn complete_multipartite_gives_first_selection() {
        let g = complete_multipartite(3);
        assert_eq!(solve_row_clique(&g), Some(RowSelection::new(vec![0, 0, 0])));
    }

    #[test]
    fn edgeless_has_no_clique() {
        assert_eq!(solve_row_clique(&GridGraph::new(2)), None);
        assert!(solve_row_clique(&GridGraph::new(1)).is_some());
    }

    #[test]
    fn finds_hidden_clique() {
        let mut g = GridGraph::new(3);
        g.add_edge((0, 2), (1, 1)).unwrap();
        g.add_edge((0, 2), (2, 0)).unwrap();
        g.add_edge((1, 1), (2, 0)).unwrap();
        g.add_edge((0, 0), (1, 0)).unwrap();
        let s = solve_row_clique(&g).unwrap();
        assert_eq!(s.choice, vec![2, 1, 0]);
        assert!(s.is_row_clique(&g));
    }

    #[test]
    fn biclique_single_edge() {
        let mut h = GridGraph::new(2);
        h.add_edge((0, 0), (1, 1)).unwrap();
        assert_eq!(
            solve_row_biclique(&h).unwrap(),
            Some(RowSelection::new(vec![0, 1]))
        );
        assert_eq!(solve_row_biclique(&GridGraph::new(2)).unwrap(), None);
    }

    #[test]
    fn biclique_rejects_bad_structure() {
        let mut h = GridGraph::new(4);
        h.add_edge((0, 0), (1, 1)).unwrap();
        assert!(solve_row_biclique(&h).is_err());
    }
}
