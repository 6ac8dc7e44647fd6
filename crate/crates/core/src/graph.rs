//! Simple graphs and grid graphs on `[side] x [side]`.

use std::collections::BTreeSet;

use crate::error::{invalid, Result};

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    /// Adds `uv`. Loops and out-of-range endpoints are rejected; repeated
    /// edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(invalid(format!("edge ({u},{v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    /// True when `colors` assigns distinct colors to every edge's endpoints.
    pub fn is_proper_coloring(&self, colors: &[u8]) -> bool {
        colors.len() == self.num_vertices() && self.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    }
}

/// A set of columns of one row, stored as a bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnSet {
    words: Vec<u64>,
}

impl ColumnSet {
    pub fn empty(side: usize) -> Self {
        ColumnSet {
            words: vec![0; words_for(side)],
        }
    }

    pub fn full(side: usize) -> Self {
        let mut s = Self::empty(side);
        for j in 0..side {
            s.insert(j);
        }
        s
    }

    pub fn from_words(words: &[u64]) -> Self {
        ColumnSet {
            words: words.to_vec(),
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn insert(&mut self, j: usize) {
        self.words[j / 64] |= 1 << (j % 64);
    }

    pub fn remove(&mut self, j: usize) {
        self.words[j / 64] &= !(1 << (j % 64));
    }

    pub fn contains(&self, j: usize) -> bool {
        self.words[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when the set shares a column with `other`.
    pub fn meets(&self, other: &[u64]) -> bool {
        self.words.iter().zip(other).any(|(a, b)| a & b != 0)
    }

    pub fn intersect_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

fn words_for(side: usize) -> usize {
    side.div_ceil(64).max(1)
}

/// How the rows of a grid graph are meant to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// `n x n` clique instance: one vertex per row, all pairs adjacent.
    Clique,
    /// `2n x 2n` biclique instance: edges only between the top-left and
    /// bottom-right quadrants.
    Biclique,
}

/// A graph on `[side] x [side]`. Row `i` is `{(i, j) : j in [side]}`.
///
/// Adjacency is stored per (vertex, row) as a column bitset, so the
/// neighborhood of `(i, j)` inside row `k` is a single slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    side: usize,
    words: usize,
    adj: Vec<u64>,
    /// Degree-constraint parameter `D`, when known.
    pub degree_bound: Option<usize>,
    /// Advisory row-pair degree table; checkers recompute it.
    pub delta_table: Option<DeltaTable>,
}

impl GridGraph {
    pub fn new(side: usize) -> Self {
        let words = words_for(side);
        GridGraph {
            side,
            words,
            adj: vec![0; side * side * side * words],
            degree_bound: None,
            delta_table: None,
        }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    #[inline]
    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.side + j) * self.side + k) * self.words
    }

    /// Neighbors of `(i, j)` inside row `k`, as bitset words.
    #[inline]
    pub fn row_neighbors(&self, i: usize, j: usize, k: usize) -> &[u64] {
        let s = self.slot(i, j, k);
        &self.adj[s..s + self.words]
    }

    pub fn row_neighbor_set(&self, i: usize, j: usize, k: usize) -> ColumnSet {
        ColumnSet::from_words(self.row_neighbors(i, j, k))
    }

    pub fn has_edge(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        let s = self.slot(a.0, a.1, b.0);
        self.adj[s + b.1 / 64] >> (b.1 % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, a: (usize, usize), b: (usize, usize)) -> Result<()> {
        let n = self.side;
        if a.0 >= n || a.1 >= n || b.0 >= n || b.1 >= n {
            return Err(invalid(format!("edge {a:?}-{b:?} outside a {n}x{n} grid")));
        }
        if a == b {
            return Err(invalid(format!("self-loop at {a:?}")));
        }
        let s = self.slot(a.0, a.1, b.0);
        self.adj[s + b.1 / 64] |= 1 << (b.1 % 64);
        let s = self.slot(b.0, b.1, a.0);
        self.adj[s + a.1 / 64] |= 1 << (a.1 % 64);
        Ok(())
    }

    /// `deg((i, j), R_k)`.
    pub fn degree_into_row(&self, i: usize, j: usize, k: usize) -> u64 {
        self.row_neighbors(i, j, k)
            .iter()
            .map(|w| w.count_ones() as u64)
            .sum()
    }

    /// Edges as `((i1, j1), (i2, j2))` with the first endpoint
    /// lexicographically smaller, sorted.
    pub fn edges(&self) -> Vec<((usize, usize), (usize, usize))> {
        let n = self.side;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in i..n {
                    let set = ColumnSet::from_words(self.row_neighbors(i, j, k));
                    for l in set.iter() {
                        if (k, l) > (i, j) {
                            out.push(((i, j), (k, l)));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        let total: u64 = self.adj.iter().map(|w| w.count_ones() as u64).sum();
        (total / 2) as usize
    }

    /// Number of edges among the vertices `(i, choice[i])`.
    pub fn induced_edges(&self, choice: &[usize]) -> u64 {
        let mut count = 0;
        for (i, &j) in choice.iter().enumerate() {
            for (k, &l) in choice.iter().enumerate().skip(i + 1) {
                if self.has_edge((i, j), (k, l)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// True when no edge joins two vertices of the same row.
    pub fn rows_independent(&self) -> bool {
        (0..self.side).all(|i| (0..self.side).all(|j| self.degree_into_row(i, j, i) == 0))
    }
}

/// Row-pair degree constants `Delta^{ik}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTable {
    side: usize,
    values: Vec<u64>,
}

impl DeltaTable {
    pub fn zeros(side: usize) -> Self {
        DeltaTable {
            side,
            values: vec![0; side * side],
        }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn get(&self, i: usize, k: usize) -> u64 {
        self.values[i * self.side + k]
    }

    pub fn set(&mut self, i: usize, k: usize, v: u64) {
        self.values[i * self.side + k] = v;
    }

    /// `sum_{i <= n < k} Delta^{ik}` for a `2n x 2n` table.
    pub fn cross_sum(&self) -> Option<u64> {
        let n = self.side / 2;
        let mut total: u64 = 0;
        for i in 0..n {
            for k in n..self.side {
                total = total.checked_add(self.get(i, k))?;
            }
        }
        Some(total)
    }
}

/// One vertex per row: `choice[i]` is the selected column of row `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowSelection {
    pub choice: Vec<usize>,
}

impl RowSelection {
    pub fn new(choice: Vec<usize>) -> Self {
        RowSelection { choice }
    }

    /// True when the selected vertices are pairwise adjacent in `g`.
    pub fn is_row_clique(&self, g: &GridGraph) -> bool {
        let n = g.side();
        self.choice.len() == n
            && self.choice.iter().all(|&j| j < n)
            && (0..n).all(|i| {
                (i + 1..n).all(|k| g.has_edge((i, self.choice[i]), (k, self.choice[k])))
            })
    }

    /// True when every top-half selected vertex is adjacent to every
    /// bottom-half one.
    pub fn is_row_biclique(&self, h: &GridGraph) -> bool {
        let side = h.side();
        let n = side / 2;
        self.choice.len() == side
            && side % 2 == 0
            && self.choice.iter().all(|&j| j < side)
            && (0..n).all(|i| {
                (n..side).all(|k| h.has_edge((i, self.choice[i]), (k, self.choice[k])))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_graph_edges_sorted_and_deduplicated() {
        let g = SimpleGraph::from_edges(4, &[(2, 1), (0, 3), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 3), (1, 2)]);
        assert_eq!(g.num_edges(), 2);
        assert!(SimpleGraph::from_edges(2, &[(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn grid_adjacency_is_symmetric() {
        let mut g = GridGraph::new(70);
        g.add_edge((0, 65), (3, 2)).unwrap();
        assert!(g.has_edge((3, 2), (0, 65)));
        assert_eq!(g.degree_into_row(0, 65, 3), 1);
        assert_eq!(g.degree_into_row(3, 2, 0), 1);
        assert_eq!(g.edges(), vec![((0, 65), (3, 2))]);
        assert_eq!(g.num_edges(), 1);
        assert!(g.rows_independent());
        g.add_edge((1, 0), (1, 69)).unwrap();
        assert!(!g.rows_independent());
    }

    #[test]
    fn column_set_iteration() {
        let mut s = ColumnSet::empty(130);
        for j in [0, 63, 64, 129] {
            s.insert(j);
        }
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        assert_eq!(ColumnSet::full(5).len(), 5);
    }
}
