//! Bounded-degree 3-Coloring to degree-constrained `n' x n'` Clique.
//!
//! Vertices are grouped into blocks of `x` pairwise far-apart vertices.
//! Row `i` of the output lists every 3-coloring of block `i` in ternary
//! Gray-code order; two vertices in different rows are adjacent when the
//! colorings they stand for agree on every edge between the two blocks.

use crate::error::{invalid, Error, Result};
use crate::graph::{GridGraph, Layout, RowSelection, SimpleGraph};
use crate::reductions::gray::{ternary_gray, GrayCode, MAX_GRAY_DIGITS};
use crate::reductions::partition::distance3_partition;
use crate::validate::{check_regularity, check_stability};

/// Largest number of rows materialized by default (`3^4`).
pub const DEFAULT_ROW_CAP: usize = 81;

/// Smallest `x >= 1` with `(f'^2 + 1) + floor((n - f'^2 - 1) / x) <= 3^x`.
pub fn digits_for(n: usize, degree_bound: usize) -> usize {
    let classes = (degree_bound * degree_bound + 1) as i64;
    let rest = n as i64 - classes;
    let mut x = 1usize;
    loop {
        let blocks = classes + rest.div_euclid(x as i64);
        if x >= 40 || blocks <= 3i64.pow(x as u32) {
            return x;
        }
        x += 1;
    }
}

/// How the grid was built from the source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueLineage {
    pub source_vertices: usize,
    pub digits: usize,
    /// `blocks[i]` holds the vertices of row `i`; ids at or above
    /// `source_vertices` are isolated padding vertices.
    pub blocks: Vec<Vec<usize>>,
    pub gray: GrayCode,
}

#[derive(Debug, Clone)]
pub struct CliqueReduction {
    pub grid: GridGraph,
    pub lineage: CliqueLineage,
}

pub fn reduce_coloring_to_dcnnc(g: &SimpleGraph, degree_bound: usize) -> Result<CliqueReduction> {
    reduce_coloring_to_dcnnc_capped(g, degree_bound, DEFAULT_ROW_CAP)
}

pub fn reduce_coloring_to_dcnnc_capped(
    g: &SimpleGraph,
    degree_bound: usize,
    row_cap: usize,
) -> Result<CliqueReduction> {
    let n = g.num_vertices();
    let parts = distance3_partition(g, degree_bound)?;

    let mut x = digits_for(n, degree_bound);
    let mut chunks: Vec<Vec<usize>> = Vec::new();
    loop {
        if x > MAX_GRAY_DIGITS {
            return Err(Error::SizeLimit {
                what: "Gray code digits",
                value: x as u64,
                limit: MAX_GRAY_DIGITS as u64,
            });
        }
        chunks.clear();
        for part in &parts {
            chunks.extend(part.chunks(x).map(<[usize]>::to_vec));
        }
        if chunks.len() <= 3usize.pow(x as u32) {
            break;
        }
        x += 1;
    }
    let rows = 3usize.pow(x as u32);
    if rows > row_cap {
        return Err(Error::SizeLimit {
            what: "grid rows",
            value: rows as u64,
            limit: row_cap as u64,
        });
    }

    let mut blocks = chunks;
    blocks.resize(rows, Vec::new());
    let mut fresh = n;
    for b in &mut blocks {
        while b.len() < x {
            b.push(fresh);
            fresh += 1;
        }
    }

    let gray = ternary_gray(x)?;
    let mut block_of = vec![(0usize, 0usize); n];
    for (i, b) in blocks.iter().enumerate() {
        for (pos, &v) in b.iter().enumerate() {
            if v < n {
                block_of[v] = (i, pos);
            }
        }
    }
    // Matching edges between each pair of blocks, as digit positions.
    let mut links: Vec<Vec<(usize, usize)>> = vec![Vec::new(); rows * rows];
    for (u, v) in g.edges() {
        let (bu, pu) = block_of[u];
        let (bv, pv) = block_of[v];
        if bu == bv {
            return Err(Error::InternalConsistency(format!(
                "vertices {u} and {v} are adjacent but share a block"
            )));
        }
        links[bu * rows + bv].push((pu, pv));
        links[bv * rows + bu].push((pv, pu));
    }

    let mut grid = GridGraph::new(rows);
    for i in 0..rows {
        for k in i + 1..rows {
            let link = &links[i * rows + k];
            for j in 0..rows {
                let wi = gray.word(j);
                for l in 0..rows {
                    let wk = gray.word(l);
                    if link.iter().all(|&(a, b)| wi[a] != wk[b]) {
                        grid.add_edge((i, j), (k, l))?;
                    }
                }
            }
        }
    }

    let reg = check_regularity(&grid, Layout::Clique);
    if !reg.report.holds() {
        return Err(Error::InternalConsistency(format!(
            "Gray-code grid is not regular: {}",
            reg.report.violations[0]
        )));
    }
    let stab = check_stability(&grid, Layout::Clique, degree_bound);
    if !stab.report.holds() {
        return Err(Error::InternalConsistency(format!(
            "Gray-code grid is not stable: {}",
            stab.report.violations[0]
        )));
    }
    grid.delta_table = reg.delta;
    grid.degree_bound = Some(degree_bound);

    Ok(CliqueReduction {
        grid,
        lineage: CliqueLineage {
            source_vertices: n,
            digits: x,
            blocks,
            gray,
        },
    })
}

/// Row `i` selects the Gray index of the coloring restricted to block `i`.
/// Padding vertices take color 0.
pub fn map_coloring_to_selection(lineage: &CliqueLineage, colors: &[u8]) -> Result<RowSelection> {
    if colors.len() != lineage.source_vertices {
        return Err(invalid(format!(
            "coloring has {} entries, source graph has {} vertices",
            colors.len(),
            lineage.source_vertices
        )));
    }
    let mut choice = Vec::with_capacity(lineage.blocks.len());
    for b in &lineage.blocks {
        let word: Vec<u8> = b
            .iter()
            .map(|&v| colors.get(v).copied().unwrap_or(0))
            .collect();
        let j = lineage
            .gray
            .index_of(&word)
            .ok_or_else(|| invalid("coloring uses a color outside 0..3"))?;
        choice.push(j);
    }
    Ok(RowSelection::new(choice))
}

/// Reads each source vertex's color off the Gray word of its row.
pub fn map_selection_to_coloring(lineage: &CliqueLineage, sel: &RowSelection) -> Result<Vec<u8>> {
    if sel.choice.len() != lineage.blocks.len() {
        return Err(invalid("selection size does not match the grid"));
    }
    let mut colors = vec![0u8; lineage.source_vertices];
    for (b, &j) in lineage.blocks.iter().zip(&sel.choice) {
        if j >= lineage.gray.len() {
            return Err(invalid(format!("column {j} outside the grid")));
        }
        let word = lineage.gray.word(j);
        for (&v, &c) in b.iter().zip(word) {
            if v < lineage.source_vertices {
                colors[v] = c;
            }
        }
    }
    Ok(colors)
}
