#![allow(dead_code)]

use permcsp::graph::{GridGraph, Layout};
use permcsp::reductions::reduce_dcnnc_to_dcnnb;
use permcsp::validate::{check_biclique_structure, check_regularity, check_stability};
use rand::Rng;

/// Runs all three checks on a biclique grid and records Delta and D.
pub fn accept_biclique(mut h: GridGraph, d: usize) -> Option<GridGraph> {
    if !check_biclique_structure(&h).ok()?.holds() {
        return None;
    }
    let reg = check_regularity(&h, Layout::Biclique);
    if !reg.report.holds() || !check_stability(&h, Layout::Biclique, d).report.holds() {
        return None;
    }
    h.delta_table = reg.delta;
    h.degree_bound = Some(d);
    Some(h)
}

/// Small clique grids that are regular and stable with bound `d`.
pub fn regular_clique_grids(n: usize, d: usize) -> Vec<GridGraph> {
    let mut out = Vec::new();
    match n {
        1 => out.push(GridGraph::new(1)),
        2 => {
            let edgeless = GridGraph::new(2);
            let mut full = GridGraph::new(2);
            let mut matching = GridGraph::new(2);
            let mut twisted = GridGraph::new(2);
            for j in 0..2 {
                for l in 0..2 {
                    full.add_edge((0, j), (1, l)).unwrap();
                }
                matching.add_edge((0, j), (1, j)).unwrap();
                twisted.add_edge((0, j), (1, 1 - j)).unwrap();
            }
            out.extend([edgeless, full, matching, twisted]);
        }
        _ => panic!("only n = 1, 2"),
    }
    out.into_iter()
        .filter(|g| {
            check_regularity(g, Layout::Clique).report.holds()
                && check_stability(g, Layout::Clique, d).report.holds()
        })
        .map(|mut g| {
            g.degree_bound = Some(d);
            g
        })
        .collect()
}

/// Doublings of regular clique grids, accepted with biclique bound `d`.
pub fn chain_bicliques(n: usize, d: usize) -> Vec<GridGraph> {
    let mut out = Vec::new();
    for dg in 0..d {
        for g in regular_clique_grids(n, dg) {
            let h = reduce_dcnnc_to_dcnnb(&g).expect("regular stable grid");
            if let Some(h) = accept_biclique(h, d) {
                if !out.contains(&h) {
                    out.push(h);
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rel {
    Empty,
    Full,
    Shift(usize),
}

/// Biclique grids built from random circulant relations between top row
/// `i` and bottom row `n + i'`, with the mirror relation filled in, kept
/// when all checks pass for bound `d`.
pub fn handcrafted_bicliques<R: Rng>(rng: &mut R, n: usize, d: usize, tries: usize) -> Vec<GridGraph> {
    let mut out: Vec<GridGraph> = Vec::new();
    for _ in 0..tries {
        let mut rel = vec![vec![None; n]; n];
        for i in 0..n {
            for k in i..n {
                let r = match rng.gen_range(0..3) {
                    0 => Rel::Empty,
                    1 => Rel::Full,
                    _ => Rel::Shift(rng.gen_range(0..n)),
                };
                let r = match r {
                    Rel::Shift(s) if i == k && (n - s) % n != s => Rel::Shift(0),
                    r => r,
                };
                let mirror = match r {
                    Rel::Shift(s) => Rel::Shift((n - s) % n),
                    r => r,
                };
                rel[i][k] = Some(r);
                rel[k][i] = Some(mirror);
            }
        }
        let mut h = GridGraph::new(2 * n);
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let edge = match rel[i][k].unwrap() {
                            Rel::Empty => false,
                            Rel::Full => true,
                            Rel::Shift(s) => l == (j + s) % n,
                        };
                        if edge {
                            h.add_edge((i, j), (n + k, n + l)).unwrap();
                        }
                    }
                }
            }
        }
        if let Some(h) = accept_biclique(h, d) {
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}
