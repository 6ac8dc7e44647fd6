//! Backtracking 3-coloring.

use crate::graph::SimpleGraph;

const ALL: u8 = 0b111;

/// Fixes `v` to `color` and propagates: neighbors lose the color, and any
/// neighbor left with a single color is fixed in turn.
fn fix(g: &SimpleGraph, dom: &mut [u8], done: &mut [bool], v: usize, color: u8) -> bool {
    dom[v] = 1 << color;
    let mut queue = vec![v];
    while let Some(u) = queue.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        let bit = dom[u];
        for w in g.neighbors(u) {
            if dom[w] & bit == 0 {
                continue;
            }
            dom[w] &= !bit;
            match dom[w].count_ones() {
                0 => return false,
                1 => queue.push(w),
                _ => {}
            }
        }
    }
    true
}

fn search(
    g: &SimpleGraph,
    order: &[usize],
    dom: &mut Vec<u8>,
    done: &mut Vec<bool>,
    nodes: &mut u64,
) -> bool {
    let Some(&v) = order.iter().find(|&&v| !done[v]) else {
        return true;
    };
    *nodes += 1;
    for color in 0..3u8 {
        if dom[v] >> color & 1 == 0 {
            continue;
        }
        let mut d = dom.clone();
        let mut fd = done.clone();
        if fix(g, &mut d, &mut fd, v, color) && search(g, order, &mut d, &mut fd, nodes) {
            *dom = d;
            *done = fd;
            return true;
        }
    }
    false
}

/// Proper 3-coloring with colors `0..3`, or `None` when the graph is not
/// 3-colorable.
///
/// Vertices are branched on in order of decreasing degree (ties by index);
/// the first one is fixed to color 0 to break the color symmetry. Fixed
/// colors are propagated to neighbors before branching further.
pub fn solve_3coloring(g: &SimpleGraph) -> Option<Vec<u8>> {
    solve_3coloring_counted(g).0
}

/// Like [`solve_3coloring`], also returning the number of branch nodes.
pub fn solve_3coloring_counted(g: &SimpleGraph) -> (Option<Vec<u8>>, u64) {
    let n = g.num_vertices();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut dom = vec![ALL; n];
    let mut done = vec![false; n];
    let mut nodes = 0;
    if let Some(&first) = order.first() {
        nodes += 1;
        if !fix(g, &mut dom, &mut done, first, 0) {
            return (None, nodes);
        }
    }
    if !search(g, &order, &mut dom, &mut done, &mut nodes) {
        return (None, nodes);
    }
    let colors = dom.iter().map(|d| d.trailing_zeros() as u8).collect();
    (Some(colors), nodes)
}
