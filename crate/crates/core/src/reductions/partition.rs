use crate::error::{invalid, Result};
use crate::graph::SimpleGraph;

/// Partitions the vertices into `f'^2 + 1` classes, any two vertices of a
/// class at distance at least 3.
///
/// Greedy first-fit coloring of the square graph in vertex order. The
/// square has maximum degree at most `f'^2`, so `f'^2 + 1` classes always
/// suffice; trailing classes may be empty.
pub fn distance3_partition(g: &SimpleGraph, degree_bound: usize) -> Result<Vec<Vec<usize>>> {
    let max = g.max_degree();
    if max > degree_bound {
        return Err(invalid(format!(
            "maximum degree {max} exceeds the bound {degree_bound}"
        )));
    }
    let classes = degree_bound * degree_bound + 1;
    let n = g.num_vertices();
    let mut class_of = vec![usize::MAX; n];
    let mut parts = vec![Vec::new(); classes];
    let mut blocked = vec![usize::MAX; classes];
    for v in 0..n {
        for u in g.neighbors(v) {
            if class_of[u] != usize::MAX {
                blocked[class_of[u]] = v;
            }
            for w in g.neighbors(u) {
                if w != v && class_of[w] != usize::MAX {
                    blocked[class_of[w]] = v;
                }
            }
        }
        let c = (0..classes)
            .find(|&c| blocked[c] != v)
            .expect("square-graph degree is at most f'^2");
        class_of[v] = c;
        parts[c].push(v);
    }
    Ok(parts)
}
