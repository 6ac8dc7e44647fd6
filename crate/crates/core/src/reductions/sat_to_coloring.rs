//! Sparse 3-SAT to bounded-degree 3-Coloring.
//!
//! The usual palette triangle is stretched into a triangulated ladder
//! `v_1 v_2 ... v_L` (edges `v_t v_{t+1}` and `v_t v_{t+2}`). Every three
//! consecutive ladder vertices form a triangle, so any 3-coloring repeats
//! with period 3 and ladder vertex `t` plays role N, T or F for
//! `t mod 3 = 1, 2, 0`. Each attachment below goes to its own ladder
//! vertex, so ladder degrees stay at most 5.
//!
//! * Literal vertices `x`, `!x` are adjacent to each other and each to a
//!   private N vertex, which forces one of them to T and the other to F.
//! * A clause gets two cascaded binary OR gadgets. A binary gadget on
//!   inputs `a, b` is a triangle `p q o` with `p ~ a`, `q ~ b`; its output
//!   `o` is forced to F when both inputs are F, and can take T otherwise.
//!   The first gadget reads the first two literals, the second reads the
//!   first output and the third literal. The final output is tied to a
//!   private N and a private F vertex, forcing it to T.
//! * Clauses with fewer than three distinct literals read a private F
//!   ladder vertex in the free input slots (`a or F = a`).
//!
//! A literal vertex has degree `2 + occurrences <= f + 2`; gadget vertices
//! have degree at most 4.

use crate::cnf::{CnfFormula, Lit};
use crate::error::{invalid, Result};
use crate::graph::SimpleGraph;

/// Colors used by the forward witness map.
pub const COLOR_T: u8 = 0;
pub const COLOR_F: u8 = 1;
pub const COLOR_N: u8 = 2;

/// What the reduction built, enough to map witnesses both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatColoringLineage {
    pub num_vars: usize,
    pub ladder_len: usize,
    /// Gadget vertex blocks `[p1, q1, o1, p2, q2, o2]` per clause.
    pub gadgets: Vec<[usize; 6]>,
    /// The three input vertices each clause gadget reads.
    pub gadget_inputs: Vec<[usize; 3]>,
}

impl SatColoringLineage {
    pub fn literal_vertex(&self, lit: Lit) -> usize {
        self.ladder_len + 2 * lit.var as usize + lit.negated as usize
    }

    /// Ladder vertex with the T role.
    pub fn true_anchor(&self) -> usize {
        1
    }

    /// Role color of ladder vertex `v` (0-based).
    pub fn ladder_color(&self, v: usize) -> u8 {
        match (v + 1) % 3 {
            1 => COLOR_N,
            2 => COLOR_T,
            _ => COLOR_F,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ColoringReduction {
    pub graph: SimpleGraph,
    /// `max(f + 2, 5)`.
    pub degree_bound: usize,
    pub lineage: SatColoringLineage,
}

fn n_vertex(k: usize) -> usize {
    3 * k
}

fn f_vertex(k: usize) -> usize {
    3 * k + 2
}

pub fn reduce_sat_to_coloring(cnf: &CnfFormula) -> Result<ColoringReduction> {
    let nv = cnf.num_vars();
    let m = cnf.num_clauses();
    let mut clause_lits: Vec<Vec<Lit>> = Vec::with_capacity(m);
    for (ci, c) in cnf.clauses().iter().enumerate() {
        if c.is_empty() || c.len() > 3 {
            return Err(invalid(format!(
                "clause {ci} has {} literals, expected 1 to 3",
                c.len()
            )));
        }
        let mut lits = Vec::with_capacity(3);
        for &l in c {
            if !lits.contains(&l) {
                lits.push(l);
            }
        }
        clause_lits.push(lits);
    }
    let pads: usize = clause_lits.iter().map(|c| 3 - c.len()).sum();
    let n_needed = 2 * nv + m;
    let f_needed = m + pads;
    let ladder_len = 3 * (n_needed.max(f_needed) + 1);

    let lit_base = ladder_len;
    let gadget_base = lit_base + 2 * nv;
    let total = gadget_base + 6 * m;
    let mut g = SimpleGraph::new(total);

    for t in 0..ladder_len {
        if t + 1 < ladder_len {
            g.add_edge(t, t + 1)?;
        }
        if t + 2 < ladder_len {
            g.add_edge(t, t + 2)?;
        }
    }
    for v in 0..nv {
        let pos = lit_base + 2 * v;
        g.add_edge(pos, pos + 1)?;
        g.add_edge(pos, n_vertex(2 * v))?;
        g.add_edge(pos + 1, n_vertex(2 * v + 1))?;
    }

    let mut gadgets = Vec::with_capacity(m);
    let mut gadget_inputs = Vec::with_capacity(m);
    let mut next_pad = m;
    for (j, lits) in clause_lits.iter().enumerate() {
        let mut inputs = [0usize; 3];
        for (slot, input) in inputs.iter_mut().enumerate() {
            *input = match lits.get(slot) {
                Some(l) => lit_base + 2 * l.var as usize + l.negated as usize,
                None => {
                    let f = f_vertex(next_pad);
                    next_pad += 1;
                    f
                }
            };
        }
        let b = gadget_base + 6 * j;
        let [p1, q1, o1, p2, q2, o2] = [b, b + 1, b + 2, b + 3, b + 4, b + 5];
        for (u, v) in [(p1, q1), (q1, o1), (p1, o1), (p2, q2), (q2, o2), (p2, o2)] {
            g.add_edge(u, v)?;
        }
        g.add_edge(p1, inputs[0])?;
        g.add_edge(q1, inputs[1])?;
        g.add_edge(p2, o1)?;
        g.add_edge(q2, inputs[2])?;
        g.add_edge(o2, n_vertex(2 * nv + j))?;
        g.add_edge(o2, f_vertex(j))?;
        gadgets.push([p1, q1, o1, p2, q2, o2]);
        gadget_inputs.push(inputs);
    }

    let degree_bound = (cnf.frequency_bound() + 2).max(5);
    debug_assert!(g.max_degree() <= degree_bound);
    Ok(ColoringReduction {
        graph: g,
        degree_bound,
        lineage: SatColoringLineage {
            num_vars: nv,
            ladder_len,
            gadgets,
            gadget_inputs,
        },
    })
}

/// Builds a proper 3-coloring from a satisfying assignment. Each clause
/// gadget is colored by exhaustive search over its 3^6 colorings.
pub fn map_assignment_to_coloring(
    cnf: &CnfFormula,
    red: &ColoringReduction,
    assignment: &[bool],
) -> Result<Vec<u8>> {
    if !cnf.is_satisfied_by(assignment) {
        return Err(invalid("assignment does not satisfy the formula"));
    }
    let lin = &red.lineage;
    let g = &red.graph;
    let mut colors = vec![u8::MAX; g.num_vertices()];
    for (v, c) in colors.iter_mut().enumerate().take(lin.ladder_len) {
        *c = lin.ladder_color(v);
    }
    for (v, &val) in assignment.iter().enumerate() {
        let (t, f) = (COLOR_T, COLOR_F);
        colors[lin.literal_vertex(Lit::pos(v as u32))] = if val { t } else { f };
        colors[lin.literal_vertex(Lit::neg(v as u32))] = if val { f } else { t };
    }
    for gadget in &lin.gadgets {
        let mut found = false;
        'search: for code in 0..729u32 {
            let mut c = code;
            for &v in gadget {
                colors[v] = (c % 3) as u8;
                c /= 3;
            }
            for &v in gadget {
                if g
                    .neighbors(v)
                    .any(|u| colors[u] != u8::MAX && colors[u] == colors[v])
                {
                    continue 'search;
                }
            }
            found = true;
            break;
        }
        if !found {
            return Err(crate::error::Error::InternalConsistency(
                "clause gadget cannot be colored under a satisfying assignment".into(),
            ));
        }
    }
    Ok(colors)
}

/// Reads the assignment off a proper 3-coloring: a variable is true when
/// its positive literal shares the color of the T ladder vertex.
pub fn map_coloring_to_assignment(red: &ColoringReduction, colors: &[u8]) -> Result<Vec<bool>> {
    if !red.graph.is_proper_coloring(colors) {
        return Err(invalid("not a proper coloring of the reduction graph"));
    }
    let lin = &red.lineage;
    let t = colors[lin.true_anchor()];
    Ok((0..lin.num_vars)
        .map(|v| colors[lin.literal_vertex(Lit::pos(v as u32))] == t)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::solve_3coloring;

    fn cnf(n: usize, clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::new(
            n,
            clauses
                .iter()
                .map(|c| c.iter().map(|&l| Lit::from_dimacs(l).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unit_clause_is_colorable() {
        let f = cnf(1, &[&[1]]);
        let r = reduce_sat_to_coloring(&f).unwrap();
        let c = solve_3coloring(&r.graph).unwrap();
        let a = map_coloring_to_assignment(&r, &c).unwrap();
        assert!(f.is_satisfied_by(&a));
    }

    #[test]
    fn contradiction_is_not_colorable() {
        let r = reduce_sat_to_coloring(&cnf(1, &[&[1], &[-1]])).unwrap();
        assert_eq!(solve_3coloring(&r.graph), None);
    }

    #[test]
    fn all_eight_sign_patterns_of_one_clause() {
        // Each single 3-clause is satisfiable; pinning all three variables
        // against it with unit clauses is not.
        for mask in 0..8i64 {
            let lits: Vec<i64> = (0..3).map(|v| if mask >> v & 1 == 1 { -(v + 1) } else { v + 1 }).collect();
            let neg: Vec<Vec<i64>> = lits.iter().map(|&l| vec![-l]).collect();
            let mut clauses: Vec<&[i64]> = vec![&lits];
            let sat = reduce_sat_to_coloring(&cnf(3, &clauses)).unwrap();
            assert!(solve_3coloring(&sat.graph).is_some());
            clauses.extend(neg.iter().map(Vec::as_slice));
            let unsat = reduce_sat_to_coloring(&cnf(3, &clauses)).unwrap();
            assert_eq!(solve_3coloring(&unsat.graph), None);
        }
    }

    #[test]
    fn forward_map_gives_proper_coloring() {
        let f = cnf(3, &[&[1, -2, 3], &[-1, 2], &[-3]]);
        let r = reduce_sat_to_coloring(&f).unwrap();
        let a = vec![true, true, false];
        let c = map_assignment_to_coloring(&f, &r, &a).unwrap();
        assert!(r.graph.is_proper_coloring(&c));
        assert_eq!(map_coloring_to_assignment(&r, &c).unwrap(), a);
    }

    #[test]
    fn degree_bound_holds_with_short_clauses() {
        // x1 occurs in a unit clause and two more clauses (f = 3).
        let f = cnf(3, &[&[1], &[1, 2, 3], &[-1, -2], &[2, 3]]);
        let r = reduce_sat_to_coloring(&f).unwrap();
        assert_eq!(r.degree_bound, 5);
        assert!(r.graph.max_degree() <= 5);
    }

    #[test]
    fn rejects_bad_clause_sizes() {
        assert!(reduce_sat_to_coloring(&cnf(4, &[&[1, 2, 3, 4]])).is_err());
        assert!(reduce_sat_to_coloring(&CnfFormula::new(1, vec![vec![]]).unwrap()).is_err());
    }
}
