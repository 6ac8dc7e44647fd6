//! Reduction outputs bundled with their target value and element roles.

use std::fmt;

use crate::csp::{Ordering, PermCspInstance};
use crate::error::{invalid, Result};
use crate::graph::{GridGraph, Layout, RowSelection};
use crate::validate::check_regularity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// Clique to arity-6 Permutation CSP.
    Perm6,
    /// Biclique to arity-4 Permutation CSP.
    Perm4,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::Perm6 => "perm6",
            ReductionKind::Perm4 => "perm4",
        })
    }
}

/// What an output element stands for, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Dummy(usize),
    Row(usize),
    Column(usize),
}

impl Role {
    pub fn tag(self) -> char {
        match self {
            Role::Dummy(_) => 'd',
            Role::Row(_) => 'r',
            Role::Column(_) => 'c',
        }
    }

    pub fn index(self) -> usize {
        match self {
            Role::Dummy(i) | Role::Row(i) | Role::Column(i) => i,
        }
    }
}

/// Parameters of the reduction that produced a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lineage {
    pub kind: ReductionKind,
    /// The `n` of the source: grid side for arity 6, half the side for
    /// arity 4.
    pub n: usize,
    /// `D` of the source biclique instance (arity 4 only).
    pub degree_bound: Option<usize>,
    pub dummies: usize,
    /// `sum_{i <= n < i'} Delta^{i i'}` (arity 4 only).
    pub delta_sum: Option<u64>,
}

impl Lineage {
    pub fn num_rows(&self) -> usize {
        match self.kind {
            ReductionKind::Perm6 => self.n,
            ReductionKind::Perm4 => 2 * self.n,
        }
    }

    pub fn num_columns(&self) -> usize {
        self.num_rows() + 1
    }

    pub fn num_elements(&self) -> usize {
        self.dummies + self.num_rows() + self.num_columns()
    }

    /// Elements are laid out as dummies, then rows, then columns.
    pub fn dummy(&self, a: usize) -> u32 {
        a as u32
    }

    pub fn row(&self, i: usize) -> u32 {
        (self.dummies + i) as u32
    }

    pub fn column(&self, j: usize) -> u32 {
        (self.dummies + self.num_rows() + j) as u32
    }

    pub fn role(&self, element: usize) -> Option<Role> {
        let rows = self.num_rows();
        if element < self.dummies {
            Some(Role::Dummy(element))
        } else if element < self.dummies + rows {
            Some(Role::Row(element - self.dummies))
        } else if element < self.num_elements() {
            Some(Role::Column(element - self.dummies - rows))
        } else {
            None
        }
    }

    pub fn roles(&self) -> Vec<Role> {
        (0..self.num_elements()).filter_map(|e| self.role(e)).collect()
    }

    /// Allowed column intervals for row `i`.
    pub fn interval_range(&self, i: usize) -> std::ops::Range<usize> {
        match self.kind {
            ReductionKind::Perm6 => 0..self.n,
            ReductionKind::Perm4 if i < self.n => 0..self.n,
            ReductionKind::Perm4 => self.n..2 * self.n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub instance: PermCspInstance,
    /// Satisfied-constraint count reached exactly on yes-instances.
    pub target: u64,
    pub lineage: Lineage,
}

impl ReductionCertificate {
    pub fn roles(&self) -> Vec<Role> {
        self.lineage.roles()
    }

    /// The convenient ordering of a row selection: dummies in index order,
    /// then `c_1 R_1 c_2 R_2 ...` with row `i` placed in interval
    /// `choice[i]`, rows sharing an interval in ascending index order.
    pub fn ordering_for(&self, sel: &RowSelection) -> Result<Ordering> {
        let lin = &self.lineage;
        let rows = lin.num_rows();
        if sel.choice.len() != rows {
            return Err(invalid(format!(
                "selection has {} rows, certificate has {rows}",
                sel.choice.len()
            )));
        }
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); rows];
        for (i, &j) in sel.choice.iter().enumerate() {
            if !lin.interval_range(i).contains(&j) {
                return Err(invalid(format!(
                    "row {} selects column {}, outside its allowed range",
                    i + 1,
                    j + 1
                )));
            }
            buckets[j].push(lin.row(i));
        }
        let mut seq: Vec<u32> = (0..lin.dummies).map(|a| lin.dummy(a)).collect();
        for (j, bucket) in buckets.iter().enumerate() {
            seq.push(lin.column(j));
            seq.extend_from_slice(bucket);
        }
        seq.push(lin.column(rows));
        Ordering::from_sequence(&seq)
    }

    /// The row selection of a convenient ordering: `choice[i]` is the
    /// interval holding row `i`. `None` when some row lies outside the
    /// column frame or outside its allowed range.
    pub fn selection_of(&self, ord: &Ordering) -> Option<RowSelection> {
        let lin = &self.lineage;
        if ord.len() != lin.num_elements() {
            return None;
        }
        let cols: Vec<u32> = (0..lin.num_columns())
            .map(|j| ord.position(lin.column(j)))
            .collect();
        let mut choice = Vec::with_capacity(lin.num_rows());
        for i in 0..lin.num_rows() {
            let p = ord.position(lin.row(i));
            let below = cols.iter().filter(|&&c| c < p).count();
            if below == 0 || below == cols.len() {
                return None;
            }
            let j = below - 1;
            if !lin.interval_range(i).contains(&j) {
                return None;
            }
            choice.push(j);
        }
        Some(RowSelection::new(choice))
    }

    /// Reads the source grid back off the edge constraints: the crcr
    /// constraint of each biclique edge, or the single clique constraint
    /// of each arity-6 edge. Other constraints are ignored; rebuilding the
    /// reduction from the result and comparing detects any tampering.
    pub fn decode_grid(&self) -> Result<GridGraph> {
        let lin = &self.lineage;
        let side = match lin.kind {
            ReductionKind::Perm6 => lin.n,
            ReductionKind::Perm4 => 2 * lin.n,
        };
        let mut g = GridGraph::new(side);
        for c in self.instance.constraints() {
            let roles: Vec<Role> = c
                .vars()
                .iter()
                .map(|&e| lin.role(e as usize).ok_or_else(|| invalid("element outside the certificate")))
                .collect::<Result<_>>()?;
            use Role::{Column as C, Row as R};
            let edge = match (lin.kind, roles.as_slice()) {
                (ReductionKind::Perm4, &[C(j), R(i), C(l), R(k)]) => Some(((i, j), (k, l))),
                (ReductionKind::Perm6, &[C(ja), R(ia), C(_), C(jb), R(ib), C(_)]) => {
                    Some(((ia, ja), (ib, jb)))
                }
                (ReductionKind::Perm6, &[C(ja), R(ia), C(_), R(ib), C(_)]) => {
                    Some(((ia, ja), (ib, ja + 1)))
                }
                (ReductionKind::Perm6, &[C(ja), R(ia), R(ib), C(_)]) => Some(((ia, ja), (ib, ja))),
                _ => None,
            };
            if let Some((a, b)) = edge {
                if a.1 >= side || b.1 >= side {
                    return Err(invalid("edge constraint names a column outside the grid"));
                }
                g.add_edge(a, b)?;
            }
        }
        if lin.kind == ReductionKind::Perm4 {
            g.degree_bound = lin.degree_bound;
            g.delta_table = check_regularity(&g, Layout::Biclique).delta;
        }
        Ok(g)
    }
}

/// Free-function form of [`ReductionCertificate::ordering_for`].
pub fn map_selection_to_ordering(
    sel: &RowSelection,
    cert: &ReductionCertificate,
) -> Result<Ordering> {
    cert.ordering_for(sel)
}
