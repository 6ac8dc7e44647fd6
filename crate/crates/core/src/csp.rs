//! Permutation CSP instances, orderings and the constraint evaluator.
//!
//! Variables are numbered `0..num_vars` internally. Text formats use 1-based
//! indices; the conversion lives in [`crate::io`].

use std::collections::HashMap;
use std::fmt;

use crate::error::{invalid, Result};

/// An ordered tuple of distinct variables. It is satisfied by an ordering
/// when the positions increase strictly along the tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint(Vec<u32>);

impl Constraint {
    pub fn new(vars: impl Into<Vec<u32>>) -> Self {
        Constraint(vars.into())
    }

    pub fn vars(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when `positions` increase strictly along the tuple.
    #[inline]
    pub fn is_satisfied_by(&self, positions: &[u32]) -> bool {
        self.0
            .windows(2)
            .all(|w| positions[w[0] as usize] < positions[w[1] as usize])
    }
}

impl From<Vec<u32>> for Constraint {
    fn from(v: Vec<u32>) -> Self {
        Constraint(v)
    }
}

impl<const N: usize> From<[u32; N]> for Constraint {
    fn from(v: [u32; N]) -> Self {
        Constraint(v.to_vec())
    }
}

/// A Permutation CSP instance: `num_vars` variables, a multiset of
/// constraints and a declared arity bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermCspInstance {
    num_vars: usize,
    arity: usize,
    constraints: Vec<Constraint>,
}

impl PermCspInstance {
    /// Builds an instance whose arity is the longest constraint length
    /// (at least 1). Fails if any structural invariant is broken.
    pub fn new(num_vars: usize, constraints: Vec<Constraint>) -> Result<Self> {
        let arity = constraints.iter().map(Constraint::len).max().unwrap_or(1).max(1);
        Self::with_arity(num_vars, arity, constraints)
    }

    /// Builds an instance with an explicitly declared arity bound.
    pub fn with_arity(num_vars: usize, arity: usize, constraints: Vec<Constraint>) -> Result<Self> {
        let inst = Self::new_unchecked(num_vars, arity, constraints);
        let report = validate_instance(&inst);
        match report.violations.first() {
            None => Ok(inst),
            Some(v) => Err(invalid(v.to_string())),
        }
    }

    /// Builds an instance without checking invariants. Use
    /// [`validate_instance`] to obtain the list of breaches.
    pub fn new_unchecked(num_vars: usize, arity: usize, constraints: Vec<Constraint>) -> Self {
        PermCspInstance {
            num_vars,
            arity,
            constraints,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    /// Longest constraint actually present (0 for an empty instance).
    pub fn max_constraint_len(&self) -> usize {
        self.constraints.iter().map(Constraint::len).max().unwrap_or(0)
    }
}

/// A bijection from variables to positions `0..num_vars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    positions: Vec<u32>,
}

impl Ordering {
    /// Builds an ordering from `positions[v]` (0-based).
    pub fn from_positions(positions: Vec<u32>) -> Result<Self> {
        let n = positions.len();
        let mut seen = vec![false; n];
        for (v, &p) in positions.iter().enumerate() {
            let p = p as usize;
            if p >= n {
                return Err(invalid(format!("position {p} of variable {v} out of range")));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(invalid(format!("position {p} used twice")));
            }
        }
        Ok(Ordering { positions })
    }

    /// Builds an ordering from the variables listed in position order.
    pub fn from_sequence(sequence: &[u32]) -> Result<Self> {
        let n = sequence.len();
        let mut positions = vec![u32::MAX; n];
        for (p, &v) in sequence.iter().enumerate() {
            let v = v as usize;
            if v >= n {
                return Err(invalid(format!("variable {v} out of range")));
            }
            if positions[v] != u32::MAX {
                return Err(invalid(format!("variable {v} listed twice")));
            }
            positions[v] = p as u32;
        }
        Ok(Ordering { positions })
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            positions: (0..n as u32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    pub fn position(&self, var: u32) -> u32 {
        self.positions[var as usize]
    }

    /// Variables listed in position order.
    pub fn sequence(&self) -> Vec<u32> {
        let mut seq = vec![0; self.positions.len()];
        for (v, &p) in self.positions.iter().enumerate() {
            seq[p as usize] = v as u32;
        }
        seq
    }
}

/// Number of constraints of `instance` satisfied by `ordering`.
pub fn evaluate(instance: &PermCspInstance, ordering: &Ordering) -> Result<u64> {
    if ordering.len() != instance.num_vars() {
        return Err(invalid(format!(
            "ordering has {} variables, instance has {}",
            ordering.len(),
            instance.num_vars()
        )));
    }
    let pos = ordering.positions();
    Ok(instance
        .constraints()
        .iter()
        .filter(|c| c.is_satisfied_by(pos))
        .count() as u64)
}

/// A broken instance invariant, tagged with the 0-based constraint index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyConstraint { constraint: usize },
    DuplicateVariable { constraint: usize, var: u32 },
    IndexOutOfRange { constraint: usize, var: u32 },
    ArityOverflow { constraint: usize, len: usize, arity: usize },
    ZeroVariables,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyConstraint { constraint } => {
                write!(f, "empty constraint {constraint}")
            }
            Violation::DuplicateVariable { constraint, var } => write!(
                f,
                "duplicate variable in constraint {constraint} (variable {})",
                var + 1
            ),
            Violation::IndexOutOfRange { constraint, var } => write!(
                f,
                "index out of range in constraint {constraint} (variable {})",
                var + 1
            ),
            Violation::ArityOverflow {
                constraint,
                len,
                arity,
            } => write!(
                f,
                "arity overflow in constraint {constraint} (length {len} > arity {arity})"
            ),
            Violation::ZeroVariables => write!(f, "instance has no variables"),
        }
    }
}

/// Outcome of [`validate_instance`]. Duplicate constraints are legal and
/// reported separately as pairs of constraint indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub duplicates: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reports every invariant breach of `instance`.
pub fn validate_instance(instance: &PermCspInstance) -> ValidationReport {
    let mut report = ValidationReport::default();
    if instance.num_vars == 0 {
        report.violations.push(Violation::ZeroVariables);
    }
    let mut first_seen: HashMap<&Constraint, usize> = HashMap::new();
    for (ci, c) in instance.constraints.iter().enumerate() {
        if c.is_empty() {
            report.violations.push(Violation::EmptyConstraint { constraint: ci });
        }
        if c.len() > instance.arity {
            report.violations.push(Violation::ArityOverflow {
                constraint: ci,
                len: c.len(),
                arity: instance.arity,
            });
        }
        for (k, &v) in c.vars().iter().enumerate() {
            if v as usize >= instance.num_vars {
                report
                    .violations
                    .push(Violation::IndexOutOfRange { constraint: ci, var: v });
            }
            if c.vars()[..k].contains(&v) {
                report
                    .violations
                    .push(Violation::DuplicateVariable { constraint: ci, var: v });
            }
        }
        if let Some(&earlier) = first_seen.get(c) {
            report.duplicates.push((earlier, ci));
        } else {
            first_seen.insert(c, ci);
        }
    }
    report
}
