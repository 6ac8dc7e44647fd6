//! Closed-form constraint counts and target values, overflow-checked.

use crate::error::{Error, Result};

/// `C(n, k)`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

pub(crate) fn choose(n: u64, k: u64) -> Result<u64> {
    binomial(n, k).ok_or(Error::Overflow("binomial coefficient"))
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("constraint count"))
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("constraint count"))
}

/// Size of the arity-4 structural family: `C(dummies, 2) * C(columns, 2)`.
pub fn structural_count(dummy_count: u64, num_columns: u64) -> Result<u64> {
    mul(choose(dummy_count, 2)?, choose(num_columns, 2)?)
}

/// Size of the arity-6 dummy/column family: `C(dummies, 4) * C(n + 1, 2)`.
pub fn structural_count_perm6(n: u64, dummy_count: u64) -> Result<u64> {
    mul(choose(dummy_count, 4)?, choose(n + 1, 2)?)
}

/// Satisfied-constraint count that characterizes yes-instances of the
/// arity-6 reduction: `C(d, 4) C(n + 1, 2) + n + C(n, 2)`.
pub fn target_perm6(n: u64, dummy_count: u64) -> Result<u64> {
    add(add(structural_count_perm6(n, dummy_count)?, n)?, choose(n, 2)?)
}

/// Satisfied-constraint count that characterizes yes-instances of the
/// arity-4 reduction: `C(d, 2) C(2n + 1, 2) + (n + 2) sum(Delta) + n^2`.
pub fn target_perm4(n: u64, dummy_count: u64, delta_sum: u64) -> Result<u64> {
    let s = structural_count(dummy_count, 2 * n + 1)?;
    let d = mul(n + 2, delta_sum)?;
    add(add(s, d)?, mul(n, n)?)
}

/// Count of a convenient arity-4 ordering whose row selection induces
/// `induced_edges` edges.
pub fn convenient_count_perm4(
    n: u64,
    dummy_count: u64,
    delta_sum: u64,
    induced_edges: u64,
) -> Result<u64> {
    let s = structural_count(dummy_count, 2 * n + 1)?;
    add(add(s, mul(n + 2, delta_sum)?)?, induced_edges)
}

/// Count of a convenient arity-6 ordering whose row selection induces
/// `induced_edges` edges.
pub fn convenient_count_perm6(n: u64, dummy_count: u64, induced_edges: u64) -> Result<u64> {
    add(add(structural_count_perm6(n, dummy_count)?, n)?, induced_edges)
}
