//! Dummy counts large enough for the structural constraints to dominate
//! at small `n`.

use crate::validate::counts::binomial;

fn c(n: u64, k: u64) -> u128 {
    binomial(n, k).map_or(u128::MAX, u128::from)
}

/// Smallest `d >= 2n` with `C(d-2, 2) C(n+1, 2) > C(n^2, 2)`,
/// `C(d-1, 3) n > C(n^2, 2)` and `C(d, 4) > C(n^2, 2)`. With no possible
/// edges (`n = 1`) this is `2n`.
pub fn sufficient_dummies_perm6(n: usize) -> usize {
    let n64 = n as u64;
    let edges = c(n64 * n64, 2);
    let floor = 2 * n;
    if edges == 0 {
        return floor;
    }
    let mut d = 4u64;
    loop {
        let ok = c(d - 2, 2).saturating_mul(c(n64 + 1, 2)) > edges
            && c(d - 1, 3).saturating_mul(n64 as u128) > edges
            && c(d, 4) > edges;
        if ok {
            return floor.max(d as usize);
        }
        d += 1;
    }
}

/// Smallest `d >= 2Dn` with `C(d, 2) >= 2Dn^2 + 1` and `C(d, 2) > 4|E|`.
pub fn sufficient_dummies_perm4(n: usize, degree_bound: usize, num_edges: usize) -> usize {
    let floor = 2 * degree_bound * n;
    let move_cost = (2 * degree_bound * n * n + 1) as u128;
    let edge_weight = 4 * num_edges as u128;
    let mut d = 2u64;
    while c(d, 2) < move_cost || c(d, 2) <= edge_weight {
        d += 1;
    }
    floor.max(d as usize)
}
