//! Exhaustive search over all `n!` orderings.

use rayon::prelude::*;

use crate::csp::{Ordering, PermCspInstance};
use crate::error::{Error, Result};
use crate::solvers::SolveResult;

pub const DEFAULT_BRUTE_LIMIT: usize = 11;

#[derive(Debug, Clone, Copy)]
pub struct BruteOptions {
    /// Refuse instances with more variables than this.
    pub limit: usize,
    /// Refuse instances with more than this many orderings.
    pub node_budget: Option<u64>,
    /// Split the search over the first position across this many threads.
    /// The result is identical for every value.
    pub threads: usize,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            limit: DEFAULT_BRUTE_LIMIT,
            node_budget: None,
            threads: 1,
        }
    }
}

/// Constraints flattened for the inner loop; unary constraints are folded
/// into a constant.
struct Kernel {
    vars: Vec<u32>,
    ends: Vec<u32>,
    always: u64,
}

impl Kernel {
    fn new(instance: &PermCspInstance) -> Self {
        let mut vars = Vec::new();
        let mut ends = Vec::new();
        let mut always = 0;
        for c in instance.constraints() {
            if c.len() <= 1 {
                always += 1;
                continue;
            }
            vars.extend_from_slice(c.vars());
            ends.push(vars.len() as u32);
        }
        Kernel { vars, ends, always }
    }

    #[inline]
    fn score(&self, pos: &[u32]) -> u64 {
        let mut total = self.always;
        let mut start = 0usize;
        for &end in &self.ends {
            let end = end as usize;
            let c = &self.vars[start..end];
            start = end;
            let mut prev = pos[c[0] as usize];
            let mut ok = 1;
            for &v in &c[1..] {
                let p = pos[v as usize];
                if p <= prev {
                    ok = 0;
                    break;
                }
                prev = p;
            }
            total += ok;
        }
        total
    }
}

/// Advances `seq` to its lexicographic successor. Returns the first index
/// that changed, or `None` after the last permutation.
pub(crate) fn next_permutation(seq: &mut [u32]) -> Option<usize> {
    let n = seq.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    Some(i - 1)
}

/// Best ordering among those starting with `first`, lexicographically
/// first on ties.
fn best_with_first(kernel: &Kernel, n: usize, first: u32) -> (u64, Vec<u32>) {
    let mut seq: Vec<u32> = std::iter::once(first)
        .chain((0..n as u32).filter(|&v| v != first))
        .collect();
    let mut pos = vec![0u32; n];
    for (p, &v) in seq.iter().enumerate() {
        pos[v as usize] = p as u32;
    }
    let mut best = kernel.score(&pos);
    let mut best_seq = seq.clone();
    while let Some(k) = next_permutation(&mut seq[1..]) {
        for p in k + 1..n {
            pos[seq[p] as usize] = p as u32;
        }
        let s = kernel.score(&pos);
        if s > best {
            best = s;
            best_seq.copy_from_slice(&seq);
        }
    }
    (best, best_seq)
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Exact optimum by enumerating every ordering in lexicographic order of
/// the variable sequence. The witness is the lexicographically first
/// maximizer.
pub fn solve_brute(instance: &PermCspInstance, opts: &BruteOptions) -> Result<SolveResult> {
    let n = instance.num_vars();
    if n > opts.limit {
        return Err(Error::SizeLimit {
            what: "variable count",
            value: n as u64,
            limit: opts.limit as u64,
        });
    }
    let nodes = factorial(n).ok_or(Error::Overflow("ordering count"))?;
    if let Some(budget) = opts.node_budget {
        if nodes > budget {
            return Err(Error::SizeLimit {
                what: "ordering count",
                value: nodes,
                limit: budget,
            });
        }
    }
    let kernel = Kernel::new(instance);
    let branches: Vec<(u64, Vec<u32>)> = if opts.threads > 1 && n > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InternalConsistency(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..n as u32)
                .into_par_iter()
                .map(|f| best_with_first(&kernel, n, f))
                .collect()
        })
    } else {
        (0..n as u32).map(|f| best_with_first(&kernel, n, f)).collect()
    };
    // Branches are in increasing first element, so keeping the first
    // strict maximum preserves the lexicographic tie-break.
    let mut best: Option<(u64, Vec<u32>)> = None;
    for (score, seq) in branches {
        if best.as_ref().is_none_or(|(b, _)| score > *b) {
            best = Some((score, seq));
        }
    }
    let (optimum, seq) = best.unwrap_or((kernel.always, Vec::new()));
    Ok(SolveResult {
        optimum,
        witness: Ordering::from_sequence(&seq)?,
        nodes_explored: nodes,
    })
}
