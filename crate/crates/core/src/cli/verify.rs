use std::io::Write;

use crate::error::Error;
use crate::graph::{GridGraph, Layout};
use crate::io;
use crate::reductions::{reduce_clique_to_perm6, reduce_dcnnb_to_perm4, ReductionKind};
use crate::solvers::convenient::MAX_CONVENIENT_N;
use crate::solvers::{solve_brute, solve_convenient, solve_row_biclique, solve_row_clique, BruteOptions};
use crate::validate::{check_biclique_structure, check_regularity, check_stability};

use super::{read, CliError, VerifyArgs, EXIT_FAIL, EXIT_OK};

/// Rebuilds the reduction from the source grid, compares it with the
/// certificate, then checks that the optimum reaches the target exactly
/// when the source has a row selection.
pub(super) fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let cert = io::read_certificate(&read(&a.certificate)?)?;
    let mut grid: GridGraph = io::read_grid(&read(&a.source)?)?;
    let lin = cert.lineage.clone();
    let mut ok = true;

    let rebuilt = match lin.kind {
        ReductionKind::Perm4 => {
            let d = lin
                .degree_bound
                .ok_or_else(|| CliError::Run(Error::InvalidInput("certificate has no D".into())))?;
            if grid.degree_bound.is_none() {
                grid.degree_bound = Some(d);
            }
            if grid.delta_table.is_none() {
                grid.delta_table = check_regularity(&grid, Layout::Biclique).delta;
            }
            let structure = check_biclique_structure(&grid)?;
            let reg = check_regularity(&grid, Layout::Biclique);
            let stab = check_stability(&grid, Layout::Biclique, d);
            out.write_all(structure.to_lines().as_bytes())?;
            out.write_all(reg.report.to_lines().as_bytes())?;
            out.write_all(stab.report.to_lines().as_bytes())?;
            if !(structure.holds() && reg.report.holds() && stab.report.holds()) {
                writeln!(out, "conditions fail")?;
                writeln!(out, "verify fail")?;
                return Ok(EXIT_FAIL);
            }
            reduce_dcnnb_to_perm4(&grid, d, lin.dummies)
        }
        ReductionKind::Perm6 => reduce_clique_to_perm6(&grid, lin.dummies),
    };
    let rebuilt = match rebuilt {
        Ok(r) => r,
        Err(Error::InvalidInput(m)) => {
            writeln!(out, "rebuild fail: {m}")?;
            writeln!(out, "verify fail")?;
            return Ok(EXIT_FAIL);
        }
        Err(e) => return Err(e.into()),
    };

    if rebuilt.lineage != lin {
        writeln!(out, "lineage mismatch")?;
        ok = false;
    }
    if rebuilt.target != cert.target {
        writeln!(out, "target mismatch: certificate {} rebuilt {}", cert.target, rebuilt.target)?;
        ok = false;
    }
    if rebuilt.instance != cert.instance {
        let (have, want) = (cert.instance.num_constraints(), rebuilt.instance.num_constraints());
        let differing = cert
            .instance
            .constraints()
            .iter()
            .zip(rebuilt.instance.constraints())
            .filter(|(x, y)| x != y)
            .count()
            + have.abs_diff(want);
        writeln!(
            out,
            "constraints mismatch: certificate {have} rebuilt {want} differing {differing}"
        )?;
        ok = false;
    }
    if !ok {
        writeln!(out, "verify fail")?;
        return Ok(EXIT_FAIL);
    }
    writeln!(out, "rebuild match")?;
    writeln!(out, "target {}", cert.target)?;

    let source_yes = match lin.kind {
        ReductionKind::Perm4 => solve_row_biclique(&grid)?,
        ReductionKind::Perm6 => solve_row_clique(&grid),
    }
    .is_some();
    writeln!(out, "source {}", if source_yes { "yes" } else { "no" })?;

    let mut checked = false;
    let mut check = |name: &str, optimum: u64, out: &mut dyn Write| -> Result<(), CliError> {
        let reaches = optimum >= cert.target;
        let agree = reaches == source_yes;
        writeln!(
            out,
            "{name} optimum {optimum} {} target: {}",
            if reaches { "meets" } else { "below" },
            if agree { "consistent" } else { "INCONSISTENT" }
        )?;
        ok &= agree;
        checked = true;
        Ok(())
    };
    if lin.n <= MAX_CONVENIENT_N {
        let conv = solve_convenient(&cert, &grid)?;
        check("convenient", conv.result.optimum, out)?;
    }
    if cert.instance.num_vars() <= a.limit {
        let opts = BruteOptions {
            limit: a.limit,
            threads: a.threads.max(1),
            ..BruteOptions::default()
        };
        let brute = solve_brute(&cert.instance, &opts)?;
        check("brute", brute.optimum, out)?;
    }
    if !checked {
        writeln!(out, "instance too large for an exact check; rebuild only")?;
    }
    writeln!(out, "verify {}", if ok { "pass" } else { "fail" })?;
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}
