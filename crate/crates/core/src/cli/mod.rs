//! The `permcsp` command line: generate, reduce, solve and verify.

mod pipeline;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

use crate::error::Error;
use crate::generate::{
    random_bounded_degree_graph, random_grid, random_pcsp, random_sparse_cnf, rng_from_seed,
};
use crate::graph::RowSelection;
use crate::io::{self, FileKind};
use crate::reductions::certificate::ReductionCertificate;
use crate::solvers::{
    solve_3coloring, solve_brute, solve_convenient, solve_dp3, solve_row_biclique,
    solve_row_clique, solve_sat, BruteOptions, SolveResult, DEFAULT_BRUTE_LIMIT, DEFAULT_DP_LIMIT,
};

pub use pipeline::{DummyPolicy, Kind, PipelineSpec, Step, StepParams};

#[derive(Debug, Parser)]
#[command(name = "permcsp", version, about = "Permutation CSP solvers and hardness reductions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random instance.
    Gen(GenArgs),
    /// Run reduction steps, writing every intermediate artifact.
    Reduce(ReduceArgs),
    /// Solve an instance.
    Solve(SolveArgs),
    /// Check a certificate against the grid it was built from.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Cnf,
    Graph,
    Pcsp,
    Grid,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Variables (cnf, pcsp) or vertices (graph).
    #[arg(long, default_value_t = 6)]
    pub size: usize,
    /// Clauses (cnf), edges (graph) or constraints (pcsp).
    #[arg(long, default_value_t = 6)]
    pub count: usize,
    /// Frequency bound f (cnf) or maximum degree f' (graph).
    #[arg(long, default_value_t = 3)]
    pub bound: usize,
    /// Maximum constraint length (pcsp).
    #[arg(long, default_value_t = 3)]
    pub arity: usize,
    /// Smallest clause size (cnf).
    #[arg(long, default_value_t = 1)]
    pub min_clause: usize,
    /// Edge probability (grid).
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    /// Input file; omit when the pipeline starts with gen-sat.
    pub input: Option<PathBuf>,
    /// Comma-separated steps. Defaults to the rest of the chain from the
    /// input type.
    #[arg(long, value_delimiter = ',')]
    pub steps: Vec<Step>,
    #[arg(long)]
    pub stop_after: Option<Step>,
    #[arg(long, default_value = "permcsp-out")]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Variables for gen-sat.
    #[arg(long, default_value_t = 4)]
    pub vars: usize,
    /// Clauses for gen-sat.
    #[arg(long, default_value_t = 4)]
    pub clauses: usize,
    /// Frequency bound f for gen-sat.
    #[arg(long, default_value_t = 3)]
    pub freq: usize,
    /// Degree bound f' for col2clique, or D for a grid input without one.
    #[arg(long)]
    pub degree_bound: Option<usize>,
    #[arg(long, default_value_t = crate::reductions::DEFAULT_ROW_CAP)]
    pub row_cap: usize,
    /// `base`, `sufficient` or an explicit count. Default: sufficient
    /// for n <= 3, base above.
    #[arg(long)]
    pub dummies: Option<DummyPolicy>,
    /// Refuse Permutation CSP outputs with more structural constraints.
    #[arg(long, default_value_t = 20_000_000)]
    pub max_constraints: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Brute,
    Dp3,
    Convenient,
    Sat,
    Coloring,
    Clique,
    Biclique,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Largest variable count brute force accepts.
    #[arg(long, default_value_t = DEFAULT_BRUTE_LIMIT)]
    pub limit: usize,
    /// Threads for brute force; the output is identical for any value.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub certificate: PathBuf,
    /// The grid the certificate was built from.
    pub source: PathBuf,
    #[arg(long, default_value_t = DEFAULT_BRUTE_LIMIT)]
    pub limit: usize,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// Failure modes mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Run(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Run(Error::Io(e))
    }
}

impl From<io::FormatError> for CliError {
    fn from(e: io::FormatError) -> Self {
        CliError::Run(Error::Format(e))
    }
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Run(Error::InvalidInput(format!("{}: {e}", path.display()))))
}

fn emit(output: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let mut rng = rng_from_seed(a.seed);
    let text = match a.kind {
        GenKind::Cnf => io::write_dimacs(&random_sparse_cnf(
            &mut rng,
            a.size,
            a.count,
            a.bound,
            a.min_clause..=3,
        )?),
        GenKind::Graph => {
            io::write_graph(&random_bounded_degree_graph(&mut rng, a.size, a.bound, a.count)?)
        }
        GenKind::Pcsp => io::write_pcsp(&random_pcsp(&mut rng, a.size, a.count, a.arity)?),
        GenKind::Grid => {
            if !(0.0..=1.0).contains(&a.density) {
                return Err(CliError::Usage("--density must lie in [0, 1]".into()));
            }
            io::write_grid(&random_grid(&mut rng, a.size, a.density))
        }
    };
    emit(&a.output, &text, out)?;
    Ok(EXIT_OK)
}

fn cmd_reduce(a: &ReduceArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let (kind, artifact) = match &a.input {
        None => (Kind::Nothing, None),
        Some(p) => {
            let (k, art) = pipeline::load_artifact(&read(p)?)?;
            (k, Some(art))
        }
    };
    let mut kind = kind;
    let mut artifact = artifact;
    if kind == Kind::Certificate {
        return Err(CliError::Usage("a certificate is already the end of the chain".into()));
    }
    if kind == Kind::Clique && a.steps.first() == Some(&Step::Biclique2perm4) {
        kind = Kind::Biclique;
        artifact = artifact.map(pipeline::as_biclique);
    }
    let steps = if a.steps.is_empty() {
        PipelineSpec::default_steps(kind)
    } else {
        a.steps.clone()
    };
    let params = StepParams {
        vars: a.vars,
        clauses: a.clauses,
        freq: a.freq,
        degree_bound: a.degree_bound,
        row_cap: a.row_cap,
        dummies: a.dummies,
        max_constraints: a.max_constraints,
    };
    let spec = PipelineSpec::new(steps, a.stop_after, kind, params, a.seed).map_err(CliError::Usage)?;
    let mut report = String::new();
    let result = pipeline::run_pipeline(&spec, artifact, &a.out_dir, &mut report);
    out.write_all(report.as_bytes())?;
    result?;
    Ok(EXIT_OK)
}

fn witness_line(r: &SolveResult) -> String {
    let seq: Vec<String> = r.witness.sequence().iter().map(|v| (v + 1).to_string()).collect();
    seq.join(" ")
}

fn selection_line(s: &RowSelection) -> String {
    let cols: Vec<String> = s.choice.iter().map(|j| (j + 1).to_string()).collect();
    cols.join(" ")
}

fn solve_permutation(
    a: &SolveArgs,
    inst: &crate::csp::PermCspInstance,
    cert: Option<&ReductionCertificate>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let brute = || {
        solve_brute(
            inst,
            &BruteOptions {
                limit: a.limit,
                threads: a.threads.max(1),
                ..BruteOptions::default()
            },
        )
    };
    let n = inst.num_vars();
    let arity = inst.max_constraint_len();
    let method = match a.method {
        Method::Auto => {
            if cert.is_some_and(|c| c.lineage.n <= crate::solvers::convenient::MAX_CONVENIENT_N) {
                Method::Convenient
            } else if arity <= 3 && n <= DEFAULT_DP_LIMIT {
                Method::Dp3
            } else if n <= a.limit {
                Method::Brute
            } else {
                return Err(CliError::Run(Error::InvalidInput(format!(
                    "no applicable method for {n} variables of arity {arity}"
                ))));
            }
        }
        m => m,
    };
    info!("solving with {method:?}");
    let (name, result) = match method {
        Method::Brute => ("brute", brute()?),
        Method::Dp3 => ("dp3", solve_dp3(inst)?),
        Method::Convenient => {
            let cert = cert.ok_or_else(|| {
                CliError::Usage("--method convenient needs a certificate".into())
            })?;
            let grid = cert.decode_grid()?;
            ("convenient", solve_convenient(cert, &grid)?.result)
        }
        other => {
            return Err(CliError::Usage(format!(
                "method {other:?} does not apply to a Permutation CSP instance"
            )))
        }
    };
    writeln!(out, "method {name}")?;
    writeln!(out, "optimum {}", result.optimum)?;
    writeln!(out, "witness {}", witness_line(&result))?;
    if let Some(c) = cert {
        writeln!(out, "target {}", c.target)?;
        if result.optimum >= c.target {
            writeln!(out, "MEETS TARGET")?;
        } else {
            writeln!(out, "BELOW TARGET")?;
            return Ok(EXIT_FAIL);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_solve(a: &SolveArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let text = read(&a.input)?;
    let kind = io::sniff(&text)
        .ok_or_else(|| CliError::Run(Error::InvalidInput("unrecognized input format".into())))?;
    let bad = |what: &str| CliError::Usage(format!("method {:?} does not apply to {what}", a.method));
    match kind {
        FileKind::Pcsp => solve_permutation(a, &io::read_pcsp(&text)?, None, out),
        FileKind::Certificate => {
            let cert = io::read_certificate(&text)?;
            solve_permutation(a, &cert.instance, Some(&cert), out)
        }
        FileKind::Cnf => {
            if !matches!(a.method, Method::Auto | Method::Sat) {
                return Err(bad("a CNF formula"));
            }
            let f = io::read_dimacs(&text)?;
            writeln!(out, "method sat")?;
            match solve_sat(&f) {
                Some(asg) => {
                    let lits: Vec<String> = asg
                        .iter()
                        .enumerate()
                        .map(|(v, &b)| if b { format!("{}", v + 1) } else { format!("-{}", v + 1) })
                        .collect();
                    writeln!(out, "result satisfiable")?;
                    writeln!(out, "assignment {}", lits.join(" "))?;
                }
                None => writeln!(out, "result unsatisfiable")?,
            }
            Ok(EXIT_OK)
        }
        FileKind::Graph => {
            if !matches!(a.method, Method::Auto | Method::Coloring) {
                return Err(bad("a graph"));
            }
            let g = io::read_graph(&text)?;
            writeln!(out, "method coloring")?;
            match solve_3coloring(&g) {
                Some(c) => {
                    let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "result colorable")?;
                    writeln!(out, "coloring {}", cs.join(" "))?;
                }
                None => writeln!(out, "result not-colorable")?,
            }
            Ok(EXIT_OK)
        }
        FileKind::Grid => {
            let g = io::read_grid(&text)?;
            let (name, sel) = match a.method {
                Method::Auto | Method::Clique => ("clique", solve_row_clique(&g)),
                Method::Biclique => ("biclique", solve_row_biclique(&g)?),
                _ => return Err(bad("a grid graph")),
            };
            writeln!(out, "method {name}")?;
            match sel {
                Some(s) => {
                    writeln!(out, "result found")?;
                    writeln!(out, "selection {}", selection_line(&s))?;
                }
                None => writeln!(out, "result none")?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` and runs the command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Reduce(a) => cmd_reduce(a, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Verify(a) => verify::cmd_verify(a, out),
    }
}

pub fn main() -> ExitCode {
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter("PERMCSP_LOG"))
        .format_timestamp(None)
        .try_init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InternalConsistency(_) => EXIT_INTERNAL,
                _ => EXIT_FAIL,
            })
        }
    }
}
