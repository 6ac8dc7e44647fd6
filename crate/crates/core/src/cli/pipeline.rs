use std::fmt;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use log::info;

use crate::cnf::CnfFormula;
use crate::error::{Error, Result};
use crate::generate::{random_sparse_cnf, rng_from_seed};
use crate::graph::{GridGraph, Layout, SimpleGraph};
use crate::io;
use crate::reductions::{
    reduce_clique_to_perm6, reduce_coloring_to_dcnnc_capped, reduce_dcnnb_to_perm4,
    reduce_dcnnc_to_dcnnb, reduce_sat_to_coloring, sufficient_dummies_perm4,
    sufficient_dummies_perm6, ReductionCertificate,
};
use crate::validate::counts::{structural_count, structural_count_perm6};
use crate::validate::{check_biclique_structure, check_regularity, check_stability};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Step {
    GenSat,
    Sat2col,
    Col2clique,
    Clique2biclique,
    Biclique2perm4,
    Clique2perm6,
}

impl Step {
    pub fn name(self) -> &'static str {
        match self {
            Step::GenSat => "gen-sat",
            Step::Sat2col => "sat2col",
            Step::Col2clique => "col2clique",
            Step::Clique2biclique => "clique2biclique",
            Step::Biclique2perm4 => "biclique2perm4",
            Step::Clique2perm6 => "clique2perm6",
        }
    }

    fn input(self) -> Kind {
        match self {
            Step::GenSat => Kind::Nothing,
            Step::Sat2col => Kind::Cnf,
            Step::Col2clique => Kind::Graph,
            Step::Clique2biclique | Step::Clique2perm6 => Kind::Clique,
            Step::Biclique2perm4 => Kind::Biclique,
        }
    }

    fn output(self) -> Kind {
        match self {
            Step::GenSat => Kind::Cnf,
            Step::Sat2col => Kind::Graph,
            Step::Col2clique => Kind::Clique,
            Step::Clique2biclique => Kind::Biclique,
            Step::Biclique2perm4 | Step::Clique2perm6 => Kind::Certificate,
        }
    }
}

/// Artifact types flowing between steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Nothing,
    Cnf,
    Graph,
    Clique,
    Biclique,
    Certificate,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Nothing => "no input",
            Kind::Cnf => "a CNF formula",
            Kind::Graph => "a graph",
            Kind::Clique => "a clique grid",
            Kind::Biclique => "a biclique grid",
            Kind::Certificate => "a certificate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DummyPolicy {
    Base,
    Sufficient,
    Explicit(usize),
}

impl std::str::FromStr for DummyPolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "base" => Ok(DummyPolicy::Base),
            "sufficient" => Ok(DummyPolicy::Sufficient),
            _ => s
                .parse()
                .map(DummyPolicy::Explicit)
                .map_err(|_| format!("expected `base`, `sufficient` or a count, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StepParams {
    pub vars: usize,
    pub clauses: usize,
    pub freq: usize,
    pub degree_bound: Option<usize>,
    pub row_cap: usize,
    /// `None` picks `sufficient` for `n <= 3` and `base` above.
    pub dummies: Option<DummyPolicy>,
    pub max_constraints: u64,
}

/// An ordered, type-checked list of steps with their parameters.
#[derive(Debug, Clone)]
pub struct PipelineSpec {
    pub steps: Vec<Step>,
    pub params: StepParams,
    pub seed: u64,
}

impl PipelineSpec {
    /// Checks that each step consumes what the previous one produces,
    /// starting from `input`. Returns a usage message otherwise.
    pub fn new(
        steps: Vec<Step>,
        stop_after: Option<Step>,
        input: Kind,
        params: StepParams,
        seed: u64,
    ) -> std::result::Result<Self, String> {
        let mut steps = steps;
        if let Some(stop) = stop_after {
            let at = steps
                .iter()
                .position(|&s| s == stop)
                .ok_or_else(|| format!("--stop-after {} is not in the pipeline", stop.name()))?;
            steps.truncate(at + 1);
        }
        if steps.is_empty() {
            return Err("empty pipeline".into());
        }
        let mut have = input;
        for s in &steps {
            if s.input() != have {
                return Err(format!("step {} needs {}, but gets {have}", s.name(), s.input()));
            }
            have = s.output();
        }
        Ok(PipelineSpec {
            steps,
            params,
            seed,
        })
    }

    /// The default chain from an input kind.
    pub fn default_steps(input: Kind) -> Vec<Step> {
        let chain = [
            Step::GenSat,
            Step::Sat2col,
            Step::Col2clique,
            Step::Clique2biclique,
            Step::Biclique2perm4,
        ];
        let from = chain.iter().position(|s| s.input() == input).unwrap_or(chain.len());
        chain[from..].to_vec()
    }
}

pub enum Artifact {
    Cnf(CnfFormula),
    Graph { graph: SimpleGraph, degree_bound: usize },
    Clique(GridGraph),
    Biclique(GridGraph),
    Certificate(ReductionCertificate),
}

impl Artifact {
    fn extension(&self) -> &'static str {
        match self {
            Artifact::Cnf(_) => "cnf",
            Artifact::Graph { .. } => "graph",
            Artifact::Clique(_) | Artifact::Biclique(_) => "grid",
            Artifact::Certificate(_) => "pcsp",
        }
    }

    fn render(&self) -> String {
        match self {
            Artifact::Cnf(f) => io::write_dimacs(f),
            Artifact::Graph { graph, .. } => io::write_graph(graph),
            Artifact::Clique(g) | Artifact::Biclique(g) => io::write_grid(g),
            Artifact::Certificate(c) => io::write_certificate(c),
        }
    }
}

fn condition_lines(g: &GridGraph, layout: Layout) -> Result<String> {
    let d = g.degree_bound.unwrap_or(0);
    let mut out = String::new();
    if layout == Layout::Biclique {
        out.push_str(&check_biclique_structure(g)?.to_lines());
    }
    out.push_str(&check_regularity(g, layout).report.to_lines());
    out.push_str(&check_stability(g, layout, d).report.to_lines());
    Ok(out)
}

fn dummies_for(policy: Option<DummyPolicy>, n: usize, base: usize, sufficient: impl Fn() -> usize) -> usize {
    match policy.unwrap_or(if n <= 3 {
        DummyPolicy::Sufficient
    } else {
        DummyPolicy::Base
    }) {
        DummyPolicy::Base => base,
        DummyPolicy::Sufficient => sufficient().max(base),
        DummyPolicy::Explicit(d) => d,
    }
}

fn check_size(what: &'static str, count: u64, cap: u64) -> Result<()> {
    if count > cap {
        return Err(Error::SizeLimit {
            what,
            value: count,
            limit: cap,
        });
    }
    Ok(())
}

fn run_step(step: Step, input: Option<Artifact>, spec: &PipelineSpec) -> Result<Artifact> {
    let p = &spec.params;
    Ok(match (step, input) {
        (Step::GenSat, None) => {
            let mut rng = rng_from_seed(spec.seed);
            Artifact::Cnf(random_sparse_cnf(&mut rng, p.vars, p.clauses, p.freq, 1..=3)?)
        }
        (Step::Sat2col, Some(Artifact::Cnf(f))) => {
            let r = reduce_sat_to_coloring(&f)?;
            Artifact::Graph {
                graph: r.graph,
                degree_bound: r.degree_bound,
            }
        }
        (Step::Col2clique, Some(Artifact::Graph { graph, degree_bound })) => {
            let d = p.degree_bound.unwrap_or(degree_bound);
            let r = reduce_coloring_to_dcnnc_capped(&graph, d, p.row_cap)?;
            Artifact::Clique(r.grid)
        }
        (Step::Clique2biclique, Some(Artifact::Clique(g))) => {
            let mut g = g;
            if g.degree_bound.is_none() {
                g.degree_bound = p.degree_bound;
            }
            Artifact::Biclique(reduce_dcnnc_to_dcnnb(&g)?)
        }
        (Step::Biclique2perm4, Some(Artifact::Biclique(h))) => {
            let mut h = h;
            let d = h
                .degree_bound
                .or(p.degree_bound)
                .ok_or_else(|| Error::InvalidInput("biclique grid carries no degree bound D".into()))?;
            if h.delta_table.is_none() {
                h.delta_table = check_regularity(&h, Layout::Biclique).delta;
            }
            let n = h.side() / 2;
            let dummies = dummies_for(p.dummies, n, 2 * d * n, || {
                sufficient_dummies_perm4(n, d, h.num_edges())
            });
            let count = structural_count(dummies as u64, 2 * n as u64 + 1)?;
            check_size("arity-4 constraint count", count, p.max_constraints)?;
            Artifact::Certificate(reduce_dcnnb_to_perm4(&h, d, dummies)?)
        }
        (Step::Clique2perm6, Some(Artifact::Clique(g))) => {
            let n = g.side();
            let dummies = dummies_for(p.dummies, n, 2 * n, || sufficient_dummies_perm6(n));
            let count = structural_count_perm6(n as u64, dummies as u64)?;
            check_size("arity-6 constraint count", count, p.max_constraints)?;
            Artifact::Certificate(reduce_clique_to_perm6(&g, dummies)?)
        }
        _ => unreachable!("pipeline was type-checked"),
    })
}

fn describe(a: &Artifact) -> Result<String> {
    Ok(match a {
        Artifact::Cnf(f) => format!(
            "variables {} clauses {} frequency {}\n",
            f.num_vars(),
            f.num_clauses(),
            f.frequency_bound()
        ),
        Artifact::Graph { graph, degree_bound } => format!(
            "vertices {} edges {} max-degree {} bound {degree_bound}\n",
            graph.num_vertices(),
            graph.num_edges(),
            graph.max_degree()
        ),
        Artifact::Clique(g) => {
            let mut s = format!("side {} edges {}\n", g.side(), g.num_edges());
            s.push_str(&condition_lines(g, Layout::Clique)?);
            s
        }
        Artifact::Biclique(g) => {
            let mut s = format!("side {} edges {}\n", g.side(), g.num_edges());
            s.push_str(&condition_lines(g, Layout::Biclique)?);
            s
        }
        Artifact::Certificate(c) => format!(
            "elements {} constraints {} target {}\n",
            c.instance.num_vars(),
            c.instance.num_constraints(),
            c.target
        ),
    })
}

/// Runs every step, writing `NN-<step>.<ext>` into `out_dir` and a
/// summary to `report`. Returns the written paths.
pub fn run_pipeline(
    spec: &PipelineSpec,
    input: Option<Artifact>,
    out_dir: &Path,
    report: &mut String,
) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    let mut current = input;
    let mut written = Vec::new();
    for (idx, &step) in spec.steps.iter().enumerate() {
        info!("running step {}", step.name());
        let out = run_step(step, current.take(), spec).map_err(|e| match e {
            Error::InvalidInput(m) => Error::InvalidInput(format!("step {}: {m}", step.name())),
            Error::InternalConsistency(m) => {
                Error::InternalConsistency(format!("step {}: {m}", step.name()))
            }
            other => other,
        })?;
        let path = out_dir.join(format!("{:02}-{}.{}", idx + 1, step.name(), out.extension()));
        std::fs::write(&path, out.render())?;
        report.push_str(&format!("step {} {} -> {}\n", idx + 1, step.name(), path.display()));
        report.push_str(&describe(&out)?);
        written.push(path);
        current = Some(out);
    }
    Ok(written)
}

/// Parses an input file into the artifact its header names.
pub fn load_artifact(text: &str) -> Result<(Kind, Artifact)> {
    use crate::io::FileKind;
    match io::sniff(text) {
        Some(FileKind::Cnf) => Ok((Kind::Cnf, Artifact::Cnf(io::read_dimacs(text)?))),
        Some(FileKind::Graph) => {
            let graph = io::read_graph(text)?;
            let degree_bound = graph.max_degree();
            Ok((Kind::Graph, Artifact::Graph { graph, degree_bound }))
        }
        Some(FileKind::Grid) => Ok((Kind::Clique, Artifact::Clique(io::read_grid(text)?))),
        Some(FileKind::Certificate) => Ok((
            Kind::Certificate,
            Artifact::Certificate(io::read_certificate(text)?),
        )),
        Some(FileKind::Pcsp) | None => Err(Error::InvalidInput(
            "input is not a CNF, graph or grid file".into(),
        )),
    }
}

/// A grid read as the input of a step that expects a biclique.
pub fn as_biclique(a: Artifact) -> Artifact {
    match a {
        Artifact::Clique(g) => Artifact::Biclique(g),
        other => other,
    }
}
