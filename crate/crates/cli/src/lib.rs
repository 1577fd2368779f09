//! Front end for the `rdmc` binary: instance loading, the job grid, witness
//! verification and CSV/JSON reports.

pub mod args;
pub mod report;

pub use args::{Cli, Format, GnpParams};
pub use report::{emit_report, ReportRow, COLUMNS};

use rdclique::graph::{parse_dimacs, random_gnp, DimacsError};
use rdclique::rd::{self, DollEntry};
use rdclique::{Algorithm, ColoringKind, ConfigError, Graph, OrderingKind, SolveResult, SolverConfig};
use serde::Serialize;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;
use thiserror::Error;

pub mod exit {
    pub const OK: i32 = 0;
    /// Unusable flag values.
    pub const USAGE: i32 = 2;
    /// An input file could not be read or parsed.
    pub const PARSE: i32 = 3;
    /// Some job hit the time limit; its row is still reported.
    pub const TIME_LIMIT: i32 = 4;
    /// A solver returned a witness that is not a clique.
    pub const BAD_WITNESS: i32 = 5;
    pub const IO: i32 = 6;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: DimacsError },
    #[error("{path}: {source}")]
    Open { path: PathBuf, source: io::Error },
    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("invalid time limit {0}")]
    TimeLimit(f64),
    #[error("nothing to solve: give --input or --gnp")]
    NoInstances,
    #[error("--jobs must be at least 1")]
    NoWorkers,
    #[error("{instance}: {algo} returned a witness that is not a clique")]
    BadWitness { instance: String, algo: Algorithm },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Open { .. } => exit::PARSE,
            CliError::Config(_) | CliError::TimeLimit(_) | CliError::NoInstances | CliError::NoWorkers => {
                exit::USAGE
            }
            CliError::BadWitness { .. } => exit::BAD_WITNESS,
            CliError::Io(_) => exit::IO,
        }
    }
}

/// True iff the vertices are distinct, in range and pairwise adjacent in `g`.
pub fn verify_witness(g: &Graph, witness: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in witness {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    g.is_clique(witness.iter().copied())
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

pub fn load_dimacs(path: &Path) -> Result<Instance, CliError> {
    let file = File::open(path).map_err(|source| CliError::Open { path: path.into(), source })?;
    let parsed = parse_dimacs(BufReader::new(file)).map_err(|source| CliError::Parse { path: path.into(), source })?;
    let name = path
        .file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok(Instance { name, graph: parsed.graph })
}

pub fn gnp_instance(params: GnpParams, seed: u64) -> Instance {
    Instance {
        name: format!("gnp_{}_{}_s{}", params.n, params.p, seed),
        graph: random_gnp(params.n, params.p, seed),
    }
}

#[derive(Clone, Debug)]
pub struct Job {
    pub instance: usize,
    pub algo: Algorithm,
    pub config: SolverConfig,
}

/// One line of the trace file.
#[derive(Serialize)]
struct TraceEvent<'a> {
    instance: &'a str,
    coloring: ColoringKind,
    ordering: OrderingKind,
    /// 1-based, like the witness.
    vertex: usize,
    kind: rd::EntryKind,
    iteration: usize,
    bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    color: Option<usize>,
}

pub struct JobOutput {
    pub row: ReportRow,
    pub result: SolveResult,
    pub trace: Vec<DollEntry>,
}

pub fn run_job(instance: &Instance, job: &Job, traced: bool) -> Result<JobOutput, CliError> {
    let g = &instance.graph;
    let (result, trace) = match job.algo {
        Algorithm::Rdmc if traced => {
            let (res, t) = rd::solve_traced(g, &job.config);
            (res, t.entries)
        }
        algo => (rdclique::solve(algo, g, &job.config), Vec::new()),
    };
    if !verify_witness(g, &result.witness) || (result.proven && result.witness.len() != result.omega) {
        return Err(CliError::BadWitness { instance: instance.name.clone(), algo: job.algo });
    }
    let row = ReportRow::new(&instance.name, g.n(), g.density(), &result);
    Ok(JobOutput { row, result, trace })
}

/// Runs `jobs` on up to `workers` threads; outputs come back in job order.
pub fn run_jobs(instances: &[Instance], jobs: &[Job], workers: usize, traced: bool) -> Result<Vec<JobOutput>, CliError> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<JobOutput, CliError>>>> = Mutex::new((0..jobs.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers.clamp(1, jobs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let out = run_job(&instances[job.instance], job, traced);
                slots.lock().expect("no worker panicked")[i] = Some(out);
            });
        }
    });
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|s| s.expect("every job ran"))
        .collect()
}

fn build_jobs(cli: &Cli, instances: usize) -> Result<Vec<Job>, CliError> {
    if !(cli.time_limit > 0.0 && cli.time_limit.is_finite()) {
        return Err(CliError::TimeLimit(cli.time_limit));
    }
    let limit = Duration::from_secs_f64(cli.time_limit);
    let mut jobs = Vec::new();
    for instance in 0..instances {
        for &algo in &cli.algos {
            for &coloring in &cli.colorings {
                for &ordering in &cli.orderings {
                    let config = SolverConfig::new(coloring, ordering)
                        .with_interruption(!cli.no_interrupt)
                        .with_time_limit(limit);
                    config.validate()?;
                    jobs.push(Job { instance, algo, config });
                }
            }
        }
    }
    Ok(jobs)
}

fn write_trace(path: &Path, instances: &[Instance], jobs: &[Job], outputs: &[JobOutput]) -> Result<(), CliError> {
    let mut w = io::BufWriter::new(File::create(path)?);
    for (job, out) in jobs.iter().zip(outputs) {
        for e in &out.trace {
            let event = TraceEvent {
                instance: &instances[job.instance].name,
                coloring: job.config.coloring,
                ordering: job.config.ordering,
                vertex: e.vertex + 1,
                kind: e.kind,
                iteration: e.iteration,
                bound: e.bound,
                color: e.color,
            };
            serde_json::to_writer(&mut w, &event).map_err(io::Error::from)?;
            w.write_all(b"\n")?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Runs the whole command. The report goes to `out`, witnesses and errors to
/// `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match try_run(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "rdmc: {e}");
            e.exit_code()
        }
    }
}

fn try_run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if cli.jobs == 0 {
        return Err(CliError::NoWorkers);
    }
    let mut instances = Vec::new();
    for path in &cli.inputs {
        instances.push(load_dimacs(path)?);
    }
    for &params in &cli.gnp {
        for &seed in &cli.seeds {
            instances.push(gnp_instance(params, seed));
        }
    }
    if instances.is_empty() {
        return Err(CliError::NoInstances);
    }
    let jobs = build_jobs(cli, instances.len())?;
    let outputs = run_jobs(&instances, &jobs, cli.jobs, cli.trace.is_some())?;

    if let Some(path) = &cli.trace {
        write_trace(path, &instances, &jobs, &outputs)?;
    }
    let rows: Vec<ReportRow> = outputs.iter().map(|o| o.row.clone()).collect();
    out.write_all(emit_report(&rows, cli.format).as_bytes())?;
    out.flush()?;

    for row in &rows {
        let ids: Vec<String> = row.witness.iter().map(|v| v.to_string()).collect();
        writeln!(
            err,
            "{} {} {}/{}: omega {}{} witness {{{}}}",
            row.instance,
            row.algo,
            row.coloring,
            row.ordering,
            row.omega,
            if row.proven { "" } else { " (time limit, lower bound)" },
            ids.join(",")
        )?;
    }
    Ok(if rows.iter().all(|r| r.proven) { exit::OK } else { exit::TIME_LIMIT })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Graph {
        let edges = [
            (0, 1), (0, 4), (0, 6), (1, 2), (1, 8), (2, 3), (2, 6), (2, 7), (2, 8), (3, 4),
            (3, 6), (3, 7), (4, 5), (4, 8), (5, 6), (6, 7), (7, 8), (8, 9), (9, 0),
        ];
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn witness_checks() {
        let g = example();
        assert!(verify_witness(&g, &[2, 3, 6, 7]));
        assert!(!verify_witness(&g, &[0, 2]));
        assert!(verify_witness(&g, &[5]));
        assert!(!verify_witness(&g, &[3, 3]));
        assert!(!verify_witness(&g, &[10]));
    }

    #[test]
    fn gnp_params_parsing() {
        assert_eq!("200,0.9".parse::<GnpParams>(), Ok(GnpParams { n: 200, p: 0.9 }));
        assert!("200".parse::<GnpParams>().is_err());
        assert!("200,1.5".parse::<GnpParams>().is_err());
        assert!("x,0.5".parse::<GnpParams>().is_err());
    }
}
