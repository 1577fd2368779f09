use clap::{Parser, ValueEnum};
use rdclique::{Algorithm, ColoringKind, OrderingKind};
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// `n,p` pair for a seeded G(n, p) instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GnpParams {
    pub n: usize,
    pub p: f64,
}

impl FromStr for GnpParams {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (n, p) = s.split_once(',').ok_or_else(|| format!("expected `n,p`, got `{s}`"))?;
        let n = n.trim().parse().map_err(|e| format!("bad vertex count `{n}`: {e}"))?;
        let p: f64 = p.trim().parse().map_err(|e| format!("bad probability `{p}`: {e}"))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(format!("probability {p} outside [0, 1]"));
        }
        Ok(GnpParams { n, p })
    }
}

/// Exact maximum clique on DIMACS or random graphs.
///
/// Every combination of instance, seed, algorithm, coloring and ordering is
/// one job and one report row. Witnesses are printed on stderr with 1-based
/// vertex ids, as in DIMACS files.
#[derive(Clone, Debug, Parser)]
#[command(name = "rdmc", version)]
pub struct Cli {
    /// DIMACS ascii graph file; may be repeated.
    #[arg(long = "input", value_name = "FILE")]
    pub inputs: Vec<PathBuf>,

    /// Random graph `n,p`; may be repeated.
    #[arg(long = "gnp", value_name = "N,P")]
    pub gnp: Vec<GnpParams>,

    /// Seeds for `--gnp` instances, comma separated.
    #[arg(long = "seed", value_delimiter = ',', default_value = "0")]
    pub seeds: Vec<u64>,

    #[arg(long = "algo", value_delimiter = ',', default_value = "rdmc")]
    pub algos: Vec<Algorithm>,

    #[arg(long = "color", value_delimiter = ',', default_value = "greedy")]
    pub colorings: Vec<ColoringKind>,

    #[arg(long = "order", value_delimiter = ',', default_value = "deg")]
    pub orderings: Vec<OrderingKind>,

    /// Per-job limit in seconds.
    #[arg(long = "time-limit", default_value_t = 18000.0)]
    pub time_limit: f64,

    /// Disable interruption of decision subproblems (rdmc only).
    #[arg(long = "no-interrupt")]
    pub no_interrupt: bool,

    /// Write the doll sequence of rdmc jobs to FILE as JSON lines.
    #[arg(long = "trace", value_name = "FILE")]
    pub trace: Option<PathBuf>,

    #[arg(long = "format", value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Worker threads.
    #[arg(long = "jobs", short = 'j', default_value_t = 1)]
    pub jobs: usize,
}
