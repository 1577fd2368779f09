use crate::args::Format;
use rdclique::SolveResult;
use serde::Serialize;

pub const COLUMNS: [&str; 11] = [
    "instance", "n", "density", "algo", "coloring", "ordering", "omega", "proven", "all", "ne",
    "seconds",
];

/// One report line: a solver run on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub instance: String,
    pub n: usize,
    pub density: f64,
    pub algo: String,
    pub coloring: String,
    pub ordering: String,
    pub interruption: bool,
    pub omega: usize,
    pub proven: bool,
    pub all: u64,
    pub ne: u64,
    pub seconds: f64,
    pub max_depth: usize,
    pub interruptions: u64,
    /// 1-based vertex ids of the input graph.
    pub witness: Vec<usize>,
}

impl ReportRow {
    pub fn new(instance: &str, n: usize, density: f64, result: &SolveResult) -> Self {
        ReportRow {
            instance: instance.to_string(),
            n,
            density,
            algo: result.algorithm.to_string(),
            coloring: result.config.coloring.to_string(),
            ordering: result.config.ordering.to_string(),
            interruption: result.config.interruption,
            omega: result.omega,
            proven: result.proven,
            all: result.stats.subproblems_all,
            ne: result.stats.subproblems_ne,
            seconds: result.stats.elapsed,
            max_depth: result.stats.max_depth,
            interruptions: result.stats.interruptions,
            witness: result.witness.iter().map(|v| v + 1).collect(),
        }
    }

    fn fields(&self) -> [String; 11] {
        [
            self.instance.clone(),
            self.n.to_string(),
            format!("{:.4}", self.density),
            self.algo.clone(),
            self.coloring.clone(),
            self.ordering.clone(),
            self.omega.to_string(),
            self.proven.to_string(),
            self.all.to_string(),
            self.ne.to_string(),
            format!("{:.6}", self.seconds),
        ]
    }
}

pub fn emit_report(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(COLUMNS).expect("in-memory write");
            for row in rows {
                w.write_record(row.fields()).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}
