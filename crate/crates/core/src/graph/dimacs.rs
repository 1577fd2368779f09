//! DIMACS ascii graph format: `c` comment lines, one `p edge <n> <m>` line,
//! then `e <u> <v>` lines with 1-based vertex ids.

use super::Graph;
use std::io::{self, BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DimacsError {
    #[error("no problem line (`p edge <n> <m>`) before line {line}")]
    MissingProblemLine { line: usize },
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A parsed graph together with what was dropped on the way in.
#[derive(Debug, Clone)]
pub struct ParsedDimacs {
    pub graph: Graph,
    /// Edge count announced on the `p` line.
    pub declared_edges: usize,
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<u64, DimacsError> {
    let token = token.ok_or_else(|| DimacsError::Syntax {
        line,
        message: format!("missing {what}"),
    })?;
    token.parse().map_err(|_| DimacsError::Syntax {
        line,
        message: format!("{what} `{token}` is not a nonnegative integer"),
    })
}

pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<ParsedDimacs, DimacsError> {
    let mut parsed: Option<ParsedDimacs> = None;
    let mut last_line = 0;
    for (index, text) in reader.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let text = text?;
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if parsed.is_some() {
                    return Err(DimacsError::DuplicateProblemLine { line });
                }
                if tokens.next().is_none() {
                    return Err(DimacsError::Syntax {
                        line,
                        message: "missing format name".into(),
                    });
                }
                let n = number(tokens.next(), line, "vertex count")? as usize;
                let m = number(tokens.next(), line, "edge count")? as usize;
                parsed = Some(ParsedDimacs {
                    graph: Graph::new(n),
                    declared_edges: m,
                    self_loops: 0,
                    duplicate_edges: 0,
                });
            }
            Some("e") => {
                let p = parsed
                    .as_mut()
                    .ok_or(DimacsError::MissingProblemLine { line })?;
                let n = p.graph.n();
                let u = number(tokens.next(), line, "edge endpoint")?;
                let v = number(tokens.next(), line, "edge endpoint")?;
                for vertex in [u, v] {
                    if vertex == 0 || vertex as usize > n {
                        return Err(DimacsError::VertexOutOfRange { line, vertex, n });
                    }
                }
                let (u, v) = (u as usize - 1, v as usize - 1);
                if u == v {
                    p.self_loops += 1;
                } else if !p.graph.add_edge(u, v) {
                    p.duplicate_edges += 1;
                }
            }
            Some(other) => {
                return Err(DimacsError::Syntax {
                    line,
                    message: format!("unknown line type `{other}`"),
                })
            }
        }
    }
    parsed.ok_or(DimacsError::MissingProblemLine {
        line: last_line + 1,
    })
}

pub fn parse_dimacs_str(text: &str) -> Result<ParsedDimacs, DimacsError> {
    parse_dimacs(text.as_bytes())
}

/// Writes `graph` with 1-based ids in ascending edge order.
pub fn write_dimacs<W: Write>(graph: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "p edge {} {}", graph.n(), graph.edge_count())?;
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}
