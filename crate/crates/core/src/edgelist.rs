//! Plain edge-list text: a line `n m`, then `m` lines `u v` with 0-based
//! endpoints. `#` starts a comment; blank lines are ignored. Several graphs
//! may follow one another in the same text.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError { line, message: message.into() }
}

fn pair(line: usize, text: &str, what: &str) -> Result<(usize, usize), EdgeListError> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, EdgeListError> {
        let field = fields.next().ok_or_else(|| err(line, format!("expected {what}")))?;
        field
            .parse()
            .map_err(|_| err(line, format!("`{field}` is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(err(line, format!("trailing fields after {what}")));
    }
    Ok((a, b))
}

/// Parses every graph in `text`.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut graphs = Vec::new();
    while let Some((line, header)) = lines.next() {
        let (n, m) = pair(line, header, "header `n m`")?;
        let mut edges = Vec::with_capacity(m.min(1 << 16));
        for k in 0..m {
            let (line, text) = lines
                .next()
                .ok_or_else(|| err(line, format!("header promises {m} edges, found {k}")))?;
            let (u, v) = pair(line, text, "edge `u v`")?;
            if u >= n || v >= n {
                return Err(err(line, GraphError::VertexOutOfRange { u, v, n }.to_string()));
            }
            if u == v {
                return Err(err(line, GraphError::Loop(u).to_string()));
            }
            edges.push((u, v));
        }
        graphs.push(Graph::from_edge_list(n, edges).expect("edges validated above"));
    }
    Ok(graphs)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
