//! Edge-list text format and graph JSON.
//!
//! Text: a header `n <count>` followed by one `u v [weight]` line per edge,
//! 1-based, with `#` starting a comment.
//! JSON: `{"n": 5, "edges": [[1, 3, "1/1"], ...]}` with weights as exact
//! `p/q` strings (plain numbers are accepted on input).

use std::fmt::Write as _;
use std::path::Path;

use lap_perturb_core::scalar::{parse_ratio, ratio_string};
use lap_perturb_core::{Graph, RBig};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] lap_perturb_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize, FormatError> {
    let v: usize = tok
        .parse()
        .map_err(|_| syntax(line, format!("bad node index {tok:?}")))?;
    if v == 0 {
        return Err(syntax(line, "node indices start at 1"));
    }
    Ok(v - 1)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "n" {
            if n.is_some() {
                return Err(syntax(line_no, "duplicate header"));
            }
            if toks.len() != 2 {
                return Err(syntax(line_no, "header must be `n <count>`"));
            }
            n = Some(
                toks[1]
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad node count {:?}", toks[1])))?,
            );
            continue;
        }
        if n.is_none() {
            return Err(FormatError::MissingHeader);
        }
        if !(2..=3).contains(&toks.len()) {
            return Err(syntax(line_no, "expected `u v [weight]`"));
        }
        let u = parse_index(toks[0], line_no)?;
        let v = parse_index(toks[1], line_no)?;
        let w = match toks.get(2) {
            Some(t) => parse_ratio(t).map_err(|e| syntax(line_no, e.to_string()))?,
            None => RBig::ONE,
        };
        edges.push((u, v, w));
    }
    let n = n.ok_or(FormatError::MissingHeader)?;
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v, w) in g.edges() {
        if w == RBig::ONE {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        } else {
            let _ = writeln!(out, "{} {} {}", u + 1, v + 1, ratio_string(&w));
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize, Weight)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Weight {
    Text(String),
    Number(serde_json::Number),
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g
            .edges()
            .into_iter()
            .map(|(u, v, w)| (u + 1, v + 1, Weight::Text(ratio_string(&w))))
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (i, (u, v, w)) in doc.edges.into_iter().enumerate() {
        let text = match w {
            Weight::Text(s) => s,
            Weight::Number(n) => n.to_string(),
        };
        let w = parse_ratio(&text).map_err(|e| syntax(i + 1, e.to_string()))?;
        if u == 0 || v == 0 {
            return Err(syntax(i + 1, "node indices start at 1"));
        }
        edges.push((u - 1, v - 1, w));
    }
    Ok(Graph::new(doc.n, &edges)?)
}

/// Reads an edge list, or graph JSON when the extension is `.json`.
pub fn read_graph_file(path: &Path) -> Result<Graph, FormatError> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        graph_from_json(&text)
    } else {
        parse_edge_list(&text)
    }
}
