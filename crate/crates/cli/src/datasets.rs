//! Builtin example graphs and the textual graph specification used on the
//! command line and in configs.

use std::path::Path;

use lap_perturb_core::generate::{antiregular, complete, erdos_renyi, ring_with_core};
use lap_perturb_core::Graph;

use crate::edgelist::{parse_edge_list, read_graph_file, FormatError};

pub const EXAMPLE1: &str = include_str!("../data/example1.edges");
pub const EXAMPLE2: &str = include_str!("../data/example2.edges");
pub const EXAMPLE3: &str = include_str!("../data/example3.edges");

/// The five-node tree.
pub fn example1() -> Graph {
    parse_edge_list(EXAMPLE1).expect("builtin data")
}

/// The 20-node random instance.
pub fn example2() -> Graph {
    parse_edge_list(EXAMPLE2).expect("builtin data")
}

/// The 10-node antiregular graph.
pub fn example3() -> Graph {
    parse_edge_list(EXAMPLE3).expect("builtin data")
}

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("unknown graph spec {0:?}")]
    Unknown(String),
    #[error("bad field {field:?} in graph spec {spec:?}")]
    Field { spec: String, field: String },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Graph(#[from] lap_perturb_core::Error),
}

/// Resolves a graph spec:
///
/// * `example:e1`, `example:e2`, `example:e3`
/// * `er:<n>:<p>:<seed>`
/// * `antiregular:<n>`, `complete:<n>`, `ring-core:<n>:<k>`
/// * anything else is a path to an edge list (or graph JSON if it ends in
///   `.json`).
pub fn parse_graph_spec(spec: &str) -> Result<Graph, SpecError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let field = |i: usize| -> Result<&str, SpecError> {
        parts.get(i).copied().ok_or_else(|| SpecError::Unknown(spec.to_string()))
    };
    fn num<T: std::str::FromStr>(spec: &str, text: &str) -> Result<T, SpecError> {
        text.parse().map_err(|_| SpecError::Field {
            spec: spec.to_string(),
            field: text.to_string(),
        })
    }
    let arity = |k: usize| -> Result<(), SpecError> {
        if parts.len() == k {
            Ok(())
        } else {
            Err(SpecError::Unknown(spec.to_string()))
        }
    };
    match parts[0] {
        "example" => {
            arity(2)?;
            match field(1)? {
                "e1" => Ok(example1()),
                "e2" => Ok(example2()),
                "e3" => Ok(example3()),
                _ => Err(SpecError::Unknown(spec.to_string())),
            }
        }
        "er" => {
            arity(4)?;
            Ok(erdos_renyi(
                num(spec, field(1)?)?,
                num(spec, field(2)?)?,
                num(spec, field(3)?)?,
            )?)
        }
        "antiregular" => {
            arity(2)?;
            Ok(antiregular(num(spec, field(1)?)?))
        }
        "complete" => {
            arity(2)?;
            Ok(complete(num(spec, field(1)?)?))
        }
        "ring-core" => {
            arity(3)?;
            Ok(ring_with_core(num(spec, field(1)?)?, num(spec, field(2)?)?)?)
        }
        _ => {
            let path = Path::new(spec);
            if path.exists() {
                Ok(read_graph_file(path)?)
            } else {
                Err(SpecError::Unknown(spec.to_string()))
            }
        }
    }
}
