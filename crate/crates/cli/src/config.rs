//! Experiment configuration, read from JSON.
//!
//! ```json
//! {
//!   "graph_source": {"ensemble": {"n": [20], "p": [0.2, 0.8], "trials": 100}},
//!   "q_selector": "max_unique_degree",
//!   "t_grid": [-1, "-1/2"],
//!   "zeta": -1,
//!   "K_max": 30,
//!   "domain": "double",
//!   "seed": 1
//! }
//! ```

use std::path::PathBuf;

use lap_perturb_core::euler::{DEFAULT_ALPHA_THRESHOLD, DEFAULT_K_CHECK};
use lap_perturb_core::scalar::{parse_ratio, ratio_string};
use lap_perturb_core::{NumberDomain, RBig};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

/// An exact value given either as a JSON number or a string such as `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ExactRepr", into = "String")]
pub struct Exact(pub RBig);

#[derive(Deserialize)]
#[serde(untagged)]
enum ExactRepr {
    Text(String),
    Number(serde_json::Number),
}

impl TryFrom<ExactRepr> for Exact {
    type Error = String;
    fn try_from(r: ExactRepr) -> Result<Self, String> {
        let text = match r {
            ExactRepr::Text(s) => s,
            ExactRepr::Number(n) => n.to_string(),
        };
        parse_ratio(&text).map(Exact).map_err(|e| e.to_string())
    }
}

impl From<Exact> for String {
    fn from(e: Exact) -> String {
        ratio_string(&e.0)
    }
}

impl From<i64> for Exact {
    fn from(v: i64) -> Self {
        Exact(RBig::from(v))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GraphSource {
    EdgeList { path: PathBuf },
    /// A graph spec as accepted by [`crate::datasets::parse_graph_spec`].
    Generator(String),
    /// Erdős–Rényi trials for every `(n, p)` cell.
    Ensemble {
        n: Vec<usize>,
        p: Vec<f64>,
        trials: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SelectorRepr", into = "SelectorRepr")]
pub enum QSelector {
    /// 1-based node index.
    Node(usize),
    MaxUniqueDegree,
    AllUnique,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SelectorRepr {
    Node(usize),
    Named(String),
}

impl TryFrom<SelectorRepr> for QSelector {
    type Error = String;
    fn try_from(r: SelectorRepr) -> Result<Self, String> {
        match r {
            SelectorRepr::Node(0) => Err("node indices start at 1".into()),
            SelectorRepr::Node(q) => Ok(QSelector::Node(q)),
            SelectorRepr::Named(s) => s.parse(),
        }
    }
}

impl From<QSelector> for SelectorRepr {
    fn from(q: QSelector) -> Self {
        match q {
            QSelector::Node(q) => SelectorRepr::Node(q),
            QSelector::MaxUniqueDegree => SelectorRepr::Named("max_unique_degree".into()),
            QSelector::AllUnique => SelectorRepr::Named("all_unique".into()),
        }
    }
}

impl std::str::FromStr for QSelector {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "max_unique_degree" => Ok(QSelector::MaxUniqueDegree),
            "all_unique" => Ok(QSelector::AllUnique),
            _ => match s.parse::<usize>() {
                Ok(q) if q >= 1 => Ok(QSelector::Node(q)),
                _ => Err(format!("unknown node selector {s:?}")),
            },
        }
    }
}

/// Parses `exact`, `double`, `extended` or `float:<bits>`.
pub fn parse_domain(s: &str) -> Result<NumberDomain, String> {
    match s {
        "exact" => Ok(NumberDomain::ExactRational),
        "double" => Ok(NumberDomain::DOUBLE),
        "extended" => Ok(NumberDomain::EXTENDED),
        _ => match s.strip_prefix("float:").map(str::parse::<usize>) {
            Some(Ok(bits)) if bits >= 2 => Ok(NumberDomain::Float { bits }),
            _ => Err(format!("unknown number domain {s:?}")),
        },
    }
}

pub fn domain_name(d: NumberDomain) -> String {
    match d {
        NumberDomain::ExactRational => "exact".into(),
        NumberDomain::Float { bits: 53 } => "double".into(),
        NumberDomain::Float { bits: 128 } => "extended".into(),
        NumberDomain::Float { bits } => format!("float:{bits}"),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Domain(pub NumberDomain);

impl TryFrom<String> for Domain {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        parse_domain(&s).map(Domain)
    }
}

impl From<Domain> for String {
    fn from(d: Domain) -> String {
        domain_name(d.0)
    }
}

impl Default for Domain {
    fn default() -> Self {
        Domain(NumberDomain::DOUBLE)
    }
}

/// Grid used when none is configured, before dropping the points that are
/// singular for the configured `zeta` (`t = 1` at `zeta = -1`).
pub fn default_t_grid() -> Vec<Exact> {
    [-6, -5, -4, -3, -2, -1, 1, 2].into_iter().map(Exact::from).collect()
}

fn is_singular(t: &RBig, zeta: &RBig) -> bool {
    (RBig::ONE + t * zeta) == RBig::ZERO
}

fn default_zeta() -> Exact {
    Exact::from(-1)
}

fn default_k_max() -> usize {
    DEFAULT_K_CHECK
}

fn default_alpha() -> f64 {
    DEFAULT_ALPHA_THRESHOLD
}

fn default_k_check() -> usize {
    DEFAULT_K_CHECK
}

fn default_selector() -> QSelector {
    QSelector::MaxUniqueDegree
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub graph_source: GraphSource,
    #[serde(default = "default_selector")]
    pub q_selector: QSelector,
    /// Absent means [`default_t_grid`] minus its singular points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_grid: Option<Vec<Exact>>,
    #[serde(default = "default_zeta")]
    pub zeta: Exact,
    #[serde(rename = "K_max", default = "default_k_max")]
    pub k_max: usize,
    #[serde(default)]
    pub domain: Domain,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_alpha")]
    pub alpha_threshold: f64,
    #[serde(rename = "K_check", default = "default_k_check")]
    pub k_check: usize,
    /// Emit one row per order `K = 2..=K_max` instead of only `K_check`.
    #[serde(default)]
    pub all_orders: bool,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let cfg: ExperimentConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// The t values to evaluate.
    pub fn t_values(&self) -> Vec<RBig> {
        match &self.t_grid {
            Some(grid) => grid.iter().map(|t| t.0.clone()).collect(),
            None => default_t_grid()
                .into_iter()
                .map(|t| t.0)
                .filter(|t| !is_singular(t, &self.zeta.0))
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: String| Err(ConfigError::Invalid(m));
        if self.k_max < 2 {
            return bad(format!("K_max must be at least 2, got {}", self.k_max));
        }
        if self.k_check > self.k_max {
            return bad(format!(
                "K_check ({}) exceeds K_max ({})",
                self.k_check, self.k_max
            ));
        }
        let grid = self.t_values();
        if grid.is_empty() {
            return bad("t_grid is empty".into());
        }
        for t in &grid {
            if is_singular(t, &self.zeta.0) {
                return bad(format!(
                    "t = {} is singular for zeta = {}",
                    ratio_string(t),
                    ratio_string(&self.zeta.0)
                ));
            }
        }
        if !self.alpha_threshold.is_finite() {
            return bad("alpha_threshold must be finite".into());
        }
        if let GraphSource::Ensemble { n, p, trials } = &self.graph_source {
            if n.is_empty() || p.is_empty() || *trials == 0 {
                return bad("ensemble needs at least one n, one p and one trial".into());
            }
            if let Some(x) = p.iter().find(|x| !(0.0..=1.0).contains(*x)) {
                return bad(format!("link density {x} outside [0, 1]"));
            }
            if let QSelector::Node(q) = self.q_selector {
                if let Some(m) = n.iter().find(|&&m| q > m) {
                    return bad(format!("node {q} outside a graph of {m} nodes"));
                }
            }
        }
        Ok(())
    }
}
