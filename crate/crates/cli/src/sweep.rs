//! Sweeps over a single graph or an Erdős–Rényi ensemble.

use lap_perturb_core::generate::erdos_renyi;
use lap_perturb_core::{Error, Graph, NumberDomain, RBig};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{ExperimentConfig, GraphSource, QSelector};
use crate::datasets::parse_graph_spec;
use crate::edgelist::read_graph_file;
use crate::evaluate::{evaluate, render_exact, select_nodes, Oracle, Table};
use crate::formats::to_csv;

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Spec(#[from] crate::datasets::SpecError),
    #[error(transparent)]
    Format(#[from] crate::edgelist::FormatError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("no node with a unique degree matches the selector")]
    NoNode,
}

/// One row of a single-graph sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub q: usize,
    pub t: String,
    #[serde(rename = "K")]
    pub k: usize,
    pub xi: String,
    pub alpha: f64,
    pub matched_mu: f64,
    pub converged: bool,
}

/// Converged fraction of one `(n, p, t)` ensemble cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnsembleRow {
    pub n: usize,
    pub p: f64,
    pub t: String,
    pub trials: usize,
    /// Trials without a selectable node.
    pub skipped: usize,
    /// Number of classified `(trial, node)` pairs.
    pub evaluated: usize,
    pub converged: usize,
    /// `converged / evaluated`; empty when nothing was evaluated.
    pub fraction: Option<f64>,
}

pub enum SweepOutput {
    Graph(Vec<SweepRow>),
    Ensemble(Vec<EnsembleRow>),
}

impl SweepOutput {
    pub fn to_csv(&self) -> String {
        match self {
            SweepOutput::Graph(rows) => to_csv(rows),
            SweepOutput::Ensemble(rows) => to_csv(rows),
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed of trial `trial` in ensemble cell `cell`.
pub fn trial_seed(base: u64, cell: u64, trial: u64) -> u64 {
    splitmix64(splitmix64(base ^ splitmix64(cell)) ^ trial)
}

pub fn run(cfg: &ExperimentConfig) -> Result<SweepOutput, SweepError> {
    match &cfg.graph_source {
        GraphSource::EdgeList { path } => Ok(SweepOutput::Graph(sweep_graph(
            &read_graph_file(path)?,
            cfg,
        )?)),
        GraphSource::Generator(spec) => Ok(SweepOutput::Graph(sweep_graph(
            &parse_graph_spec(spec)?,
            cfg,
        )?)),
        GraphSource::Ensemble { n, p, trials } => {
            Ok(SweepOutput::Ensemble(sweep_ensemble(n, p, *trials, cfg)?))
        }
    }
}

/// Rows for every selected node and t, ordered by node then t.
pub fn sweep_graph(g: &Graph, cfg: &ExperimentConfig) -> Result<Vec<SweepRow>, SweepError> {
    let nodes = select_nodes(g, &cfg.q_selector);
    if nodes.is_empty() {
        return Err(SweepError::NoNode);
    }
    let domain = cfg.domain.0;
    let oracle = Oracle::for_domain(g, domain)?;
    let t_grid = cfg.t_values();
    let per_node: Vec<Result<Vec<SweepRow>, Error>> = nodes
        .par_iter()
        .map(|&q| {
            let table = Table::expand(g, q, cfg.k_max, domain)?;
            let mut rows = Vec::new();
            for t in &t_grid {
                let e = evaluate(
                    &table,
                    &oracle,
                    t,
                    &cfg.zeta.0,
                    cfg.k_max,
                    cfg.alpha_threshold,
                    cfg.k_check,
                )?;
                let orders: Vec<usize> = if cfg.all_orders {
                    (2..=cfg.k_max).collect()
                } else {
                    vec![cfg.k_check]
                };
                for k in orders {
                    rows.push(SweepRow {
                        q: q + 1,
                        t: render_exact(t),
                        k,
                        xi: e.xi[k].clone(),
                        alpha: e.report.alpha[k],
                        matched_mu: e.report.matched_mu,
                        converged: e.report.converged,
                    });
                }
            }
            Ok(rows)
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_node {
        rows.extend(r?);
    }
    Ok(rows)
}

/// Per-t `(evaluated, converged)` counts, `None` for a skipped trial.
type TrialCounts = Option<Vec<(usize, usize)>>;

fn run_trial(
    n: usize,
    p: f64,
    seed: u64,
    cfg: &ExperimentConfig,
    t_grid: &[RBig],
) -> Result<TrialCounts, Error> {
    let g = erdos_renyi(n, p, seed)?;
    let nodes = select_nodes(&g, &cfg.q_selector);
    if nodes.is_empty() {
        return Ok(None);
    }
    let domain: NumberDomain = cfg.domain.0;
    let oracle = Oracle::for_domain(&g, domain)?;
    let mut counts = vec![(0, 0); t_grid.len()];
    for q in nodes {
        let table = Table::expand(&g, q, cfg.k_max, domain)?;
        for (slot, t) in counts.iter_mut().zip(t_grid) {
            let e = evaluate(
                &table,
                &oracle,
                t,
                &cfg.zeta.0,
                cfg.k_max,
                cfg.alpha_threshold,
                cfg.k_check,
            )?;
            slot.0 += 1;
            slot.1 += usize::from(e.report.converged);
        }
    }
    Ok(Some(counts))
}

/// Rows ordered by `n`, then `p`, then `t`, independent of thread count.
pub fn sweep_ensemble(
    ns: &[usize],
    ps: &[f64],
    trials: usize,
    cfg: &ExperimentConfig,
) -> Result<Vec<EnsembleRow>, SweepError> {
    if let QSelector::Node(q) = cfg.q_selector {
        if ns.iter().any(|&n| q > n) {
            return Err(SweepError::NoNode);
        }
    }
    let t_grid = cfg.t_values();
    let mut rows = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        for (j, &p) in ps.iter().enumerate() {
            let cell = (i * ps.len() + j) as u64;
            let outcomes: Vec<Result<TrialCounts, Error>> = (0..trials)
                .into_par_iter()
                .map(|trial| run_trial(n, p, trial_seed(cfg.seed, cell, trial as u64), cfg, &t_grid))
                .collect();
            let mut skipped = 0;
            let mut totals = vec![(0, 0); t_grid.len()];
            for outcome in outcomes {
                match outcome? {
                    None => skipped += 1,
                    Some(counts) => {
                        for (tot, c) in totals.iter_mut().zip(counts) {
                            tot.0 += c.0;
                            tot.1 += c.1;
                        }
                    }
                }
            }
            for (t, (evaluated, converged)) in t_grid.iter().zip(totals) {
                rows.push(EnsembleRow {
                    n,
                    p,
                    t: render_exact(t),
                    trials,
                    skipped,
                    evaluated,
                    converged,
                    fraction: (evaluated > 0).then(|| converged as f64 / evaluated as f64),
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(json: &str) -> ExperimentConfig {
        ExperimentConfig::from_json(json).unwrap()
    }

    #[test]
    fn degenerate_sweep_has_one_row() {
        let cfg = config(
            r#"{"graph_source": {"generator": "example:e2"}, "q_selector": 13, "t_grid": [-1]}"#,
        );
        let csv = run(&cfg).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "q,t,K,xi,alpha,matched_mu,converged");
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("13,-1,30,11.61991367"), "{}", lines[1]);
        assert!(lines[1].ends_with(",true"));
    }

    #[test]
    fn all_orders_and_nodes() {
        let cfg = config(
            r#"{"graph_source": {"generator": "example:e1"}, "q_selector": "all_unique",
                "t_grid": [-1, "-1/2"], "K_max": 6, "K_check": 6, "all_orders": true,
                "domain": "exact"}"#,
        );
        let SweepOutput::Graph(rows) = run(&cfg).unwrap() else {
            panic!()
        };
        assert_eq!(rows.len(), 2 * 2 * 5);
        assert_eq!((rows[0].q, rows[0].t.as_str(), rows[0].k), (1, "-1", 2));
        let k4 = rows.iter().find(|r| r.q == 1 && r.t == "-1" && r.k == 4).unwrap();
        assert_eq!(k4.xi, "4.2187500000000000000");
        assert_eq!(rows.last().unwrap().t, "-1/2");
    }

    #[test]
    fn missing_node_is_an_error() {
        let cfg = config(r#"{"graph_source": {"generator": "complete:4"}}"#);
        assert!(matches!(run(&cfg), Err(SweepError::NoNode)));
    }

    #[test]
    fn ensemble_is_deterministic_and_counts_skips() {
        let cfg = config(
            r#"{"graph_source": {"ensemble": {"n": [8, 12], "p": [0.0, 0.4], "trials": 12}},
                "t_grid": [-1], "K_max": 12, "K_check": 12, "seed": 5}"#,
        );
        let a = run(&cfg).unwrap().to_csv();
        let b = run(&cfg).unwrap().to_csv();
        assert_eq!(a, b);
        let SweepOutput::Ensemble(rows) = run(&cfg).unwrap() else {
            panic!()
        };
        assert_eq!(rows.len(), 4);
        // empty graphs have no unique degree
        assert_eq!(rows[0].skipped, 12);
        assert_eq!(rows[0].fraction, None);
        for r in &rows {
            assert_eq!(r.trials, 12);
            assert!(r.converged <= r.evaluated);
            // one node per non-skipped trial
            assert_eq!(r.skipped + r.evaluated, r.trials);
        }
        assert!(a.starts_with("n,p,t,trials,skipped,evaluated,converged,fraction\r\n8,0.0,-1,12,12,0,0,\r\n"));
    }

    #[test]
    fn seeds_differ_per_trial_and_cell() {
        let seeds: std::collections::BTreeSet<u64> = (0..4)
            .flat_map(|c| (0..50).map(move |t| trial_seed(1, c, t)))
            .collect();
        assert_eq!(seeds.len(), 200);
        assert_eq!(trial_seed(1, 0, 0), trial_seed(1, 0, 0));
    }
}
