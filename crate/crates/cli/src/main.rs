use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use lap_perturb::config::{parse_domain, ExperimentConfig};
use lap_perturb::datasets::parse_graph_spec;
use lap_perturb::edgelist::{graph_to_json, write_edge_list};
use lap_perturb::evaluate::{printed_digits, render_f64};
use lap_perturb::formats::{chc_csv, coefficients_json, coefficients_line, contour_json, spectrum_json};
use lap_perturb::reproduce::{reproduce, Example};
use lap_perturb::sweep;
use lap_perturb_core::almost_regular::{
    chc_build, contour_eigenvalue, AlmostRegularGraph, DEFAULT_QUAD_POINTS,
};
use lap_perturb_core::eigen::{default_tolerance, laplacian_spectrum, symmetric_eigen};
use lap_perturb_core::euler::{euler_series, EulerParams};
use lap_perturb_core::perturb::{coefficients_exact, taylor_partial_sums, SeriesEvaluation};
use lap_perturb_core::scalar::{format_sig, parse_ratio, ratio_string};
use lap_perturb_core::{Graph, MpFloat, NumberDomain, Scalar};

#[derive(Parser)]
#[command(name = "lap-perturb", version, about = "Laplacian eigenvalues from perturbation series around unique degrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Graph spec: example:e1|e2|e3, er:N:P:SEED, antiregular:N, complete:N,
/// ring-core:N:K, or a path to an edge list / graph JSON.
#[derive(clap::Args)]
struct GraphArg {
    #[arg(long, short = 'g')]
    graph: String,
}

impl GraphArg {
    fn load(&self) -> anyhow::Result<Graph> {
        parse_graph_spec(&self.graph).with_context(|| format!("loading graph {:?}", self.graph))
    }
}

#[derive(clap::Args)]
struct SeriesArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// 1-based node with a unique degree.
    #[arg(long, short = 'q')]
    q: usize,
    /// Number of terms K.
    #[arg(long, short = 'K', default_value_t = 30)]
    order: usize,
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    zeta: String,
    /// exact, double, extended or float:<bits>.
    #[arg(long, default_value = "exact")]
    domain: String,
    /// Print p/q strings (exact domain only).
    #[arg(long)]
    exact: bool,
    /// Print every partial sum as `K,xi` instead of only the last.
    #[arg(long)]
    all: bool,
    /// Significant digits of decimal output.
    #[arg(long, default_value_t = 10)]
    digits: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute a worked example and compare it with its published digits.
    Reproduce {
        /// e1, e2, e3, almost-regular or all.
        example: String,
        /// Write `<example>.csv` and `<example>.digest.txt` here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run an experiment config and print CSV.
    Sweep {
        #[arg(long, short = 'c')]
        config: PathBuf,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Expansion coefficients c_2..c_K.
    Coeffs {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, short = 'q')]
        q: usize,
        #[arg(long, short = 'K', default_value_t = 4)]
        order: usize,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Taylor partial sums.
    Taylor(SeriesArgs),
    /// Euler-transformed partial sums.
    Euler {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, short = 't', default_value = "-1", allow_hyphen_values = true)]
        t: String,
    },
    /// Laplacian spectrum from the Jacobi eigensolver, descending.
    Oracle {
        #[command(flatten)]
        graph: GraphArg,
        /// Binary precision; 53 runs in f64.
        #[arg(long, default_value_t = 53)]
        bits: usize,
        #[arg(long)]
        json: bool,
    },
    /// Eigenvalue of an almost-regular graph from the contour integral.
    Contour {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, allow_hyphen_values = true)]
        zeta: f64,
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_QUAD_POINTS)]
        points: usize,
    },
    /// Closed-walk characteristic coefficients A[k,m] as CSV.
    Chc {
        #[command(flatten)]
        graph: GraphArg,
        /// 1-based node; defaults to the special node of an almost-regular
        /// graph.
        #[arg(long, short = 'q')]
        q: Option<usize>,
        #[arg(long, short = 'M', default_value_t = 10)]
        order: usize,
    },
    /// Write a graph as an edge list (or JSON).
    Generate {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        json: bool,
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
}

fn node(q: usize, g: &Graph) -> anyhow::Result<usize> {
    if q == 0 || q > g.n() {
        bail!("node {q} outside 1..={}", g.n());
    }
    Ok(q - 1)
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_series<S>(series: &SeriesEvaluation<S>, all: bool, render: impl Fn(&S) -> String) {
    if all {
        println!("K,xi");
        for (k, x) in series.partial_sums.iter().enumerate() {
            println!("{k},{}", render(x));
        }
    } else {
        println!("{}", render(series.at(series.max_order())));
    }
}

/// `t = None` gives Taylor sums.
fn run_series(args: &SeriesArgs, t: Option<&str>) -> anyhow::Result<()> {
    let g = args.graph.load()?;
    let q = node(args.q, &g)?;
    let zeta = parse_ratio(&args.zeta)?;
    let t = t.map(parse_ratio).transpose()?;
    let domain = parse_domain(&args.domain).map_err(anyhow::Error::msg)?;
    if args.exact && domain != NumberDomain::ExactRational {
        bail!("--exact needs the exact domain");
    }
    let digits = args.digits;
    let exact = coefficients_exact(&g, q, args.order)?;
    match domain {
        NumberDomain::ExactRational => {
            let s = match &t {
                Some(t) => euler_series(&exact, &EulerParams { t: t.clone(), zeta, k_max: args.order }, &())?,
                None => taylor_partial_sums(&exact, &zeta, args.order, &())?,
            };
            if args.exact {
                print_series(&s, args.all, ratio_string);
            } else {
                print_series(&s, args.all, |x| format_sig(x, digits));
            }
        }
        NumberDomain::Float { bits } if bits <= 53 => {
            let table = exact.to_domain::<f64>(&());
            let z = zeta.as_f64();
            let s = match &t {
                Some(t) => euler_series(&table, &EulerParams { t: t.as_f64(), zeta: z, k_max: args.order }, &())?,
                None => taylor_partial_sums(&table, &z, args.order, &())?,
            };
            print_series(&s, args.all, |x| render_f64(*x));
        }
        NumberDomain::Float { bits } => {
            let table = exact.to_domain::<MpFloat>(&bits);
            let z = MpFloat::from_ratio(&zeta, &bits);
            let s = match &t {
                Some(t) => euler_series(
                    &table,
                    &EulerParams { t: MpFloat::from_ratio(t, &bits), zeta: z, k_max: args.order },
                    &bits,
                )?,
                None => taylor_partial_sums(&table, &z, args.order, &bits)?,
            };
            print_series(&s, args.all, |x| x.to_decimal(digits.min(printed_digits(bits))));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Reproduce { example, out_dir } => {
            let examples: Vec<Example> = if example == "all" {
                Example::ALL.to_vec()
            } else {
                vec![example.parse().map_err(anyhow::Error::msg)?]
            };
            let mut ok = true;
            for e in examples {
                let report = reproduce(e)?;
                ok &= report.passed();
                match &out_dir {
                    Some(dir) => {
                        std::fs::create_dir_all(dir)?;
                        std::fs::write(dir.join(format!("{}.csv", e.name())), report.csv())?;
                        std::fs::write(dir.join(format!("{}.digest.txt", e.name())), report.digest())?;
                        print!("{}", report.digest().lines().last().unwrap_or_default());
                        println!();
                    }
                    None => print!("{}", report.digest()),
                }
            }
            Ok(ok)
        }
        Command::Sweep { config, seed, out } => {
            let text = std::fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let mut cfg = ExperimentConfig::from_json(&text)?;
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            emit(&sweep::run(&cfg)?.to_csv(), out.as_ref())?;
            Ok(true)
        }
        Command::Coeffs { graph, q, order, exact, json } => {
            let g = graph.load()?;
            let table = coefficients_exact(&g, node(q, &g)?, order)?;
            if json {
                println!("{}", coefficients_json(&table));
            } else if exact {
                println!("{}", coefficients_line(&table));
            } else {
                let line: Vec<String> = table.c[2..]
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("c{}={}", i + 2, render_f64(c.as_f64())))
                    .collect();
                println!("{}", line.join(","));
            }
            Ok(true)
        }
        Command::Taylor(args) => run_series(&args, None).map(|_| true),
        Command::Euler { series, t } => run_series(&series, Some(&t)).map(|_| true),
        Command::Oracle { graph, bits, json } => {
            let g = graph.load()?;
            if bits <= 53 {
                let s = laplacian_spectrum(&g)?;
                if json {
                    println!("{}", spectrum_json(&s, |x| render_f64(*x)));
                } else {
                    for x in &s.eigenvalues {
                        println!("{}", render_f64(*x));
                    }
                }
            } else {
                let tol = MpFloat::from_ratio(&default_tolerance(bits), &bits);
                let s = symmetric_eigen(&g.laplacian::<MpFloat>(&bits), &tol, &bits)?;
                let digits = printed_digits(bits);
                if json {
                    println!("{}", spectrum_json(&s, |x| x.to_decimal(digits)));
                } else {
                    for x in &s.eigenvalues {
                        println!("{}", x.to_decimal(digits));
                    }
                }
            }
            Ok(true)
        }
        Command::Contour { graph, zeta, radius, points } => {
            let arg = AlmostRegularGraph::new(graph.load()?)?;
            println!("{}", contour_json(&contour_eigenvalue(&arg, zeta, radius, points)?));
            Ok(true)
        }
        Command::Chc { graph, q, order } => {
            let g = graph.load()?;
            let q = match q {
                Some(q) => node(q, &g)?,
                None => AlmostRegularGraph::new(g.clone())?.special,
            };
            print!("{}", chc_csv(&chc_build(&g.closed_walk_counts(q, order)?, order)?));
            Ok(true)
        }
        Command::Generate { graph, json, out } => {
            let g = graph.load()?;
            let text = if json {
                graph_to_json(&g) + "\n"
            } else {
                write_edge_list(&g)
            };
            emit(&text, out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
