//! Coefficient tables, Euler partial sums and oracle classification in a
//! chosen number domain.

use lap_perturb_core::eigen::{default_tolerance, laplacian_spectrum, symmetric_eigen};
use lap_perturb_core::euler::{convergence_classify, euler_series, ConvergenceReport, EulerParams};
use lap_perturb_core::perturb::{coefficients_exact, coefficients_in, CoefficientTable};
use lap_perturb_core::scalar::format_sig;
use lap_perturb_core::{Graph, MpFloat, NumberDomain, RBig, Result, Scalar};

/// Reference Laplacian spectrum, descending.
#[derive(Clone, Debug)]
pub enum Oracle {
    Double(Vec<f64>),
    Multi { eigenvalues: Vec<MpFloat>, bits: usize },
}

impl Oracle {
    /// Double precision for exact and double domains, the domain precision
    /// otherwise.
    pub fn for_domain(g: &Graph, domain: NumberDomain) -> Result<Oracle> {
        match domain {
            NumberDomain::Float { bits } if bits > 53 => Oracle::multi(g, bits),
            _ => Ok(Oracle::Double(laplacian_spectrum(g)?.eigenvalues)),
        }
    }

    pub fn multi(g: &Graph, bits: usize) -> Result<Oracle> {
        let tol = MpFloat::from_ratio(&default_tolerance(bits), &bits);
        let spectrum = symmetric_eigen(&g.laplacian::<MpFloat>(&bits), &tol, &bits)?;
        Ok(Oracle::Multi {
            eigenvalues: spectrum.eigenvalues,
            bits,
        })
    }

    pub fn exact_values(&self) -> Vec<RBig> {
        match self {
            Oracle::Double(v) => v
                .iter()
                .map(|&x| RBig::try_from(x).expect("finite eigenvalue"))
                .collect(),
            Oracle::Multi { eigenvalues, .. } => eigenvalues.iter().map(MpFloat::to_ratio).collect(),
        }
    }
}

/// Coefficient table in one of the supported domains.
#[derive(Clone, Debug)]
pub enum Table {
    Exact(CoefficientTable<RBig>),
    Double(CoefficientTable<f64>),
    Multi(CoefficientTable<MpFloat>, usize),
}

impl Table {
    pub fn expand(g: &Graph, q: usize, order: usize, domain: NumberDomain) -> Result<Table> {
        Ok(match domain {
            NumberDomain::ExactRational => Table::Exact(coefficients_exact(g, q, order)?),
            NumberDomain::Float { bits } if bits <= 53 => {
                Table::Double(coefficients_in::<f64>(g, q, order, &())?)
            }
            NumberDomain::Float { bits } => {
                Table::Multi(coefficients_in::<MpFloat>(g, q, order, &bits)?, bits)
            }
        })
    }

    pub fn q(&self) -> usize {
        match self {
            Table::Exact(t) => t.q,
            Table::Double(t) => t.q,
            Table::Multi(t, _) => t.q,
        }
    }
}

/// Rendered partial sums with their classification.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub q: usize,
    pub t: RBig,
    /// `ξ_{q;K}` for `K = 0..=K_max`.
    pub xi: Vec<String>,
    pub report: ConvergenceReport,
}

/// Significant digits printed for a value carried at `bits` of precision.
pub fn printed_digits(bits: usize) -> usize {
    ((bits as f64) * std::f64::consts::LOG10_2).floor() as usize
}

#[allow(clippy::too_many_arguments)]
fn classify<S: Scalar + PartialOrd>(
    table: &CoefficientTable<S>,
    t: &RBig,
    zeta: &RBig,
    k_max: usize,
    ctx: &S::Context,
    eigenvalues: &[S],
    alpha_threshold: f64,
    k_check: usize,
) -> Result<(Vec<S>, ConvergenceReport)> {
    let params = EulerParams {
        t: S::from_ratio(t, ctx),
        zeta: S::from_ratio(zeta, ctx),
        k_max,
    };
    let series = euler_series(table, &params, ctx)?;
    let report = convergence_classify(&series, eigenvalues, alpha_threshold, k_check)?;
    Ok((series.partial_sums, report))
}

/// Euler partial sums at `(t, zeta)` up to `k_max`, classified against the
/// oracle at `k_check`.
#[allow(clippy::too_many_arguments)]
pub fn evaluate(
    table: &Table,
    oracle: &Oracle,
    t: &RBig,
    zeta: &RBig,
    k_max: usize,
    alpha_threshold: f64,
    k_check: usize,
) -> Result<Evaluation> {
    let (xi, report) = match (table, oracle) {
        (Table::Exact(tab), _) => {
            let mu = oracle.exact_values();
            let (sums, report) =
                classify(tab, t, zeta, k_max, &(), &mu, alpha_threshold, k_check)?;
            (sums.iter().map(|x| format_sig(x, 20)).collect(), report)
        }
        (Table::Double(tab), Oracle::Double(mu)) => {
            let (sums, report) = classify(tab, t, zeta, k_max, &(), mu, alpha_threshold, k_check)?;
            (sums.iter().map(|x| render_f64(*x)).collect(), report)
        }
        (Table::Multi(tab, bits), Oracle::Multi { eigenvalues, .. }) => {
            let (sums, report) =
                classify(tab, t, zeta, k_max, bits, eigenvalues, alpha_threshold, k_check)?;
            let digits = printed_digits(*bits);
            (sums.iter().map(|x| x.to_decimal(digits)).collect(), report)
        }
        (Table::Double(tab), Oracle::Multi { eigenvalues, .. }) => {
            let mu: Vec<f64> = eigenvalues.iter().map(Scalar::as_f64).collect();
            let (sums, report) = classify(tab, t, zeta, k_max, &(), &mu, alpha_threshold, k_check)?;
            (sums.iter().map(|x| render_f64(*x)).collect(), report)
        }
        (Table::Multi(tab, bits), Oracle::Double(mu)) => {
            let mu: Vec<MpFloat> = mu
                .iter()
                .map(|&x| MpFloat::from_ratio(&RBig::try_from(x).expect("finite"), bits))
                .collect();
            let (sums, report) = classify(tab, t, zeta, k_max, bits, &mu, alpha_threshold, k_check)?;
            let digits = printed_digits(*bits);
            (sums.iter().map(|x| x.to_decimal(digits)).collect(), report)
        }
    };
    Ok(Evaluation {
        q: table.q(),
        t: t.clone(),
        xi,
        report,
    })
}

/// Shortest round-trip decimal, `nan` and `inf` spelled out.
pub fn render_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:?}")
    } else {
        format!("{x}")
    }
}

/// Integers without a denominator, other values as `p/q`.
pub fn render_exact(x: &RBig) -> String {
    if x.denominator().is_one() {
        x.numerator().to_string()
    } else {
        lap_perturb_core::scalar::ratio_string(x)
    }
}

/// Nodes selected by `selector` (0-based), restricted to unique degrees.
pub fn select_nodes(g: &Graph, selector: &crate::config::QSelector) -> Vec<usize> {
    use crate::config::QSelector;
    let profile = g.degree_profile();
    match selector {
        QSelector::Node(q) => {
            if *q >= 1 && *q <= g.n() && profile.is_unique(q - 1) {
                vec![q - 1]
            } else {
                Vec::new()
            }
        }
        QSelector::MaxUniqueDegree => profile.max_unique_degree_node().into_iter().collect(),
        QSelector::AllUnique => profile.unique_nodes.clone(),
    }
}
