//! Recomputes the worked examples and compares them with their published
//! digits.

use std::fmt::Write as _;

use lap_perturb_core::almost_regular::{
    almost_regular_euler, almost_regular_series, contour_eigenvalue, AlmostRegularGraph,
    DEFAULT_QUAD_POINTS,
};
use lap_perturb_core::eigen::{accuracy_alpha, default_tolerance, laplacian_spectrum, symmetric_eigen};
use lap_perturb_core::euler::{euler_series, EulerParams};
use lap_perturb_core::generate::ring_with_core;
use lap_perturb_core::perturb::{coefficients_exact, CoefficientTable};
use lap_perturb_core::scalar::{format_fixed, format_sig, parse_ratio, ratio_string};
use lap_perturb_core::{Graph, IBig, MpFloat, RBig, Result, Scalar};
use serde::Serialize;

use crate::datasets::{example1, example2, example3};
use crate::evaluate::{render_exact, Oracle};
use crate::formats::to_csv;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    E1,
    E2,
    E3,
    AlmostRegular,
}

impl Example {
    pub const ALL: [Example; 4] = [Example::E1, Example::E2, Example::E3, Example::AlmostRegular];

    pub fn name(self) -> &'static str {
        match self {
            Example::E1 => "e1",
            Example::E2 => "e2",
            Example::E3 => "e3",
            Example::AlmostRegular => "almost-regular",
        }
    }
}

impl std::str::FromStr for Example {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "e1" => Ok(Example::E1),
            "e2" => Ok(Example::E2),
            "e3" => Ok(Example::E3),
            "almost-regular" | "almost_regular" => Ok(Example::AlmostRegular),
            _ => Err(format!("unknown example {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Agrees to every printed digit, read as rounded or as truncated.
    Match,
    /// Off in the printed digits, but within the rounding error of a
    /// double-precision evaluation of the same quantity.
    DoubleRounding,
    Mismatch,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::DoubleRounding => "MATCH-F64",
            Status::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub got: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub graph: String,
    pub q: usize,
    pub zeta: String,
    #[serde(rename = "K")]
    pub k: usize,
    /// Empty for plain Taylor partial sums.
    pub t: String,
    pub xi: String,
    pub alpha: f64,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub example: Example,
    pub rows: Vec<Row>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Mismatch)
    }

    pub fn check(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn csv(&self) -> String {
        to_csv(&self.rows)
    }

    pub fn digest(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<9} {:<28} expected {:<32} got {}",
                c.status.tag(),
                c.label,
                c.expected,
                c.got
            );
        }
        let bad = self.checks.iter().filter(|c| c.status == Status::Mismatch).count();
        let _ = writeln!(
            out,
            "{}: {} checks, {} mismatched",
            self.example.name(),
            self.checks.len(),
            bad
        );
        out
    }
}

pub fn reproduce(example: Example) -> Result<Report> {
    match example {
        Example::E1 => reproduce_e1(),
        Example::E2 => reproduce_e2(),
        Example::E3 => reproduce_e3(),
        Example::AlmostRegular => reproduce_almost_regular(),
    }
}

/// Value and half a unit in the last place of a printed decimal such as
/// `11.6199127895910`, `1.` or `-8.8041349e-7`.
pub fn printed_value(printed: &str) -> Result<(RBig, RBig)> {
    let (mantissa, exp) = match printed.split_once('e') {
        Some((m, e)) => (
            m,
            e.parse::<i64>()
                .map_err(|_| lap_perturb_core::Error::Parse(printed.to_string()))?,
        ),
        None => (printed, 0),
    };
    let decimals = mantissa.split_once('.').map_or(0, |(_, f)| f.len()) as i64;
    let value = parse_ratio(printed)?;
    let p = exp - decimals;
    let ten = |k: i64| RBig::from(IBig::from(10u8).pow(k.unsigned_abs() as usize));
    let unit = if p >= 0 { ten(p) } else { RBig::ONE / ten(p) };
    Ok((value, unit / RBig::from(2)))
}

fn render_like(value: &RBig, printed: &str) -> String {
    match printed.split_once('e') {
        Some((m, _)) => {
            let significant = m
                .trim_start_matches(['-', '0', '.'])
                .chars()
                .filter(char::is_ascii_digit)
                .count();
            format_sig(value, significant)
        }
        None => format_fixed(value, printed.split_once('.').map_or(0, |(_, f)| f.len())),
    }
}

fn abs(x: RBig) -> RBig {
    if x < RBig::ZERO {
        -x
    } else {
        x
    }
}

/// Compares `value` with a printed decimal. A gap up to `slack` beyond the
/// printed resolution is reported as [`Status::DoubleRounding`].
pub fn compare_printed(label: &str, value: &RBig, printed: &str, slack: Option<&RBig>) -> Check {
    let (expected, half) = printed_value(printed).expect("well-formed literal");
    let gap = abs(value - &expected);
    let truncated = (expected.is_zero() || (*value < RBig::ZERO) == (expected < RBig::ZERO))
        && abs(value.clone()) >= abs(expected.clone())
        && gap < &half + &half;
    let status = if gap <= half || truncated {
        Status::Match
    } else if slack.is_some_and(|s| gap <= half + s) {
        Status::DoubleRounding
    } else {
        Status::Mismatch
    };
    Check {
        label: label.to_string(),
        expected: printed.to_string(),
        got: render_like(value, printed),
        status,
    }
}

fn compare_exact(label: &str, value: &RBig, expected: &str) -> Check {
    let want = parse_ratio(expected).expect("well-formed literal");
    Check {
        label: label.to_string(),
        expected: expected.to_string(),
        got: ratio_string(value),
        status: if *value == want {
            Status::Match
        } else {
            Status::Mismatch
        },
    }
}

fn compare_flag(label: &str, got: bool, expected: bool, what: (&str, &str)) -> Check {
    let word = |b: bool| if b { what.0 } else { what.1 };
    Check {
        label: label.to_string(),
        expected: word(expected).to_string(),
        got: word(got).to_string(),
        status: if got == expected {
            Status::Match
        } else {
            Status::Mismatch
        },
    }
}

/// Exact Euler partial sums at `ζ = -1`.
fn euler_exact(table: &CoefficientTable<RBig>, t: &RBig, k_max: usize) -> Result<Vec<RBig>> {
    let params = EulerParams::laplacian(t.clone(), k_max, &());
    Ok(euler_series(table, &params, &())?.partial_sums)
}

fn series_rows(graph: &str, q: usize, zeta: &RBig, t: Option<&RBig>, sums: &[RBig], mu: &RBig) -> Vec<Row> {
    (2..sums.len())
        .map(|k| Row {
            graph: graph.to_string(),
            q: q + 1,
            zeta: render_exact(zeta),
            k,
            t: t.map(render_exact).unwrap_or_default(),
            xi: format_sig(&sums[k], 30),
            alpha: accuracy_alpha(&sums[k], mu),
        })
        .collect()
}

fn minus_one() -> RBig {
    RBig::from(-1)
}

/// Order at which the tree example is classified.
pub const E1_ORDER: usize = 60;
/// The node-5 series approaches its eigenvalue in slow oscillations, so the
/// tree example is judged at two correct digits rather than four.
pub const E1_ALPHA: f64 = -2.0;

fn reproduce_e1() -> Result<Report> {
    let g = example1();
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let degrees: Vec<String> = g.degrees().iter().map(render_exact).collect();
    checks.push(Check {
        label: "degrees".into(),
        expected: "3,1,1,1,2".into(),
        got: degrees.join(","),
        status: if degrees.join(",") == "3,1,1,1,2" {
            Status::Match
        } else {
            Status::Mismatch
        },
    });
    let unique: Vec<String> = g
        .degree_profile()
        .unique_nodes
        .iter()
        .map(|q| (q + 1).to_string())
        .collect();
    checks.push(Check {
        label: "unique nodes".into(),
        expected: "1,5".into(),
        got: unique.join(","),
        status: if unique.join(",") == "1,5" {
            Status::Match
        } else {
            Status::Mismatch
        },
    });
    let spectrum = laplacian_spectrum(&g)?;
    for (k, printed) in ["4.17009", "2.31111", "1.", "0.518806", "0"].iter().enumerate() {
        let mu = RBig::try_from(spectrum.eigenvalues[k]).expect("finite");
        checks.push(compare_printed(&format!("mu_{}", k + 1), &mu, printed, None));
    }
    let mu: Vec<RBig> = Oracle::Double(spectrum.eigenvalues).exact_values();

    let k_max = E1_ORDER;
    let grid: Vec<RBig> = [-6, -5, -4, -3, -2, -1, 2, 3].into_iter().map(RBig::from).collect();
    // node, matched eigenvalue
    for (q, target) in [(0usize, 0usize), (4, 1)] {
        let table = coefficients_exact(&g, q, k_max)?;
        for j in (3..=12).step_by(2) {
            checks.push(compare_exact(
                &format!("c_{j}(q={})", q + 1),
                &table.c[j],
                "0",
            ));
        }
        let mut best = f64::INFINITY;
        let mut positive = Vec::new();
        for t in &grid {
            let sums = euler_exact(&table, t, k_max)?;
            if *t == minus_one() {
                let (k4, k5) = if q == 0 { ("135/32", None) } else { ("17/8", Some("19/8")) };
                checks.push(compare_exact(&format!("xi(q={},K=4)", q + 1), &sums[4], k4));
                let printed = if q == 0 { "4.21875" } else { "2.125" };
                checks.push(compare_printed(&format!("xi(q={},K=4) decimal", q + 1), &sums[4], printed, None));
                if let Some(k5) = k5 {
                    checks.push(compare_exact("xi(q=5,K=5)", &sums[5], k5));
                    checks.push(compare_printed("xi(q=5,K=5) decimal", &sums[5], "2.375", None));
                }
                checks.push(compare_flag(
                    &format!("t=-1 converges (q={})", q + 1),
                    accuracy_alpha(&sums[k_max], &mu[target]) <= E1_ALPHA,
                    false,
                    ("converges", "diverges"),
                ));
            } else if *t < minus_one() {
                best = best.min(accuracy_alpha(&sums[k_max], &mu[target]));
            } else {
                positive.push(accuracy_alpha(&sums[k_max], &mu[target]));
            }
            rows.extend(series_rows("e1", q, &minus_one(), Some(t), &sums, &mu[target]));
        }
        checks.push(compare_flag(
            &format!("some t<-1 converges (q={})", q + 1),
            best <= E1_ALPHA,
            true,
            ("converges", "diverges"),
        ));
        // t = 2 and t = 3: both diverge, the larger t more slowly
        checks.push(compare_flag(
            &format!("positive t diverges slower for larger t (q={})", q + 1),
            positive.iter().all(|&a| a > 0.0) && positive[1] < positive[0],
            true,
            ("yes", "no"),
        ));
    }
    Ok(Report {
        example: Example::E1,
        rows,
        checks,
    })
}

const E2_SHORT_13: [&str; 20] = [
    "10.48154762", "11.00138889", "11.33195709", "11.49508126", "11.57496760",
    "11.61206362", "11.62002740", "11.61508019", "11.61181587", "11.61364728",
    "11.61699285", "11.61921713", "11.62029217", "11.62070805", "11.62057580",
    "11.62009681", "11.61968541", "11.61958213", "11.61970380", "11.61991367",
];
const E2_SHORT_7: [&str; 20] = [
    "12.55684524", "12.92105159", "13.10777862", "13.22029144", "13.28981543",
    "13.32451888", "13.33893469", "13.34549561", "13.34889571", "13.35029701",
    "13.35071509", "13.35094032", "13.35114508", "13.35126516", "13.35131598",
    "13.35134956", "13.35137642", "13.35138894", "13.35139125", "13.35139267",
];
const E2_SHORT_3: [&str; 20] = [
    "8.937500000", "9.593750000", "9.541536458", "9.632552083", "10.14137146",
    "9.961090970", "9.152494535", "9.649234801", "10.87231670", "9.574716849",
    "7.834417220", "11.10756619", "13.44103998", "5.881312597", "3.636664041",
    "20.15673862", "19.02124175", "-15.77306388", "-0.7480476187", "-1883.697136",
];
const E2_LONG_13: [(&str, &str); 10] = [
    ("11.6118158710925", "0.00809692"),
    ("11.6197037971111", "0.000208992"),
    ("11.6199136700045", "-8.8041349e-7"),
    ("11.6199135474613", "-7.5787030e-7"),
    ("11.6199128258523", "-3.6261285e-8"),
    ("11.6199127874211", "2.1699282e-9"),
    ("11.6199127892558", "3.3520741e-10"),
    ("11.6199127895867", "4.3485215e-12"),
    ("11.6199127895931", "-2.0765611e-12"),
    ("11.6199127895912", "-1.5099033e-13"),
];
const E2_LONG_7: [(&str, &str); 10] = [
    ("13.3488957090710433527956303093", "0.00249696"),
    ("13.3513912536915562912298783841", "1.41966e-6"),
    ("13.3513926692587838827462033968", "4.08949e-9"),
    ("13.3513926733102103638002761686", "3.80691e-11"),
    ("13.3513926733476992672999617420", "5.79092e-13"),
    ("13.3513926733482839312804648760", "6.48323e-17"),
    ("13.3513926733482839615285740731", "3.45842e-17"),
    ("13.3513926733482839965575848138", "-4.4473e-19"),
    ("13.3513926733482839961083203713", "4.52935e-21"),
    ("13.3513926733482839961129243912", "-7.4664234e-23"),
];
const E2_SPECTRUM: [&str; 20] = [
    "13.3514", "11.6199", "9.80641", "9.32872", "7.6586", "7.46193", "7.11613", "6.92149",
    "6.3782", "6.07484", "5.80058", "5.29648", "4.59557", "4.05486", "3.58036", "3.50647",
    "2.83079", "2.39082", "2.22645", "0",
];

/// Orders of the short tables: `2..=20` and `30`.
fn short_orders() -> impl Iterator<Item = usize> {
    (2..=20).chain([30])
}

/// Rounding error budget of a double-precision difference of two values in
/// `[8, 16)`: a few units of `2^-49`.
pub fn double_difference_slack() -> RBig {
    RBig::from(8) / RBig::from(IBig::ONE << 49)
}

/// Precision of the reference spectrum for the long tables.
pub const REFERENCE_BITS: usize = 128;

fn reproduce_e2() -> Result<Report> {
    let g = example2();
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let degrees: Vec<String> = g.degrees().iter().map(render_exact).collect();
    let want = "4,4,8,3,7,4,12,4,7,6,7,6,10,6,6,6,6,5,4,5";
    checks.push(Check {
        label: "degrees".into(),
        expected: want.into(),
        got: degrees.join(","),
        status: if degrees.join(",") == want {
            Status::Match
        } else {
            Status::Mismatch
        },
    });
    let kappa = g.degree_profile().kappa[12].clone().unwrap_or(RBig::ZERO);
    checks.push(compare_exact("kappa(q=13)", &kappa, "1/2"));
    let oracle = Oracle::multi(&g, REFERENCE_BITS)?;
    let mu = oracle.exact_values();
    for (k, printed) in E2_SPECTRUM.iter().enumerate() {
        checks.push(compare_printed(&format!("mu_{}", k + 1), &mu[k], printed, None));
    }
    let bits = REFERENCE_BITS;
    let adj = g.adjacency::<MpFloat>(&bits);
    let tol = MpFloat::from_ratio(&default_tolerance(bits), &bits);
    let lambda1 = symmetric_eigen(&adj, &tol, &bits)?.eigenvalues[0].to_ratio();
    checks.push(compare_printed("lambda_1(A)", &lambda1, "6.67615", None));
    checks.push(compare_printed("mu_2 (15 digits)", &mu[1], "11.6199127895910", None));
    checks.push(compare_printed(
        "mu_1 (30 digits)",
        &mu[0],
        "13.3513926733482839961128497270",
        None,
    ));

    let t = minus_one();
    let slack = double_difference_slack();
    // node (0-based), matched eigenvalue, orders
    for (q, target, k_max) in [(12usize, 1usize, 100usize), (6, 0, 100), (2, 2, 30)] {
        let table = coefficients_exact(&g, q, k_max)?;
        let sums = euler_exact(&table, &t, k_max)?;
        rows.extend(series_rows("e2", q, &t, Some(&t), &sums, &mu[target]));
        let short = match q {
            12 => &E2_SHORT_13,
            6 => &E2_SHORT_7,
            _ => &E2_SHORT_3,
        };
        for (k, printed) in short_orders().zip(short.iter()) {
            let label = format!("xi(q={},K={k})", q + 1);
            checks.push(compare_printed(&label, &sums[k], printed, None));
        }
        let long = match q {
            12 => &E2_LONG_13,
            6 => &E2_LONG_7,
            _ => continue,
        };
        for (i, (xi, diff)) in long.iter().enumerate() {
            let k = 10 * (i + 1);
            checks.push(compare_printed(
                &format!("xi(q={},K={k}) long", q + 1),
                &sums[k],
                xi,
                None,
            ));
            // several published differences carry double-precision
            // rounding error from forming `mu - xi` in doubles
            let d = &mu[target] - &sums[k];
            checks.push(compare_printed(
                &format!("mu_{}-xi(q={},K={k})", target + 1, q + 1),
                &d,
                diff,
                Some(&slack),
            ));
        }
    }
    Ok(Report {
        example: Example::E2,
        rows,
        checks,
    })
}

/// Order at which the antiregular example is classified.
pub const E3_K_CHECK: usize = 80;

fn reproduce_e3() -> Result<Report> {
    let g = example3();
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let spectrum = laplacian_spectrum(&g)?;
    let want = [10, 9, 8, 7, 6, 4, 3, 2, 1, 0];
    let worst = spectrum
        .eigenvalues
        .iter()
        .zip(want)
        .map(|(m, w)| (m - w as f64).abs())
        .fold(0.0, f64::max);
    checks.push(Check {
        label: "integer spectrum".into(),
        expected: "10,9,8,7,6,4,3,2,1,0".into(),
        got: format!("max deviation {worst:.1e}"),
        status: if worst <= 1e-9 {
            Status::Match
        } else {
            Status::Mismatch
        },
    });
    let mu = Oracle::Double(spectrum.eigenvalues).exact_values();
    let profile = g.degree_profile();
    let grid: Vec<RBig> = (-6..=-1).map(RBig::from).collect();
    for &q in &profile.unique_nodes {
        let table = coefficients_exact(&g, q, E3_K_CHECK)?;
        let mut converged = false;
        for t in &grid {
            let sums = euler_exact(&table, t, E3_K_CHECK)?;
            let last = &sums[E3_K_CHECK];
            let target = nearest(&mu, last);
            if *t < minus_one() && accuracy_alpha(last, &mu[target]) <= -4.0 {
                converged = true;
            }
            rows.extend(series_rows("e3", q, &minus_one(), Some(t), &sums, &mu[target]));
        }
        let degree = profile.degrees[q].as_f64();
        checks.push(compare_flag(
            &format!("q={} (degree {degree})", q + 1),
            converged,
            degree >= 7.0,
            ("converges", "diverges"),
        ));
    }
    Ok(Report {
        example: Example::E3,
        rows,
        checks,
    })
}

fn nearest(mu: &[RBig], x: &RBig) -> usize {
    let mut best = 0;
    for (i, m) in mu.iter().enumerate() {
        if abs(m - x) < abs(&mu[best] - x) {
            best = i;
        }
    }
    best
}

/// Largest eigenvalue of `Δ + ζA` at 128 bits.
fn largest_perturbed(g: &Graph, zeta: &RBig) -> Result<RBig> {
    let bits = REFERENCE_BITS;
    let m = g.perturbed_matrix::<MpFloat>(zeta, &bits);
    let tol = MpFloat::from_ratio(&default_tolerance(bits), &bits);
    Ok(symmetric_eigen(&m, &tol, &bits)?.eigenvalues[0].to_ratio())
}

/// Order at which the almost-regular series are judged.
pub const ALMOST_REGULAR_ORDER: usize = 100;

fn reproduce_almost_regular() -> Result<Report> {
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let k_max = ALMOST_REGULAR_ORDER;
    let grid: Vec<RBig> = (1..=6).map(|i| RBig::from(-i) / RBig::from(2)).collect();
    for k in [1usize, 9] {
        let arg = AlmostRegularGraph::new(ring_with_core(21, k)?)?;
        let name = format!("ring-core:21:{k}");
        for zeta in [-1i64, -2] {
            let z = RBig::from(zeta);
            let mu = largest_perturbed(&arg.graph, &z)?;
            let taylor = almost_regular_series(&arg, &z, k_max)?;
            rows.extend(series_rows(&name, arg.special, &z, None, &taylor.partial_sums, &mu));
            let taylor_ok = accuracy_alpha(taylor.at(k_max), &mu) <= -4.0;
            let mut euler_ok = false;
            for t in &grid {
                if (RBig::ONE + t * &z).is_zero() {
                    continue;
                }
                let e = almost_regular_euler(&arg, &z, t, k_max)?;
                euler_ok |= accuracy_alpha(e.at(k_max), &mu) <= -4.0;
                rows.extend(series_rows(&name, arg.special, &z, Some(t), &e.partial_sums, &mu));
            }
            let words = ("converges", "diverges");
            checks.push(compare_flag(
                &format!("k={k} zeta={zeta} taylor"),
                taylor_ok,
                k == 1 && zeta == -1,
                words,
            ));
            checks.push(compare_flag(
                &format!("k={k} zeta={zeta} euler"),
                euler_ok,
                k == 1,
                words,
            ));
            if k == 1 && zeta == -1 {
                let c = contour_eigenvalue(&arg, -1.0, None, DEFAULT_QUAD_POINTS)?;
                let got = RBig::try_from(c.value).expect("finite");
                let gap = abs(&got - &mu).as_f64();
                checks.push(Check {
                    label: "k=1 zeta=-1 contour".into(),
                    expected: format!("{} within 1e-8", format_sig(&mu, 15)),
                    got: format!("{} (gap {gap:.1e})", c.value),
                    status: if gap <= 1e-8 {
                        Status::Match
                    } else {
                        Status::Mismatch
                    },
                });
            }
        }
    }
    Ok(Report {
        example: Example::AlmostRegular,
        rows,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_resolution() {
        let (v, h) = printed_value("11.6199127895910").unwrap();
        assert_eq!(ratio_string(&h), "1/20000000000000");
        assert_eq!(format_fixed(&v, 13), "11.6199127895910");
        let (v, h) = printed_value("-8.8041349e-7").unwrap();
        assert_eq!(ratio_string(&v), "-88041349/100000000000000");
        assert_eq!(ratio_string(&h), "1/200000000000000");
        let (_, h) = printed_value("1.").unwrap();
        assert_eq!(ratio_string(&h), "1/2");
        let (_, h) = printed_value("0").unwrap();
        assert_eq!(ratio_string(&h), "1/2");
    }

    #[test]
    fn comparisons() {
        let x = parse_ratio("-1.53393e-13").unwrap();
        let c = compare_printed("d", &x, "-1.5099033e-13", None);
        assert_eq!(c.status, Status::Mismatch);
        assert_eq!(c.got, "-1.5339300e-13");
        let c = compare_printed("d", &x, "-1.5099033e-13", Some(&double_difference_slack()));
        assert_eq!(c.status, Status::DoubleRounding);
        let c = compare_printed("x", &parse_ratio("2.3751").unwrap(), "2.375", None);
        assert_eq!(c.status, Status::Match);
        assert_eq!(c.got, "2.375");
        // truncated rather than rounded
        let c = compare_printed("x", &parse_ratio("6.4832385e-17").unwrap(), "6.48323e-17", None);
        assert_eq!(c.status, Status::Match);
        let c = compare_printed("x", &parse_ratio("-4.44735e-19").unwrap(), "-4.4473e-19", None);
        assert_eq!(c.status, Status::Match);
        let c = compare_printed("x", &parse_ratio("-4.44725e-19").unwrap(), "-4.4473e-19", None);
        assert_eq!(c.status, Status::Match);
        let c = compare_printed("x", &parse_ratio("-4.44739e-19").unwrap(), "-4.4472e-19", None);
        assert_eq!(c.status, Status::Mismatch);
        assert_eq!(compare_printed("x", &RBig::ZERO, "0.00809692", None).got, "0.00000000");
    }

    #[test]
    fn example_one_digest() {
        let r = reproduce(Example::E1).unwrap();
        assert!(r.passed(), "{}", r.digest());
        assert_eq!(r.check("xi(q=1,K=4)").unwrap().got, "135/32");
        assert!(r.csv().starts_with("graph,q,zeta,K,t,xi,alpha\r\n"));
    }

    #[test]
    fn accuracy_improves_on_convergent_nodes() {
        let r = reproduce(Example::E2).unwrap();
        assert!(r.passed(), "{}", r.digest());
        for q in [7, 13] {
            let alpha: Vec<f64> = [10, 20, 30]
                .iter()
                .map(|&k| r.rows.iter().find(|row| row.q == q && row.k == k).unwrap().alpha)
                .collect();
            assert!(alpha[0] > alpha[1] && alpha[1] > alpha[2], "q={q}: {alpha:?}");
        }
    }

    #[test]
    fn example_names() {
        for e in Example::ALL {
            assert_eq!(e.name().parse::<Example>().unwrap(), e);
        }
        assert!("e4".parse::<Example>().is_err());
    }
}
