//! JSON and CSV renderings of library results.

use lap_perturb_core::almost_regular::{ChcTable, ContourResult};
use lap_perturb_core::eigen::Spectrum;
use lap_perturb_core::perturb::CoefficientTable;
use lap_perturb_core::scalar::ratio_string;
use lap_perturb_core::RBig;
use serde::Serialize;

/// `{"q": 1, "K": 4, "c": ["2/1", "0/1", "-5/2"]}` holding `c_2..c_K`.
pub fn coefficients_json(table: &CoefficientTable<RBig>) -> String {
    #[derive(Serialize)]
    struct Doc {
        q: usize,
        #[serde(rename = "K")]
        k: usize,
        c: Vec<String>,
    }
    serde_json::to_string(&Doc {
        q: table.q + 1,
        k: table.order,
        c: table.c[2..].iter().map(ratio_string).collect(),
    })
    .expect("serializable")
}

/// `c2=2/1,c3=0/1,...`.
pub fn coefficients_line(table: &CoefficientTable<RBig>) -> String {
    table.c[2..]
        .iter()
        .enumerate()
        .map(|(i, c)| format!("c{}={}", i + 2, ratio_string(c)))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct ChcRow<'a> {
    k: usize,
    m: usize,
    value: &'a str,
}

/// `k,m,value` rows for every stored entry.
pub fn chc_csv(table: &ChcTable) -> String {
    let rows: Vec<(usize, usize, String)> = table
        .entries()
        .map(|(k, m, v)| (k, m, v.numerator().to_string()))
        .collect();
    to_csv(rows.iter().map(|(k, m, v)| ChcRow { k: *k, m: *m, value: v }))
}

pub fn contour_json(result: &ContourResult) -> String {
    #[derive(Serialize)]
    struct Doc {
        radius: f64,
        points: usize,
        branch_ok: bool,
        value: f64,
    }
    serde_json::to_string(&Doc {
        radius: result.radius,
        points: result.points,
        branch_ok: result.branch_ok,
        value: result.value,
    })
    .expect("serializable")
}

/// `{"eigenvalues": [...], "residual": ...}`, values rendered by `render`.
pub fn spectrum_json<S>(spectrum: &Spectrum<S>, render: impl Fn(&S) -> String) -> String {
    #[derive(Serialize)]
    struct Doc {
        eigenvalues: Vec<String>,
        residual: String,
    }
    serde_json::to_string(&Doc {
        eigenvalues: spectrum.eigenvalues.iter().map(&render).collect(),
        residual: render(&spectrum.residual),
    })
    .expect("serializable")
}

/// RFC 4180 CSV with a header row taken from the field names.
pub fn to_csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use lap_perturb_core::almost_regular::chc_build;
    use lap_perturb_core::generate::complete;
    use lap_perturb_core::perturb::coefficients_exact;

    #[test]
    fn coefficient_renderings() {
        let g = crate::datasets::example1();
        let table = coefficients_exact(&g, 0, 4).unwrap();
        assert_eq!(coefficients_line(&table), "c2=2/1,c3=0/1,c4=-5/2");
        assert_eq!(coefficients_json(&table), r#"{"q":1,"K":4,"c":["2/1","0/1","-5/2"]}"#);
    }

    #[test]
    fn chc_rows() {
        let g = complete(4);
        let table = chc_build(&g.closed_walk_counts(0, 4).unwrap(), 4).unwrap();
        let csv = chc_csv(&table);
        assert!(csv.starts_with("k,m,value\r\n"));
        assert_eq!(csv.lines().count(), 1 + table.entries().count());
    }

    #[test]
    fn csv_quotes_fields() {
        #[derive(Serialize)]
        struct Row {
            a: &'static str,
        }
        assert_eq!(to_csv([Row { a: "x,y" }]), "a\r\n\"x,y\"\r\n");
    }
}
