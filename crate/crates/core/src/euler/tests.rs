use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::generate;
use crate::perturb::{coefficients_exact, taylor_partial_sums};
use crate::scalar::parse_ratio;

fn r(s: &str) -> RBig {
    parse_ratio(s).unwrap()
}

fn example1() -> Graph {
    Graph::unweighted(5, &[(0, 2), (0, 3), (0, 4), (1, 4)]).unwrap()
}

#[test]
fn pascal_rows() {
    let p = pascal(5);
    let row: Vec<i64> = p[5].iter().map(|x| i64::try_from(x.clone()).unwrap()).collect();
    assert_eq!(row, vec![1, 5, 10, 10, 5, 1]);
    assert_eq!(pascal(0), vec![vec![IBig::ONE]]);
}

#[test]
fn geometric_series_converges_inside_disc() {
    let ones = vec![RBig::ONE; 80];
    for t in ["0", "-1/4", "1/3", "1"] {
        let sums = euler_transform_generic(&ones, &r(t), &r("1/2"), &()).unwrap();
        let err = (sums.last().unwrap() - r("2")).as_f64().abs();
        assert!(err < 1e-9, "t = {t}: {err}");
    }
}

#[test]
fn geometric_series_continued_beyond_disc() {
    let ones = vec![RBig::ONE; 60];
    let z = r("-3/2");
    let sums = euler_transform_generic(&ones, &r("-1/2"), &z, &()).unwrap();
    let err = (sums.last().unwrap() - r("2/5")).as_f64().abs();
    assert!(err < 1e-15, "{err}");
    // With t = 1 the weight z/(1+tz) is 3 and the transform diverges.
    let sums = euler_transform_generic(&ones, &RBig::ONE, &z, &()).unwrap();
    assert!(sums.last().unwrap().as_f64().abs() > 1e20);
}

#[test]
fn singular_denominator() {
    let f = vec![RBig::ONE; 4];
    assert_eq!(
        euler_transform_generic(&f, &RBig::ONE, &r("-1"), &()),
        Err(Error::SingularTransform)
    );
    let t = coefficients_exact(&example1(), 0, 4).unwrap();
    let params = EulerParams::laplacian(RBig::ONE, 4, &());
    assert_eq!(euler_series(&t, &params, &()), Err(Error::SingularTransform));
}

#[test]
fn k4_estimates_on_example_tree() {
    assert_eq!(euler_k4_estimate(&example1(), 0).unwrap(), r("135/32"));
    assert_eq!(euler_k4_estimate(&example1(), 4).unwrap(), r("17/8"));
    assert_eq!(euler_k4_estimate(&example1(), 1), Err(Error::NonUniqueDegree(1)));
    let t = coefficients_exact(&example1(), 4, 5).unwrap();
    let s = euler_series(&t, &EulerParams::laplacian(r("-1"), 5, &()), &()).unwrap();
    assert_eq!(s.at(4), &r("17/8"));
    assert_eq!(s.at(5), &r("19/8"));
}

#[test]
fn k4_estimate_with_vanishing_coefficients() {
    // K_2 plus an isolated node: node 2 has degree 0 and no neighbours.
    let g = Graph::unweighted(3, &[(0, 1)]).unwrap();
    assert_eq!(euler_k4_estimate(&g, 2).unwrap(), RBig::ZERO);
}

#[test]
fn classify_matches_nearest_and_breaks_ties_upward() {
    let series = SeriesEvaluation {
        q: 0,
        zeta: -1.0,
        kind: SeriesKind::Taylor,
        partial_sums: vec![3.0, 2.5, 2.0],
    };
    let report = convergence_classify(&series, &[3.0, 1.0, 0.0], -4.0, 2).unwrap();
    assert_eq!(report.matched_index, 0);
    assert!(!report.converged);
    assert_eq!(report.alpha[0], -300.0);
    assert_eq!(report.alpha[2], 0.0);
    let exact = convergence_classify(&series, &[2.0, 0.0], -4.0, 2).unwrap();
    assert!(exact.converged);
    assert!(convergence_classify(&series, &[], -4.0, 2).is_err());
    assert!(convergence_classify(&series, &[1.0], -4.0, 3).is_err());
}

fn rational_vec(len: usize) -> impl Strategy<Value = Vec<RBig>> {
    proptest::collection::vec((-20i64..20, 1u32..9), len)
        .prop_map(|v| v.into_iter().map(|(n, d)| RBig::from_parts(n.into(), d.into())).collect())
}

proptest! {
    #[test]
    fn t_zero_is_plain_taylor(f in rational_vec(12), zn in -5i64..5, zd in 1u32..5) {
        let z = RBig::from_parts(zn.into(), zd.into());
        let sums = euler_transform_generic(&f, &RBig::ZERO, &z, &()).unwrap();
        let mut acc = RBig::ZERO;
        let mut p = RBig::ONE;
        for (k, fk) in f.iter().enumerate() {
            acc += fk * &p;
            p *= &z;
            prop_assert_eq!(&sums[k], &acc);
        }
    }

    #[test]
    fn binomial_weights_sum_to_power(tn in -6i64..6, td in 1u32..5, m in 1usize..25) {
        let t = RBig::from_parts(tn.into(), td.into());
        let p = pascal(m);
        let mut sum = RBig::ZERO;
        for k in 1..=m {
            sum += RBig::from(p[m - 1][k - 1].clone()) * t.powu((m - k) as u32, &());
        }
        prop_assert_eq!(sum, (RBig::ONE + &t).powu(m as u32 - 1, &()));
    }

    #[test]
    fn euler_t_minus_one_matches_special_form(n in 4usize..11, p in 0.2f64..0.8, seed in 0u64..1000) {
        let g = generate::erdos_renyi(n, p, seed).unwrap();
        let profile = g.degree_profile();
        prop_assume!(!profile.unique_nodes.is_empty());
        let q = profile.unique_nodes[0];
        let t = coefficients_exact(&g, q, 12).unwrap();
        let general = euler_series(&t, &EulerParams::laplacian(r("-1"), 12, &()), &()).unwrap();
        let special = euler_minus_one(&t, 12, &()).unwrap();
        prop_assert_eq!(&general.partial_sums, &special.partial_sums);
        prop_assert_eq!(&euler_k4_estimate(&g, q).unwrap(), general.at(4));
        let taylor = taylor_partial_sums(&t, &r("-1"), 12, &()).unwrap();
        let plain = euler_series(&t, &EulerParams::laplacian(RBig::ZERO, 12, &()), &()).unwrap();
        prop_assert_eq!(&taylor.partial_sums, &plain.partial_sums);
    }
}
