use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::generate;
use crate::perturb::coefficients_exact;
use crate::scalar::parse_ratio;

fn r(s: &str) -> RBig {
    parse_ratio(s).unwrap()
}

fn ring(n: usize, k: usize) -> AlmostRegularGraph {
    AlmostRegularGraph::new(generate::ring_with_core(n, k).unwrap()).unwrap()
}

#[test]
fn detects_almost_regular_structure() {
    let a = ring(21, 1);
    assert_eq!((a.special, a.r, a.x), (0, 3, 17));
    assert!(AlmostRegularGraph::new(generate::complete(5)).is_err());
    assert!(AlmostRegularGraph::new(generate::antiregular(6)).is_err());
    let w = Graph::new(3, &[(0, 1, r("2")), (0, 2, r("2"))]).unwrap();
    assert_eq!(AlmostRegularGraph::new(w), Err(Error::Weighted));
}

// Golden closed forms of c_2..c_10 in terms of a_m = (A^m)_ss.
fn golden(a: &[RBig], x: &RBig, m: usize) -> RBig {
    let p = |i: usize| a[i].clone();
    let i = |v: i64| RBig::from(v);
    let num = match m {
        2 => p(2),
        3 => p(3),
        4 => p(4) - i(2) * p(2) * p(2),
        5 => p(5) - i(5) * p(2) * p(3),
        6 => p(6) - i(6) * p(2) * p(4) - i(3) * p(3) * p(3) + i(7) * p(2).powu(3, &()),
        7 => p(7) - i(7) * p(5) * p(2) - i(7) * p(4) * p(3) + i(28) * p(3) * p(2) * p(2),
        8 => {
            p(8) - i(8) * p(6) * p(2) - i(8) * p(5) * p(3) - i(4) * p(4) * p(4)
                + i(36) * p(4) * p(2) * p(2)
                + i(36) * p(3) * p(3) * p(2)
                - i(30) * p(2).powu(4, &())
        }
        9 => {
            p(9) - i(9) * p(7) * p(2) - i(9) * p(6) * p(3) - i(9) * p(5) * p(4)
                + i(45) * p(5) * p(2) * p(2)
                + i(90) * p(4) * p(2) * p(3)
                + i(15) * p(3).powu(3, &())
                - i(165) * p(3) * p(2).powu(3, &())
        }
        10 => {
            p(10) - i(10) * p(8) * p(2) - i(10) * p(7) * p(3) - i(10) * p(6) * p(4)
                - i(5) * p(5) * p(5)
                + i(55) * p(6) * p(2) * p(2)
                + i(110) * p(5) * p(2) * p(3)
                + i(55) * p(4) * p(4) * p(2)
                + i(55) * p(4) * p(3) * p(3)
                - i(220) * p(4) * p(2).powu(3, &())
                - i(330) * p(3) * p(3) * p(2) * p(2)
                + i(143) * p(2).powu(5, &())
        }
        _ => unreachable!(),
    };
    num / x.powu(m as u32 - 1, &())
}

#[test]
fn golden_closed_forms_on_small_ring() {
    let a = ring(8, 1);
    let walks = a.graph.closed_walk_counts(0, 10).unwrap().counts;
    let rec = cm_recursion(&a, 10).unwrap();
    let x = RBig::from(a.x);
    for m in 2..=10 {
        assert_eq!(rec[m], golden(&walks, &x, m), "c_{m}");
    }
}

#[test]
fn triple_equality_on_rings() {
    for n in [8, 21, 31] {
        // ring_with_core(8, 3) is K_8, which has no unique degree.
        for k in (1..=3).filter(|&k| 2 * k + 2 < n) {
            let a = ring(n, k);
            let chc = a.chc(10).unwrap();
            let rec = cm_recursion(&a, 10).unwrap();
            let general = coefficients_exact(&a.graph, a.special, 10).unwrap();
            let pseudo = cm_pseudo_recursion(&a, 10).unwrap();
            for m in 2..=10 {
                let closed = cm_closed_form(&a, &chc, m).unwrap();
                assert_eq!(rec[m], closed, "n={n} k={k} m={m}");
                assert_eq!(general.c[m], closed, "n={n} k={k} m={m}");
                assert_eq!(pseudo[m], closed, "n={n} k={k} m={m}");
            }
        }
    }
}

#[test]
fn half_range_sum_equals_full_sum() {
    let a = ring(21, 2);
    let chc = a.chc(12).unwrap();
    for m in 2..=12 {
        assert_eq!(
            closed_form_sum(&chc, m, m).unwrap(),
            closed_form_sum(&chc, m, m / 2).unwrap()
        );
    }
}

#[test]
fn series_basics() {
    let a = ring(21, 1);
    let s = almost_regular_series(&a, &RBig::ZERO, 6).unwrap();
    assert!(s.partial_sums.iter().all(|v| *v == RBig::from(20)));
    let walks = a.graph.closed_walk_counts(0, 2).unwrap().counts;
    assert_eq!(walks[2], RBig::from(20));
    let plain = almost_regular_series(&a, &r("-1"), 12).unwrap();
    let e0 = almost_regular_euler(&a, &r("-1"), &RBig::ZERO, 12).unwrap();
    assert_eq!(plain.partial_sums, e0.partial_sums);
    assert_eq!(
        almost_regular_euler(&a, &r("-1"), &RBig::ONE, 4),
        Err(Error::SingularTransform)
    );
}

#[test]
fn closed_form_euler_matches_generic_transform() {
    use crate::euler::{euler_series, EulerParams};
    let a = ring(21, 2);
    let table = coefficients_exact(&a.graph, 0, 14).unwrap();
    for (zeta, t) in [("-1", "-1"), ("-2", "-1/2"), ("1/2", "3")] {
        let params = EulerParams {
            t: r(t),
            zeta: r(zeta),
            k_max: 14,
        };
        let generic = euler_series(&table, &params, &()).unwrap();
        let closed = almost_regular_euler(&a, &r(zeta), &r(t), 14).unwrap();
        assert_eq!(generic.partial_sums, closed.partial_sums, "zeta={zeta} t={t}");
    }
}

#[test]
fn contour_at_zero_is_degree() {
    let a = ring(21, 1);
    let c = contour_eigenvalue(&a, 0.0, None, DEFAULT_QUAD_POINTS).unwrap();
    assert_eq!(c.value, 20.0);
}

#[test]
fn contour_errors() {
    let a = ring(21, 1);
    assert_eq!(
        contour_eigenvalue(&a, -1.0, Some(10.0), 64),
        Err(Error::PoleInsideContour)
    );
    assert_eq!(
        contour_eigenvalue(&a, -100.0, None, 64),
        Err(Error::BranchViolation)
    );
}

#[test]
fn contour_matches_series_limit() {
    let a = ring(21, 1);
    let series = almost_regular_series(&a, &r("-1"), 60).unwrap();
    let limit = series.at(60).as_f64();
    assert!((series.at(59).as_f64() - limit).abs() < 1e-12);
    let c = contour_eigenvalue(&a, -1.0, None, DEFAULT_QUAD_POINTS).unwrap();
    assert!((c.value - limit).abs() < 1e-8, "{} vs {}", c.value, limit);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn triple_equality_on_random_rings(n in 8usize..30, k in 1usize..4, m in 2usize..=10) {
        prop_assume!(2 * k + 2 < n);
        let a = ring(n, k);
        let chc = a.chc(m).unwrap();
        let rec = cm_recursion(&a, m).unwrap();
        let general = coefficients_exact(&a.graph, a.special, m).unwrap();
        let closed = cm_closed_form(&a, &chc, m).unwrap();
        prop_assert_eq!(&rec[m], &closed);
        prop_assert_eq!(&general.c[m], &closed);
    }

    #[test]
    fn chc_vanishes_above_half(n in 5usize..25, k in 1usize..4, m in 2usize..12) {
        prop_assume!(2 * k + 2 < n);
        let a = ring(n, k);
        let chc = a.chc(m).unwrap();
        for (kk, mm, v) in chc.entries() {
            if 2 * kk > mm {
                prop_assert!(v.is_zero());
            }
        }
    }

    #[test]
    fn complete_graph_within_bound(n in 3usize..=12, m in 2usize..=10) {
        for k in 1..=m / 2 {
            let v = RBig::from(complete_graph_chc(n, k, m).unwrap());
            let abs = if v < RBig::ZERO { -v } else { v };
            prop_assert!(abs <= chc_bound(n, k, m).unwrap());
            prop_assert!(abs <= chc_bound_half(n, k, m).unwrap());
        }
    }
}

#[test]
fn almost_regular_instances_from_circulants() {
    // Circulant plus a hub joined to every node is almost regular whenever
    // the hub degree exceeds the circulant degree + 1.
    let mut seen: Vec<u64> = Vec::new();
    for n in 9..14 {
        let a = ring(n, 2);
        seen.push(a.x);
        let chc = a.chc(8).unwrap();
        let rec = cm_recursion(&a, 8).unwrap();
        for m in 2..=8 {
            assert_eq!(rec[m], cm_closed_form(&a, &chc, m).unwrap());
        }
    }
    assert_eq!(seen, [3, 4, 5, 6, 7]);
}
