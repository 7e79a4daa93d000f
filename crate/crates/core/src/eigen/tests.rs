use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::generate;
use crate::scalar::MpFloat;

fn example1() -> Graph {
    Graph::unweighted(5, &[(0, 2), (0, 3), (0, 4), (1, 4)]).unwrap()
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn example_tree_spectrum() {
    let s = laplacian_spectrum(&example1()).unwrap();
    assert!(close(&s.eigenvalues, &[4.17009, 2.31111, 1.0, 0.518806, 0.0], 5e-6));
    assert!(s.residual < 1e-12);
}

#[test]
fn antiregular_integer_spectrum() {
    let s = laplacian_spectrum(&generate::antiregular(10)).unwrap();
    let expected = [10.0, 9.0, 8.0, 7.0, 6.0, 4.0, 3.0, 2.0, 1.0, 0.0];
    assert!(close(&s.eigenvalues, &expected, 1e-9), "{:?}", s.eigenvalues);
}

#[test]
fn complete_graph_spectrum() {
    let s = laplacian_spectrum(&generate::complete(3)).unwrap();
    assert!(close(&s.eigenvalues, &[3.0, 3.0, 0.0], 1e-12));
}

#[test]
fn extended_precision_reconstructs() {
    let g = generate::erdos_renyi(12, 0.4, 3).unwrap();
    let bits = 128usize;
    let m = g.laplacian::<MpFloat>(&bits);
    let tol = MpFloat::from_ratio(&default_tolerance(bits), &bits);
    let s = symmetric_eigen(&m, &tol, &bits).unwrap();
    let n = g.n();
    let mut lambda = DenseMatrix::filled(n, MpFloat::zero(&bits));
    for i in 0..n {
        lambda[(i, i)] = s.eigenvalues[i].clone();
    }
    let rebuilt = s
        .eigenvectors
        .matmul(&lambda, &bits)
        .matmul(&s.eigenvectors.transpose(), &bits);
    let mut diff = DenseMatrix::filled(n, MpFloat::zero(&bits));
    for i in 0..n {
        for j in 0..n {
            diff[(i, j)] = rebuilt[(i, j)].clone() - &m[(i, j)];
        }
    }
    let rel = diff.frobenius_sq(&bits).sqrt().as_f64() / m.frobenius_sq(&bits).sqrt().as_f64();
    assert!(rel < 1e-30, "{rel}");
    assert!(s.residual.as_f64() < 1e-28);
    assert!(s.eigenvalues.last().unwrap().as_f64().abs() < 1e-30);
}

#[test]
fn rejects_asymmetric_input() {
    let m = DenseMatrix::from_rows(vec![vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
    assert_eq!(symmetric_eigen(&m, &1e-12, &()), Err(Error::NotSymmetric));
}

#[test]
fn tolerance_defaults() {
    assert_eq!(default_tolerance(53), RBig::from_parts(1.into(), 1_000_000_000_000u64.into()));
    let t128 = default_tolerance(128).as_f64();
    assert!((t128 - 1e-30).abs() < 1e-40);
}

#[test]
fn alpha_metric() {
    let a = accuracy_alpha(&11.6197037971111f64, &11.6199127895910);
    assert!((a - (-3.6799)).abs() < 1e-4, "{a}");
    assert_eq!(accuracy_alpha(&2.0f64, &2.0), ALPHA_FLOOR);
    assert_eq!(accuracy_alpha(&3.0f64, &2.0), 0.0);
}

#[test]
fn bounds_on_known_graphs() {
    let anti = spectral_bounds(&generate::antiregular(10)).unwrap();
    assert!(anti.all_ok());
    assert_eq!(anti.largest_upper_bound, Some(10.0));
    for n in 2..7 {
        let k = spectral_bounds(&generate::complete(n)).unwrap();
        assert!(k.all_ok(), "K_{n}: {k:?}");
    }
    let empty = spectral_bounds(&Graph::unweighted(3, &[]).unwrap()).unwrap();
    assert!(empty.all_ok(), "{empty:?}");
    let weighted = Graph::new(3, &[(0, 1, RBig::from(3))]).unwrap();
    let w = spectral_bounds(&weighted).unwrap();
    assert!(w.brouwer_haemers.is_none() && w.gerschgorin_ok);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laplacian_spectra_are_consistent(n in 2usize..16, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = generate::erdos_renyi(n, p, seed).unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        prop_assert!(s.residual < 1e-9);
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(s.eigenvalues[n - 1].abs() < 1e-10);
        let gram = s.eigenvectors.transpose().matmul(&s.eigenvectors, &());
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                prop_assert!((gram[(i, j)] - target).abs() < 1e-10);
            }
        }
        let bounds = spectral_bounds(&g).unwrap();
        prop_assert!(bounds.all_ok(), "{:?}", bounds);
    }

    #[test]
    fn connected_null_vector_is_constant(n in 3usize..12, seed in any::<u64>()) {
        let g = generate::erdos_renyi(n, 0.7, seed).unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        // Connected iff the second smallest eigenvalue is positive.
        prop_assume!(s.eigenvalues[n - 2] > 1e-6);
        let v: Vec<f64> = s.eigenvectors.column(n - 1);
        let target = 1.0 / (n as f64).sqrt();
        let sign = v[0].signum();
        prop_assert!(v.iter().all(|x| (x * sign - target).abs() < 1e-9));
    }
}

#[test]
fn generated_graphs_satisfy_bounds() {
    let mut graphs = vec![generate::antiregular(12), generate::complete(7)];
    for (n, k) in [(8, 1), (21, 1), (21, 9), (31, 3)] {
        graphs.push(generate::ring_with_core(n, k).unwrap());
    }
    for g in graphs {
        assert!(spectral_bounds(&g).unwrap().all_ok());
    }
}
