//! Deterministic graph generators.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
///
/// The stream is ChaCha8 seeded with `seed_from_u64(seed)`. Pairs `i < j` are
/// visited in lexicographic order; each draws one `u64`, maps its top 53 bits
/// to `u ∈ [0, 1)` and keeps the edge iff `u < p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("link probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if u < p {
                edges.push((i, j));
            }
        }
    }
    Graph::unweighted(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::unweighted(n, &edges).expect("valid complete graph")
}

/// Graph in which exactly two nodes share a degree. With 1-based labels,
/// `i < j` are adjacent iff `j ≡ n (mod 2)`; for `n = 10` the degrees are
/// `(5,5,4,6,3,7,2,8,1,9)`.
pub fn antiregular(n: usize) -> Graph {
    let edges: Vec<_> = (1..=n)
        .flat_map(|j| (1..j).map(move |i| (i, j)))
        .filter(|&(_, j)| j % 2 == n % 2)
        .map(|(i, j)| (i - 1, j - 1))
        .collect();
    Graph::unweighted(n, &edges).expect("valid antiregular graph")
}

/// A ring of `n - 1` nodes, each joined to its `k` nearest neighbours on
/// either side, plus a core node (index 0) joined to every ring node.
/// The core has degree `n - 1`, the ring nodes `2k + 1`.
pub fn ring_with_core(n: usize, k: usize) -> Result<Graph> {
    if 2 * k + 2 >= n {
        return Err(Error::InvalidParameter(format!(
            "ring_with_core needs 2k + 2 < n, got n = {n}, k = {k}"
        )));
    }
    let ring = n - 1;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    for i in 0..ring {
        for s in 1..=k {
            let j = (i + s) % ring;
            edges.push((1 + i.min(j), 1 + i.max(j)));
        }
    }
    Graph::unweighted(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RBig;
    use alloc::vec;

    fn int_degrees(g: &Graph) -> Vec<i64> {
        g.degrees()
            .iter()
            .map(|d| i64::try_from(d.numerator().clone()).unwrap())
            .collect()
    }

    #[test]
    fn antiregular_ten() {
        let g = antiregular(10);
        assert_eq!(int_degrees(&g), vec![5, 5, 4, 6, 3, 7, 2, 8, 1, 9]);
    }

    #[test]
    fn antiregular_has_one_repeated_degree() {
        for n in 2..20 {
            let g = antiregular(n);
            assert_eq!(g.degree_profile().unique_nodes.len(), n - 2, "n = {n}");
        }
    }

    #[test]
    fn ring_with_core_eight() {
        let g = ring_with_core(8, 1).unwrap();
        assert_eq!(int_degrees(&g), vec![7, 3, 3, 3, 3, 3, 3, 3]);
        let p = g.degree_profile();
        assert_eq!(p.unique_nodes, vec![0]);
    }

    #[test]
    fn ring_with_core_kappa() {
        for k in 1..=14 {
            let g = ring_with_core(31, k).unwrap();
            let p = g.degree_profile();
            assert_eq!(p.unique_nodes, vec![0]);
            assert_eq!(p.kappa[0], Some(RBig::from_parts(1.into(), (31 - 2 * k - 2).into())));
        }
        assert!(ring_with_core(8, 3).is_err());
    }

    #[test]
    fn erdos_renyi_is_deterministic() {
        let a = erdos_renyi(20, 0.3, 7).unwrap();
        let b = erdos_renyi(20, 0.3, 7).unwrap();
        let c = erdos_renyi(20, 0.3, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(erdos_renyi(20, 0.0, 1).unwrap().edges().is_empty());
        assert_eq!(erdos_renyi(6, 1.0, 1).unwrap(), complete(6));
        assert!(erdos_renyi(3, 1.5, 1).is_err());
    }
}
