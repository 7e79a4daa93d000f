use alloc::vec::Vec;

use dashu_ratio::RBig;

use super::check_expansion_node;
use crate::error::Result;
use crate::graph::Graph;

/// `c_2`, `c_3`, `c_4` from their closed neighbour-sum forms, with
/// `Δ_k = d_q - d_k` and every index ranging over nodes other than `q`:
///
/// `c_2 = Σ_k a_kq² / Δ_k`,
/// `c_3 = Σ_r (a_rq/Δ_r) Σ_k a_kq a_kr / Δ_k`,
/// `c_4 = Σ_r (a_rq/Δ_r) Σ_l (a_rl/Δ_l) Σ_k a_kq a_kl / Δ_k
///        - Σ_r a_rq²/Δ_r² · Σ_k a_kq²/Δ_k`.
pub fn explicit_c2_c3_c4(g: &Graph, q: usize) -> Result<(RBig, RBig, RBig)> {
    let degrees = check_expansion_node(g, q, 2)?;
    let n = g.n();
    let a = |i: usize, j: usize| g.weight(i, j);
    let others: Vec<usize> = (0..n).filter(|&k| k != q).collect();
    let mut inv_gap = alloc::vec![RBig::ZERO; n];
    for &k in &others {
        inv_gap[k] = RBig::ONE / (&degrees[q] - &degrees[k]);
    }

    // h_l = Σ_k a_kq a_kl / Δ_k
    let h: Vec<RBig> = (0..n)
        .map(|l| {
            let mut acc = RBig::ZERO;
            for &k in &others {
                if !a(k, q).is_zero() && !a(k, l).is_zero() {
                    acc += a(k, q) * a(k, l) * &inv_gap[k];
                }
            }
            acc
        })
        .collect();

    let mut c2 = RBig::ZERO;
    let mut c3 = RBig::ZERO;
    let mut sq_over_gap_sq = RBig::ZERO;
    for &r in &others {
        let arq = a(r, q);
        if arq.is_zero() {
            continue;
        }
        c2 += arq * arq * &inv_gap[r];
        c3 += arq * &inv_gap[r] * &h[r];
        sq_over_gap_sq += arq * arq * &inv_gap[r] * &inv_gap[r];
    }
    let mut c4 = RBig::ZERO;
    for &r in &others {
        let arq = a(r, q);
        if arq.is_zero() {
            continue;
        }
        let mut inner = RBig::ZERO;
        for &l in &others {
            if !a(r, l).is_zero() {
                inner += a(r, l) * &inv_gap[l] * &h[l];
            }
        }
        c4 += arq * &inv_gap[r] * inner;
    }
    c4 -= sq_over_gap_sq * &c2;
    Ok((c2, c3, c4))
}
