//! Exact coefficients through integer arithmetic.
//!
//! Weights are scaled by `W`, the lcm of their denominators, so that the
//! adjacency matrix and the degrees are integers. With `D` the lcm of the
//! degree gaps `|d_q - d_r|`, the quantities `B_jr = β_jr D^j` and
//! `C_j = W c_j D^{j-1}` are integers obeying
//!
//! `B_1r = D a_rq / (d_q - d_r)`,
//! `C_j = Σ_k a_qk B_{j-1,k}`,
//! `B_jr = D / (d_r - d_q) · (Σ_{k=1}^{j-2} B_kr C_{j-k} - (A B_{j-1})_r)`,
//!
//! so no gcd is taken until the final conversion to rationals.

use alloc::vec;
use alloc::vec::Vec;

use dashu_int::ops::UnsignedAbs;
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use super::{check_expansion_node, CoefficientTable};
use crate::error::Result;
use crate::graph::Graph;

fn lcm(a: &UBig, b: &UBig) -> UBig {
    use dashu_int::ops::Gcd;
    if a.is_zero() || b.is_zero() {
        return UBig::ZERO;
    }
    let g = a.gcd(b);
    a / &g * b
}

/// Exact coefficient table, computed with integer-only recursion.
pub fn coefficients_exact(g: &Graph, q: usize, order: usize) -> Result<CoefficientTable<RBig>> {
    let degrees = check_expansion_node(g, q, order)?;
    let n = g.n();

    let mut w_scale = UBig::ONE;
    for (_, _, w) in g.edges() {
        w_scale = lcm(&w_scale, w.denominator());
    }
    let w_ratio = RBig::from(w_scale.clone());
    let to_int = |x: &RBig| -> IBig {
        let scaled = x * &w_ratio;
        debug_assert!(scaled.is_int());
        scaled.into_parts().0
    };
    let nbrs: Vec<Vec<(usize, IBig)>> = (0..n)
        .map(|u| g.neighbors(u).map(|(v, w)| (v, to_int(w))).collect())
        .collect();
    let d: Vec<IBig> = degrees.iter().map(to_int).collect();

    let mut d_scale = UBig::ONE;
    for r in (0..n).filter(|&r| r != q) {
        let gap: IBig = &d[q] - &d[r];
        d_scale = lcm(&d_scale, &gap.unsigned_abs());
    }
    let d_int = IBig::from(d_scale.clone());
    // D / (d_r - d_q), exact by construction of D.
    let factor: Vec<IBig> = (0..n)
        .map(|r| {
            if r == q {
                IBig::ZERO
            } else {
                &d_int / (&d[r] - &d[q])
            }
        })
        .collect();

    let mut big_c = vec![IBig::ZERO; order + 1];
    let mut big_b: Vec<Vec<IBig>> = Vec::with_capacity(order + 1);
    let mut e_q = vec![IBig::ZERO; n];
    e_q[q] = IBig::ONE;
    big_b.push(e_q);
    let mut first = vec![IBig::ZERO; n];
    for (r, a_rq) in &nbrs[q] {
        first[*r] = -(&factor[*r] * a_rq);
    }
    big_b.push(first);

    for j in 2..=order {
        let prev = &big_b[j - 1];
        let mut cj = IBig::ZERO;
        for (k, a) in &nbrs[q] {
            cj += a * &prev[*k];
        }
        big_c[j] = cj;
        let mut row = vec![IBig::ZERO; n];
        for r in (0..n).filter(|&r| r != q) {
            let mut acc = IBig::ZERO;
            for (l, a) in &nbrs[r] {
                acc -= a * &prev[*l];
            }
            for k in 1..=j - 2 {
                let b = &big_b[k][r];
                if !b.is_zero() {
                    acc += b * &big_c[j - k];
                }
            }
            row[r] = acc * &factor[r];
        }
        big_b.push(row);
    }

    let mut c = Vec::with_capacity(order + 1);
    c.push(degrees[q].clone());
    c.push(RBig::ZERO);
    let mut d_pow = d_scale.clone();
    for cj in big_c.into_iter().skip(2) {
        c.push(RBig::from_parts(cj, &d_pow * &w_scale));
        d_pow *= &d_scale;
    }
    let mut beta = Vec::with_capacity(order + 1);
    let mut d_pow = UBig::ONE;
    for row in big_b {
        beta.push(
            row.into_iter()
                .map(|b| RBig::from_parts(b, d_pow.clone()))
                .collect(),
        );
        d_pow *= &d_scale;
    }
    Ok(CoefficientTable { q, order, c, beta })
}
