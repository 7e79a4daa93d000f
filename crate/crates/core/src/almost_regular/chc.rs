//! Characteristic coefficients `A[k,m]`: sums over compositions of `m` into
//! `k` positive parts of products of closed-walk counts `(A^j)_11`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::error::{Error, Result};
use crate::graph::WalkCounts;

/// `A[k,m]` for `0 <= k, m <= M`; entries outside `1 <= k <= m` are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct ChcTable {
    pub walks: WalkCounts,
    table: Vec<Vec<RBig>>,
}

impl ChcTable {
    pub fn max_order(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, k: usize, m: usize) -> &RBig {
        &self.table[k][m]
    }

    /// `(k, m, A[k,m])` for `1 <= k <= m <= M`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RBig)> + '_ {
        let top = self.max_order();
        (1..=top).flat_map(move |m| (1..=m).map(move |k| (k, m, &self.table[k][m])))
    }
}

/// Builds the table from `A[1,m] = (A^m)_11` and
/// `A[k,m] = Σ_{j=1}^{m-k+1} (A^j)_11 A[k-1, m-j]`.
pub fn chc_build(walks: &WalkCounts, max_order: usize) -> Result<ChcTable> {
    if walks.max_len() < max_order {
        return Err(Error::OrderTooLarge {
            got: max_order,
            available: walks.max_len(),
        });
    }
    let w = &walks.counts;
    let mut table = vec![vec![RBig::ZERO; max_order + 1]; max_order + 1];
    table[1][1..].clone_from_slice(&w[1..=max_order]);
    for k in 2..=max_order {
        for m in k..=max_order {
            let mut acc = RBig::ZERO;
            for j in 1..=m - k + 1 {
                let prev = &table[k - 1][m - j];
                if !w[j].is_zero() && !prev.is_zero() {
                    acc += &w[j] * prev;
                }
            }
            table[k][m] = acc;
        }
    }
    Ok(ChcTable {
        walks: walks.clone(),
        table,
    })
}

fn binomial(n: usize, k: usize) -> IBig {
    if k > n {
        return IBig::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = IBig::ONE;
    for i in 0..k {
        acc = acc * IBig::from(n - i) / IBig::from(i + 1);
    }
    acc
}

/// `A[k,m]` of the complete graph `K_N`:
/// `(-1)^m (N-1)^k Σ_{r=0}^{m-2k} C(k+r-1,r) C(m-k-r-1, m-2k-r) (-1)^r (N-1)^r`.
pub fn complete_graph_chc(n: usize, k: usize, m: usize) -> Result<IBig> {
    if n < 2 || k < 1 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "complete-graph chc needs N >= 2, k >= 1, m >= 2 (got N = {n}, k = {k}, m = {m})"
        )));
    }
    if 2 * k > m {
        return Ok(IBig::ZERO);
    }
    let base = IBig::from(n - 1);
    let mut sum = IBig::ZERO;
    for r in 0..=m - 2 * k {
        let term = binomial(k + r - 1, r) * binomial(m - k - r - 1, m - 2 * k - r) * base.pow(r);
        if r % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let out = base.pow(k) * sum;
    Ok(if m.is_multiple_of(2) { out } else { -out })
}

fn check_bound_args(n: usize, k: usize, m: usize) -> Result<()> {
    if n < 3 || k < 1 || 2 * k > m {
        return Err(Error::InvalidParameter(format!(
            "chc bound needs N >= 3 and 1 <= k <= m/2 (got N = {n}, k = {k}, m = {m})"
        )));
    }
    Ok(())
}

fn pow_ratio(base: usize, exp: usize) -> RBig {
    // 0^0 = 1, which covers the factor (m-2k)^(m-2k) at m = 2k.
    RBig::from(IBig::from(base).pow(exp))
}

/// Upper bound on `|A[k,m]|` over graphs with `N` nodes, with the free
/// parameter of the derivation chosen optimally:
/// `(N-1)^m (m-k)^{m-k} / ((N-1-(m-2k)/(m-k))^k (m-2k)^{m-2k} k^k)`.
/// At `m = 2k` it equals `(N-1)^k`, the value attained by `K_N`.
pub fn chc_bound(n: usize, k: usize, m: usize) -> Result<RBig> {
    check_bound_args(n, k, m)?;
    let n1 = n - 1;
    let num = pow_ratio(n1, m) * pow_ratio(m - k, m - k) * pow_ratio(m - k, k);
    let inner = n1 * (m - k) - (m - 2 * k);
    let den = pow_ratio(inner, k) * pow_ratio(m - 2 * k, m - 2 * k) * pow_ratio(k, k);
    Ok(num / den)
}

/// The same bound with the free parameter fixed at one half:
/// `2^{m-k} (N-1)^m / (N - 3/2)^k`.
pub fn chc_bound_half(n: usize, k: usize, m: usize) -> Result<RBig> {
    check_bound_args(n, k, m)?;
    let num = pow_ratio(2, m) * pow_ratio(n - 1, m);
    Ok(num / pow_ratio(2 * n - 3, k))
}
