//! Graphs in which one node has a unique maximum degree `r + x` and every
//! other node has degree `r`. For these the perturbation coefficients have a
//! closed form in the closed-walk counts of the special node.

mod chc;
mod contour;

use alloc::vec;
use alloc::vec::Vec;

use dashu_ratio::RBig;

use crate::error::{Error, Result};
use crate::euler::pascal;
use crate::graph::Graph;
use crate::perturb::{SeriesEvaluation, SeriesKind};
use crate::scalar::Scalar;

pub use chc::{chc_bound, chc_bound_half, chc_build, complete_graph_chc, ChcTable};
pub use contour::{contour_eigenvalue, ContourResult, DEFAULT_QUAD_POINTS};

/// An unweighted graph with one node of degree `r + x` (`x >= 1`) and all
/// others of degree `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlmostRegularGraph {
    pub graph: Graph,
    pub special: usize,
    pub r: u64,
    pub x: u64,
}

impl AlmostRegularGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.is_weighted() {
            return Err(Error::Weighted);
        }
        if graph.n() < 2 {
            return Err(Error::NotAlmostRegular("fewer than two nodes"));
        }
        let degrees: Vec<u64> = graph
            .degrees()
            .iter()
            .map(|d| u64::try_from(d.numerator().clone()).expect("integer degree"))
            .collect();
        let (special, &top) = degrees
            .iter()
            .enumerate()
            .max_by_key(|&(i, d)| (*d, core::cmp::Reverse(i)))
            .expect("non-empty");
        let r = degrees[if special == 0 { 1 } else { 0 }];
        if r >= top {
            return Err(Error::NotAlmostRegular("maximum degree is not unique"));
        }
        if degrees
            .iter()
            .enumerate()
            .any(|(i, &d)| i != special && d != r)
        {
            return Err(Error::NotAlmostRegular("other nodes do not share one degree"));
        }
        Ok(AlmostRegularGraph {
            graph,
            special,
            r,
            x: top - r,
        })
    }

    pub fn degree(&self) -> u64 {
        self.r + self.x
    }

    /// Closed-walk characteristic coefficients of the special node.
    pub fn chc(&self, max_order: usize) -> Result<ChcTable> {
        chc_build(
            &self.graph.closed_walk_counts(self.special, max_order)?,
            max_order,
        )
    }

    fn x_ratio(&self) -> RBig {
        RBig::from(self.x)
    }
}

/// `g_k(m) = ((-1)^{k-1} / k) C(m+k-2, k-1)`.
fn g_weight(k: usize, m: usize, binom: &[Vec<dashu_int::IBig>]) -> RBig {
    let w = RBig::from(binom[m + k - 2][k - 1].clone()) / RBig::from(k);
    if k.is_multiple_of(2) {
        -w
    } else {
        w
    }
}

/// `Σ_{k=1}^{upper} g_k(m) A[k,m]`, the bracket of the closed form.
pub fn closed_form_sum(chc: &ChcTable, m: usize, upper: usize) -> Result<RBig> {
    if m > chc.max_order() {
        return Err(Error::OrderTooLarge {
            got: m,
            available: chc.max_order(),
        });
    }
    let binom = pascal(2 * m);
    let mut acc = RBig::ZERO;
    for k in 1..=upper.min(m) {
        let a = chc.get(k, m);
        if !a.is_zero() {
            acc += g_weight(k, m, &binom) * a;
        }
    }
    Ok(acc)
}

/// `c_m = x^{1-m} Σ_{k=1}^{m} ((-1)^{k-1}/k) C(m+k-2, k-1) A[k,m]`.
pub fn cm_closed_form(arg: &AlmostRegularGraph, chc: &ChcTable, m: usize) -> Result<RBig> {
    if m < 2 {
        return Err(Error::OrderTooSmall { got: m, min: 2 });
    }
    let sum = closed_form_sum(chc, m, m)?;
    Ok(sum / arg.x_ratio().powu(m as u32 - 1, &()))
}

/// Coefficients `c_0..=c_K` from the eigenvector recursion specialised to a
/// constant degree gap: with `s` the special node, `β_1l = a_ls / x` and
/// `β_jl = ((A β_{j-1})_l - Σ_{k=1}^{j-2} β_kl c_{j-k}) / x` for `l ≠ s`,
/// `c_j = Σ_l a_sl β_{j-1,l}`.
pub fn cm_recursion(arg: &AlmostRegularGraph, order: usize) -> Result<Vec<RBig>> {
    Ok(recursion_with_beta(arg, order)?.0)
}

fn recursion_with_beta(arg: &AlmostRegularGraph, order: usize) -> Result<(Vec<RBig>, Vec<Vec<RBig>>)> {
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    let g = &arg.graph;
    let n = g.n();
    let s = arg.special;
    let inv_x = RBig::ONE / arg.x_ratio();
    let a = g.weights();
    let mut c = vec![RBig::ZERO; order + 1];
    c[0] = RBig::from(arg.degree());
    let mut beta: Vec<Vec<RBig>> = Vec::with_capacity(order + 1);
    let mut e = vec![RBig::ZERO; n];
    e[s] = RBig::ONE;
    beta.push(e);
    beta.push(
        (0..n)
            .map(|l| if l == s { RBig::ZERO } else { &a[(l, s)] * &inv_x })
            .collect(),
    );
    for j in 2..=order {
        let mut cj = RBig::ZERO;
        for (l, w) in g.neighbors(s) {
            cj += w * &beta[j - 1][l];
        }
        c[j] = cj;
        let walk = a.mul_vec(&beta[j - 1], &());
        let row = (0..n)
            .map(|l| {
                if l == s {
                    return RBig::ZERO;
                }
                let mut acc = walk[l].clone();
                for k in 1..=j - 2 {
                    acc -= &beta[k][l] * &c[j - k];
                }
                acc * &inv_x
            })
            .collect();
        beta.push(row);
    }
    Ok((c, beta))
}

/// The pseudo-recursion `c_2 = (A²)_ss / x` and, for `j >= 3`,
/// `c_j = (Σ_m β_{j-2,m} (A²)_{ms} - β_{j-2,s} (A²)_ss
///        - Σ_{k=1}^{j-3} c_{j-1-k} c_{k+1}) / x`,
/// which needs the eigenvector coefficients two orders back only.
pub fn cm_pseudo_recursion(arg: &AlmostRegularGraph, order: usize) -> Result<Vec<RBig>> {
    let (_, beta) = recursion_with_beta(arg, order)?;
    let g = &arg.graph;
    let s = arg.special;
    let a = g.weights();
    let a2 = a.matmul(a, &());
    let inv_x = RBig::ONE / arg.x_ratio();
    let mut c = vec![RBig::ZERO; order + 1];
    c[0] = RBig::from(arg.degree());
    c[2] = &a2[(s, s)] * &inv_x;
    for j in 3..=order {
        let mut acc = RBig::ZERO;
        for m in 0..g.n() {
            acc += &beta[j - 2][m] * &a2[(m, s)];
        }
        acc -= &beta[j - 2][s] * &a2[(s, s)];
        for k in 1..=j - 3 {
            acc -= &c[j - 1 - k] * &c[k + 1];
        }
        c[j] = acc * &inv_x;
    }
    Ok(c)
}

/// Taylor partial sums `d + Σ_{m=2}^{K} c_m ζ^m` with closed-form `c_m`.
pub fn almost_regular_series(
    arg: &AlmostRegularGraph,
    zeta: &RBig,
    order: usize,
) -> Result<SeriesEvaluation<RBig>> {
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    let chc = arg.chc(order)?;
    let mut acc = RBig::from(arg.degree());
    let mut sums = vec![acc.clone(), acc.clone()];
    let mut power = zeta.clone();
    for m in 2..=order {
        power *= zeta;
        acc += cm_closed_form(arg, &chc, m)? * &power;
        sums.push(acc.clone());
    }
    Ok(SeriesEvaluation {
        q: arg.special,
        zeta: zeta.clone(),
        kind: SeriesKind::Taylor,
        partial_sums: sums,
    })
}

/// Euler t-transform in closed form:
/// `d + x Σ_{m≥1} [Σ_{k=1}^{m} Σ_{j=1}^{k} g_j(k) C(m-1,k-1) A[j,k] (tx)^{-k}]
/// (tζ/(1+tζ))^m`. At `t = 0` this is the plain series.
pub fn almost_regular_euler(
    arg: &AlmostRegularGraph,
    zeta: &RBig,
    t: &RBig,
    order: usize,
) -> Result<SeriesEvaluation<RBig>> {
    let denom = RBig::ONE + t * zeta;
    if denom.is_zero() {
        return Err(Error::SingularTransform);
    }
    if t.is_zero() {
        let mut plain = almost_regular_series(arg, zeta, order)?;
        plain.kind = SeriesKind::Euler { t: t.clone() };
        return Ok(plain);
    }
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    let chc = arg.chc(order)?;
    let x = arg.x_ratio();
    let binom = pascal(2 * order);
    let tx_inv = RBig::ONE / (t * &x);
    // inner[k] = (tx)^{-k} Σ_j g_j(k) A[j,k]
    let mut inner = vec![RBig::ZERO; order + 1];
    let mut p = RBig::ONE;
    for k in 1..=order {
        p *= &tx_inv;
        if k >= 2 {
            inner[k] = closed_form_sum(&chc, k, k)? * &p;
        }
    }
    let w = t * zeta / denom;
    let mut acc = RBig::from(arg.degree());
    let mut sums = vec![acc.clone()];
    let mut w_pow = RBig::ONE;
    for m in 1..=order {
        w_pow *= &w;
        let mut bracket = RBig::ZERO;
        for k in 2..=m {
            if !inner[k].is_zero() {
                bracket += RBig::from(binom[m - 1][k - 1].clone()) * &inner[k];
            }
        }
        acc += &x * bracket * &w_pow;
        sums.push(acc.clone());
    }
    Ok(SeriesEvaluation {
        q: arg.special,
        zeta: zeta.clone(),
        kind: SeriesKind::Euler { t: t.clone() },
        partial_sums: sums,
    })
}

#[cfg(test)]
mod tests;
