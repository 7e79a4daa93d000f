//! Perturbation coefficients `c_j(q)` of the eigenvalue of `Δ + ζA` that
//! branches from the unique degree `d_q`, the eigenvector coefficients
//! `β_jr`, and Taylor partial sums.

mod explicit;
mod scaled;

use alloc::vec;
use alloc::vec::Vec;

use dashu_ratio::RBig;

use crate::error::{Error, Result};
use crate::graph::{abs, Graph};
use crate::scalar::{bit_lengths, Scalar};

pub use explicit::explicit_c2_c3_c4;
pub use scaled::coefficients_exact;

/// Coefficients of the expansion around node `q` up to order `order`.
///
/// `c[0] = d_q`, `c[1] = 0`, and `c[j]` for `2 <= j <= order`.
/// `beta[j][r]` for `0 <= j <= order`, with `beta[0] = e_q` and
/// `beta[j][q] = 0` for `j >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable<S> {
    pub q: usize,
    pub order: usize,
    pub c: Vec<S>,
    pub beta: Vec<Vec<S>>,
}

impl<S: Scalar> CoefficientTable<S> {
    pub fn degree(&self) -> &S {
        &self.c[0]
    }

    /// Converts every entry with `f`.
    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> CoefficientTable<T> {
        CoefficientTable {
            q: self.q,
            order: self.order,
            c: self.c.iter().map(&f).collect(),
            beta: self
                .beta
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    fn check_order(&self, k: usize) -> Result<()> {
        if k > self.order {
            Err(Error::OrderTooLarge {
                got: k,
                available: self.order,
            })
        } else {
            Ok(())
        }
    }
}

impl CoefficientTable<RBig> {
    /// Rounds an exact table into another domain.
    pub fn to_domain<T: Scalar>(&self, ctx: &T::Context) -> CoefficientTable<T> {
        self.map(|x| T::from_ratio(x, ctx))
    }

    /// Largest numerator and denominator bit lengths per order, taken over
    /// `c_j` and the row `β_j`.
    pub fn bit_lengths(&self) -> Vec<(usize, usize)> {
        (0..=self.order)
            .map(|j| {
                core::iter::once(&self.c[j])
                    .chain(self.beta[j].iter())
                    .map(bit_lengths)
                    .fold((0, 0), |(a, b), (x, y)| (a.max(x), b.max(y)))
            })
            .collect()
    }
}

/// Which series a [`SeriesEvaluation`] holds.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesKind<S> {
    Taylor,
    Euler { t: S },
}

/// Partial sums `ξ_{q;K}(ζ)` indexed by `K = 0..=K_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesEvaluation<S> {
    pub q: usize,
    pub zeta: S,
    pub kind: SeriesKind<S>,
    pub partial_sums: Vec<S>,
}

impl<S> SeriesEvaluation<S> {
    pub fn max_order(&self) -> usize {
        self.partial_sums.len() - 1
    }

    pub fn at(&self, k: usize) -> &S {
        &self.partial_sums[k]
    }
}

pub(crate) fn check_expansion_node(g: &Graph, q: usize, order: usize) -> Result<Vec<RBig>> {
    g.check_node(q)?;
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    let degrees = g.degrees();
    if degrees
        .iter()
        .enumerate()
        .any(|(k, d)| k != q && *d == degrees[q])
    {
        return Err(Error::NonUniqueDegree(q));
    }
    Ok(degrees)
}

/// The coefficient recursion evaluated directly in the domain `S`.
///
/// For `j >= 2`:
/// `c_j = Σ_{k≠q} β_{j-1,k} a_qk` and
/// `β_jr = (Σ_{k=1}^{j-2} β_kr c_{j-k} - Σ_l a_rl β_{j-1,l}) / (d_r - d_q)`.
pub fn coefficients_in<S: Scalar>(
    g: &Graph,
    q: usize,
    order: usize,
    ctx: &S::Context,
) -> Result<CoefficientTable<S>> {
    let degrees = check_expansion_node(g, q, order)?;
    let n = g.n();
    let a = g.adjacency::<S>(ctx);
    let d: Vec<S> = degrees.iter().map(|x| S::from_ratio(x, ctx)).collect();
    let gap: Vec<S> = (0..n).map(|r| d[r].clone() - &d[q]).collect();

    let mut c = vec![S::zero(ctx); order + 1];
    c[0] = d[q].clone();
    let mut beta = Vec::with_capacity(order + 1);
    let mut e_q = vec![S::zero(ctx); n];
    e_q[q] = S::one(ctx);
    beta.push(e_q);
    let first: Vec<S> = (0..n)
        .map(|r| {
            if r == q {
                S::zero(ctx)
            } else {
                -(a[(r, q)].clone() / &gap[r])
            }
        })
        .collect();
    beta.push(first);

    for j in 2..=order {
        let prev = &beta[j - 1];
        let mut cj = S::zero(ctx);
        for (k, w) in g.neighbors(q) {
            if !prev[k].is_zero() {
                cj += &(prev[k].clone() * &S::from_ratio(w, ctx));
            }
        }
        c[j] = cj;
        let walk = a.mul_vec(prev, ctx);
        let mut row = vec![S::zero(ctx); n];
        for r in (0..n).filter(|&r| r != q) {
            let mut acc = -walk[r].clone();
            for k in 1..=j - 2 {
                if !beta[k][r].is_zero() {
                    acc += &(beta[k][r].clone() * &c[j - k]);
                }
            }
            row[r] = acc / &gap[r];
        }
        beta.push(row);
    }
    Ok(CoefficientTable { q, order, c, beta })
}

/// `ξ_{q;K}(ζ) = d_q + Σ_{j=2}^{K} c_j ζ^j` for `K = 0..=k_max`.
pub fn taylor_partial_sums<S: Scalar>(
    table: &CoefficientTable<S>,
    zeta: &S,
    k_max: usize,
    ctx: &S::Context,
) -> Result<SeriesEvaluation<S>> {
    table.check_order(k_max)?;
    let mut sums = Vec::with_capacity(k_max + 1);
    let mut acc = table.c[0].clone();
    let mut power = S::one(ctx);
    sums.push(acc.clone());
    for j in 1..=k_max {
        power *= zeta;
        if !table.c[j].is_zero() {
            acc += &(table.c[j].clone() * &power);
        }
        sums.push(acc.clone());
    }
    Ok(SeriesEvaluation {
        q: table.q,
        zeta: zeta.clone(),
        kind: SeriesKind::Taylor,
        partial_sums: sums,
    })
}

/// `e_q + Σ_{j=1}^{K} ζ^j β_j`; component `q` is exactly one.
pub fn reconstruct_eigenvector<S: Scalar>(
    table: &CoefficientTable<S>,
    zeta: &S,
    k: usize,
    ctx: &S::Context,
) -> Result<Vec<S>> {
    table.check_order(k)?;
    let mut v = table.beta[0].clone();
    let mut power = S::one(ctx);
    for j in 1..=k {
        power *= zeta;
        for (x, b) in v.iter_mut().zip(&table.beta[j]) {
            if !b.is_zero() {
                *x += &(b.clone() * &power);
            }
        }
    }
    Ok(v)
}

/// Outcome of the coefficient magnitude checks against closed-walk counts.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsReport {
    /// `|c_2| <= (A²)_qq`
    pub c2_ok: bool,
    /// `|c_3| <= (A³)_qq`
    pub c3_ok: bool,
    /// `|c_4| <= (A⁴)_qq + (A²)_qq`
    pub c4_ok: bool,
    /// `(j, |c_j| <= κ^{j-1} (A^j)_qq)` for `j = 2..=K`. Informational only:
    /// the inequality is a heuristic and is not guaranteed to hold.
    pub kappa_hypothesis: Vec<(usize, bool)>,
}

impl BoundsReport {
    pub fn all_ok(&self) -> bool {
        self.c2_ok && self.c3_ok && self.c4_ok
    }
}

/// Checks the c₂–c₄ magnitude bounds on an unweighted graph. The bounds are
/// non-strict: a star `K_{1,2}` centre has `c_2 = (A²)_qq = 2`.
pub fn coefficient_bounds(g: &Graph, table: &CoefficientTable<RBig>) -> Result<BoundsReport> {
    if g.is_weighted() {
        return Err(Error::Weighted);
    }
    let q = table.q;
    let k = table.order.max(4);
    let walks = g.closed_walk_counts(q, k)?.counts;
    let full = coefficients_exact(g, q, k)?;
    let c = &full.c;
    let kappa = g.degree_profile().kappa[q]
        .clone()
        .ok_or(Error::NonUniqueDegree(q))?;
    let kappa_hypothesis = (2..=table.order)
        .map(|j| {
            let bound = kappa.powu(j as u32 - 1, &()) * &walks[j];
            (j, abs(&table.c[j]) <= bound)
        })
        .collect();
    Ok(BoundsReport {
        c2_ok: abs(&c[2]) <= walks[2],
        c3_ok: abs(&c[3]) <= walks[3],
        c4_ok: abs(&c[4]) <= &walks[4] + &walks[2],
        kappa_hypothesis,
    })
}
