//! Euler t-transform of the perturbation series.
//!
//! For a power series `Σ f_k z^k` the transform is
//! `f_0 + Σ_{m≥1} [Σ_{k=1}^{m} C(m-1,k-1) f_k t^{m-k}] w^m` with
//! `w = z / (1 + t z)`. At `z = -1` this is `w = 1/(t - 1)`.

use alloc::vec;
use alloc::vec::Vec;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::eigen::accuracy_alpha;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perturb::{check_expansion_node, explicit_c2_c3_c4, CoefficientTable, SeriesEvaluation, SeriesKind};
use crate::scalar::Scalar;

/// Rows `0..=n` of Pascal's triangle, exact.
pub fn pascal(n: usize) -> Vec<Vec<IBig>> {
    let mut rows: Vec<Vec<IBig>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![IBig::ONE; m + 1];
        for k in 1..m {
            row[k] = &rows[m - 1][k - 1] + &rows[m - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Tuning parameter, evaluation point and number of terms.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerParams<S> {
    pub t: S,
    pub zeta: S,
    pub k_max: usize,
}

impl<S: Scalar> EulerParams<S> {
    /// Laplacian point `ζ = -1`.
    pub fn laplacian(t: S, k_max: usize, ctx: &S::Context) -> Self {
        EulerParams {
            t,
            zeta: S::from_i64(-1, ctx),
            k_max,
        }
    }
}

/// Partial sums of the Euler transform of `Σ f_k z^k`, indexed by the number
/// of terms `0..=f.len()-1`.
pub fn euler_transform_generic<S: Scalar>(
    f: &[S],
    t: &S,
    z: &S,
    ctx: &S::Context,
) -> Result<Vec<S>> {
    let denom = S::one(ctx) + &(t.clone() * z);
    if denom.is_zero() {
        return Err(Error::SingularTransform);
    }
    let w = z.clone() / &denom;
    let m_max = f.len().saturating_sub(1);
    let binom = pascal(m_max);
    let t_pow: Vec<S> = (0..=m_max)
        .scan(S::one(ctx), |p, _| {
            let cur = p.clone();
            *p *= t;
            Some(cur)
        })
        .collect();
    let mut sums = Vec::with_capacity(f.len());
    let Some(f0) = f.first() else {
        return Ok(sums);
    };
    let mut acc = f0.clone();
    sums.push(acc.clone());
    let mut w_pow = S::one(ctx);
    for m in 1..=m_max {
        w_pow *= &w;
        let mut inner = S::zero(ctx);
        for k in 1..=m {
            if f[k].is_zero() || t_pow[m - k].is_zero() {
                continue;
            }
            let weight = S::from_ratio(&RBig::from(binom[m - 1][k - 1].clone()), ctx);
            inner += &(weight * &t_pow[m - k] * &f[k]);
        }
        if !inner.is_zero() {
            acc += &(inner * &w_pow);
        }
        sums.push(acc.clone());
    }
    Ok(sums)
}

/// Euler-transformed partial sums `ξ_{q;K}` of the eigenvalue series.
pub fn euler_series<S: Scalar>(
    table: &CoefficientTable<S>,
    params: &EulerParams<S>,
    ctx: &S::Context,
) -> Result<SeriesEvaluation<S>> {
    if params.k_max > table.order {
        return Err(Error::OrderTooLarge {
            got: params.k_max,
            available: table.order,
        });
    }
    let sums = euler_transform_generic(&table.c[..=params.k_max], &params.t, &params.zeta, ctx)?;
    Ok(SeriesEvaluation {
        q: table.q,
        zeta: params.zeta.clone(),
        kind: SeriesKind::Euler {
            t: params.t.clone(),
        },
        partial_sums: sums,
    })
}

/// The `t = -1`, `ζ = -1` case written out directly:
/// `ξ_{q;K} = d_q + Σ_{m=2}^{K} 2^{-m} Σ_{k=2}^{m} C(m-1,k-1) (-1)^k c_k`.
pub fn euler_minus_one<S: Scalar>(
    table: &CoefficientTable<S>,
    k_max: usize,
    ctx: &S::Context,
) -> Result<SeriesEvaluation<S>> {
    if k_max > table.order {
        return Err(Error::OrderTooLarge {
            got: k_max,
            available: table.order,
        });
    }
    let binom = pascal(k_max);
    let mut acc = table.c[0].clone();
    let mut sums = vec![acc.clone(), acc.clone()];
    let half = S::one(ctx) / &S::from_i64(2, ctx);
    let mut scale = half.clone();
    for m in 2..=k_max {
        scale *= &half;
        let mut inner = S::zero(ctx);
        for k in 2..=m {
            let term = S::from_ratio(&RBig::from(binom[m - 1][k - 1].clone()), ctx) * &table.c[k];
            if k % 2 == 0 {
                inner += &term;
            } else {
                inner -= &term;
            }
        }
        acc += &(inner * &scale);
        sums.push(acc.clone());
    }
    sums.truncate(k_max + 1);
    Ok(SeriesEvaluation {
        q: table.q,
        zeta: S::from_i64(-1, ctx),
        kind: SeriesKind::Euler {
            t: S::from_i64(-1, ctx),
        },
        partial_sums: sums,
    })
}

/// `d_q + (11 c_2 - 5 c_3 + c_4) / 16`, the four-term Euler estimate at
/// `t = ζ = -1`, from the explicit neighbour sums.
pub fn euler_k4_estimate(g: &Graph, q: usize) -> Result<RBig> {
    let degrees = check_expansion_node(g, q, 4)?;
    let (c2, c3, c4) = explicit_c2_c3_c4(g, q)?;
    let sum = RBig::from(11) * c2 - RBig::from(5) * c3 + c4;
    Ok(&degrees[q] + sum / RBig::from(16))
}

/// Accuracy of a series against a reference spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    /// Index (0-based, descending order) of the matched eigenvalue.
    pub matched_index: usize,
    pub matched_mu: f64,
    /// `α(K) = log10 |ξ_{q;K} - μ|`, floored at −300, for `K = 0..=K_max`.
    pub alpha: Vec<f64>,
    pub k_check: usize,
    pub converged: bool,
}

/// Default accuracy threshold.
pub const DEFAULT_ALPHA_THRESHOLD: f64 = -4.0;
/// Default order at which convergence is judged.
pub const DEFAULT_K_CHECK: usize = 30;

/// Matches the eigenvalue nearest to `ξ_{q;K_check}` (ties go to the larger
/// eigenvalue) and classifies the series as converged iff
/// `α(K_check) <= alpha_threshold`. `eigenvalues` must be sorted descending.
pub fn convergence_classify<S: Scalar + PartialOrd>(
    series: &SeriesEvaluation<S>,
    eigenvalues: &[S],
    alpha_threshold: f64,
    k_check: usize,
) -> Result<ConvergenceReport> {
    if eigenvalues.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    if k_check > series.max_order() {
        return Err(Error::OrderTooLarge {
            got: k_check,
            available: series.max_order(),
        });
    }
    let target = series.at(k_check);
    let dist = |mu: &S| {
        let d = target.clone() - mu;
        let zero = d.clone() - &d;
        if d < zero {
            -d
        } else {
            d
        }
    };
    let mut best = 0;
    let mut best_dist = dist(&eigenvalues[0]);
    for (i, mu) in eigenvalues.iter().enumerate().skip(1) {
        let d = dist(mu);
        if d < best_dist {
            best = i;
            best_dist = d;
        }
    }
    let mu = &eigenvalues[best];
    let alpha: Vec<f64> = series
        .partial_sums
        .iter()
        .map(|xi| accuracy_alpha(xi, mu))
        .collect();
    Ok(ConvergenceReport {
        matched_index: best,
        matched_mu: mu.as_f64(),
        converged: alpha[k_check] <= alpha_threshold,
        alpha,
        k_check,
    })
}

#[cfg(test)]
mod tests;
