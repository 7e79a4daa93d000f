//! Dense symmetric eigensolver (cyclic Jacobi), accuracy metric and classical
//! Laplacian spectral bounds.

use alloc::vec::Vec;

use dashu_ratio::RBig;

use crate::error::{Error, Result};
use crate::graph::{DenseMatrix, Graph};
use crate::scalar::{Real, Scalar};

/// Maximum number of Jacobi sweeps.
pub const MAX_SWEEPS: usize = 50;

/// Eigen-decomposition `M = V diag(λ) Vᵀ` with `λ` sorted descending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<S> {
    pub eigenvalues: Vec<S>,
    /// Column `k` is the unit eigenvector of `eigenvalues[k]`.
    pub eigenvectors: DenseMatrix<S>,
    /// `max_k ‖M v_k - λ_k v_k‖₂`.
    pub residual: S,
}

/// Default convergence tolerance for a binary precision: `1e-12` up to
/// double precision, `10^-⌊0.301 (bits - 28)⌋` above (`1e-30` at 128 bits).
pub fn default_tolerance(bits: usize) -> RBig {
    let exp = if bits <= 53 {
        12
    } else {
        ((bits - 28) as f64 * core::f64::consts::LOG10_2) as usize
    };
    RBig::ONE / RBig::from(dashu_int::IBig::from(10u8).pow(exp))
}

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `tol · max(1, ‖M‖_F)`.
pub fn symmetric_eigen<S: Real>(m: &DenseMatrix<S>, tol: &S, ctx: &S::Context) -> Result<Spectrum<S>> {
    let n = m.n();
    let one = S::one(ctx);
    let norm = m.frobenius_sq(ctx).sqrt();
    let scale = if norm > one { norm } else { one.clone() };
    let threshold = tol.clone() * &scale;
    for i in 0..n {
        for j in 0..i {
            if (m[(i, j)].clone() - &m[(j, i)]).abs() > threshold {
                return Err(Error::NotSymmetric);
            }
        }
    }

    let mut a = m.clone();
    let mut v = DenseMatrix::identity(n, ctx);
    let two = S::from_i64(2, ctx);
    let hundred = S::from_i64(100, ctx);
    let mut converged = false;
    for sweep in 0..=MAX_SWEEPS {
        let mut off = S::zero(ctx);
        for i in 0..n {
            for j in 0..i {
                off += &(a[(i, j)].clone() * &a[(i, j)]);
            }
        }
        if (off * &two).sqrt() < threshold {
            converged = true;
            break;
        }
        if sweep == MAX_SWEEPS {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)].clone();
                if apq.is_zero() {
                    continue;
                }
                let g = hundred.clone() * &apq.abs();
                if sweep >= 4 {
                    let app = a[(p, p)].clone();
                    let aqq = a[(q, q)].clone();
                    if app.clone() + &g == app && aqq.clone() + &g == aqq {
                        a[(p, q)] = S::zero(ctx);
                        a[(q, p)] = S::zero(ctx);
                        continue;
                    }
                }
                let theta = (a[(q, q)].clone() - &a[(p, p)]) / &(two.clone() * &apq);
                let root = (theta.clone() * &theta + &one).sqrt();
                let mut t = one.clone() / &(theta.abs() + &root);
                if theta.is_negative() {
                    t = -t;
                }
                let c = one.clone() / &(t.clone() * &t + &one).sqrt();
                let s = t.clone() * &c;
                rotate(&mut a, &mut v, p, q, &c, &s);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .partial_cmp(&a[(i, i)])
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    let eigenvalues: Vec<S> = order.iter().map(|&i| a[(i, i)].clone()).collect();
    let mut vectors = DenseMatrix::filled(n, S::zero(ctx));
    for (col, &src) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, col)] = v[(r, src)].clone();
        }
    }
    let mut residual = S::zero(ctx);
    for (k, lambda) in eigenvalues.iter().enumerate() {
        let x = vectors.column(k);
        let mx = m.mul_vec(&x, ctx);
        let mut sq = S::zero(ctx);
        for (y, xi) in mx.iter().zip(&x) {
            let e = y.clone() - &(lambda.clone() * xi);
            sq += &(e.clone() * &e);
        }
        let r = sq.sqrt();
        if r > residual {
            residual = r;
        }
    }
    Ok(Spectrum {
        eigenvalues,
        eigenvectors: vectors,
        residual,
    })
}

fn rotate<S: Scalar>(a: &mut DenseMatrix<S>, v: &mut DenseMatrix<S>, p: usize, q: usize, c: &S, s: &S) {
    let n = a.n();
    for k in 0..n {
        let akp = a[(k, p)].clone();
        let akq = a[(k, q)].clone();
        a[(k, p)] = c.clone() * &akp - &(s.clone() * &akq);
        a[(k, q)] = s.clone() * &akp + &(c.clone() * &akq);
    }
    for k in 0..n {
        let apk = a[(p, k)].clone();
        let aqk = a[(q, k)].clone();
        a[(p, k)] = c.clone() * &apk - &(s.clone() * &aqk);
        a[(q, k)] = s.clone() * &apk + &(c.clone() * &aqk);
    }
    a[(p, q)] = a[(p, q)].clone() - &a[(p, q)];
    a[(q, p)] = a[(p, q)].clone();
    for k in 0..n {
        let vkp = v[(k, p)].clone();
        let vkq = v[(k, q)].clone();
        v[(k, p)] = c.clone() * &vkp - &(s.clone() * &vkq);
        v[(k, q)] = s.clone() * &vkp + &(c.clone() * &vkq);
    }
}

/// Laplacian spectrum in `f64`, descending.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum<f64>> {
    symmetric_eigen(&g.laplacian::<f64>(&()), &1e-12, &())
}

/// Floor of [`accuracy_alpha`] for exact hits.
pub const ALPHA_FLOOR: f64 = -300.0;

/// `α = log10 |xi - mu|`, floored at [`ALPHA_FLOOR`].
pub fn accuracy_alpha<S: Scalar>(xi: &S, mu: &S) -> f64 {
    let diff = libm::fabs((xi.clone() - mu).as_f64());
    if diff == 0.0 || !diff.is_finite() {
        return ALPHA_FLOOR;
    }
    libm::log10(diff).max(ALPHA_FLOOR)
}

/// Classical bounds evaluated against a computed Laplacian spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralBoundsReport {
    /// `(k, μ_k >= d_(k) - k + 2)` for `k = 1..=N`, skipping the `k` for which
    /// the graph is `K_k` plus isolated nodes. Unweighted graphs only.
    pub brouwer_haemers: Option<Vec<(usize, bool)>>,
    /// `min(N, max over links of d_u + d_v)`; unweighted graphs only.
    pub largest_upper_bound: Option<f64>,
    pub largest_upper_ok: Option<bool>,
    /// For every node, some eigenvalue lies in `[0, 2 d_q]`.
    pub gerschgorin_ok: bool,
}

impl SpectralBoundsReport {
    pub fn all_ok(&self) -> bool {
        self.gerschgorin_ok
            && self.largest_upper_ok.unwrap_or(true)
            && self
                .brouwer_haemers
                .as_ref()
                .is_none_or(|v| v.iter().all(|(_, ok)| *ok))
    }
}

/// Evaluates the bound families against the `f64` Laplacian spectrum with a
/// relative slack of `1e-9`.
pub fn spectral_bounds(g: &Graph) -> Result<SpectralBoundsReport> {
    let spectrum = laplacian_spectrum(g)?;
    let mu = &spectrum.eigenvalues;
    let n = g.n();
    let degrees: Vec<f64> = g.degrees().iter().map(|d| d.as_f64()).collect();
    let slack = |x: f64| 1e-9 * x.abs().max(1.0);
    let le = |a: f64, b: f64| a <= b + slack(b);

    let gerschgorin_ok = degrees
        .iter()
        .all(|&d| mu.iter().any(|&m| le(0.0, m) && le(m, 2.0 * d)));

    if g.is_weighted() {
        return Ok(SpectralBoundsReport {
            brouwer_haemers: None,
            largest_upper_bound: None,
            largest_upper_ok: None,
            gerschgorin_ok,
        });
    }

    let mut sorted = degrees.clone();
    sorted.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
    let bh = (1..=n)
        .filter(|&k| !is_clique_plus_isolated(&sorted, k))
        .map(|k| (k, le(sorted[k - 1] - k as f64 + 2.0, mu[k - 1])))
        .collect();

    let link_max = g
        .edges()
        .iter()
        .map(|(u, v, _)| degrees[*u] + degrees[*v])
        .fold(0.0, f64::max);
    let bound = link_max.min(n as f64);
    let top = mu.first().copied().unwrap_or(0.0);
    Ok(SpectralBoundsReport {
        brouwer_haemers: Some(bh),
        largest_upper_bound: Some(bound),
        largest_upper_ok: Some(le(top, bound)),
        gerschgorin_ok,
    })
}

// Degree sequence (descending) of K_k plus isolated nodes.
fn is_clique_plus_isolated(sorted: &[f64], k: usize) -> bool {
    sorted
        .iter()
        .enumerate()
        .all(|(i, &d)| if i < k { d == (k - 1) as f64 } else { d == 0.0 })
}

#[cfg(test)]
mod tests;
