//! The eigenvalue series of an almost-regular graph summed as a contour
//! integral around the origin:
//!
//! `ξ(ζ) = d + ζ/(2πr) ∫_0^{2π} e^{-iθ} log(1 - ζ e^{-iθ} / (x r f(r e^{iθ}))) dθ`
//!
//! where `f(z) = Σ_m (A^m)_ss z^m = Σ_k (v_k)_s² / (1 - λ_k z)` is the
//! closed-walk generating function of the special node. Evaluated in `f64`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::AlmostRegularGraph;
use crate::eigen::symmetric_eigen;
use crate::error::{Error, Result};

/// Initial number of quadrature points.
pub const DEFAULT_QUAD_POINTS: usize = 512;
const MAX_POINTS: usize = 1 << 14;
const REL_TOL: f64 = 1e-10;

/// Value of the contour integral and the quadrature used.
#[derive(Clone, Debug, PartialEq)]
pub struct ContourResult {
    pub radius: f64,
    pub points: usize,
    pub branch_ok: bool,
    pub value: f64,
}

struct GeneratingFunction {
    // (weight, eigenvalue) pairs with non-negligible weight
    terms: Vec<(f64, f64)>,
}

impl GeneratingFunction {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|&(w, l)| Complex64::new(w, 0.0) / (Complex64::new(1.0, 0.0) - z * l))
            .sum()
    }

    fn spectral_radius(&self) -> f64 {
        self.terms.iter().map(|&(_, l)| l.abs()).fold(0.0, f64::max)
    }
}

/// Trapezoidal evaluation on a circle of `radius` (default `1/(2λ₁(A))`),
/// doubling `quad_points` until the relative change drops below `1e-10`.
pub fn contour_eigenvalue(
    arg: &AlmostRegularGraph,
    zeta: f64,
    radius: Option<f64>,
    quad_points: usize,
) -> Result<ContourResult> {
    let d = arg.degree() as f64;
    let x = arg.x as f64;
    let adjacency = arg.graph.adjacency::<f64>(&());
    let spectrum = symmetric_eigen(&adjacency, &1e-13, &())?;
    let s = arg.special;
    let terms: Vec<(f64, f64)> = spectrum
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, &l)| {
            let v = spectrum.eigenvectors[(s, k)];
            (v * v, l)
        })
        .filter(|&(w, _)| w > 1e-14)
        .collect();
    let f = GeneratingFunction { terms };
    let rho = f.spectral_radius();
    let lambda1 = spectrum.eigenvalues.first().copied().unwrap_or(0.0);
    let radius = radius.unwrap_or(if lambda1 > 0.0 { 0.5 / lambda1 } else { 1.0 });
    if radius.is_nan() || radius <= 0.0 || radius * rho >= 1.0 {
        return Err(Error::PoleInsideContour);
    }
    if zeta == 0.0 {
        return Ok(ContourResult {
            radius,
            points: 0,
            branch_ok: true,
            value: d,
        });
    }

    let mut points = quad_points.max(8).next_power_of_two();
    let mut previous: Option<f64> = None;
    loop {
        let value = d + trapezoid(&f, zeta, x, radius, points)?;
        if let Some(prev) = previous {
            if (value - prev).abs() <= REL_TOL * value.abs().max(1.0) {
                return Ok(ContourResult {
                    radius,
                    points,
                    branch_ok: true,
                    value,
                });
            }
        }
        if points >= MAX_POINTS {
            return Err(Error::NoConvergence(points));
        }
        previous = Some(value);
        points *= 2;
    }
}

fn trapezoid(f: &GeneratingFunction, zeta: f64, x: f64, r: f64, points: usize) -> Result<f64> {
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut winding = 0.0;
    let mut last_f: Option<Complex64> = None;
    let mut first_f = one;
    for j in 0..points {
        let theta = 2.0 * PI * j as f64 / points as f64;
        let e = Complex64::from_polar(1.0, theta);
        let fz = f.eval(e * r);
        match last_f {
            Some(prev) => winding += (fz / prev).arg(),
            None => first_f = fz,
        }
        last_f = Some(fz);
        let y = e.conj() * zeta / (fz * (x * r));
        if y.norm() >= 1.0 {
            return Err(Error::BranchViolation);
        }
        sum += e.conj() * (one - y).ln();
    }
    if let Some(prev) = last_f {
        winding += (first_f / prev).arg();
    }
    if libm::round(winding / (2.0 * PI)) != 0.0 {
        return Err(Error::ZeroInsideContour);
    }
    // (ζ/(2πr)) · (2π/N) Σ = ζ/(r N) Σ
    Ok((sum * (zeta / (r * points as f64))).re)
}
