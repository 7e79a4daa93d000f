//! Laplacian eigenvalues of undirected graphs from the Taylor series of the
//! eigenvalues of `Δ + ζA` around a unique degree, plus Euler summation of
//! those series and a dense Jacobi eigensolver used as ground truth.
//!
//! Node indices are 0-based throughout the library. Edge weights are exact
//! rationals, so every coefficient can be computed without rounding.
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod almost_regular;
pub mod eigen;
pub mod error;
pub mod euler;
pub mod generate;
pub mod graph;
pub mod perturb;
pub mod scalar;

pub use dashu_int::{IBig, UBig};
pub use dashu_ratio::RBig;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, DenseMatrix, Graph, WalkCounts};
pub use scalar::{MpFloat, NumberDomain, Real, Scalar};
