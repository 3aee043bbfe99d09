//! Random reversible Markov matrices built from sparse Erdős–Rényi graphs.
//!
//! The crate samples graphs `G(n, p/n)`, forms the row-normalized kernels
//! `K_G = D⁻¹A` and `M = D⁻¹(cJ + A)` for a regularization constant `c`,
//! and provides three mutually cross-checking routes to the moments of the
//! limiting empirical spectral distribution:
//!
//! * an exact combinatorial formula over canonical closed tree paths
//!   ([`moments::beta_formula`]),
//! * Monte Carlo over killed random walks on Galton-Watson trees
//!   ([`moments::beta_gw_mc`]),
//! * finite-`n` trace moments via walk dynamic programming
//!   ([`moments::beta_empirical`]).
//!
//! The crate is `no_std` + `alloc`; enable the `std` feature to use the
//! platform float intrinsics instead of `libm`. IO, file formats, and the
//! experiment CLI live in the companion `spectral-markov` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod dense;
pub mod error;
mod float;
pub mod graph;
pub mod markov;
pub mod moments;
pub mod rng;
pub mod spectra;
pub mod stats;
pub mod walk;

pub use error::{Error, Result};

/// `τ_c = 1/√(1+c)`, the essential supremum of the limiting ESD.
pub fn tau(c: f64) -> f64 {
    1.0 / float::sqrt(1.0 + c)
}
