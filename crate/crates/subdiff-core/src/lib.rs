//! Numerical core for the space-time nonlocal diffusion equation
//! `d_t^a u = phi(Delta) u + f` on the torus, where `phi` is a Bernstein
//! function acting spectrally through the symbol `-phi(|xi|^2)`.
//!
//! The crate provides:
//!
//! - a catalog of Bernstein functions with derivatives, inverses and
//!   scaling diagnostics ([`bernstein`]);
//! - Mittag-Leffler and Wright-type special functions on the ranges the
//!   equation needs, with extended-precision series, asymptotic and
//!   contour branches ([`specfun`]);
//! - the subordinate-Brownian-motion transition density and the
//!   fundamental-solution kernels by two independent routes, plus
//!   numerical certification of their envelope bounds ([`kernel`]);
//! - discrete Riemann-Liouville / Caputo calculus ([`fraccalc`]);
//! - a per-mode spectral Duhamel solver on periodic grids ([`solver`]);
//! - Littlewood-Paley filter banks and the weighted Besov / Bessel /
//!   mixed-norm machinery with ratio harnesses ([`norms`]);
//! - an exact Monte Carlo sampler of subordinate Brownian motion delayed
//!   by an inverse stable subordinator ([`montecarlo`]).
//!
//! Everything here is pure computation over `f64`: no IO, no threads, no
//! global state. The crate is `no_std` (with `alloc`), so the scalar math
//! goes through [`libm`]. File formats, the CLI and parallel sweeps live
//! in the companion `subdiff-lab` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bernstein;
pub mod dd;
pub mod error;
pub mod fft;
pub mod fraccalc;
pub mod grid;
pub mod jet;
pub mod kernel;
pub mod math;
pub mod montecarlo;
pub mod norms;
pub mod quad;
pub mod radial;
pub mod report;
pub mod rng;
pub mod solver;
pub mod specfun;

pub use bernstein::{BernsteinSpec, PhiKind, ScalingReport};
pub use error::CoreError;
pub use report::BoundReport;

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, CoreError>;
