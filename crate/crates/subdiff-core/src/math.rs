//! Scalar math shims.
//!
//! The crate is `no_std`, so every transcendental goes through [`libm`].
//! Keeping the calls behind one module gives a single place to swap the
//! backend and makes the hot paths easy to audit.

pub use core::f64::consts::{LN_2, PI};

#[inline(always)]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline(always)]
pub fn expm1(x: f64) -> f64 {
    libm::expm1(x)
}

#[inline(always)]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline(always)]
pub fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline(always)]
pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}

#[inline(always)]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline(always)]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline(always)]
pub fn cbrt(x: f64) -> f64 {
    libm::cbrt(x)
}

#[inline(always)]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline(always)]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline(always)]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline(always)]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline(always)]
pub fn fma(a: f64, b: f64, c: f64) -> f64 {
    libm::fma(a, b, c)
}

#[inline(always)]
pub fn ldexp(x: f64, n: i32) -> f64 {
    libm::ldexp(x, n)
}

#[inline(always)]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline(always)]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}

#[inline(always)]
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

#[inline(always)]
pub fn tgamma(x: f64) -> f64 {
    libm::tgamma(x)
}

#[inline(always)]
pub fn bessel_j0(x: f64) -> f64 {
    libm::j0(x)
}

#[inline(always)]
pub fn bessel_j1(x: f64) -> f64 {
    libm::j1(x)
}

/// Surface area of the unit sphere in `R^d`: `sigma_d = 2 pi^{d/2} / Gamma(d/2)`.
pub fn sphere_area(d: usize) -> f64 {
    match d {
        1 => 2.0,
        2 => 2.0 * PI,
        3 => 4.0 * PI,
        4 => 2.0 * PI * PI,
        5 => 8.0 * PI * PI / 3.0,
        _ => 2.0 * powf(PI, d as f64 / 2.0) / tgamma(d as f64 / 2.0),
    }
}

/// `n` log-spaced points on `[a, b]`, inclusive of both ends.
pub fn logspace(a: f64, b: f64, n: usize) -> alloc::vec::Vec<f64> {
    debug_assert!(a > 0.0 && b > a && n >= 2);
    let (la, lb) = (ln(a), ln(b));
    (0..n)
        .map(|i| exp(la + (lb - la) * i as f64 / (n - 1) as f64))
        .collect()
}

/// `n` uniform points on `[a, b]`, inclusive of both ends.
pub fn linspace(a: f64, b: f64, n: usize) -> alloc::vec::Vec<f64> {
    debug_assert!(n >= 2);
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}
