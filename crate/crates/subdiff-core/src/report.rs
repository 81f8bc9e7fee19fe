//! Report types produced by the bound-certification sweeps.

use alloc::string::String;

/// Empirical certificate for an inequality of the form
/// `quantity <= N * envelope`: the sup of the ratio over a grid, where it
/// was attained, and how much the sup moves under a 2x grid refinement.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub sup_ratio: f64,
    /// `(t, r)` at which the sup was attained (NaN when a coordinate is unused).
    pub argmax: (f64, f64),
    /// `|sup_refined - sup| / sup`.
    pub refinement_drift: f64,
    /// Finite sup and drift below 5% (10% for grid extensions).
    pub pass: bool,
    pub grid: String,
}

/// Result of a sampled ratio harness (sup over random inputs plus a
/// stability measurement under doubling).
#[derive(Clone, Debug)]
pub struct RatioReport {
    pub sup: f64,
    /// Sup recomputed with the doubled sample set / horizon.
    pub sup_refined: f64,
    pub samples: usize,
    pub pass: bool,
    pub detail: String,
}
