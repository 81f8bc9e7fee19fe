//! Bernstein function catalog.
//!
//! A Bernstein function `phi` with `phi(0+) = 0` is the Laplace exponent
//! of a subordinator; it enters the equation only through the spectral
//! symbol `-phi(|xi|^2)`. The catalog covers the five closed-form families
//! used throughout, plus a user callable. Derivatives come from Taylor
//! jets (exact for the catalog), the inverse from monotone bracketing,
//! and the scaling hypothesis `c (R/r)^{d0} <= phi(R)/phi(r) <= R/r` is
//! estimated empirically since every kernel bound depends on it.

use crate::error::{capability, domain, numeric};
use crate::jet::Jet;
use crate::math;
use crate::quad::PanelRule;
use crate::report::BoundReport;
use crate::Result;
use alloc::format;
use alloc::vec::Vec;

/// The closed-form catalog, plus a user-provided callable.
#[derive(Clone, Copy, Debug)]
pub enum PhiKind {
    /// `lambda^beta`, `0 < beta <= 1`.
    Stable { beta: f64 },
    /// `lambda^b1 + lambda^b2`, both in `(0, 1]`.
    SumStable { beta1: f64, beta2: f64 },
    /// `lambda^beta (ln(1+lambda))^gamma`, `beta in (0,1)`, `gamma in (-beta, 1-beta)`.
    LogStable { beta: f64, gamma: f64 },
    /// `(lambda + m^{1/beta})^beta - m`, `beta in (0,1)`, `m > 0`.
    Relativistic { beta: f64, m: f64 },
    /// `lambda / ln(1 + lambda^{beta/2})`, `beta in (0, 2)`.
    ConjGeometric { beta: f64 },
    /// Arbitrary callable; derivatives fall back to log-space differences.
    Custom { f: fn(f64) -> f64 },
}

/// A Bernstein function `b*lambda + phi_kind(lambda)`.
#[derive(Clone, Copy, Debug)]
pub struct BernsteinSpec {
    pub kind: PhiKind,
    pub drift: f64,
}

/// Empirical scaling diagnosis for the hypothesis
/// `c (R/r)^{d0} <= phi(R)/phi(r)` on all ordered pairs of a log grid.
#[derive(Clone, Debug)]
pub struct ScalingReport {
    /// Infimum of pairwise log-slopes, clipped to `(0, 1]`.
    pub delta0_hat: f64,
    /// Largest constant making the lower bound hold on the grid.
    pub c_hat: f64,
    /// Grid span used, `(lo, hi, n)`.
    pub grid: (f64, f64, usize),
    /// Worst violation of the bounds with the reported constants (0 when passing).
    pub max_violation: f64,
    /// Worst violation of the concavity upper bound `phi(R)/phi(r) <= R/r`.
    pub upper_violation: f64,
    /// Whether the hypothesis holds with the estimated constants.
    pub passes: bool,
}

impl BernsteinSpec {
    pub fn new(kind: PhiKind, drift: f64) -> Result<BernsteinSpec> {
        if !(drift >= 0.0) {
            return Err(domain("drift must be >= 0"));
        }
        match kind {
            PhiKind::Stable { beta } => {
                if !(beta > 0.0 && beta <= 1.0) {
                    return Err(domain("stable: beta must be in (0, 1]"));
                }
            }
            PhiKind::SumStable { beta1, beta2 } => {
                if !(beta1 > 0.0 && beta1 <= 1.0 && beta2 > 0.0 && beta2 <= 1.0) {
                    return Err(domain("sum-of-stable: betas must be in (0, 1]"));
                }
            }
            PhiKind::LogStable { beta, gamma } => {
                if !(beta > 0.0 && beta < 1.0) {
                    return Err(domain("log-corrected: beta must be in (0, 1)"));
                }
                if !(gamma > -beta && gamma < 1.0 - beta) {
                    return Err(domain("log-corrected: gamma must be in (-beta, 1-beta)"));
                }
            }
            PhiKind::Relativistic { beta, m } => {
                if !(beta > 0.0 && beta < 1.0) {
                    return Err(domain("relativistic: beta must be in (0, 1)"));
                }
                if !(m > 0.0) {
                    return Err(domain("relativistic: m must be > 0"));
                }
            }
            PhiKind::ConjGeometric { beta } => {
                if !(beta > 0.0 && beta < 2.0) {
                    return Err(domain("conjugate-geometric: beta must be in (0, 2)"));
                }
            }
            PhiKind::Custom { .. } => {}
        }
        Ok(BernsteinSpec { kind, drift })
    }

    pub fn stable(beta: f64) -> Result<BernsteinSpec> {
        Self::new(PhiKind::Stable { beta }, 0.0)
    }

    /// Raw evaluation without the positivity check; hot paths only.
    #[inline]
    pub fn phi(&self, lambda: f64) -> f64 {
        debug_assert!(lambda > 0.0);
        let base = match self.kind {
            PhiKind::Stable { beta } => math::powf(lambda, beta),
            PhiKind::SumStable { beta1, beta2 } => {
                math::powf(lambda, beta1) + math::powf(lambda, beta2)
            }
            PhiKind::LogStable { beta, gamma } => {
                math::powf(lambda, beta) * math::powf(math::ln_1p(lambda), gamma)
            }
            PhiKind::Relativistic { beta, m } => {
                let shift = math::powf(m, 1.0 / beta);
                // expm1-based form keeps precision as lambda -> 0
                -m * math::expm1(beta * math::ln_1p(-lambda / (lambda + shift)))
                    * math::powf((lambda + shift) / shift, beta)
            }
            PhiKind::ConjGeometric { beta } => {
                lambda / math::ln_1p(math::powf(lambda, 0.5 * beta))
            }
            PhiKind::Custom { f } => f(lambda),
        };
        self.drift * lambda + base
    }

    /// `phi(lambda)`; `lambda` must be positive.
    pub fn eval(&self, lambda: f64) -> Result<f64> {
        if !(lambda > 0.0) {
            return Err(domain("phi requires lambda > 0"));
        }
        Ok(self.phi(lambda))
    }

    /// Taylor jet of the catalog formulas; `None` for `Custom`.
    fn jet(&self, lambda: f64) -> Option<Jet> {
        let x = Jet::variable(lambda);
        let base = match self.kind {
            PhiKind::Stable { beta } => x.powf(beta),
            PhiKind::SumStable { beta1, beta2 } => x.powf(beta1).add(x.powf(beta2)),
            PhiKind::LogStable { beta, gamma } => x.powf(beta).mul(x.ln_1p().powf(gamma)),
            PhiKind::Relativistic { beta, m } => {
                let shift = math::powf(m, 1.0 / beta);
                x.add_scalar(shift).powf(beta).add_scalar(-m)
            }
            PhiKind::ConjGeometric { beta } => x.div(x.powf(0.5 * beta).ln_1p()),
            PhiKind::Custom { .. } => return None,
        };
        Some(base.add(x.scale(self.drift)))
    }

    /// `phi^(n)(lambda)` for `n >= 1`. Catalog kinds use jets; custom
    /// callables use 4th-order central differences in `ln lambda`
    /// (step `1e-3`), supported up to `n = 2`.
    pub fn eval_deriv(&self, n: usize, lambda: f64) -> Result<f64> {
        if n == 0 {
            return self.eval(lambda);
        }
        if !(lambda > 0.0) {
            return Err(domain("phi derivative requires lambda > 0"));
        }
        if let Some(j) = self.jet(lambda) {
            if n > crate::jet::JET_ORDER {
                return Err(capability("catalog derivatives supported to order 5"));
            }
            return Ok(j.deriv(n));
        }
        // log-space differences: D = d/du at u = ln lambda,
        // d/dlambda = e^{-u} D, (d/dlambda)^2 = e^{-2u} (D^2 - D)
        let h = 1.0e-3;
        let f = |k: f64| self.phi(lambda * math::exp(k * h));
        let d1 = (-f(2.0) + 8.0 * f(1.0) - 8.0 * f(-1.0) + f(-2.0)) / (12.0 * h);
        match n {
            1 => Ok(d1 / lambda),
            2 => {
                let d2 = (-f(2.0) + 16.0 * f(1.0) - 30.0 * f(0.0) + 16.0 * f(-1.0) - f(-2.0))
                    / (12.0 * h * h);
                Ok((d2 - d1) / (lambda * lambda))
            }
            _ => Err(capability(
                "finite-difference derivatives for custom specs supported to order 2",
            )),
        }
    }

    /// Monotone inverse: the `lambda` with `phi(lambda) = y` to relative
    /// tolerance `1e-12`, found by geometric bracketing from `lambda = 1`
    /// and bisection in log space.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        if !(y > 0.0) {
            return Err(domain("inverse requires y > 0"));
        }
        let (mut lo, mut hi) = (1.0f64, 1.0f64);
        let mut grew = 0;
        while self.phi(hi) < y {
            hi *= 16.0;
            grew += 1;
            if grew > 260 {
                return Err(numeric("inverse: failed to bracket from above"));
            }
        }
        grew = 0;
        while self.phi(lo) > y {
            lo /= 16.0;
            grew += 1;
            if grew > 260 {
                return Err(numeric("inverse: failed to bracket from below"));
            }
        }
        let (mut llo, mut lhi) = (math::ln(lo), math::ln(hi));
        let mut lam = math::exp(0.5 * (llo + lhi));
        for _ in 0..200 {
            lam = math::exp(0.5 * (llo + lhi));
            let v = self.phi(lam);
            if v < y {
                llo = math::ln(lam);
            } else {
                lhi = math::ln(lam);
            }
            if lhi - llo < 1.0e-14 {
                break;
            }
        }
        let v = self.phi(lam);
        if (v - y).abs() > 1.0e-12 * y.max(1e-300) {
            // one secant polish
            let lam2 = lam * (1.0 + (y - v) / (lam * self.eval_deriv(1, lam).unwrap_or(1.0)).max(1e-300));
            if lam2 > 0.0 && (self.phi(lam2) - y).abs() < (v - y).abs() {
                return Ok(lam2);
            }
        }
        Ok(lam)
    }

    /// Estimate the scaling exponent and constant on a log grid of `n`
    /// points spanning `[lo, hi]` (default `[1e-6, 1e6]`, 64 points).
    pub fn estimate_scaling(&self, lo: f64, hi: f64, n: usize) -> Result<ScalingReport> {
        if !(lo > 0.0 && hi / lo >= 1.0e8) {
            return Err(domain("scaling grid must span at least 8 decades"));
        }
        let grid = math::logspace(lo, hi, n);
        let vals: Vec<f64> = grid.iter().map(|&r| self.phi(r)).collect();
        let mut delta = f64::INFINITY;
        let mut upper_violation: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let lr = math::ln(grid[j] / grid[i]);
                let lphi = math::ln(vals[j] / vals[i]);
                delta = delta.min(lphi / lr);
                // concavity upper bound phi(R)/phi(r) <= R/r
                upper_violation = upper_violation.max(lphi - lr);
            }
        }
        let passes = delta > 0.0;
        let delta0_hat = delta.clamp(f64::MIN_POSITIVE, 1.0);
        // c_hat = min ratio / (R/r)^delta0 over pairs
        let mut c_hat = f64::INFINITY;
        for i in 0..n {
            for j in (i + 1)..n {
                let lr = math::ln(grid[j] / grid[i]);
                let lphi = math::ln(vals[j] / vals[i]);
                c_hat = c_hat.min(math::exp(lphi - delta0_hat * lr));
            }
        }
        Ok(ScalingReport {
            delta0_hat,
            c_hat,
            grid: (lo, hi, n),
            max_violation: 0.0,
            upper_violation: upper_violation.max(0.0),
            passes,
        })
    }

    /// Default scaling diagnosis: 64 points over `[1e-6, 1e6]`.
    pub fn scaling(&self) -> Result<ScalingReport> {
        self.estimate_scaling(1.0e-6, 1.0e6, 64)
    }

    /// Sup over a log grid of `lambda^n |phi^(n)(lambda)| / phi(lambda)`,
    /// with a finiteness verdict from a grid extended one decade each way.
    pub fn check_deriv_bound(&self, n: usize, lo: f64, hi: f64, pts: usize) -> Result<BoundReport> {
        if n < 1 {
            return Err(domain("derivative bound needs n >= 1"));
        }
        let sweep = |a: f64, b: f64, m: usize| -> Result<(f64, f64)> {
            let mut sup = 0.0;
            let mut arg = a;
            for &lam in &math::logspace(a, b, m) {
                let d = self.eval_deriv(n, lam)?;
                let ratio = math::powf(lam, n as f64) * d.abs() / self.phi(lam);
                if ratio > sup {
                    sup = ratio;
                    arg = lam;
                }
            }
            Ok((sup, arg))
        };
        let (sup, arg) = sweep(lo, hi, pts)?;
        let (sup_ext, _) = sweep(lo / 100.0, hi * 100.0, 2 * pts)?;
        let drift = (sup_ext - sup).abs() / sup.max(1e-300);
        Ok(BoundReport {
            sup_ratio: sup,
            argmax: (f64::NAN, arg),
            refinement_drift: drift,
            pass: sup.is_finite() && drift < 0.10,
            grid: format!("lambda in [{lo:.2e}, {hi:.2e}], {pts} pts; extension x100"),
        })
    }

    /// `(int_{1/lambda}^infty r^{-1} phi(r^{-2}) dr) / phi(lambda^2)`;
    /// finite uniformly in `lambda` when the scaling hypothesis holds.
    pub fn tail_integral_bound(&self, lambda: f64) -> Result<f64> {
        if !(lambda > 0.0) {
            return Err(domain("tail integral requires lambda > 0"));
        }
        // substitute r = e^u: integral of phi(e^{-2u}) du from -ln lambda
        let rule = PanelRule::new(16);
        let u0 = -math::ln(lambda);
        let mut total = 0.0;
        let mut prev = f64::INFINITY;
        let mut u = u0;
        let width = 2.0;
        for k in 0..4000 {
            let p = rule.integrate(u, u + width, &mut |v| self.phi(math::exp(-2.0 * v)));
            total += p;
            u += width;
            if k > 2 && p < 1.0e-12 * total {
                // geometric tail estimate from the decay ratio
                let ratio = (p / prev).min(0.99);
                total += p * ratio / (1.0 - ratio);
                return Ok(total / self.phi(lambda * lambda));
            }
            prev = p;
        }
        Err(numeric("tail integral did not converge"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Vec<BernsteinSpec> {
        alloc::vec![
            BernsteinSpec::stable(0.5).unwrap(),
            BernsteinSpec::new(PhiKind::SumStable { beta1: 0.3, beta2: 0.7 }, 0.0).unwrap(),
            BernsteinSpec::new(PhiKind::LogStable { beta: 0.5, gamma: 0.2 }, 0.0).unwrap(),
            BernsteinSpec::new(PhiKind::Relativistic { beta: 0.5, m: 1.0 }, 0.0).unwrap(),
            BernsteinSpec::new(PhiKind::ConjGeometric { beta: 1.0 }, 0.0).unwrap(),
        ]
    }

    #[test]
    fn eval_closed_forms() {
        let s = BernsteinSpec::stable(0.5).unwrap();
        assert!((s.eval(4.0).unwrap() - 2.0).abs() < 1e-14);
        let s = BernsteinSpec::stable(1.0).unwrap();
        assert!((s.eval(7.0).unwrap() - 7.0).abs() < 1e-14);
        let s = BernsteinSpec::new(PhiKind::Relativistic { beta: 0.5, m: 1.0 }, 0.0).unwrap();
        assert!((s.eval(3.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(s.eval(-1.0).is_err());
        assert!(s.eval(0.0).is_err());
    }

    #[test]
    fn param_validation() {
        assert!(BernsteinSpec::stable(1.5).is_err());
        assert!(BernsteinSpec::new(PhiKind::LogStable { beta: 0.5, gamma: 0.6 }, 0.0).is_err());
        assert!(BernsteinSpec::new(PhiKind::LogStable { beta: 0.5, gamma: -0.6 }, 0.0).is_err());
        assert!(BernsteinSpec::new(PhiKind::ConjGeometric { beta: 2.0 }, 0.0).is_err());
        assert!(BernsteinSpec::new(PhiKind::Stable { beta: 0.5 }, -1.0).is_err());
    }

    #[test]
    fn derivs_stable() {
        let s = BernsteinSpec::stable(0.5).unwrap();
        assert!((s.eval_deriv(1, 1.0).unwrap() - 0.5).abs() < 1e-13);
        assert!((s.eval_deriv(2, 1.0).unwrap() + 0.25).abs() < 1e-13);
        let s = BernsteinSpec::new(PhiKind::SumStable { beta1: 0.3, beta2: 0.7 }, 0.0).unwrap();
        assert!((s.eval_deriv(1, 1.0).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn custom_fd_derivatives() {
        let s = BernsteinSpec::new(
            PhiKind::Custom { f: |l| math::sqrt(l) },
            0.0,
        )
        .unwrap();
        assert!((s.eval_deriv(1, 1.0).unwrap() - 0.5).abs() < 1e-9);
        assert!((s.eval_deriv(2, 1.0).unwrap() + 0.25).abs() < 1e-6);
        assert!(s.eval_deriv(3, 1.0).is_err());
    }

    #[test]
    fn sign_alternation_on_catalog() {
        for spec in catalog() {
            for &lam in &math::logspace(1e-5, 1e5, 21) {
                for n in 1..=4usize {
                    let d = spec.eval_deriv(n, lam).unwrap();
                    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                    assert!(
                        sign * d >= -1e-12 * d.abs().max(1e-300),
                        "kind={:?} n={n} lam={lam} d={d}",
                        spec.kind
                    );
                }
            }
        }
    }

    #[test]
    fn monotone_and_roundtrip() {
        for spec in catalog() {
            let grid = math::logspace(1e-4, 1e4, 33);
            let mut prev = 0.0;
            for &lam in &grid {
                let v = spec.phi(lam);
                assert!(v > prev, "monotone failed {:?} at {lam}", spec.kind);
                prev = v;
                let back = spec.inverse(v).unwrap();
                assert!(
                    (back - lam).abs() < 1e-10 * lam,
                    "roundtrip {:?}: {lam} -> {back}",
                    spec.kind
                );
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let s = BernsteinSpec::stable(0.5).unwrap();
        assert!((s.inverse(2.0).unwrap() - 4.0).abs() < 1e-11);
        let s = BernsteinSpec::stable(1.0).unwrap();
        assert!((s.inverse(9.0).unwrap() - 9.0).abs() < 1e-11);
        let s = BernsteinSpec::new(PhiKind::ConjGeometric { beta: 1.0 }, 0.0).unwrap();
        let y = s.eval(5.0).unwrap();
        assert!((s.inverse(y).unwrap() - 5.0).abs() < 5e-12 * 5.0);
    }

    #[test]
    fn scaling_estimates() {
        let s = BernsteinSpec::stable(0.5).unwrap();
        let r = s.scaling().unwrap();
        assert!((r.delta0_hat - 0.5).abs() < 1e-10);
        assert!(r.passes && r.upper_violation < 1e-12);

        let s = BernsteinSpec::new(PhiKind::ConjGeometric { beta: 1.0 }, 0.0).unwrap();
        let r = s.scaling().unwrap();
        assert!((r.delta0_hat - 0.5).abs() < 0.02, "conj-geom delta {}", r.delta0_hat);

        let s = BernsteinSpec::new(PhiKind::SumStable { beta1: 0.3, beta2: 0.7 }, 0.0).unwrap();
        let r = s.scaling().unwrap();
        assert!((r.delta0_hat - 0.3).abs() < 0.02, "sum delta {}", r.delta0_hat);
    }

    #[test]
    fn sandwich_on_catalog() {
        for spec in catalog() {
            let rep = spec.scaling().unwrap();
            let grid = math::logspace(1e-6, 1e6, 32);
            for i in 0..grid.len() {
                for j in (i + 1)..grid.len() {
                    let (r, rr) = (grid[i], grid[j]);
                    let ratio = spec.phi(rr) / spec.phi(r);
                    let lower = rep.c_hat * math::powf(rr / r, rep.delta0_hat);
                    assert!(ratio >= lower * (1.0 - 1e-10), "{:?}", spec.kind);
                    assert!(ratio <= (rr / r) * (1.0 + 1e-10), "{:?}", spec.kind);
                }
            }
        }
    }

    #[test]
    fn deriv_bound_examples() {
        let s = BernsteinSpec::stable(0.7).unwrap();
        let r = s.check_deriv_bound(1, 1e-6, 1e6, 64).unwrap();
        assert!((r.sup_ratio - 0.7).abs() < 1e-10 && r.pass);
        let r = s.check_deriv_bound(2, 1e-6, 1e6, 64).unwrap();
        assert!((r.sup_ratio - 0.7 * 0.3).abs() < 1e-10 && r.pass);
        let s = BernsteinSpec::new(PhiKind::Relativistic { beta: 0.5, m: 1.0 }, 0.0).unwrap();
        let r = s.check_deriv_bound(1, 1e-6, 1e6, 64).unwrap();
        assert!(r.pass && r.sup_ratio.is_finite());
    }

    #[test]
    fn tail_integral_examples() {
        let s = BernsteinSpec::stable(0.5).unwrap();
        for &lam in &[0.01, 1.0, 100.0] {
            let v = s.tail_integral_bound(lam).unwrap();
            assert!((v - 1.0).abs() < 1e-6, "beta=0.5 lam={lam} v={v}");
        }
        let s = BernsteinSpec::stable(0.9).unwrap();
        let v = s.tail_integral_bound(1.0).unwrap();
        assert!((v - 1.0 / 1.8).abs() < 1e-6, "v={v}");

        let s = BernsteinSpec::new(PhiKind::ConjGeometric { beta: 1.0 }, 0.0).unwrap();
        let vals: Vec<f64> = [1e-3, 1.0, 1e3]
            .iter()
            .map(|&l| s.tail_integral_bound(l).unwrap())
            .collect();
        let (mn, mx) = (
            vals.iter().cloned().fold(f64::INFINITY, f64::min),
            vals.iter().cloned().fold(0.0, f64::max),
        );
        assert!(mx / mn < 10.0, "ratios {vals:?}");
    }
}
