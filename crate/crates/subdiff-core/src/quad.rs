//! Quadrature primitives: Gauss-Legendre panels, an adaptive
//! Gauss-Kronrod rule, and Wynn's epsilon algorithm for accelerating the
//! alternating panel sums of oscillatory transforms.

use crate::error::numeric;
use crate::math;
use crate::Result;
use alloc::vec;
use alloc::vec::Vec;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, computed by Newton
/// iteration on the Legendre recurrence. `n <= 64`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    debug_assert!((2..=64).contains(&n));
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess
        let mut z = math::cos(math::PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j as f64 + 1.0) * z * p1 - j as f64 * p2) / (j as f64 + 1.0);
            }
            pp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Reusable fixed-order panel rule.
pub struct PanelRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl PanelRule {
    pub fn new(n: usize) -> PanelRule {
        let (nodes, weights) = gauss_legendre(n);
        PanelRule { nodes, weights }
    }

    /// Integrate `f` over `[a, b]` with one panel.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, f: &mut F) -> f64 {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(c + h * x);
        }
        s * h
    }

    /// Node values of `f` on the panel, for sign inspection.
    pub fn sample<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, f: &mut F) -> Vec<(f64, f64)> {
        let c = 0.5 * (a + b);
        let h = 0.5 * (b - a);
        self.nodes.iter().map(|x| (c + h * x, f(c + h * x))).collect()
    }
}

// 15-point Kronrod extension of 7-point Gauss (QUADPACK G7K15 constants).
const XGK: [f64; 15] = [
    -0.991455371120813,
    -0.949107912342759,
    -0.864864423359769,
    -0.741531185599394,
    -0.586087235467691,
    -0.405845151377397,
    -0.207784955007898,
    0.0,
    0.207784955007898,
    0.405845151377397,
    0.586087235467691,
    0.741531185599394,
    0.864864423359769,
    0.949107912342759,
    0.991455371120813,
];
const WGK: [f64; 15] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
    0.204432940075298,
    0.190350578064785,
    0.169004726639267,
    0.140653259715525,
    0.104790010322250,
    0.063092092629979,
    0.022935322010529,
];
const WG: [f64; 7] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
    0.381830050505119,
    0.279705391489277,
    0.129484966168870,
];

/// One G7K15 application: returns (kronrod value, error estimate).
pub fn qk15<F: FnMut(f64) -> f64>(a: f64, b: f64, f: &mut F) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut fk = [0.0; 15];
    for (i, x) in XGK.iter().enumerate() {
        fk[i] = f(c + h * x);
    }
    let mut kron = 0.0;
    let mut resabs = 0.0;
    for i in 0..15 {
        kron += WGK[i] * fk[i];
        resabs += WGK[i] * fk[i].abs();
    }
    let mut gauss = 0.0;
    for i in 0..7 {
        gauss += WG[i] * fk[2 * i + 1];
    }
    let kron = kron * h;
    let gauss = gauss * h;
    let resabs = resabs * h.abs();
    let mut err = (kron - gauss).abs();
    if resabs > 0.0 && err > 0.0 {
        err = resabs * math::powf(200.0 * err / resabs, 1.5).min(1.0);
    }
    (kron, err)
}

/// Adaptive Gauss-Kronrod on `[a, b]` to relative tolerance `rtol`.
pub fn adaptive_gk<F: FnMut(f64) -> f64>(a: f64, b: f64, rtol: f64, f: &mut F) -> Result<f64> {
    let (v0, e0) = qk15(a, b, f);
    let mut stack = vec![(a, b, v0, e0)];
    let mut total = v0;
    let mut err = e0;
    let mut splits = 0usize;
    while err > rtol * total.abs().max(1e-300) {
        // split the worst interval
        let (idx, _) = stack
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .unwrap();
        let (ia, ib, iv, ie) = stack.swap_remove(idx);
        let m = 0.5 * (ia + ib);
        let (v1, e1) = qk15(ia, m, f);
        let (v2, e2) = qk15(m, ib, f);
        total += v1 + v2 - iv;
        err += e1 + e2 - ie;
        stack.push((ia, m, v1, e1));
        stack.push((m, ib, v2, e2));
        splits += 1;
        if splits > 4000 {
            return Err(numeric("adaptive quadrature failed to converge"));
        }
    }
    Ok(total)
}

/// Wynn's epsilon table applied to a sequence of partial sums.
/// Returns the highest-order even-column entry that stays finite.
pub fn wynn_epsilon(sums: &[f64]) -> f64 {
    let n = sums.len();
    if n == 0 {
        return 0.0;
    }
    if n == 1 {
        return sums[0];
    }
    let mut prev: Vec<f64> = Vec::new(); // eps_{k-1}
    let mut cur: Vec<f64> = sums.to_vec(); // eps_0 = partial sums
    let mut best = *sums.last().unwrap();
    let mut col = 0usize;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            let base = if col == 0 { 0.0 } else { prev[i + 1] };
            if d == 0.0 {
                next.push(base + 1e300);
            } else {
                next.push(base + 1.0 / d);
            }
        }
        prev = cur;
        cur = next;
        col += 1;
        if col % 2 == 0 {
            if let Some(&v) = cur.last() {
                if v.is_finite() && v.abs() < 1e280 {
                    best = v;
                }
            }
        }
    }
    best
}
