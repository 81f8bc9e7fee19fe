//! Truncated Taylor jets for exact derivatives of the Bernstein catalog.
//!
//! A [`Jet`] carries the Taylor coefficients `a_k = f^(k)(x0)/k!` up to
//! order 5. Propagating jets through the closed-form catalog formulas
//! yields derivatives that are exact up to rounding, which is what the
//! sign-alternation and derivative-bound checks need; divided differences
//! would drown the 4th derivative in cancellation noise.

use crate::math;

pub const JET_ORDER: usize = 5;

/// Taylor coefficients `[f, f', f''/2!, ..., f^(5)/5!]` at a point.
#[derive(Clone, Copy, Debug)]
pub struct Jet {
    pub a: [f64; JET_ORDER + 1],
}

impl Jet {
    pub fn constant(c: f64) -> Jet {
        let mut a = [0.0; JET_ORDER + 1];
        a[0] = c;
        Jet { a }
    }

    /// The identity jet at `x0`, seed for evaluating `f(x)` and derivatives.
    pub fn variable(x0: f64) -> Jet {
        let mut a = [0.0; JET_ORDER + 1];
        a[0] = x0;
        a[1] = 1.0;
        Jet { a }
    }

    /// `f^(n)(x0)` recovered from the coefficients.
    pub fn deriv(&self, n: usize) -> f64 {
        debug_assert!(n <= JET_ORDER);
        let mut fact = 1.0;
        for k in 2..=n {
            fact *= k as f64;
        }
        self.a[n] * fact
    }

    pub fn add(self, o: Jet) -> Jet {
        let mut a = self.a;
        for k in 0..=JET_ORDER {
            a[k] += o.a[k];
        }
        Jet { a }
    }

    pub fn sub(self, o: Jet) -> Jet {
        let mut a = self.a;
        for k in 0..=JET_ORDER {
            a[k] -= o.a[k];
        }
        Jet { a }
    }

    pub fn add_scalar(self, c: f64) -> Jet {
        let mut a = self.a;
        a[0] += c;
        Jet { a }
    }

    pub fn scale(self, c: f64) -> Jet {
        let mut a = self.a;
        for v in a.iter_mut() {
            *v *= c;
        }
        Jet { a }
    }

    pub fn mul(self, o: Jet) -> Jet {
        let mut a = [0.0; JET_ORDER + 1];
        for k in 0..=JET_ORDER {
            let mut s = 0.0;
            for i in 0..=k {
                s += self.a[i] * o.a[k - i];
            }
            a[k] = s;
        }
        Jet { a }
    }

    pub fn div(self, o: Jet) -> Jet {
        debug_assert!(o.a[0] != 0.0);
        let mut c = [0.0; JET_ORDER + 1];
        for k in 0..=JET_ORDER {
            let mut s = self.a[k];
            for i in 0..k {
                s -= c[i] * o.a[k - i];
            }
            c[k] = s / o.a[0];
        }
        Jet { a: c }
    }

    /// `exp(self)`.
    pub fn exp(self) -> Jet {
        let mut e = [0.0; JET_ORDER + 1];
        e[0] = math::exp(self.a[0]);
        for k in 1..=JET_ORDER {
            let mut s = 0.0;
            for j in 1..=k {
                s += j as f64 * self.a[j] * e[k - j];
            }
            e[k] = s / k as f64;
        }
        Jet { a: e }
    }

    /// `ln(self)`, requires a positive value part.
    pub fn ln(self) -> Jet {
        debug_assert!(self.a[0] > 0.0);
        let mut l = [0.0; JET_ORDER + 1];
        l[0] = math::ln(self.a[0]);
        for k in 1..=JET_ORDER {
            let mut s = self.a[k];
            for j in 1..k {
                s -= (j as f64 / k as f64) * l[j] * self.a[k - j];
            }
            l[k] = s / self.a[0];
        }
        Jet { a: l }
    }

    /// `ln(1 + self)`; keeps precision when the value part is tiny.
    pub fn ln_1p(self) -> Jet {
        let mut shifted = self;
        shifted.a[0] += 1.0;
        let mut l = shifted.ln();
        l.a[0] = math::ln_1p(self.a[0]);
        l
    }

    /// `self^p` for a positive value part.
    pub fn powf(self, p: f64) -> Jet {
        self.ln().scale(p).exp()
    }
}
