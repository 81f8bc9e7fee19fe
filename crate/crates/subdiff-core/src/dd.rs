//! Double-double ("compensated") arithmetic.
//!
//! The alternating series behind the Mittag-Leffler and Wright functions
//! cancel like `exp` of the largest term, so plain `f64` loses all digits
//! well inside the parameter range the kernels need. A double-double value
//! carries ~31 significant digits, which pushes the usable range of the
//! series far enough that the asymptotic/contour branches can take over.
//!
//! The algorithms are the classical error-free transformations (Dekker,
//! Knuth) with `fma` for the product splits. Only what the series engine
//! needs is implemented: ring operations, division, `exp`, `ln`, `pow`,
//! `sin(pi x)`, and a Spouge-series gamma.

use crate::math;

/// A double-double number `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline(always)]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline(always)]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline(always)]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, math::fma(a, b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// Machine epsilon of the format, `2^-104`.
    pub const EPS: f64 = 4.93038065763132e-32;

    #[inline(always)]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline(always)]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    /// Exact sum of two doubles.
    #[inline(always)]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (s, e) = two_sum(a, b);
        Dd { hi: s, lo: e }
    }

    /// Exact product of two doubles.
    #[inline(always)]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        let (p, e) = two_prod(a, b);
        Dd { hi: p, lo: e }
    }

    #[inline(always)]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline(always)]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    #[inline(always)]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline(always)]
    pub fn add(self, o: Dd) -> Dd {
        let (s, mut e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        e += t;
        let (s, e) = quick_two_sum(s, e);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }

    #[inline(always)]
    pub fn add_f64(self, o: f64) -> Dd {
        let (s, e) = two_sum(self.hi, o);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }

    #[inline(always)]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline(always)]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, mut e) = two_prod(self.hi, o.hi);
        e = math::fma(self.hi, o.lo, e);
        e = math::fma(self.lo, o.hi, e);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline(always)]
    pub fn mul_f64(self, o: f64) -> Dd {
        let (p, mut e) = two_prod(self.hi, o);
        e = math::fma(self.lo, o, e);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        Dd::from_sum(q1, q2).add_f64(q3)
    }

    #[inline(always)]
    pub fn div_f64(self, o: f64) -> Dd {
        self.div(Dd::from_f64(o))
    }

    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    /// `e^self`. Valid for `|self| < ~709` in the high part.
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let n = math::round(self.hi / math::LN_2);
        let r = self.sub(DD_LN_2.mul_f64(n));
        // Taylor on |r| <= ln2/2.
        let mut term = r;
        let mut sum = Dd::ONE.add(r);
        for k in 2..40 {
            term = term.mul(r).div_f64(k as f64);
            sum = sum.add(term);
            if term.hi.abs() < 1.0e-35 * sum.hi.abs() {
                break;
            }
        }
        let s = math::ldexp(1.0, n as i32);
        Dd { hi: sum.hi * s, lo: sum.lo * s }
    }

    /// Natural log, `self > 0`.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut y = Dd::from_f64(math::ln(self.hi));
        // Newton: y <- y + x e^{-y} - 1, doubles the digits per step.
        for _ in 0..2 {
            y = y.add(self.mul(y.neg().exp())).add_f64(-1.0);
        }
        y
    }

    /// `self^p` for `self > 0`.
    pub fn powf(self, p: Dd) -> Dd {
        self.ln().mul(p).exp()
    }

    /// `sin(pi x)` with exact argument reduction; `x` may carry a low word.
    pub fn sin_pi(x: Dd) -> Dd {
        let mut m = math::floor(x.hi);
        let mut f = x.add_f64(-m); // exact for |x| < 2^52
        if f.hi < 0.0 {
            m -= 1.0;
            f = f.add_f64(1.0);
        }
        let negate = (m as i64) & 1 == 1;
        // reduce to [0, 1/2] via sin(pi f) = sin(pi (1-f))
        if f.hi > 0.5 {
            f = f.neg().add_f64(1.0);
        }
        let u = DD_PI.mul(f);
        let u2 = u.mul(u);
        let mut term = u;
        let mut sum = u;
        for k in 1..25 {
            let den = (2 * k) as f64 * (2 * k + 1) as f64;
            term = term.mul(u2).div_f64(-den);
            sum = sum.add(term);
            if term.hi.abs() < 1.0e-35 * (sum.hi.abs() + 1.0e-300) {
                break;
            }
        }
        if negate {
            sum.neg()
        } else {
            sum
        }
    }
}

pub(crate) const DD_PI: Dd = Dd {
    hi: f64::from_bits(0x400921fb54442d18),
    lo: f64::from_bits(0x3ca1a62633145c07),
};
pub(crate) const DD_LN_2: Dd = Dd {
    hi: f64::from_bits(0x3fe62e42fefa39ef),
    lo: f64::from_bits(0x3c7abc9e3b39803f),
};
const DD_LN_PI: Dd = Dd {
    hi: f64::from_bits(0x3ff250d048e7a1bd),
    lo: f64::from_bits(0x3c67abf2ad8d5088),
};

/// `B_{2j} / (2j (2j-1))` for j = 1..22, frozen from a 60-digit computation.
const STIRLING_C: [Dd; 22] = [
    Dd { hi: f64::from_bits(0x3fb5555555555555), lo: f64::from_bits(0x3c55555555555555) },
    Dd { hi: f64::from_bits(0xbf66c16c16c16c17), lo: f64::from_bits(0x3bff49f49f49f49f) },
    Dd { hi: f64::from_bits(0x3f4a01a01a01a01a), lo: f64::from_bits(0x3b8a01a01a01a01a) },
    Dd { hi: f64::from_bits(0xbf43813813813814), lo: f64::from_bits(0x3befb1fb1fb1fb20) },
    Dd { hi: f64::from_bits(0x3f4b951e2b18ff23), lo: f64::from_bits(0x3be5c3a9ce01b952) },
    Dd { hi: f64::from_bits(0xbf5f6ab0d9993c7d), lo: f64::from_bits(0x3bff82553c999b0e) },
    Dd { hi: f64::from_bits(0x3f7a41a41a41a41a), lo: f64::from_bits(0x3c10690690690690) },
    Dd { hi: f64::from_bits(0xbf9e4286cb0f5398), lo: f64::from_bits(0x3c21efcdab896745) },
    Dd { hi: f64::from_bits(0x3fc6fe96381e0680), lo: f64::from_bits(0xbc279e2405a71f88) },
    Dd { hi: f64::from_bits(0xbff6476701181f3a), lo: f64::from_bits(0x3c724246319da678) },
    Dd { hi: f64::from_bits(0x402ace44322ce006), lo: f64::from_bits(0xbcc62c2b1bbcdd32) },
    Dd { hi: f64::from_bits(0xc0639b2525cccc1b), lo: f64::from_bits(0x3d052604768a30fc) },
    Dd { hi: f64::from_bits(0x40a12234e81b4e82), lo: f64::from_bits(0xbd42c5f92c5f92c6) },
    Dd { hi: f64::from_bits(0xc0e1a198ae1c4ab8), lo: f64::from_bits(0x3d64c012227b696e) },
    Dd { hi: f64::from_bits(0x41251a2089a6e11a), lo: f64::from_bits(0x3dbc219ee4fdc447) },
    Dd { hi: f64::from_bits(0xc16d1089b142d357), lo: f64::from_bits(0xbe0e2030b4d5de20) },
    Dd { hi: f64::from_bits(0x41b6d29a0f6433b8), lo: f64::from_bits(0xbe59dbcc48676f31) },
    Dd { hi: f64::from_bits(0xc20445119d9e466f), lo: f64::from_bits(0x3e95159fdb2a3b69) },
    Dd { hi: f64::from_bits(0x42543779bc9d4025), lo: f64::from_bits(0xbed95e8efdb195e9) },
    Dd { hi: f64::from_bits(0xc2a6800b7bc07a8d), lo: f64::from_bits(0x3f4eaede53f475a8) },
    Dd { hi: f64::from_bits(0x42fbc8cd6f8f1f75), lo: f64::from_bits(0x3f971e1d4f36d757) },
    Dd { hi: f64::from_bits(0xc352efaec50eee53), lo: f64::from_bits(0xbffe5a0284fa7ec4) },
];
const DD_HALF_LN_TWO_PI: Dd = Dd { hi: f64::from_bits(0x3fed67f1c864beb5), lo: f64::from_bits(0xbc865b5a1b7ff5df) };

/// `ln Gamma(x)` for `x > 0` (double-double argument), ~30 correct digits.
///
/// Stirling's series with the argument shifted above 40, where the
/// Bernoulli terms decay geometrically with nothing to cancel. (A Spouge
/// approximation was tried first; its alternating teracoefficients cost
/// 15+ digits at moderate arguments, which the Mittag-Leffler series then
/// amplified by the size of its largest term.)
///
/// The argument is a full double-double because the series tables need
/// `Gamma(alpha k + beta)` with `alpha k` held exactly: rounding the
/// argument to one double perturbs `ln Gamma` by `psi(a) * k * ulp`,
/// which the largest series term amplifies into the leading digits.
pub fn ln_gamma_dd(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0);
    const SHIFT_TO: f64 = 40.0;
    // ln Gamma(x) = ln Gamma(x + n) - sum ln(x + i)
    let mut shift = Dd::ZERO;
    let mut xx = x;
    while xx.hi < SHIFT_TO {
        shift = shift.add(xx.ln());
        xx = xx.add_f64(1.0);
    }
    let lnx = xx.ln();
    let mut s = xx.sub(Dd::from_f64(0.5)).mul(lnx).sub(xx).add(DD_HALF_LN_TWO_PI);
    let x2 = xx.mul(xx).recip();
    let mut p = xx.recip();
    for c in STIRLING_C.iter() {
        s = s.add(c.mul(p));
        p = p.mul(x2);
    }
    s.sub(shift)
}

/// `Gamma(x)` for `x > 0`. Overflows above ~171.6.
pub fn gamma_dd(x: f64) -> Dd {
    ln_gamma_dd(Dd::from_f64(x)).exp()
}

/// `1 / Gamma(a)` for any real `a`, with the convention that exact
/// nonpositive-integer poles map to zero.
///
/// Overflows (to inf) once `a < ~-170`; series code that reaches that deep
/// must use [`recip_gamma_over_factorial`], whose ratio stays bounded.
pub fn recip_gamma_dd(a: f64) -> Dd {
    recip_gamma_over_factorial(Dd::from_f64(a), 0)
}

/// `1 / (k! * Gamma(a))` computed jointly in log space. For the Wright
/// series coefficients `a = 1 - beta - alpha k` the two factors overflow
/// and underflow separately long before the product does; `Gamma(alpha k +
/// beta) / k!` decays for every `alpha < 1`.
///
/// Only exact poles map to zero. An argument a few ulp away from a
/// nonpositive integer (binary rounding of `alpha k`) must keep its
/// genuine `1/Gamma ~ (a - n) n!` value: the rest of the series is
/// evaluated at the same perturbed arguments and cancels against it, so
/// snapping such terms to the pole shifts the sum by their full size.
pub fn recip_gamma_over_factorial(a: Dd, k: usize) -> Dd {
    let lkf = if k == 0 {
        Dd::ZERO
    } else {
        ln_gamma_dd(Dd::from_f64(k as f64 + 1.0))
    };
    if a.hi > 0.5 {
        return ln_gamma_dd(a).add(lkf).neg().exp();
    }
    let n = math::round(a.hi);
    if n <= 0.5 && a.hi == n && a.lo == 0.0 {
        return Dd::ZERO;
    }
    // reflection: 1/Gamma(a) = Gamma(1-a) sin(pi a) / pi
    let s = Dd::sin_pi(a);
    let one_minus = a.neg().add_f64(1.0);
    let ln_mag = ln_gamma_dd(one_minus).add(s.abs().ln()).sub(DD_LN_PI).sub(lkf);
    let v = ln_mag.exp();
    if s.hi < 0.0 {
        v.neg()
    } else {
        v
    }
}
