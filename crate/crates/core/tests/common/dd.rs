//! Double-double arithmetic, used only as an extended-precision oracle.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::from(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::from(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from(q3)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub fn from(z: Complex64) -> Self {
        Cdd { re: Dd::from(z.re), im: Dd::from(z.im) }
    }

    pub fn add(self, o: Cdd) -> Cdd {
        Cdd { re: self.re + o.re, im: self.im + o.im }
    }

    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }

    pub fn div(self, o: Cdd) -> Cdd {
        let den = o.re * o.re + o.im * o.im;
        Cdd { re: (self.re * o.re + self.im * o.im) / den, im: (self.im * o.re - self.re * o.im) / den }
    }

    pub fn scale(self, x: Dd) -> Cdd {
        Cdd { re: self.re * x, im: self.im * x }
    }

    pub fn norm1(self) -> f64 {
        self.re.to_f64().abs() + self.im.to_f64().abs()
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// `2F1(a, b; c; z)` for `z <= 0`, with the series at `w = z/(z-1)` summed
/// in double-double arithmetic.
pub fn hyp2f1_dd(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Complex64 {
    let zd = Dd::from(z);
    let w = zd / (zd - Dd::ONE);
    let (a, bb, c) = (a, c - b, c);
    let mut term = Cdd::from(Complex64::new(1.0, 0.0));
    let mut sum = term;
    let mut small = 0;
    for k in 0..2_000_000usize {
        let kf = Complex64::new(k as f64, 0.0);
        let num = Cdd::from(a + kf).mul(Cdd::from(bb + kf));
        let den = Cdd::from(c + kf).mul(Cdd::from(Complex64::new(k as f64 + 1.0, 0.0)));
        term = term.mul(num).div(den).scale(w);
        sum = sum.add(term);
        if term.norm1() < 1e-33 * sum.norm1() {
            small += 1;
            if small > 3 {
                break;
            }
        } else {
            small = 0;
        }
        if term.norm1() == 0.0 {
            break;
        }
    }
    let pre = (-a * (1.0 - z).ln()).exp();
    pre * sum.to_c64()
}
