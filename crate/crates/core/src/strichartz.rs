//! Exact-rational exponent calculus: admissible pairs, regularity exponents,
//! the TT* kernel conditions and the Sobolev embedding relation.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::spectral::Geometry;

fn q(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

fn half() -> Rational64 {
    q(1, 2)
}

/// `(1/p, 1/q)` with both coordinates in `[0, 1/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentPair {
    pub inv_p: Rational64,
    pub inv_q: Rational64,
}

impl ExponentPair {
    pub fn new(inv_p: Rational64, inv_q: Rational64) -> Result<Self> {
        let range = |x: Rational64| x >= Rational64::zero() && x <= half();
        if !range(inv_p) || !range(inv_q) {
            return Err(Error::Parameter(format!("exponent pair ({inv_p}, {inv_q}) outside [0, 1/2]^2")));
        }
        Ok(Self { inv_p, inv_q })
    }

    /// Pair from integer fractions `(a/b, c/d)`.
    pub fn from_fractions(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if b == 0 || d == 0 {
            return Err(Error::Parameter("zero denominator".into()));
        }
        Self::new(q(a, b), q(c, d))
    }

    /// `1/p' = 1 - 1/p`.
    pub fn inv_p_conj(&self) -> Rational64 {
        Rational64::one() - self.inv_p
    }

    pub fn inv_q_conj(&self) -> Rational64 {
        Rational64::one() - self.inv_q
    }

    fn is_endpoint(&self) -> bool {
        self.inv_p.is_zero() && self.inv_q == half()
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.inv_p, self.inv_q)
    }
}

fn dim(g: &Geometry) -> Rational64 {
    Rational64::from_integer(g.n as i64)
}

// (n-1)/2 (1/2 - 1/q)
fn dispersion(g: &Geometry, e: &ExponentPair) -> Rational64 {
    (dim(g) - 1) / 2 * (half() - e.inv_q)
}

/// `1/p >= (n-1)/2 (1/2 - 1/q)` on the open square `(0, 1/2)^2`, together
/// with the point `(0, 1/2)`.
pub fn is_admissible_triangle(g: &Geometry, e: &ExponentPair) -> bool {
    if e.is_endpoint() {
        return true;
    }
    let open = |x: Rational64| x > Rational64::zero() && x < half();
    open(e.inv_p) && open(e.inv_q) && e.inv_p >= dispersion(g, e)
}

/// `[0, 1/2) x (0, 1/2)` together with the point `(0, 1/2)`.
pub fn is_admissible_square(_g: &Geometry, e: &ExponentPair) -> bool {
    if e.is_endpoint() {
        return true;
    }
    e.inv_p >= Rational64::zero() && e.inv_p < half() && e.inv_q > Rational64::zero() && e.inv_q < half()
}

/// `theta(p, q) = (n+1)/2 (1/2 - 1/q) + max{0, (n-1)/2 (1/2 - 1/q) - 1/p}`.
/// The piecewise form `n (1/2 - 1/q) - 1/p` / `(n+1)/2 (1/2 - 1/q)` is
/// evaluated as well and must agree exactly.
pub fn regularity_exponent(g: &Geometry, e: &ExponentPair) -> Result<Rational64> {
    if !is_admissible_square(g, e) {
        return Err(Error::Inadmissible);
    }
    let x = half() - e.inv_q;
    let excess = dispersion(g, e) - e.inv_p;
    let max_form = (dim(g) + 1) / 2 * x + excess.max(Rational64::zero());
    let branch_form = if excess > Rational64::zero() { dim(g) * x - e.inv_p } else { (dim(g) + 1) / 2 * x };
    assert_eq!(max_form, branch_form, "branch forms of theta disagree at {e}");
    Ok(max_form)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TtStar {
    /// `|x|^{-1} 1_{|x| >= 1}` lies in `L^{p/2}`, i.e. `p > 2`.
    pub long_time_ok: bool,
    /// `0 <= 1/p' - 1/p <= 1 - (n-1)(1/2 - 1/q)`.
    pub short_time_ok: bool,
}

pub fn ttstar_feasible(g: &Geometry, e: &ExponentPair) -> TtStar {
    let gap = e.inv_p_conj() - e.inv_p;
    TtStar {
        long_time_ok: e.inv_p < half(),
        short_time_ok: gap >= Rational64::zero() && gap <= Rational64::one() - (dim(g) - 1) * (half() - e.inv_q),
    }
}

/// `H^{s1, q1} -> H^{s2, q2}`: `1 < q1 <= q2 < inf`, `s1 >= s2 >= 0` and
/// `s1 - s2 = n (1/q1 - 1/q2)`.
pub fn sobolev_embedding_ok(
    g: &Geometry,
    s1: Rational64,
    inv_q1: Rational64,
    s2: Rational64,
    inv_q2: Rational64,
) -> bool {
    let exponents = inv_q2 > Rational64::zero() && inv_q2 <= inv_q1 && inv_q1 < Rational64::one();
    let orders = s1 >= s2 && s2 >= Rational64::zero();
    exponents && orders && s1 - s2 == dim(g) * (inv_q1 - inv_q2)
}

/// Pairs `(j/(2m), k/(2m))` for `j, k = 0..=m`, row-major in `1/p`.
pub fn uniform_pair_grid(m: i64) -> Vec<ExponentPair> {
    let mut out = Vec::new();
    for j in 0..=m {
        for k in 0..=m {
            out.push(ExponentPair { inv_p: q(j, 2 * m), inv_q: q(k, 2 * m) });
        }
    }
    out
}

/// Every pair whose coordinates are fractions in `[0, 1/2]` with
/// denominator at most `max_den`, sorted.
pub fn farey_pair_grid(max_den: i64) -> Vec<ExponentPair> {
    let mut coords: Vec<Rational64> = Vec::new();
    for d in 1..=max_den {
        for a in 0..=d / 2 {
            coords.push(q(a, d));
        }
    }
    coords.sort();
    coords.dedup();
    let mut out = Vec::with_capacity(coords.len() * coords.len());
    for &p in &coords {
        for &r in &coords {
            out.push(ExponentPair { inv_p: p, inv_q: r });
        }
    }
    out
}
