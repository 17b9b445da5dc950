//! Krattenthaler–Mohanty counts `D(a, b; s, t)`: monotone lattice paths
//! from the origin to `(a, b)` that stay within `x + s ≤ y ≤ x + t`.
//!
//! Three independent routes are provided: the binomial-sum formula, the
//! difference of two circular Pascal entries, and direct enumeration.
//! Every route returns 0 for endpoints outside the band (or with a negative
//! coordinate) without evaluating anything.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::binomial::binomial;
use crate::error::{invalid, Error, Result};
use crate::pascal::sigma_entry_direct;

pub const DEFAULT_KM_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KmQuery {
    pub a: i64,
    pub b: i64,
    pub s: i64,
    pub t: i64,
}

impl KmQuery {
    pub fn new(a: i64, b: i64, s: i64, t: i64) -> Result<Self> {
        if t < 0 || s > 0 {
            return Err(invalid(format!("need t >= 0 >= s, got s = {s}, t = {t}")));
        }
        Ok(Self { a, b, s, t })
    }

    pub fn in_band(&self) -> bool {
        self.a >= 0 && self.b >= 0 && self.b <= self.a + self.t && self.b >= self.a + self.s
    }

    /// Order `t − s + 2` of the matching circular Pascal array.
    pub fn order(&self) -> i64 {
        self.t - self.s + 2
    }
}

/// `Σ_k [C(a+b, a − k(t−s+2)) − C(a+b, a − k(t−s+2) + t + 1)]`.
pub fn km_count_formula(q: &KmQuery) -> BigInt {
    if !q.in_band() {
        return BigInt::zero();
    }
    let n = (q.a + q.b) as u64;
    let w = q.order();
    // both binomials vanish unless 0 <= a − kw (+ t + 1) <= a + b
    let k_lo = Integer::div_floor(&-q.b, &w);
    let k_hi = Integer::div_floor(&(q.a + q.t + 1), &w);
    let mut total = BigInt::zero();
    for k in k_lo..=k_hi {
        let base = q.a - k * w;
        total += binomial(n, base);
        total -= binomial(n, base + q.t + 1);
    }
    total
}

/// `σ_{a+b, b−s} − σ_{a+b, b−s+1}` in the order-`(t−s+2)` array started at
/// offset `−s`.
pub fn km_count_via_sigma(q: &KmQuery) -> BigInt {
    if !q.in_band() {
        return BigInt::zero();
    }
    let d = q.order() as usize;
    let n = (q.a + q.b) as usize;
    let y0 = (-q.s) as usize;
    let k = q.b - q.s;
    let hi = sigma_entry_direct(d, n, k, y0).expect("y0 = -s <= t - s = d - 2");
    let lo = sigma_entry_direct(d, n, k + 1, y0).expect("y0 = -s <= t - s = d - 2");
    hi - lo
}

pub fn km_bruteforce(q: &KmQuery) -> Result<BigInt> {
    km_bruteforce_capped(q, DEFAULT_KM_CAP)
}

pub fn km_bruteforce_capped(q: &KmQuery, cap: usize) -> Result<BigInt> {
    if q.a < 0 || q.b < 0 {
        return Ok(BigInt::zero());
    }
    let length = (q.a + q.b) as usize;
    if length > cap {
        return Err(Error::CapExceeded { length, cap });
    }
    fn go(x: i64, y: i64, q: &KmQuery) -> u64 {
        let diag = y - x;
        if diag < q.s || diag > q.t {
            return 0;
        }
        if x == q.a && y == q.b {
            return 1;
        }
        let mut count = 0;
        if x < q.a {
            count += go(x + 1, y, q);
        }
        if y < q.b {
            count += go(x, y + 1, q);
        }
        count
    }
    Ok(BigInt::from(go(0, 0, q)))
}

/// `(a, b) ↦ (a + b, b − a − s)`: the band `s ≤ y − x ≤ t` becomes the
/// corridor `0..=t−s` with the origin sent to `(0, −s)`.
pub fn km_to_corridor_point(a: i64, b: i64, s: i64) -> (i64, i64) {
    (a + b, b - a - s)
}

/// `Σ_{a+b=n} D(a, b; 0, m)`, which counts length-`n` paths in the
/// `m`-corridor from the floor.
pub fn km_diagonal_sum(n: usize, m: usize) -> BigInt {
    let n = n as i64;
    (0..=n)
        .map(|a| km_count_formula(&KmQuery { a, b: n - a, s: 0, t: m as i64 }))
        .sum()
}
