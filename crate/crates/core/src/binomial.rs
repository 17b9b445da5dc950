//! Exact binomial coefficients over the whole integer line.
//!
//! `C(n, k)` is taken to be zero whenever `k < 0` or `k > n`, so sums over
//! residue classes never need explicit bounds at the call site.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` with the zero extension outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Sum of `C(n, i)` over every `i` in `0..=n` with `i ≡ residue (mod modulus)`.
pub fn residue_class_sum(n: u64, residue: i64, modulus: u64) -> BigInt {
    debug_assert!(modulus > 0);
    let m = modulus as i64;
    let first = residue.rem_euclid(m);
    let mut total = BigInt::zero();
    let mut i = first;
    while i as u64 <= n {
        total += binomial(n, i);
        i += m;
    }
    total
}
