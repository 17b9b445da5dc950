//! Corridor path counts.
//!
//! Heights here use the 0-based frame: an `m`-corridor is `ℕ × {0, …, m}` and
//! a path starts at `(0, y0)`. The dual-corridor state vectors use the
//! 1-based frame shifted up one unit, so height `h` of a corridor path is
//! index `h + 1` of a state vector.
//!
//! Three-choice (Motzkin) counts for `y0 > 0` extend the start-at-the-floor
//! case by the same operator iteration.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::pascal::{self, check_order};
use crate::periodic_seq::{PeriodicSequence, TransitionKind};

/// Longest two-choice path the enumeration oracles accept by default.
pub const DEFAULT_BINARY_CAP: usize = 24;
/// Longest three-choice path the enumeration oracle accepts by default.
pub const DEFAULT_TERNARY_CAP: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CorridorQuery {
    pub m: usize,
    pub n: usize,
    pub y0: usize,
}

impl CorridorQuery {
    pub fn new(m: usize, n: usize, y0: usize) -> Result<Self> {
        check_corridor(m, y0)?;
        Ok(Self { m, n, y0 })
    }

    /// Order of the matching circular Pascal array.
    pub fn order(&self) -> usize {
        self.m + 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorridorResult {
    pub query: CorridorQuery,
    pub count: BigInt,
    /// Number of paths ending at each height `0..=m`.
    pub endpoints: Option<Vec<BigInt>>,
}

/// Signed incoming-path counts `v_{n,k}` of the periodic dual corridor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCorridorState {
    pub d: usize,
    pub n: usize,
    pub seq: PeriodicSequence,
}

impl DualCorridorState {
    pub fn value_at(&self, k: i64) -> &BigInt {
        self.seq.value_at(k)
    }

    /// `v_{n,1..=d−1}`: path counts at heights `0..=d−2` of the corridor.
    pub fn positive_side(&self) -> Vec<BigInt> {
        (1..self.d as i64).map(|k| self.value_at(k).clone()).collect()
    }

    /// Zero at `0` and `±d`, antisymmetric, nonnegative on `1..d` and
    /// nonpositive on `−(d−1)..−1`.
    pub fn has_dual_structure(&self) -> bool {
        let d = self.d as i64;
        let zero_walls = self.value_at(0).is_zero()
            && self.value_at(d).is_zero()
            && self.value_at(-d).is_zero();
        let antisymmetric = (0..2 * d).all(|k| *self.value_at(-k) == -self.value_at(k));
        let signs = (1..d).all(|k| {
            *self.value_at(k) >= BigInt::zero() && *self.value_at(-k) <= BigInt::zero()
        });
        zero_walls && antisymmetric && signs
    }
}

fn check_corridor(m: usize, y0: usize) -> Result<()> {
    if y0 > m {
        return Err(invalid(format!(
            "start height y0 = {y0} lies outside the corridor 0..={m}"
        )));
    }
    Ok(())
}

fn check_cap(length: usize, cap: usize) -> Result<()> {
    if length > cap {
        return Err(Error::CapExceeded { length, cap });
    }
    Ok(())
}

/// `v_0`: +1 at `y0 + 1`, −1 at `−(y0 + 1)`, period `2d`.
pub fn initial_state(d: usize, y0: usize) -> Result<DualCorridorState> {
    check_order(d, y0)?;
    let e = PeriodicSequence::unit_vector(2 * d)?;
    let k = y0 as i64 + 1;
    let seq = e.shift(k).sub(&e.shift(-k))?;
    Ok(DualCorridorState { d, n: 0, seq })
}

/// `v_n = (L + R)^n v_0`.
pub fn state_at(d: usize, n: usize, y0: usize) -> Result<DualCorridorState> {
    let v0 = initial_state(d, y0)?;
    Ok(DualCorridorState {
        n,
        seq: v0.seq.iterate(TransitionKind::Corridor, n),
        ..v0
    })
}

/// `v_n` read off the difference array: `L^{n+y0} q_n`.
pub fn state_from_differences(d: usize, n: usize, y0: usize) -> Result<DualCorridorState> {
    let q = pascal::q_row(d, n, y0)?;
    Ok(DualCorridorState {
        d,
        n,
        seq: q.seq.shift(-((n + y0) as i64)),
    })
}

/// Number of `n`-step up/down paths in `ℕ × {0..m}` from `(0, y0)`, as the
/// range `p_{n,n+y0} − p_{n,n+y0+d}` of the order-`m+2` array.
pub fn corridor_count(m: usize, n: usize, y0: usize) -> Result<BigInt> {
    check_corridor(m, y0)?;
    Ok(pascal::row_extrema(m + 2, n, y0)?.range)
}

pub fn corridor_result(query: CorridorQuery, with_endpoints: bool) -> Result<CorridorResult> {
    let count = corridor_count(query.m, query.n, query.y0)?;
    let endpoints = if with_endpoints {
        Some(state_at(query.order(), query.n, query.y0)?.positive_side())
    } else {
        None
    };
    Ok(CorridorResult {
        query,
        count,
        endpoints,
    })
}

/// Walk every step sequence from `start` over `steps`, staying within
/// `lo..=hi`, and tally the final heights.
fn enumerate_walks(lo: i64, hi: i64, start: i64, n: usize, steps: &[i64]) -> Vec<u64> {
    fn go(h: i64, left: usize, lo: i64, hi: i64, steps: &[i64], tally: &mut [u64]) {
        if left == 0 {
            tally[(h - lo) as usize] += 1;
            return;
        }
        for &s in steps {
            let next = h + s;
            if (lo..=hi).contains(&next) {
                go(next, left - 1, lo, hi, steps, tally);
            }
        }
    }
    let mut tally = vec![0u64; (hi - lo + 1) as usize];
    go(start, n, lo, hi, steps, &mut tally);
    tally
}

pub fn corridor_count_bruteforce(m: usize, n: usize, y0: usize) -> Result<BigInt> {
    corridor_count_bruteforce_capped(m, n, y0, DEFAULT_BINARY_CAP)
}

pub fn corridor_count_bruteforce_capped(
    m: usize,
    n: usize,
    y0: usize,
    cap: usize,
) -> Result<BigInt> {
    Ok(corridor_endpoints_bruteforce(m, n, y0, cap)?.into_iter().sum())
}

/// Brute-force path counts by final height `0..=m`.
pub fn corridor_endpoints_bruteforce(
    m: usize,
    n: usize,
    y0: usize,
    cap: usize,
) -> Result<Vec<BigInt>> {
    check_corridor(m, y0)?;
    check_cap(n, cap)?;
    Ok(enumerate_walks(0, m as i64, y0 as i64, n, &[1, -1])
        .into_iter()
        .map(BigInt::from)
        .collect())
}

/// Paths of length `n` in `ℕ × ℕ` from `(0, y0)`: the order-`(n+y0+2)`
/// entry `σ_{n, ⌊(n+y0)/2⌋}`.
pub fn infinite_corridor_count(n: usize, y0: usize) -> BigInt {
    let d = n + y0 + 2;
    pascal::sigma_entry_direct(d, n, ((n + y0) / 2) as i64, y0)
        .expect("y0 <= d - 2 by construction")
}

/// Sign tuples `(r_1..r_n)` with every prefix sum at least `−y0`.
pub fn infinite_corridor_bruteforce(n: usize, y0: usize, cap: usize) -> Result<BigInt> {
    check_cap(n, cap)?;
    let floor = -(y0 as i64);
    // a prefix sum can never exceed n, so an upper wall above that is inert
    let tally = enumerate_walks(floor, n as i64 + 1, 0, n, &[1, -1]);
    Ok(tally.into_iter().map(BigInt::from).sum())
}

/// `n`-step up/stay/down paths in `ℕ × {1..d−1}` from `(0, y0 + 1)`, as
/// `p_{n,n+y0} − p_{n,n+y0+d}` of `T^n p_0`.
pub fn motzkin_corridor_count(d: usize, n: usize, y0: usize) -> Result<BigInt> {
    Ok(pascal::trinomial_row_extrema(d, n, y0)?.range)
}

/// The start-at-the-floor count from binomial sums alone:
/// `Σ_j C(n, j) Σ_m [C(j+1, 2dm − j + n) − C(j+1, 2dm − j + n + d)]`.
pub fn motzkin_count_closed_form(d: usize, n: usize) -> Result<BigInt> {
    let n_i = n as i64;
    Ok(pascal::trinomial_p_entry_closed_form(d, n, n_i)?
        - pascal::trinomial_p_entry_closed_form(d, n, n_i + d as i64)?)
}

pub fn motzkin_bruteforce(d: usize, n: usize, y0: usize) -> Result<BigInt> {
    motzkin_bruteforce_capped(d, n, y0, DEFAULT_TERNARY_CAP)
}

pub fn motzkin_bruteforce_capped(d: usize, n: usize, y0: usize, cap: usize) -> Result<BigInt> {
    check_order(d, y0)?;
    check_cap(n, cap)?;
    let tally = enumerate_walks(1, d as i64 - 1, y0 as i64 + 1, n, &[1, 0, -1]);
    Ok(tally.into_iter().map(BigInt::from).sum())
}

/// `v_n` for the three-choice corridor: `(L + I + R)^n v_0`.
pub fn motzkin_state_at(d: usize, n: usize, y0: usize) -> Result<DualCorridorState> {
    let v0 = initial_state(d, y0)?;
    let mut seq = v0.seq;
    for _ in 0..n {
        seq = seq.apply_shift_sum(&[-1, 0, 1]);
    }
    Ok(DualCorridorState { n, seq, ..v0 })
}

/// Counts for every `n` in `0..=n_max` in one pass of the state recursion.
pub fn corridor_count_sequence(m: usize, n_max: usize, y0: usize) -> Result<Vec<BigInt>> {
    check_corridor(m, y0)?;
    let mut v = initial_state(m + 2, y0)?;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            v.seq = v.seq.transition(TransitionKind::Corridor);
            v.n = n;
        }
        out.push(v.positive_side().into_iter().sum());
    }
    Ok(out)
}
