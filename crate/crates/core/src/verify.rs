//! Grid checks that pit independent routes against each other.
//!
//! Each check walks its grid in lexicographic order and stops at the first
//! disagreement, so a report is deterministic for fixed bounds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::binomial;
use crate::corridor;
use crate::error::Result;
use crate::km::{self, KmQuery};
use crate::pascal;
use crate::periodic_seq::PeriodicSequence;

/// First disagreement found by a grid check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub params: Vec<(&'static str, i64)>,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mismatch at", self.check)?;
        for (name, value) in &self.params {
            write!(f, " {name}={value}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

pub type Outcome = std::result::Result<usize, Mismatch>;

fn expect_eq(
    check: &'static str,
    params: &[(&'static str, i64)],
    what: &str,
    left: &BigInt,
    right: &BigInt,
) -> std::result::Result<(), Mismatch> {
    if left == right {
        Ok(())
    } else {
        Err(Mismatch {
            check,
            params: params.to_vec(),
            detail: format!("{what}: {left} != {right}"),
        })
    }
}

fn expect(
    check: &'static str,
    params: &[(&'static str, i64)],
    ok: bool,
    what: impl FnOnce() -> String,
) -> std::result::Result<(), Mismatch> {
    if ok {
        Ok(())
    } else {
        Err(Mismatch {
            check,
            params: params.to_vec(),
            detail: what(),
        })
    }
}

/// Bounds shared by the checks; each check reads the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub m_max: usize,
    pub n_max: usize,
    pub d_max: usize,
    pub s_min: i64,
    pub t_max: i64,
    pub ab_max: i64,
    pub y0_max: usize,
    pub binary_cap: usize,
    pub ternary_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            m_max: 6,
            n_max: 12,
            d_max: 6,
            s_min: -3,
            t_max: 3,
            ab_max: 8,
            y0_max: 3,
            binary_cap: corridor::DEFAULT_BINARY_CAP,
            ternary_cap: corridor::DEFAULT_TERNARY_CAP,
        }
    }
}

fn unwrap_or_mismatch<T>(
    check: &'static str,
    params: &[(&'static str, i64)],
    r: Result<T>,
) -> std::result::Result<T, Mismatch> {
    r.map_err(|e| Mismatch {
        check,
        params: params.to_vec(),
        detail: e.to_string(),
    })
}

/// Two-choice corridors: operator count against brute force, per-endpoint
/// state values against brute force, and the K-M diagonal sum for `y0 = 0`.
pub fn two_choice(b: &Bounds) -> Outcome {
    const CHECK: &str = "two-choice";
    let mut cases = 0;
    for m in 0..=b.m_max {
        for n in 0..=b.n_max {
            for y0 in 0..=m {
                let params = [("m", m as i64), ("n", n as i64), ("y0", y0 as i64)];
                let op = unwrap_or_mismatch(CHECK, &params, corridor::corridor_count(m, n, y0))?;
                let ends = unwrap_or_mismatch(
                    CHECK,
                    &params,
                    corridor::corridor_endpoints_bruteforce(m, n, y0, b.binary_cap),
                )?;
                let brute: BigInt = ends.iter().sum();
                expect_eq(CHECK, &params, "operator vs brute-force", &op, &brute)?;
                let state = unwrap_or_mismatch(CHECK, &params, corridor::state_at(m + 2, n, y0))?;
                let side = state.positive_side();
                for (h, (v, e)) in side.iter().zip(&ends).enumerate() {
                    expect_eq(CHECK, &params, &format!("state at height {h}"), v, e)?;
                }
                if y0 == 0 {
                    expect_eq(
                        CHECK,
                        &params,
                        "diagonal K-M sum",
                        &km::km_diagonal_sum(n, m),
                        &op,
                    )?;
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Formula, σ-difference and enumeration agree on every `(a, b, s, t)`, and
/// in-band counts equal the dual-corridor state at the mapped endpoint.
pub fn km_routes(b: &Bounds) -> Outcome {
    const CHECK: &str = "km";
    let mut cases = 0;
    for s in b.s_min..=0 {
        for t in 0..=b.t_max {
            for a in 0..=b.ab_max {
                for bb in 0..=b.ab_max {
                    let params = [("a", a), ("b", bb), ("s", s), ("t", t)];
                    let q = unwrap_or_mismatch(CHECK, &params, KmQuery::new(a, bb, s, t))?;
                    let formula = km::km_count_formula(&q);
                    let sigma = km::km_count_via_sigma(&q);
                    let brute = unwrap_or_mismatch(
                        CHECK,
                        &params,
                        km::km_bruteforce_capped(&q, b.binary_cap),
                    )?;
                    expect_eq(CHECK, &params, "closed-form vs operator", &formula, &sigma)?;
                    expect_eq(CHECK, &params, "closed-form vs brute-force", &formula, &brute)?;
                    if q.in_band() {
                        let d = (t - s + 2) as usize;
                        let y0 = -s;
                        let state = unwrap_or_mismatch(
                            CHECK,
                            &params,
                            corridor::state_at(d, (a + bb) as usize, y0 as usize),
                        )?;
                        expect_eq(
                            CHECK,
                            &params,
                            "closed-form vs state endpoint",
                            &formula,
                            state.value_at(bb - a + y0 + 1),
                        )?;
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// Three-choice corridors: operator against enumeration for every start,
/// and the binomial closed form for the floor start.
pub fn motzkin(b: &Bounds) -> Outcome {
    const CHECK: &str = "motzkin";
    let mut cases = 0;
    for d in 2..=b.d_max {
        for n in 0..=b.n_max {
            for y0 in 0..=d - 2 {
                let params = [("d", d as i64), ("n", n as i64), ("y0", y0 as i64)];
                let op =
                    unwrap_or_mismatch(CHECK, &params, corridor::motzkin_corridor_count(d, n, y0))?;
                let brute = unwrap_or_mismatch(
                    CHECK,
                    &params,
                    corridor::motzkin_bruteforce_capped(d, n, y0, b.ternary_cap),
                )?;
                expect_eq(CHECK, &params, "operator vs brute-force", &op, &brute)?;
                let state =
                    unwrap_or_mismatch(CHECK, &params, corridor::motzkin_state_at(d, n, y0))?;
                let total: BigInt = state.positive_side().iter().sum();
                expect_eq(CHECK, &params, "operator vs state sum", &op, &total)?;
                if y0 == 0 {
                    let closed =
                        unwrap_or_mismatch(CHECK, &params, corridor::motzkin_count_closed_form(d, n))?;
                    expect_eq(CHECK, &params, "operator vs closed-form", &op, &closed)?;
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Unbounded corridors: σ entry against enumeration, saturation of finite
/// corridors, and the central binomial for the floor start.
pub fn infinite(b: &Bounds) -> Outcome {
    const CHECK: &str = "infinite";
    let mut cases = 0;
    for n in 0..=b.n_max {
        for y0 in 0..=b.y0_max {
            let params = [("n", n as i64), ("y0", y0 as i64)];
            let closed = corridor::infinite_corridor_count(n, y0);
            let brute = unwrap_or_mismatch(
                CHECK,
                &params,
                corridor::infinite_corridor_bruteforce(n, y0, b.binary_cap),
            )?;
            expect_eq(CHECK, &params, "closed-form vs brute-force", &closed, &brute)?;
            for m in n + y0..=n + y0 + 3 {
                let finite = unwrap_or_mismatch(CHECK, &params, corridor::corridor_count(m, n, y0))?;
                expect_eq(CHECK, &params, &format!("saturation at m={m}"), &closed, &finite)?;
            }
            if y0 == 0 {
                let central = binomial(n as u64, (n / 2) as i64);
                expect_eq(CHECK, &params, "central binomial", &closed, &central)?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

/// Pascal-array routes and the operator identities behind the range theorem.
pub fn pascal_identities(b: &Bounds) -> Outcome {
    const CHECK: &str = "pascal";
    let mut cases = 0;
    for d in 2..=b.d_max.max(2) {
        for y0 in 0..=d - 2 {
            let params0 = [("d", d as i64), ("y0", y0 as i64)];
            // L^{y0} q_0 = (−L^{y0+1} + R^{y0+1}) e'_0 = v_0
            let q0 = unwrap_or_mismatch(CHECK, &params0, pascal::q_row(d, 0, y0))?.seq;
            let e = unwrap_or_mismatch(CHECK, &params0, PeriodicSequence::unit_vector(2 * d))?;
            let k = y0 as i64 + 1;
            let rhs = unwrap_or_mismatch(CHECK, &params0, e.shift(k).sub(&e.shift(-k)))?;
            let v0 = unwrap_or_mismatch(CHECK, &params0, corridor::initial_state(d, y0))?;
            let lhs = q0.shift(-(y0 as i64));
            expect(CHECK, &params0, lhs == rhs && lhs == v0.seq, || {
                format!("L^y0 q0 = {lhs:?}, expected {rhs:?}")
            })?;

            for n in 0..=b.n_max {
                let params = [("d", d as i64), ("n", n as i64), ("y0", y0 as i64)];
                let sigma = unwrap_or_mismatch(CHECK, &params, pascal::sigma_row(d, n, y0))?;
                for kk in 0..d as i64 {
                    let direct = unwrap_or_mismatch(
                        CHECK,
                        &params,
                        pascal::sigma_entry_direct(d, n, kk, y0),
                    )?;
                    expect_eq(CHECK, &params, &format!("sigma[{kk}]"), sigma.value_at(kk), &direct)?;
                    if y0 == 0 {
                        expect_eq(
                            CHECK,
                            &params,
                            &format!("sigma[{kk}] binomial"),
                            &direct,
                            &pascal::sigma_entry_binom(d, n, kk),
                        )?;
                    }
                }
                let expected_sum = BigInt::from(y0 + 1) << n;
                expect_eq(CHECK, &params, "sigma window sum", &sigma.seq.window_sum(), &expected_sum)?;

                let p = unwrap_or_mismatch(CHECK, &params, pascal::p_row(d, n, y0))?;
                let p_iter = unwrap_or_mismatch(CHECK, &params, pascal::p_row_by_iteration(d, n, y0))?;
                expect(CHECK, &params, p.seq == p_iter.seq, || "U(sigma_n) != (I+R^2)^n p_0".into())?;
                let q = unwrap_or_mismatch(CHECK, &params, pascal::q_row(d, n, y0))?;
                let q_iter = unwrap_or_mismatch(CHECK, &params, pascal::q_row_by_iteration(d, n, y0))?;
                expect(CHECK, &params, q.seq == q_iter.seq, || "D(p_n) != (I+R^2)^n q_0".into())?;

                // sign pattern of q along the diagonal n + y0
                let base = (n + y0) as i64;
                let dd = d as i64;
                for j in 0..2 * dd {
                    let v = q.value_at(base + j);
                    let ok = if j == 0 || j == dd {
                        v.is_zero()
                    } else if j < dd {
                        *v >= BigInt::zero()
                    } else {
                        *v <= BigInt::zero()
                    };
                    expect(CHECK, &params, ok, || format!("q sign at j={j}: {v}"))?;
                }

                let ext = unwrap_or_mismatch(CHECK, &params, pascal::row_extrema(d, n, y0))?;
                expect_eq(CHECK, &params, "row max", &ext.max, sigma.seq.max_value())?;
                expect_eq(CHECK, &params, "row min", &ext.min, sigma.seq.min_value())?;

                let v = unwrap_or_mismatch(CHECK, &params, corridor::state_at(d, n, y0))?;
                let v_q = unwrap_or_mismatch(CHECK, &params, corridor::state_from_differences(d, n, y0))?;
                expect(CHECK, &params, v.seq == v_q.seq, || "v_n != L^{n+y0} q_n".into())?;
                expect(CHECK, &params, v.has_dual_structure(), || {
                    format!("state lacks dual structure: {:?}", v.seq)
                })?;

                let tri = unwrap_or_mismatch(CHECK, &params, pascal::trinomial_p_row(d, n, y0))?;
                for kk in 0..2 * dd {
                    let entry =
                        unwrap_or_mismatch(CHECK, &params, pascal::trinomial_p_entry(d, n, kk, y0))?;
                    expect_eq(CHECK, &params, &format!("trinomial[{kk}]"), tri.value_at(kk), &entry)?;
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}
