//! Circular Pascal arrays `σ_n`, their up-sampled rows `p_n`, the
//! differences `q_n`, and the three-choice (trinomial) variant.
//!
//! Full rows are built by iterating the transition operator; single entries
//! can also be read off closed-form binomial sums. Both routes are public so
//! they can be checked against each other.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::{binomial, residue_class_sum};
use crate::error::{invalid, Result};
use crate::periodic_seq::{PeriodicSequence, TransitionKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layer {
    /// `σ_n`, period `d`.
    Sigma,
    /// `p_n = U(σ_n)`, period `2d`.
    P,
    /// `q_n = D(p_n)`, period `2d`.
    Q,
}

/// One row of a (possibly up-sampled) circular Pascal array of order `d`
/// started from `(I + R + … + R^{y0}) e_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalArrayRow {
    pub d: usize,
    pub n: usize,
    pub y0: usize,
    pub layer: Layer,
    pub seq: PeriodicSequence,
}

impl PascalArrayRow {
    pub fn value_at(&self, k: i64) -> &BigInt {
        self.seq.value_at(k)
    }

    pub fn window(&self) -> &[BigInt] {
        self.seq.window()
    }
}

/// Row extrema of `σ_n`, located on the diagonals `n + y0` and `n + y0 + d`
/// of the up-sampled array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowExtrema {
    pub max: BigInt,
    pub min: BigInt,
    pub range: BigInt,
    /// σ-layer column of the maximum, `⌊(n+y0)/2⌋ mod d`.
    pub argmax_k: usize,
    /// σ-layer column of the minimum, `⌊(n+y0+d)/2⌋ mod d`.
    pub argmin_k: usize,
}

pub(crate) fn check_order(d: usize, y0: usize) -> Result<()> {
    if d < 2 {
        return Err(invalid(format!("order d must be at least 2, got {d}")));
    }
    if y0 > d - 2 {
        return Err(invalid(format!(
            "start offset y0 must be at most d-2 = {}, got {y0}",
            d - 2
        )));
    }
    Ok(())
}

pub fn initial_sigma(d: usize, y0: usize) -> Result<PascalArrayRow> {
    check_order(d, y0)?;
    let window = (0..d).map(|k| BigInt::from(u8::from(k <= y0))).collect();
    Ok(PascalArrayRow {
        d,
        n: 0,
        y0,
        layer: Layer::Sigma,
        seq: PeriodicSequence::new(d, window)?,
    })
}

/// `σ_n = (I + R)^n σ_0`, by `n` iterated transitions.
pub fn sigma_row(d: usize, n: usize, y0: usize) -> Result<PascalArrayRow> {
    let start = initial_sigma(d, y0)?;
    Ok(PascalArrayRow {
        n,
        seq: start.seq.iterate(TransitionKind::Pascal, n),
        ..start
    })
}

/// `σ_{n,k} = Σ_j C(n, k + dj)` for the standard start `σ_0 = e_0`.
pub fn sigma_entry_binom(d: usize, n: usize, k: i64) -> BigInt {
    residue_class_sum(n as u64, k, d as u64)
}

/// `σ_{n,k}` for a general start offset: the sum of the `y0 + 1` shifted
/// residue-class sums `Σ_j C(n, k − i + dj)`, `i = 0..=y0`.
pub fn sigma_entry_direct(d: usize, n: usize, k: i64, y0: usize) -> Result<BigInt> {
    check_order(d, y0)?;
    Ok((0..=y0 as i64)
        .map(|i| sigma_entry_binom(d, n, k - i))
        .sum())
}

/// `p_n = U(σ_n)`.
pub fn p_row(d: usize, n: usize, y0: usize) -> Result<PascalArrayRow> {
    let sigma = sigma_row(d, n, y0)?;
    Ok(PascalArrayRow {
        layer: Layer::P,
        seq: sigma.seq.upsample(),
        ..sigma
    })
}

/// `p_n = (I + R²)^n p_0`, never touching the σ layer after `p_0`.
pub fn p_row_by_iteration(d: usize, n: usize, y0: usize) -> Result<PascalArrayRow> {
    let p0 = p_row(d, 0, y0)?;
    let mut seq = p0.seq;
    for _ in 0..n {
        seq = seq.apply_shift_sum(&[0, 2]);
    }
    Ok(PascalArrayRow { n, seq, ..p0 })
}

/// `q_n = D(p_n)`.
pub fn q_row(d: usize, n: usize, y0: usize) -> Result<PascalArrayRow> {
    let p = p_row(d, n, y0)?;
    Ok(PascalArrayRow {
        layer: Layer::Q,
        seq: p.seq.difference(),
        ..p
    })
}

/// `q_n = (I + R²)^n q_0`.
pub fn q_row_by_iteration(d: usize, n: usize, y0: usize) -> Result<PascalArrayRow> {
    let q0 = q_row(d, 0, y0)?;
    let mut seq = q0.seq;
    for _ in 0..n {
        seq = seq.apply_shift_sum(&[0, 2]);
    }
    Ok(PascalArrayRow { n, seq, ..q0 })
}

pub fn row_extrema(d: usize, n: usize, y0: usize) -> Result<RowExtrema> {
    let p = p_row(d, n, y0)?;
    Ok(extrema_on_diagonals(&p.seq, d, n, y0))
}

fn extrema_on_diagonals(p: &PeriodicSequence, d: usize, n: usize, y0: usize) -> RowExtrema {
    let hi = (n + y0) as i64;
    let lo = hi + d as i64;
    let max = p.value_at(hi).clone();
    let min = p.value_at(lo).clone();
    RowExtrema {
        range: &max - &min,
        max,
        min,
        argmax_k: (hi / 2) as usize % d,
        argmin_k: (lo / 2) as usize % d,
    }
}

/// Up-sampled start row shared by the two- and three-choice arrays:
/// `2·y0 + 2` ones followed by zeros, period `2d`.
fn up_sampled_start(d: usize, y0: usize) -> Result<PeriodicSequence> {
    Ok(initial_sigma(d, y0)?.seq.upsample())
}

/// `T^n p_0` with `T = I + R + R²`.
pub fn trinomial_p_row(d: usize, n: usize, y0: usize) -> Result<PascalArrayRow> {
    let p0 = up_sampled_start(d, y0)?;
    Ok(PascalArrayRow {
        d,
        n,
        y0,
        layer: Layer::P,
        seq: p0.iterate(TransitionKind::Trinomial, n),
    })
}

/// Closed form for `(T^n p_0)_k` with `p_0 = e'_0 + R e'_0`:
/// `Σ_{j=0}^{n} C(n, j) Σ_m C(j + 1, 2dm − j + k)`.
pub fn trinomial_p_entry_closed_form(d: usize, n: usize, k: i64) -> Result<BigInt> {
    check_order(d, 0)?;
    let mut total = BigInt::zero();
    for j in 0..=n {
        let inner = residue_class_sum(j as u64 + 1, k - j as i64, 2 * d as u64);
        if !inner.is_zero() {
            total += binomial(n as u64, j as i64) * inner;
        }
    }
    Ok(total)
}

/// `(T^n p_0)_k`: closed form when `y0 = 0`, operator iteration otherwise.
pub fn trinomial_p_entry(d: usize, n: usize, k: i64, y0: usize) -> Result<BigInt> {
    check_order(d, y0)?;
    if y0 == 0 {
        trinomial_p_entry_closed_form(d, n, k)
    } else {
        Ok(trinomial_p_row(d, n, y0)?.value_at(k).clone())
    }
}

/// Extrema of `T^n p_0`, read on the same diagonals as the two-choice case.
pub fn trinomial_row_extrema(d: usize, n: usize, y0: usize) -> Result<RowExtrema> {
    let p = trinomial_p_row(d, n, y0)?;
    Ok(extrema_on_diagonals(&p.seq, d, n, y0))
}
