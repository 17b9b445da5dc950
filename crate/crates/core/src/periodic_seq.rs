//! Integer sequences indexed by all of ℤ with a finite declared period.
//!
//! Every operator used for the Pascal arrays and corridor states is a
//! polynomial in the right shift `R`, so all of them act on the stored
//! window directly and return a fresh sequence with the same period (the
//! up-sampler being the one exception, which doubles it).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};

/// A sequence `(x_k)_{k ∈ ℤ}` with `x_{k+P} = x_k`, stored as the window
/// `x_0, …, x_{P−1}`.
///
/// The declared period is never reduced to a minimal one: two sequences are
/// equal only if their periods and windows agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSequence {
    window: Vec<BigInt>,
}

/// Which one-step transition to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransitionKind {
    /// `I + R`, the circular Pascal rule.
    Pascal,
    /// `L + R`, the dual-corridor step.
    Corridor,
    /// `I + R + R²`, the three-choice rule.
    Trinomial,
}

impl PeriodicSequence {
    pub fn new(period: usize, window: Vec<BigInt>) -> Result<Self> {
        if period == 0 {
            return Err(invalid("period must be at least 1"));
        }
        if window.len() != period {
            return Err(invalid(format!(
                "window has {} entries but period is {}",
                window.len(),
                period
            )));
        }
        Ok(Self { window })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64s(period: usize, window: &[i64]) -> Result<Self> {
        Self::new(period, window.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// The periodic unit vector: 1 at every multiple of `period`, 0 elsewhere.
    pub fn unit_vector(period: usize) -> Result<Self> {
        if period == 0 {
            return Err(invalid("period must be at least 1"));
        }
        let mut window = vec![BigInt::zero(); period];
        window[0] = BigInt::one();
        Ok(Self { window })
    }

    pub fn zeros(period: usize) -> Result<Self> {
        if period == 0 {
            return Err(invalid("period must be at least 1"));
        }
        Ok(Self {
            window: vec![BigInt::zero(); period],
        })
    }

    pub fn period(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[BigInt] {
        &self.window
    }

    pub fn into_window(self) -> Vec<BigInt> {
        self.window
    }

    fn slot(&self, k: i64) -> usize {
        k.rem_euclid(self.period() as i64) as usize
    }

    pub fn value_at(&self, k: i64) -> &BigInt {
        &self.window[self.slot(k)]
    }

    pub fn window_sum(&self) -> BigInt {
        self.window.iter().sum()
    }

    /// `R^by`; negative `by` shifts left.
    pub fn shift(&self, by: i64) -> Self {
        let p = self.period();
        let window = (0..p as i64)
            .map(|k| self.value_at(k - by).clone())
            .collect();
        Self { window }
    }

    /// `R`: `(Rx)_k = x_{k−1}`.
    pub fn shift_right(&self) -> Self {
        self.shift(1)
    }

    /// `L = R⁻¹`: `(Lx)_k = x_{k+1}`.
    pub fn shift_left(&self) -> Self {
        self.shift(-1)
    }

    /// `D = I − L`: `(Dx)_k = x_k − x_{k+1}`.
    pub fn difference(&self) -> Self {
        let window = (0..self.period() as i64)
            .map(|k| self.value_at(k) - self.value_at(k + 1))
            .collect();
        Self { window }
    }

    /// `U`: `(Ux)_k = x_{⌊k/2⌋}`, doubling the period.
    pub fn upsample(&self) -> Self {
        let window = self
            .window
            .iter()
            .flat_map(|v| [v.clone(), v.clone()])
            .collect();
        Self { window }
    }

    /// Apply `Σ_j R^{offset_j}` for the given shift offsets.
    pub fn apply_shift_sum(&self, offsets: &[i64]) -> Self {
        let p = self.period() as i64;
        let window = (0..p)
            .map(|k| offsets.iter().map(|&o| self.value_at(k - o)).sum())
            .collect();
        Self { window }
    }

    pub fn transition(&self, kind: TransitionKind) -> Self {
        match kind {
            TransitionKind::Pascal => self.apply_shift_sum(&[0, 1]),
            TransitionKind::Corridor => self.apply_shift_sum(&[-1, 1]),
            TransitionKind::Trinomial => self.apply_shift_sum(&[0, 1, 2]),
        }
    }

    /// Apply `transition(kind)` `times` times.
    pub fn iterate(&self, kind: TransitionKind, times: usize) -> Self {
        let mut cur = self.clone();
        for _ in 0..times {
            cur = cur.transition(kind);
        }
        cur
    }

    fn check_period(&self, other: &Self) -> Result<()> {
        if self.period() != other.period() {
            return Err(Error::PeriodMismatch {
                left: self.period(),
                right: other.period(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_period(other)?;
        let window = self
            .window
            .iter()
            .zip(&other.window)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { window })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_period(other)?;
        let window = self
            .window
            .iter()
            .zip(&other.window)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { window })
    }

    pub fn neg(&self) -> Self {
        Self {
            window: self.window.iter().map(|v| -v).collect(),
        }
    }

    pub fn max_value(&self) -> &BigInt {
        self.window.iter().max().expect("period >= 1")
    }

    pub fn min_value(&self) -> &BigInt {
        self.window.iter().min().expect("period >= 1")
    }
}

impl fmt::Debug for PeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodicSequence(P={}; ", self.period())?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}
