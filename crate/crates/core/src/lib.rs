//! Exact lattice-path counts in corridors via circular Pascal arrays.
//!
//! The range (max − min) of row `n` of the circular Pascal array of order
//! `d` equals the number of length-`n` up/down paths in a corridor of width
//! `d − 2`. This crate builds those arrays from shift operators on periodic
//! integer sequences and derives from them:
//!
//! - two-choice corridor counts from any start height ([`corridor`]),
//! - unbounded (one-wall) corridor counts,
//! - three-choice (Motzkin) corridor counts via the trinomial transition,
//! - Krattenthaler–Mohanty band counts `D(a, b; s, t)` ([`km`]).
//!
//! Every count has an independent brute-force oracle, and [`verify`] runs
//! the routes against each other over parameter grids.
//!
//! ```
//! use corridor_paths::corridor::corridor_count;
//! use num_bigint::BigInt;
//!
//! // corridor of width 3: Fibonacci numbers
//! let c: Vec<BigInt> = (0..8).map(|n| corridor_count(3, n, 0).unwrap()).collect();
//! assert_eq!(c, [1, 1, 2, 3, 5, 8, 13, 21].map(BigInt::from));
//! ```

pub mod bfile;
pub mod binomial;
pub mod cli;
pub mod corridor;
pub mod error;
pub mod km;
pub mod pascal;
pub mod periodic_seq;
pub mod verify;

pub use bfile::{Alignment, BFile};
pub use corridor::{CorridorQuery, CorridorResult, DualCorridorState};
pub use error::{Error, Result};
pub use km::KmQuery;
pub use pascal::{Layer, PascalArrayRow, RowExtrema};
pub use periodic_seq::{PeriodicSequence, TransitionKind};
