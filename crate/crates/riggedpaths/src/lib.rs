//! Exact combinatorics of level-restricted lattice paths, two-row standard
//! tableaux, and rigged configurations.
//!
//! The crate implements three models of the same finite set and the maps
//! between them:
//!
//! * **paths**: 0/1 lattice words whose prefix height profile stays inside
//!   a strip of a fixed level, graded by an energy statistic;
//! * **tableaux**: standard Young tableaux, graded by the Thomas statistic
//!   `p` and by charge;
//! * **rigged**: rigged configurations (partitions whose rows carry integer
//!   riggings bounded by vacancy numbers), graded by quasi-particle momentum.
//!
//! The [`kkr`] module carries the weight-preserving bijection between words
//! and rigged configurations in both directions, and [`identity`] packages
//! the resulting polynomial identities: the generating function of energy
//! over paths equals a fermionic sum of Gaussian binomials over riggings,
//! coefficient by coefficient, in exact integer arithmetic.
//!
//! Everything is exact: coefficients are `i64` with checked arithmetic,
//! Gaussian binomials come from the q-Pascal recurrence, and no floating
//! point appears anywhere.

pub mod error;
pub mod identity;
pub mod kkr;
pub mod paths;
pub mod qseries;
pub mod rigged;
pub mod tableaux;

pub use error::{Error, Result};
pub use identity::{IdentityReport, KrReport};
pub use paths::{HeightSequence, LatticeWord};
pub use qseries::QPolynomial;
pub use rigged::{HalfInt, RiggedConfiguration, RiggedRow, StringContent};
pub use tableaux::StandardTableau;
