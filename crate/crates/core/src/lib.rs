//! Numerical core for deformed oscillators and quasi-exactly soluble (QES)
//! sextic potentials.
//!
//! The crate covers four connected pieces:
//!
//! * closed-form spectra of the q-deformed, Q-deformed and SU_q(1,1)
//!   anharmonic oscillators ([`deformed`]),
//! * their WKB-equivalent potentials as truncated even power series
//!   ([`potential`]),
//! * the QES sextic family `8a²x⁶ + 8abx⁴ + 2[b² − (2k+3)a]x²` and its
//!   exactly known levels ([`qes`]),
//! * the coefficient matching between the two ([`matcher`]) and the
//!   infeasibility verdicts for the oscillators that cannot be matched
//!   ([`nogo`]).
//!
//! A finite-difference Schrödinger solver ([`oracle`]) provides an
//! independent check of every level computed here.
//!
//! Units are ħ = m = 1 throughout, with `H = −½ d²/dx² + V(x)`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod deformed;
pub mod error;
pub mod linalg;
pub mod matcher;
pub mod nogo;
pub mod oracle;
pub mod poly;
pub mod potential;
pub mod qes;
pub mod roots;
pub mod table;

pub use deformed::{DeformationParam, Regime, Suq11Params};
pub use error::{Error, Result};
pub use matcher::{Branch, FeasibilityWindow, MatchOutcome, MatchSolution};
pub use nogo::{Model, NoGoVerdict};
pub use oracle::{GridSpec, OracleResult, Potential};
pub use potential::EvenPolynomialPotential;
pub use qes::QespParams;
pub use table::{EnergyRow, EnergyTable, Parity, Provenance};

/// Below this magnitude a deformation (τ or Q − 1) is treated as absent and
/// the analytic undeformed branch is used.
pub const UNDEFORMED_THRESHOLD: f64 = 1e-12;
