//! Closed-form spectra of deformed oscillators.
//!
//! Three deformations are supported: `q = e^{iτ}` (phase), `q = e^{τ}`
//! (real) and the Q-deformation with bracket `[x]_Q = (Q^x − 1)/(Q − 1)`.
//! The SU_q(1,1) anharmonic oscillator and its undeformed (modified
//! Pöschl–Teller) limit live here as well.

use core::f64::consts::{FRAC_PI_2, PI};

use libm::{expm1, log1p, sin, sinh};

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::UNDEFORMED_THRESHOLD;

/// Deformation regime together with its parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum Regime {
    /// `q = e^{iτ}`, brackets `sin(τx)/sin(τ)`.
    QPhase { tau: f64 },
    /// `q = e^{τ}`, brackets `sinh(τx)/sinh(τ)`.
    QReal { tau: f64 },
    /// Q-numbers `(Q^x − 1)/(Q − 1)`.
    QBase { q: f64 },
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::QPhase { .. } => "QPhase",
            Regime::QReal { .. } => "QReal",
            Regime::QBase { .. } => "QBase",
        }
    }
}

/// A deformation regime plus the oscillator frequency ω.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct DeformationParam {
    pub regime: Regime,
    pub omega: f64,
}

impl DeformationParam {
    /// `q = e^{iτ}` with `0 < τ < π`. A τ of exactly zero is accepted as the
    /// undeformed oscillator.
    pub fn q_phase(tau: f64, omega: f64) -> Result<Self> {
        require(
            (0.0..PI).contains(&tau),
            "tau",
            tau,
            "phase deformation needs 0 < tau < pi",
        )?;
        Self::with_omega(Regime::QPhase { tau }, omega)
    }

    pub fn q_real(tau: f64, omega: f64) -> Result<Self> {
        require(
            tau >= 0.0 && tau.is_finite(),
            "tau",
            tau,
            "tau must be non-negative",
        )?;
        Self::with_omega(Regime::QReal { tau }, omega)
    }

    pub fn q_base(q: f64, omega: f64) -> Result<Self> {
        require(q > 0.0 && q.is_finite(), "Q", q, "Q must be positive")?;
        Self::with_omega(Regime::QBase { q }, omega)
    }

    fn with_omega(regime: Regime, omega: f64) -> Result<Self> {
        require(
            omega > 0.0 && omega.is_finite(),
            "omega",
            omega,
            "omega must be positive",
        )?;
        Ok(Self { regime, omega })
    }

    /// Energy of level `n` in whichever regime this parameter describes.
    pub fn level(&self, n: u32) -> f64 {
        match self.regime {
            Regime::QPhase { tau } => spectrum_q_phase(n, tau, self.omega),
            Regime::QReal { tau } => spectrum_q_real(n, tau, self.omega),
            Regime::QBase { q } => spectrum_big_q(n, q, self.omega),
        }
    }
}

/// The q-number `[x]` for either q regime.
///
/// Invariant under τ → −τ and odd in x. Returns [`Error::WrongBracket`] for
/// a Q-deformation, which has its own bracket ([`big_q_number`]).
pub fn q_number(x: f64, d: &DeformationParam) -> Result<f64> {
    match d.regime {
        Regime::QPhase { tau } => Ok(q_number_phase(x, tau)),
        Regime::QReal { tau } => Ok(q_number_real(x, tau)),
        Regime::QBase { .. } => Err(Error::WrongBracket),
    }
}

pub fn q_number_phase(x: f64, tau: f64) -> f64 {
    if tau.abs() < UNDEFORMED_THRESHOLD {
        x
    } else {
        sin(tau * x) / sin(tau)
    }
}

pub fn q_number_real(x: f64, tau: f64) -> f64 {
    if tau.abs() < UNDEFORMED_THRESHOLD {
        x
    } else {
        sinh(tau * x) / sinh(tau)
    }
}

/// `[x]_Q = (Q^x − 1)/(Q − 1)`, with the limit `x` at Q = 1.
pub fn big_q_number(x: f64, q: f64) -> f64 {
    if (q - 1.0).abs() < UNDEFORMED_THRESHOLD {
        x
    } else {
        let dq = q - 1.0;
        expm1(x * log1p(dq)) / dq
    }
}

/// `E_n = (ω/2) sin(τ(n+½)) / sin(τ/2)`.
pub fn spectrum_q_phase(n: u32, tau: f64, omega: f64) -> f64 {
    let nu = n as f64 + 0.5;
    if tau.abs() < UNDEFORMED_THRESHOLD {
        return omega * nu;
    }
    0.5 * omega * sin(tau * nu) / sin(0.5 * tau)
}

/// As [`spectrum_q_phase`], but refuses levels past the first monotone branch
/// `τ(n+½) ≤ π/2` where the squeezed spectrum turns over.
pub fn spectrum_q_phase_guarded(n: u32, tau: f64, omega: f64) -> Result<f64> {
    let phase = tau * (n as f64 + 0.5);
    if phase > FRAC_PI_2 {
        return Err(Error::OutsideMonotoneBranch { n, phase });
    }
    Ok(spectrum_q_phase(n, tau, omega))
}

/// `E_n = (ω/2) sinh(τ(n+½)) / sinh(τ/2)`.
pub fn spectrum_q_real(n: u32, tau: f64, omega: f64) -> f64 {
    let nu = n as f64 + 0.5;
    if tau.abs() < UNDEFORMED_THRESHOLD {
        return omega * nu;
    }
    0.5 * omega * sinh(tau * nu) / sinh(0.5 * tau)
}

/// `E_n = (ω/2)([n]_Q + [n+1]_Q)`.
pub fn spectrum_big_q(n: u32, q: f64, omega: f64) -> f64 {
    let n = n as f64;
    0.5 * omega * (big_q_number(n, q) + big_q_number(n + 1.0, q))
}

/// Parameters of the SU_q(1,1) anharmonic oscillator spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Suq11Params {
    /// Energy scale A (> 0 for an increasing spectrum).
    #[cfg_attr(feature = "serde", serde(rename = "A"))]
    pub amplitude: f64,
    pub tau: f64,
    /// N = 2 n_max or 2 n_max + 1, with n_max the last bound level.
    #[cfg_attr(feature = "serde", serde(rename = "N"))]
    pub n_cap: u32,
    #[cfg_attr(feature = "serde", serde(rename = "E0prime"))]
    pub e0_prime: f64,
}

impl Suq11Params {
    pub fn new(amplitude: f64, tau: f64, n_cap: u32, e0_prime: f64) -> Result<Self> {
        require(amplitude > 0.0, "A", amplitude, "A must be positive")?;
        require(
            (0.0..PI).contains(&tau),
            "tau",
            tau,
            "tau must lie in [0, pi)",
        )?;
        require(n_cap > 0, "N", n_cap as f64, "N must be a positive integer")?;
        Ok(Self {
            amplitude,
            tau,
            n_cap,
            e0_prime,
        })
    }

    /// Last level below the dissociation limit for this N.
    pub fn n_max(&self) -> u32 {
        self.n_cap / 2
    }

    pub fn level(&self, n: u32) -> f64 {
        spectrum_suq11(n, self)
    }
}

/// `E_n = E₀′ − A sin(τ(n − N/2)) sin(τ(n + 1 − N/2)) / sin²τ`.
pub fn spectrum_suq11(n: u32, p: &Suq11Params) -> f64 {
    if p.tau.abs() < UNDEFORMED_THRESHOLD {
        return spectrum_pt_limit(n, p.amplitude, p.n_cap, p.e0_prime);
    }
    let half = 0.5 * p.n_cap as f64;
    let n = n as f64;
    let s = sin(p.tau);
    p.e0_prime - p.amplitude * sin(p.tau * (n - half)) * sin(p.tau * (n + 1.0 - half)) / (s * s)
}

/// τ → 0 limit of the SU_q(1,1) spectrum: `E₀′ − A(n − N/2)(n + 1 − N/2)`.
pub fn spectrum_pt_limit(n: u32, amplitude: f64, n_cap: u32, e0_prime: f64) -> f64 {
    let half = 0.5 * n_cap as f64;
    let n = n as f64;
    e0_prime - amplitude * (n - half) * (n + 1.0 - half)
}
