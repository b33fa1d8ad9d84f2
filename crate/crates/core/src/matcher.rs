//! Matching the SU_q(1,1) WKB-equivalent potential to a QES sextic.
//!
//! Equating the x², x⁴ and x⁶ coefficients with `a = 1` gives A, b and
//! `2k + 3` as explicit functions of `(N, τ)`. Physical solutions need
//! `sin(Nτ) > 0` and `6/23 < cos²(Nτ) < 1/3`; the sign of `cos(Nτ)` picks
//! the sign of b. For a target `2k + 3` and a given N, τ is found by
//! bracketed root finding inside the feasibility window.

use core::ops::RangeInclusive;

use alloc::vec::Vec;

use libm::{acos, cos, pow, sin, sqrt};

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::deformed::Suq11Params;
use crate::error::{Error, Result};
use crate::potential::wkb_suq11;
use crate::qes::{qesp_potential, QespParams};
use crate::roots::brent;
use crate::table::Parity;

/// Absolute tolerance on τ for the root finder.
pub const TAU_TOLERANCE: f64 = 1e-12;

/// Sign of the quartic coupling b of the matched sextic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum Branch {
    /// `cos(Nτ) < 0`: single central well.
    #[cfg_attr(feature = "serde", serde(rename = "pos"))]
    BPositive,
    /// `cos(Nτ) > 0`: central well flanked by deeper side wells.
    #[cfg_attr(feature = "serde", serde(rename = "neg"))]
    BNegative,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::BPositive => "pos",
            Branch::BNegative => "neg",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct FeasibilityWindow {
    pub lower: f64,
    pub upper: f64,
    /// The `l` of the `2πl` shift.
    pub period_offset: u32,
}

impl FeasibilityWindow {
    /// Strict membership of `Nτ`.
    pub fn contains(&self, n_tau: f64) -> bool {
        n_tau > self.lower && n_tau < self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Open interval of Nτ satisfying all feasibility conditions for a branch,
/// shifted by `2πl`.
pub fn feasibility_window(branch: Branch, l: u32) -> FeasibilityWindow {
    let c_hi = sqrt(1.0 / 3.0);
    let c_lo = sqrt(6.0 / 23.0);
    let (lower, upper) = match branch {
        Branch::BPositive => (acos(-c_lo), acos(-c_hi)),
        Branch::BNegative => (acos(c_hi), acos(c_lo)),
    };
    let shift = 2.0 * core::f64::consts::PI * l as f64;
    FeasibilityWindow {
        lower: lower + shift,
        upper: upper + shift,
        period_offset: l,
    }
}

fn trig(n_cap: u32, tau: f64) -> Result<(f64, f64, f64)> {
    let n_tau = n_cap as f64 * tau;
    let (s, c) = (sin(n_tau), cos(n_tau));
    let d = 23.0 * c * c - 6.0;
    if !(s > 0.0 && d > 0.0 && tau > 0.0) {
        return Err(Error::Infeasible { n_tau });
    }
    Ok((s, c, d))
}

/// The value of `2k + 3` implied by `(N, τ)`.
pub fn k_of(n_cap: u32, tau: f64) -> Result<f64> {
    let (s, c, d) = trig(n_cap, tau)?;
    Ok(-1.5 * sqrt(5.0) * s * (18.0 * c * c - 6.0) / (tau * pow(d, 1.5)))
}

/// `(A, b)` implied by `(N, τ)` with `a = 1`.
pub fn ab_of(n_cap: u32, tau: f64) -> Result<(f64, f64)> {
    let (s, c, d) = trig(n_cap, tau)?;
    let st = sin(tau);
    let amplitude = sqrt(6.0 * sqrt(5.0)) * st * st / (pow(tau, 1.5) * sqrt(s) * pow(d, 0.25));
    let b = -sqrt(7.5 * sqrt(5.0)) * sqrt(s) * c / (sqrt(tau) * pow(d, 0.75));
    Ok((amplitude, b))
}

/// `E₀′` that puts the bottom of the WKB-equivalent potential at zero.
pub fn e0prime_of(n_cap: u32, tau: f64, amplitude: f64) -> f64 {
    let st = sin(tau);
    amplitude * (cos(tau) - cos(n_cap as f64 * tau)) / (2.0 * st * st)
}

/// Relative mismatch of the x², x⁴, x⁶ coefficients between the matched
/// WKB-equivalent potential and the target sextic.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Residuals {
    pub c2: f64,
    pub c4: f64,
    pub c6: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        self.c2.max(self.c4).max(self.c6)
    }
}

/// A solved SU_q(1,1) parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct MatchSolution {
    #[cfg_attr(feature = "serde", serde(rename = "N"))]
    pub n_cap: u32,
    pub tau: f64,
    #[cfg_attr(feature = "serde", serde(rename = "A"))]
    pub amplitude: f64,
    pub b: f64,
    #[cfg_attr(feature = "serde", serde(rename = "E0prime"))]
    pub e0_prime: f64,
    pub branch: Branch,
    /// The matched `2k + 3`.
    pub k_target: u32,
    pub residuals: Residuals,
}

impl MatchSolution {
    pub fn suq11(&self) -> Suq11Params {
        Suq11Params {
            amplitude: self.amplitude,
            tau: self.tau,
            n_cap: self.n_cap,
            e0_prime: self.e0_prime,
        }
    }

    /// The QES sextic this solution reproduces up to x⁶.
    pub fn qesp(&self) -> QespParams {
        let k = (self.k_target - 3) / 2;
        QespParams {
            a: 1.0,
            b: self.b,
            n: k / 2,
            parity: Parity::from_r(k % 2),
        }
    }

    pub fn n_tau(&self) -> f64 {
        self.n_cap as f64 * self.tau
    }
}

/// Every solution over an N range plus the N values that had none.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatchOutcome {
    pub solutions: Vec<MatchSolution>,
    pub skipped: Vec<(u32, Error)>,
}

impl MatchOutcome {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn smallest_n(&self) -> Option<&MatchSolution> {
        self.solutions.first()
    }

    pub fn for_n(&self, n_cap: u32) -> Option<&MatchSolution> {
        self.solutions.iter().find(|s| s.n_cap == n_cap)
    }
}

/// N scanned when the caller gives none.
pub fn default_n_range() -> RangeInclusive<u32> {
    3..=1000
}

const MONOTONE_SAMPLES: usize = 64;
const SCAN_SAMPLES: usize = 512;

/// Solves for τ at a single N.
pub fn solve_match_at(
    n: u32,
    parity: Parity,
    branch: Branch,
    n_cap: u32,
    l: u32,
) -> Result<MatchSolution> {
    let qes = QespParams::unit(0.0, n, parity)?;
    let target = qes.two_k_plus_3();
    let window = feasibility_window(branch, l);
    let nf = n_cap as f64;
    let inset = 1e-9 * window.width();
    let lo = (window.lower + inset) / nf;
    let hi = (window.upper - inset) / nf;
    let f = |tau: f64| {
        k_of(n_cap, tau)
            .map(|k| k - target as f64)
            .unwrap_or(f64::NAN)
    };

    let (lo, hi) = if is_monotone(&f, lo, hi) {
        (lo, hi)
    } else {
        scan_for_bracket(&f, lo, hi).ok_or(Error::NoBracket { lo, hi })?
    };
    let tau = brent(f, lo, hi, TAU_TOLERANCE)?;
    if !window.contains(nf * tau) {
        return Err(Error::Infeasible { n_tau: nf * tau });
    }

    let (amplitude, b) = ab_of(n_cap, tau)?;
    let e0_prime = e0prime_of(n_cap, tau, amplitude);
    let suq = Suq11Params {
        amplitude,
        tau,
        n_cap,
        e0_prime,
    };
    let wkb = wkb_suq11(&suq, 6)?;
    let target_pot = qesp_potential(&QespParams::unit(b, n, parity)?);
    let rel = |p: u32| (wkb.coeff(p) - target_pot.coeff(p)).abs() / target_pot.coeff(p).abs();
    Ok(MatchSolution {
        n_cap,
        tau,
        amplitude,
        b,
        e0_prime,
        branch,
        k_target: target,
        residuals: Residuals {
            c2: rel(2),
            c4: rel(4),
            c6: rel(6),
        },
    })
}

/// Solves for every N in `n_range`, in ascending N.
pub fn solve_match(
    n: u32,
    parity: Parity,
    branch: Branch,
    n_range: RangeInclusive<u32>,
    l: u32,
) -> MatchOutcome {
    let mut out = MatchOutcome::default();
    for n_cap in n_range.filter(|&n_cap| n_cap > 0) {
        match solve_match_at(n, parity, branch, n_cap, l) {
            Ok(s) => out.solutions.push(s),
            Err(e) => out.skipped.push((n_cap, e)),
        }
    }
    out
}

fn sample<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    count: usize,
) -> impl Iterator<Item = (f64, f64)> + '_ {
    (0..=count).map(move |i| {
        let x = lo + (hi - lo) * i as f64 / count as f64;
        (x, f(x))
    })
}

fn is_monotone<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> bool {
    let values: Vec<f64> = sample(f, lo, hi, MONOTONE_SAMPLES)
        .map(|(_, y)| y)
        .collect();
    if values.iter().any(|v| !v.is_finite()) {
        return false;
    }
    let increasing = values.windows(2).all(|w| w[1] > w[0]);
    let decreasing = values.windows(2).all(|w| w[1] < w[0]);
    increasing || decreasing
}

fn scan_for_bracket<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Option<(f64, f64)> {
    let points: Vec<(f64, f64)> = sample(f, lo, hi, SCAN_SAMPLES)
        .filter(|(_, y)| y.is_finite())
        .collect();
    points
        .windows(2)
        .find(|w| w[0].1.signum() != w[1].1.signum())
        .map(|w| (w[0].0, w[1].0))
}
