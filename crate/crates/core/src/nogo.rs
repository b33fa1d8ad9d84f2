//! Infeasibility verdicts for oscillators whose WKB-equivalent potentials
//! cannot be matched to a QES sextic.
//!
//! Each check evaluates the closed-form would-be parameters and names the
//! constraint they violate:
//!
//! | model          | would-be values             | violated            |
//! |----------------|-----------------------------|---------------------|
//! | q, `e^{iτ}`    | `8a² < 0`                   | `a_squared_nonnegative` |
//! | q, `e^{τ}`     | `a > 0`, `2k+3 = −√(15/2)/τ`| `two_k_plus_3_positive` |
//! | Q              | both sign choices           | `a_positive` or `two_k_plus_3_positive` |
//! | Pöschl–Teller  | `2k+3 = −(18/17)√(5/17)`    | `two_k_plus_3_positive` |

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use libm::{log, pow, sin, sinh, sqrt};

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{require, Result};

pub const A_SQUARED_NONNEGATIVE: &str = "a_squared_nonnegative";
pub const A_POSITIVE: &str = "a_positive";
pub const TWO_K_PLUS_3_POSITIVE: &str = "two_k_plus_3_positive";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Model {
    QPhase,
    QReal,
    QBase,
    PoschlTeller,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Model::QPhase => "q-phase",
            Model::QReal => "q-real",
            Model::QBase => "q-base",
            Model::PoschlTeller => "poschl-teller",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct NoGoVerdict {
    pub model: Model,
    pub violated_constraint: String,
    pub computed_values: BTreeMap<String, f64>,
    pub feasible: bool,
}

impl NoGoVerdict {
    fn infeasible(model: Model, violated: &str, values: &[(&str, f64)]) -> Self {
        Self {
            model,
            violated_constraint: violated.to_string(),
            computed_values: values.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            feasible: false,
        }
    }

    pub fn value(&self, key: &str) -> Option<f64> {
        self.computed_values.get(key).copied()
    }
}

/// `8a² = −τ⁶ω⁴ / (240 sin⁴(τ/2))`, required by the x⁶ coefficient.
pub fn q_phase_required_a_squared_times_8(omega: f64, tau: f64) -> f64 {
    let s = sin(0.5 * tau);
    -pow(tau, 6.0) * pow(omega, 4.0) / (240.0 * s * s * s * s)
}

/// q-oscillator with `q = e^{iτ}`: no x⁴ term forces b = 0 and the x⁶
/// coefficient would need a negative a².
pub fn check_q_phase(omega: f64, tau: f64) -> Result<NoGoVerdict> {
    require(omega > 0.0, "omega", omega, "omega must be positive")?;
    require(
        tau > 0.0 && tau < core::f64::consts::PI,
        "tau",
        tau,
        "need 0 < tau < pi",
    )?;
    let eight_a2 = q_phase_required_a_squared_times_8(omega, tau);
    debug_assert!(eight_a2 < 0.0);
    Ok(NoGoVerdict::infeasible(
        Model::QPhase,
        A_SQUARED_NONNEGATIVE,
        &[("8a^2", eight_a2), ("b", 0.0)],
    ))
}

/// q-oscillator with `q = e^{τ}`: a is fine but `2k + 3 = −√(15/2)/τ`.
pub fn check_q_real(omega: f64, tau: f64) -> Result<NoGoVerdict> {
    require(omega > 0.0, "omega", omega, "omega must be positive")?;
    require(tau > 0.0 && tau.is_finite(), "tau", tau, "need tau > 0")?;
    let sh = sinh(0.5 * tau);
    let a = pow(tau, 3.0) * omega * omega / (8.0 * sqrt(30.0) * sh * sh);
    let two_k_plus_3 = -sqrt(7.5) / tau;
    Ok(NoGoVerdict::infeasible(
        Model::QReal,
        TWO_K_PLUS_3_POSITIVE,
        &[("a", a), ("b", 0.0), ("2k+3", two_k_plus_3)],
    ))
}

/// Q-oscillator: for each sign choice either `a ≤ 0` or `2k + 3 < 0`.
pub fn check_big_q(omega: f64, q: f64) -> Result<NoGoVerdict> {
    require(omega > 0.0, "omega", omega, "omega must be positive")?;
    require(
        q > 0.0 && q.is_finite() && q != 1.0,
        "Q",
        q,
        "need Q > 0, Q != 1",
    )?;
    let ln_q = log(q);
    let ratio = (q + 1.0) / (q - 1.0);
    let a_mag = 0.5 * sqrt(23.0 / 45.0) * pow(ln_q, 3.0) / q * ratio * ratio * omega * omega;
    let b_mag = 0.5 * sqrt(5.0 / 23.0) * ln_q / sqrt(q) * ratio * omega;
    let k_mag = 27.0 / 23.0 * sqrt(5.0 / 23.0) / ln_q;

    // upper sign: (a, b, 2k+3) = (+a_mag, −b_mag, −k_mag); lower sign flips all three
    let mut violations = [""; 2];
    for (slot, sign) in [1.0f64, -1.0].into_iter().enumerate() {
        let a = sign * a_mag;
        let k = -sign * k_mag;
        violations[slot] = if a <= 0.0 {
            A_POSITIVE
        } else if k <= 0.0 {
            TWO_K_PLUS_3_POSITIVE
        } else {
            ""
        };
    }
    let mut violated = String::from("upper:");
    violated.push_str(violations[0]);
    violated.push_str(",lower:");
    violated.push_str(violations[1]);
    Ok(NoGoVerdict::infeasible(
        Model::QBase,
        &violated,
        &[
            ("a_upper", a_mag),
            ("b_upper", -b_mag),
            ("2k+3_upper", -k_mag),
            ("a_lower", -a_mag),
            ("b_lower", b_mag),
            ("2k+3_lower", k_mag),
        ],
    ))
}

/// `2k + 3` for the Pöschl–Teller match, independent of A.
pub fn pt_two_k_plus_3() -> f64 {
    -18.0 / 17.0 * sqrt(5.0 / 17.0)
}

/// Modified Pöschl–Teller potential (Taylor series with N = 1).
pub fn check_pt(amplitude: f64) -> Result<NoGoVerdict> {
    require(amplitude > 0.0, "A", amplitude, "A must be positive")?;
    let a = sqrt(17.0 / 5.0) * amplitude * amplitude / 6.0;
    let b = -sqrt(5.0 / 17.0) * amplitude / 2.0;
    Ok(NoGoVerdict::infeasible(
        Model::PoschlTeller,
        TWO_K_PLUS_3_POSITIVE,
        &[("a", a), ("b", b), ("2k+3", pt_two_k_plus_3())],
    ))
}
