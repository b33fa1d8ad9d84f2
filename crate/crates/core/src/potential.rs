//! WKB-equivalent potentials as truncated even power series.
//!
//! Every series is expanded to plain coefficients of `x^p` when it is built,
//! so downstream code only ever sees an [`EvenPolynomialPotential`]. Bracket
//! coefficients are kept as exact rationals and evaluated on construction.

use alloc::collections::BTreeMap;

use libm::{log, sin, sinh, sqrt, tanh};

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::deformed::Suq11Params;
use crate::error::{require, Error, Result};
use crate::UNDEFORMED_THRESHOLD;

/// Highest power of x any potential in this crate carries.
pub const MAX_ORDER: u32 = 12;

/// `V(x) = v_min + Σ c_p x^p` over even p in 2..=12.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct EvenPolynomialPotential {
    pub v_min: f64,
    pub coeffs: BTreeMap<u32, f64>,
    pub truncation_order: u32,
}

impl EvenPolynomialPotential {
    pub fn new(v_min: f64, truncation_order: u32) -> Result<Self> {
        check_order(truncation_order)?;
        Ok(Self {
            v_min,
            coeffs: BTreeMap::new(),
            truncation_order,
        })
    }

    pub fn from_coeffs<I>(v_min: f64, coeffs: I, truncation_order: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, f64)>,
    {
        let mut pot = Self::new(v_min, truncation_order)?;
        for (p, c) in coeffs {
            pot.set_coeff(p, c)?;
        }
        Ok(pot)
    }

    /// Checks the invariants of a value built outside the constructors
    /// (e.g. deserialized).
    pub fn validate(&self) -> Result<()> {
        check_order(self.truncation_order)?;
        for &p in self.coeffs.keys() {
            if p % 2 != 0 || p < 2 || p > self.truncation_order {
                return Err(Error::InvalidPower(p));
            }
        }
        Ok(())
    }

    pub fn set_coeff(&mut self, power: u32, value: f64) -> Result<()> {
        if !power.is_multiple_of(2) || !(2..=MAX_ORDER).contains(&power) {
            return Err(Error::InvalidPower(power));
        }
        if power > self.truncation_order {
            return Err(Error::TruncationOrder(power));
        }
        self.coeffs.insert(power, value);
        Ok(())
    }

    /// Coefficient of `x^power`; zero when absent.
    pub fn coeff(&self, power: u32) -> f64 {
        self.coeffs.get(&power).copied().unwrap_or(0.0)
    }

    /// Drops every term above `order`.
    pub fn truncated(&self, order: u32) -> Result<Self> {
        check_order(order)?;
        Ok(Self {
            v_min: self.v_min,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&p, _)| p <= order)
                .map(|(&p, &c)| (p, c))
                .collect(),
            truncation_order: order,
        })
    }

    /// Highest power with a non-zero coefficient.
    pub fn leading(&self) -> Option<(u32, f64)> {
        self.coeffs
            .iter()
            .rev()
            .find(|(_, &c)| c != 0.0)
            .map(|(&p, &c)| (p, c))
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        // Horner in x² keeps V(x) == V(−x) bit for bit.
        let x2 = x * x;
        let mut acc = 0.0;
        for p in (2..=MAX_ORDER).rev().step_by(2) {
            acc = acc * x2 + self.coeff(p);
        }
        self.v_min + acc * x2
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(&p, &c)| p as f64 * c * libm::pow(x, (p - 1) as f64))
            .sum()
    }

    /// Builds `v_min + c₂ x² [Σ β_j (x/ℓ)^j]` from bracket terms `(j, β_j)`.
    /// `inv_len_sq` is `1/ℓ²` and may be negative (imaginary ℓ).
    fn from_bracket(
        v_min: f64,
        x2_coeff: f64,
        inv_len_sq: f64,
        bracket: &[(u32, f64)],
        order: u32,
    ) -> Result<Self> {
        let mut pot = Self::new(v_min, order)?;
        for &(j, beta) in bracket {
            let power = 2 + j;
            if power > order {
                continue;
            }
            let scale = libm::pow(inv_len_sq, (j / 2) as f64);
            pot.coeffs.insert(power, x2_coeff * beta * scale);
        }
        Ok(pot)
    }
}

fn check_order(order: u32) -> Result<()> {
    if (2..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::TruncationOrder(order))
    }
}

/// Which length a [`LengthScale`] stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub enum ScaleKind {
    /// R_e of the phase q-oscillator.
    Re,
    /// R_h of the real q-oscillator.
    Rh,
    /// R′ of the Q-oscillator.
    RPrime,
    /// `ℏ/√(2mA)`, the length for which `u = x/ℓ`.
    U,
}

/// A characteristic length stored through its square.
///
/// For the Q-oscillator with Q < 1 the square of R′ is negative (R′ is
/// imaginary); only even powers of `x/R′` enter the series so the potential
/// stays real.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct LengthScale {
    pub squared: f64,
    pub kind: ScaleKind,
}

impl LengthScale {
    /// The real length, when there is one.
    pub fn value(&self) -> Option<f64> {
        (self.squared > 0.0).then(|| sqrt(self.squared))
    }

    pub fn re(tau: f64, omega: f64) -> Self {
        Self {
            squared: sin(0.5 * tau) / (omega * tau * tau),
            kind: ScaleKind::Re,
        }
    }

    pub fn rh(tau: f64, omega: f64) -> Self {
        Self {
            squared: sinh(0.5 * tau) / (omega * tau * tau),
            kind: ScaleKind::Rh,
        }
    }

    pub fn r_prime(q: f64, omega: f64) -> Self {
        let ln_q = log(q);
        Self {
            squared: sqrt(q) * (q - 1.0) / (omega * (q + 1.0)) / (2.0 * ln_q * ln_q),
            kind: ScaleKind::RPrime,
        }
    }

    pub fn u(amplitude: f64) -> Self {
        Self {
            squared: 1.0 / (2.0 * amplitude),
            kind: ScaleKind::U,
        }
    }
}

const Q_PHASE_BRACKET: [(u32, f64); 4] = [
    (0, 1.0),
    (4, -8.0 / 15.0),
    (8, 4448.0 / 1575.0),
    (12, -345344.0 / 675675.0),
];

const Q_REAL_BRACKET: [(u32, f64); 4] = [
    (0, 1.0),
    (4, 8.0 / 15.0),
    (8, 4448.0 / 1575.0),
    (12, 345344.0 / 675675.0),
];

const Q_BASE_BRACKET: [(u32, f64); 5] = [
    (0, 1.0),
    (2, -2.0 / 3.0),
    (4, 23.0 / 45.0),
    (6, -134.0 / 315.0),
    (8, 5297.0 / 14172.0),
];

const PT_BRACKET: [(u32, f64); 4] = [
    (0, 1.0),
    (2, -2.0 / 3.0),
    (4, 17.0 / 45.0),
    (6, -62.0 / 315.0),
];

/// Bracket coefficients of the phase q-oscillator series, in powers of `x/(2R_e)`.
pub fn q_phase_bracket() -> [(u32, f64); 4] {
    Q_PHASE_BRACKET
}

pub fn q_real_bracket() -> [(u32, f64); 4] {
    Q_REAL_BRACKET
}

pub fn q_base_bracket() -> [(u32, f64); 5] {
    Q_BASE_BRACKET
}

pub fn pt_bracket() -> [(u32, f64); 4] {
    PT_BRACKET
}

fn harmonic(v_min: f64, x2_coeff: f64, order: u32) -> Result<EvenPolynomialPotential> {
    EvenPolynomialPotential::from_bracket(v_min, x2_coeff, 0.0, &[(0, 1.0)], order)
}

/// WKB-equivalent potential of the q-oscillator with `q = e^{iτ}`.
///
/// The bracket has only `u⁴`, `u⁸`, `u¹²` corrections with `u = x/(2R_e)`, so
/// the expansion contains `x²`, `x⁶`, `x¹⁰` (the `x¹⁴` term is past the
/// representable order and dropped).
pub fn wkb_q_phase(omega: f64, tau: f64, order: u32) -> Result<EvenPolynomialPotential> {
    check_order(order)?;
    require(omega > 0.0, "omega", omega, "omega must be positive")?;
    require(
        (0.0..core::f64::consts::PI).contains(&tau),
        "tau",
        tau,
        "phase deformation needs 0 < tau < pi",
    )?;
    if tau < UNDEFORMED_THRESHOLD {
        return harmonic(0.0, 0.5 * omega * omega, order);
    }
    let g = tau / (2.0 * sin(0.5 * tau));
    let len = LengthScale::re(tau, omega);
    EvenPolynomialPotential::from_bracket(
        0.0,
        g * g * 0.5 * omega * omega,
        1.0 / (4.0 * len.squared),
        &Q_PHASE_BRACKET,
        order,
    )
}

/// WKB-equivalent potential of the q-oscillator with `q = e^{τ}`;
/// `u = x/(2R_h)` and every bracket term is positive.
pub fn wkb_q_real(omega: f64, tau: f64, order: u32) -> Result<EvenPolynomialPotential> {
    check_order(order)?;
    require(omega > 0.0, "omega", omega, "omega must be positive")?;
    require(
        tau >= 0.0 && tau.is_finite(),
        "tau",
        tau,
        "tau must be non-negative",
    )?;
    if tau < UNDEFORMED_THRESHOLD {
        return harmonic(0.0, 0.5 * omega * omega, order);
    }
    let g = tau / (2.0 * sinh(0.5 * tau));
    let len = LengthScale::rh(tau, omega);
    EvenPolynomialPotential::from_bracket(
        0.0,
        g * g * 0.5 * omega * omega,
        1.0 / (4.0 * len.squared),
        &Q_REAL_BRACKET,
        order,
    )
}

/// Bottom of the Q-oscillator WKB-equivalent potential,
/// `ω(√Q − 1) / (2√Q(√Q + 1))`.
pub fn q_base_v_min(omega: f64, q: f64) -> f64 {
    let s = sqrt(q);
    omega * (s - 1.0) / (2.0 * s * (s + 1.0))
}

/// WKB-equivalent potential of the Q-deformed oscillator, taken verbatim.
///
/// As Q → 1 the prefactor `((ln Q)²/Q)((Q+1)/(Q−1))²` tends to 4, so the
/// undeformed limit of this series is `2ω²x²`.
pub fn wkb_big_q(omega: f64, q: f64, order: u32) -> Result<EvenPolynomialPotential> {
    check_order(order)?;
    require(omega > 0.0, "omega", omega, "omega must be positive")?;
    require(q > 0.0 && q.is_finite(), "Q", q, "Q must be positive")?;
    if (q - 1.0).abs() < UNDEFORMED_THRESHOLD {
        return harmonic(0.0, 2.0 * omega * omega, order);
    }
    let ln_q = log(q);
    let ratio = (q + 1.0) / (q - 1.0);
    let x2 = ln_q * ln_q / q * ratio * ratio * 0.5 * omega * omega;
    let len = LengthScale::r_prime(q, omega);
    EvenPolynomialPotential::from_bracket(
        q_base_v_min(omega, q),
        x2,
        1.0 / len.squared,
        &Q_BASE_BRACKET,
        order,
    )
}

/// `V_min = E₀′ − A(cos τ − cos Nτ) / (2 sin²τ)`, with its τ → 0 limit
/// `E₀′ − A(N² − 1)/4`.
pub fn suq11_v_min(p: &Suq11Params) -> f64 {
    let n = p.n_cap as f64;
    if p.tau.abs() < UNDEFORMED_THRESHOLD {
        return p.e0_prime - p.amplitude * (n * n - 1.0) / 4.0;
    }
    let s = sin(p.tau);
    p.e0_prime - p.amplitude * (libm::cos(p.tau) - libm::cos(n * p.tau)) / (2.0 * s * s)
}

/// WKB-equivalent potential of the SU_q(1,1) anharmonic oscillator, expanded
/// in powers of x with `u = √(2A) x`. The series stops at `u⁸`.
pub fn wkb_suq11(p: &Suq11Params, order: u32) -> Result<EvenPolynomialPotential> {
    check_order(order)?;
    require(p.amplitude > 0.0, "A", p.amplitude, "A must be positive")?;
    let n = p.n_cap as f64;
    let a = p.amplitude;
    let v_min = suq11_v_min(p);
    let len = LengthScale::u(a);
    if p.tau.abs() < UNDEFORMED_THRESHOLD {
        return pt_taylor(a, p.n_cap, v_min, order);
    }
    let tau = p.tau;
    let s2 = sin(tau) * sin(tau);
    let c = libm::cos(n * tau);
    let g = tau * sin(n * tau) / s2;
    let t2 = tau * tau / s2;
    let bracket = [
        (0, 1.0),
        (2, -2.0 / 3.0 * t2 * c),
        (4, 1.0 / 45.0 * t2 * t2 * (23.0 * c * c - 6.0)),
        (6, -2.0 / 315.0 * t2 * t2 * t2 * (67.0 * c * c - 36.0) * c),
    ];
    // (A/4) g² u² = (A/4) g² (2A) x²
    EvenPolynomialPotential::from_bracket(
        v_min,
        0.25 * a * g * g / len.squared,
        1.0 / len.squared,
        &bracket,
        order,
    )
}

/// Taylor series of the modified Pöschl–Teller potential
/// `v_min + (A N²/4) tanh²(√(2A) x)`.
///
/// The `N²` factor matches the closed form; with `N = 1` this is the bare
/// bracket `(A/4)u²[1 − (2/3)u² + (17/45)u⁴ − (62/315)u⁶]`.
pub fn pt_taylor(
    amplitude: f64,
    n_cap: u32,
    v_min: f64,
    order: u32,
) -> Result<EvenPolynomialPotential> {
    check_order(order)?;
    require(amplitude > 0.0, "A", amplitude, "A must be positive")?;
    let n = n_cap as f64;
    let len = LengthScale::u(amplitude);
    EvenPolynomialPotential::from_bracket(
        v_min,
        0.25 * amplitude * n * n / len.squared,
        1.0 / len.squared,
        &PT_BRACKET,
        order,
    )
}

/// Closed-form modified Pöschl–Teller potential.
pub fn pt_closed(amplitude: f64, n_cap: u32, v_min: f64, x: f64) -> f64 {
    let n = n_cap as f64;
    let t = tanh(sqrt(2.0 * amplitude) * x);
    v_min + 0.25 * amplitude * n * n * t * t
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn evaluate_examples() {
        let p = EvenPolynomialPotential::new(3.25, 6).unwrap();
        assert_eq!(p.evaluate(1.7), 3.25);
        let p = EvenPolynomialPotential::from_coeffs(0.0, [(2, 1.0)], 2).unwrap();
        assert_eq!(p.evaluate(2.0), 4.0);
        let p = EvenPolynomialPotential::from_coeffs(
            0.0,
            [(2, 303.02), (4, 303.02 * 0.3324), (6, 303.02 * 0.02640)],
            6,
        )
        .unwrap();
        assert!(rel(p.evaluate(1.0), 411.67) < 5e-3);
    }

    #[test]
    fn rejects_bad_powers_and_orders() {
        assert_eq!(
            EvenPolynomialPotential::new(0.0, 1),
            Err(Error::TruncationOrder(1))
        );
        assert_eq!(
            EvenPolynomialPotential::new(0.0, 14),
            Err(Error::TruncationOrder(14))
        );
        let mut p = EvenPolynomialPotential::new(0.0, 6).unwrap();
        assert_eq!(p.set_coeff(3, 1.0), Err(Error::InvalidPower(3)));
        assert_eq!(p.set_coeff(8, 1.0), Err(Error::TruncationOrder(8)));
        assert!(wkb_q_phase(1.0, 0.1, 0).is_err());
    }

    #[test]
    fn q_phase_series() {
        let harmonic = wkb_q_phase(1.3, 0.0, 12).unwrap();
        assert_eq!(harmonic.coeff(2), 0.5 * 1.3 * 1.3);
        assert_eq!(harmonic.coeffs.len(), 1);

        let tiny = wkb_q_phase(1.3, 1e-9, 12).unwrap();
        assert!(rel(tiny.coeff(2), 0.5 * 1.69) < 1e-12);
        assert!(tiny.coeff(6).abs() < 1e-15);

        assert_eq!(
            q_phase_bracket(),
            [
                (0, 1.0),
                (4, -8.0 / 15.0),
                (8, 4448.0 / 1575.0),
                (12, -345344.0 / 675675.0)
            ]
        );
        for tau in [0.1, 0.5, 1.0, 2.0] {
            let p = wkb_q_phase(1.0, tau, 12).unwrap();
            assert_eq!(p.coeff(4), 0.0);
            assert_eq!(p.coeff(8), 0.0);
            assert!(p.coeff(6) < 0.0);
            assert_eq!(p.coeff(14), 0.0);
        }
    }

    #[test]
    fn q_phase_sextic_coefficient_matches_closed_form() {
        // x⁶ coefficient is −τ⁶ω⁴/(240 sin⁴(τ/2))
        let (omega, tau) = (1.7, 0.8);
        let p = wkb_q_phase(omega, tau, 6).unwrap();
        let s = sin(0.5 * tau);
        let expected = -libm::pow(tau, 6.0) * libm::pow(omega, 4.0) / (240.0 * s * s * s * s);
        assert!(rel(p.coeff(6), expected) < 1e-13);
    }

    fn derivative_changes_sign(p: &EvenPolynomialPotential) -> bool {
        let start = p.derivative(1e-3);
        (1..20_000).any(|i| p.derivative(i as f64 * 1e-3).signum() != start.signum())
    }

    #[test]
    fn q_phase_turns_over_for_low_truncations() {
        let p6 = wkb_q_phase(1.0, 0.5, 6).unwrap();
        let p8 = wkb_q_phase(1.0, 0.5, 8).unwrap();
        assert!(derivative_changes_sign(&p6));
        assert!(derivative_changes_sign(&p8));
        // The positive u⁸ term makes the order-10 truncation monotone.
        let p10 = wkb_q_phase(1.0, 0.5, 10).unwrap();
        assert!(!derivative_changes_sign(&p10));
    }

    #[test]
    fn q_real_series() {
        let tiny = wkb_q_real(2.0, 1e-9, 12).unwrap();
        assert!(rel(tiny.coeff(2), 2.0) < 1e-12);
        assert_eq!(
            q_real_bracket(),
            [
                (0, 1.0),
                (4, 8.0 / 15.0),
                (8, 4448.0 / 1575.0),
                (12, 345344.0 / 675675.0)
            ]
        );
        let p = wkb_q_real(1.0, 0.7, 12).unwrap();
        assert_eq!(p.coeff(4), 0.0);
        let mut last = p.evaluate(0.0);
        for i in 1..400 {
            let v = p.evaluate(i as f64 * 0.05);
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn q_base_series() {
        assert_eq!(
            q_base_bracket(),
            [
                (0, 1.0),
                (2, -2.0 / 3.0),
                (4, 23.0 / 45.0),
                (6, -134.0 / 315.0),
                (8, 5297.0 / 14172.0)
            ]
        );
        assert!((q_base_v_min(1.0, 4.0) - 1.0 / 12.0).abs() < 1e-15);
        let p = wkb_big_q(1.0, 4.0, 10).unwrap();
        assert!((p.v_min - 1.0 / 12.0).abs() < 1e-15);

        let near = wkb_big_q(1.5, 1.0 + 1e-9, 12).unwrap();
        assert!(near.v_min.abs() < 1e-8);
        assert!(rel(near.coeff(2), 2.0 * 1.5 * 1.5) < 1e-6);
        assert!(near.coeff(4).abs() < 1e-6);

        // imaginary R′ for Q < 1 still yields a real series
        let below = wkb_big_q(1.0, 0.5, 10).unwrap();
        assert!(LengthScale::r_prime(0.5, 1.0).value().is_none());
        assert!(below.coeffs.values().all(|c| c.is_finite()));
    }

    /// tanh series from y' = 1 − y², y(0) = 0, squared by direct convolution.
    fn tanh_squared_series(len: usize) -> Vec<f64> {
        let mut t = vec![0.0; len];
        for k in 0..len - 1 {
            let conv: f64 = (0..=k).map(|i| t[i] * t[k - i]).sum();
            let rhs = if k == 0 { 1.0 } else { 0.0 } - conv;
            t[k + 1] = rhs / (k + 1) as f64;
        }
        (0..len)
            .map(|k| (0..=k).map(|i| t[i] * t[k - i]).sum())
            .collect()
    }

    #[test]
    fn pt_taylor_matches_closed_form_series() {
        let (a, n, v_min) = (1.0, 3u32, 0.4);
        let series = tanh_squared_series(9);
        let p = pt_taylor(a, n, v_min, 8).unwrap();
        assert_eq!(p.v_min, v_min);
        for power in [2u32, 4, 6, 8] {
            let expected = 0.25
                * a
                * (n * n) as f64
                * series[power as usize]
                * libm::pow(2.0 * a, power as f64 / 2.0);
            assert!(rel(p.coeff(power), expected) < 1e-14, "power {power}");
        }
        assert_eq!(
            pt_bracket(),
            [
                (0, 1.0),
                (2, -2.0 / 3.0),
                (4, 17.0 / 45.0),
                (6, -62.0 / 315.0)
            ]
        );
        // small-x agreement with the closed form
        let x = 0.01;
        assert!((p.evaluate(x) - pt_closed(a, n, v_min, x)).abs() < 1e-15);
    }

    #[test]
    fn pt_closed_examples() {
        assert_eq!(pt_closed(1.3, 4, 0.25, 0.0), 0.25);
        assert!((pt_closed(1.3, 4, 0.25, 50.0) - (0.25 + 1.3 * 4.0)).abs() < 1e-12);
        assert!((pt_closed(2.0, 2, 0.0, 0.5) - 1.160_051_3).abs() < 1e-6);
    }

    #[test]
    fn suq11_reduces_to_pt_taylor() {
        let deformed = Suq11Params::new(0.8, 1e-7, 40, 10.0).unwrap();
        let p = wkb_suq11(&deformed, 8).unwrap();
        let limit = pt_taylor(0.8, 40, suq11_v_min(&deformed), 8).unwrap();
        for power in [2u32, 4, 6, 8] {
            assert!(
                rel(p.coeff(power), limit.coeff(power)) < 1e-4,
                "power {power}"
            );
        }
    }

    #[test]
    fn suq11_published_potentials() {
        let cases = [
            (151, 0.0144503, 0.4343473, 303.02, 0.3324, 0.02640),
            (325, 0.00671384, 0.2960795, 652.20, 0.2265, 0.01227),
            (61, 0.0157377, 0.4538508, 279.095, -0.3471, 0.02866),
        ];
        for (n, tau, a, scale, r4, r6) in cases {
            let p = wkb_suq11(&Suq11Params::new(a, tau, n, 0.0).unwrap(), 6).unwrap();
            let c2 = p.coeff(2);
            assert!(rel(c2, scale) < 5e-3, "N={n} c2={c2}");
            assert!(rel(p.coeff(4) / c2, r4) < 5e-3, "N={n}");
            assert!(rel(p.coeff(6) / c2, r6) < 5e-3, "N={n}");
        }
    }

    #[test]
    fn suq11_quartic_sign_follows_cos_n_tau() {
        for (n, tau) in [(151u32, 0.0144503), (61, 0.0157377), (10, 0.05), (10, 0.2)] {
            let p = wkb_suq11(&Suq11Params::new(0.5, tau, n, 0.0).unwrap(), 6).unwrap();
            let c = libm::cos(n as f64 * tau);
            assert_eq!(p.coeff(4).signum(), -c.signum());
        }
    }

    #[test]
    fn truncation_drops_high_terms() {
        let p = wkb_q_real(1.0, 0.5, 12).unwrap();
        let t = p.truncated(6).unwrap();
        assert_eq!(t.truncation_order, 6);
        assert_eq!(t.coeff(10), 0.0);
        assert_eq!(t.coeff(6), p.coeff(6));
        assert_eq!(p.leading().map(|(k, _)| k), Some(10));
    }
}
