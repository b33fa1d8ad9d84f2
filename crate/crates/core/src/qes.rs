//! The quasi-exactly soluble sextic oscillator
//! `V(x) = 8a²x⁶ + 8abx⁴ + 2[b² − (2k+3)a]x²`, `k = 2n + r`.
//!
//! For `H = −½ d²/dx² + V`, the ansatz
//! `ψ = x^r (Σ_{j=0..n} c_j x^{2j}) exp(−a x⁴ − b x²)` turns `Hψ = Eψ` into
//!
//! ```text
//! E c_j = b(2r + 4j + 1) c_j
//!       + 4a(r + 2j − 2 − k) c_{j−1}
//!       − ½(r + 2j + 2)(r + 2j + 1) c_{j+1},   j = 0..n,
//! ```
//!
//! which closes at `j = n` because the `c_n x^{r+2n+2}` term carries the
//! factor `r + 2n − k = 0`. The n+1 eigenvalues of this tridiagonal matrix
//! are the exactly known levels of parity `(−1)^r`.

use alloc::format;
use alloc::vec::Vec;

use libm::sqrt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::linalg::SymTridiagonal;
use crate::poly;
use crate::potential::EvenPolynomialPotential;
use crate::table::{EnergyTable, Parity, Provenance};

/// Largest n accepted by [`qes_levels`].
pub const MAX_QES_N: u32 = 50;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct QespParams {
    pub a: f64,
    pub b: f64,
    pub n: u32,
    pub parity: Parity,
}

impl QespParams {
    pub fn new(a: f64, b: f64, n: u32, parity: Parity) -> Result<Self> {
        require(
            a > 0.0 && a.is_finite(),
            "a",
            a,
            "a must be positive for a normalizable ground state",
        )?;
        require(b.is_finite(), "b", b, "b must be finite")?;
        require(
            n <= MAX_QES_N,
            "n",
            n as f64,
            "n above the supported maximum of 50",
        )?;
        Ok(Self { a, b, n, parity })
    }

    /// The conventional `a = 1` member of the family.
    pub fn unit(b: f64, n: u32, parity: Parity) -> Result<Self> {
        Self::new(1.0, b, n, parity)
    }

    pub fn r(&self) -> u32 {
        self.parity.r()
    }

    pub fn k(&self) -> u32 {
        2 * self.n + self.r()
    }

    /// The combination `2k + 3` that fixes the x² coefficient.
    pub fn two_k_plus_3(&self) -> u32 {
        2 * self.k() + 3
    }
}

/// The sextic potential itself (v_min = 0, truncated at x⁶).
pub fn qesp_potential(p: &QespParams) -> EvenPolynomialPotential {
    let (a, b) = (p.a, p.b);
    let c2 = 2.0 * (b * b - p.two_k_plus_3() as f64 * a);
    EvenPolynomialPotential::from_coeffs(0.0, [(2, c2), (4, 8.0 * a * b), (6, 8.0 * a * a)], 6)
        .expect("powers 2, 4, 6 are valid at order 6")
}

/// The (non-symmetric) tridiagonal recurrence matrix as
/// `(diagonal, sub-diagonal, super-diagonal)`.
pub fn qes_recurrence(p: &QespParams) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let (a, b) = (p.a, p.b);
    let r = p.r() as f64;
    let k = p.k() as f64;
    let size = p.n as usize + 1;
    let diag = (0..size)
        .map(|j| b * (2.0 * r + 4.0 * j as f64 + 1.0))
        .collect();
    // sub[j] sits at (j + 1, j); sup[j] at (j, j + 1)
    let sub = (0..size - 1)
        .map(|j| 4.0 * a * (r + 2.0 * (j + 1) as f64 - 2.0 - k))
        .collect();
    let sup = (0..size - 1)
        .map(|j| {
            let m = r + 2.0 * j as f64;
            -0.5 * (m + 2.0) * (m + 1.0)
        })
        .collect();
    (diag, sub, sup)
}

/// The n+1 exactly known levels of parity `(−1)^r`, ascending.
///
/// Rows are labeled with their index in the full spectrum, `2j + r`.
pub fn qes_levels(p: &QespParams) -> Result<EnergyTable> {
    let (diag, sub, sup) = qes_recurrence(p);
    let mut off = Vec::with_capacity(sub.len());
    for (row, (l, u)) in sub.iter().zip(&sup).enumerate() {
        let product = l * u;
        if !(product > 0.0) {
            return Err(Error::NonRealSpectrum { row, product });
        }
        off.push(-sqrt(product));
    }
    let levels = SymTridiagonal::new(diag, off).lowest_eigenvalues(p.n as usize + 1);
    let mut table = EnergyTable::new(format!(
        "QES levels a={} b={} n={} r={}",
        p.a,
        p.b,
        p.n,
        p.r()
    ));
    for (j, e) in levels.into_iter().enumerate() {
        table.push(2 * j as u32 + p.r(), p.parity, e, Provenance::Exact);
    }
    Ok(table)
}

/// Closed form for n = 1, r = 0, a = 1: `3b ∓ 2√(b² + 2)`.
pub fn qes_levels_n1_closed(b: f64) -> (f64, f64) {
    let root = 2.0 * sqrt(b * b + 2.0);
    (3.0 * b - root, 3.0 * b + root)
}

/// Characteristic polynomial for n = 3, r = 0, a = 1, highest power first.
pub fn qes_char_poly_n3(b: f64) -> [f64; 5] {
    let b2 = b * b;
    [
        1.0,
        -28.0 * b,
        254.0 * b2 - 240.0,
        -812.0 * b2 * b + 2592.0 * b,
        585.0 * b2 * b2 - 4656.0 * b2 + 2880.0,
    ]
}

/// The four roots of [`qes_char_poly_n3`], ascending.
pub fn qes_char_poly_n3_roots(b: f64) -> Result<[f64; 4]> {
    let r = poly::real_roots(&qes_char_poly_n3(b), 1e-7)?;
    Ok([r[0], r[1], r[2], r[3]])
}

/// Result of reading a sextic polynomial `c₂x² + c₄x⁴ + c₆x⁶` as a member of
/// the QES family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SexticMatch {
    /// `8a² = c₆` has no real solution.
    NegativeASquared { a_squared: f64 },
    /// `a = √(c₆/8) > 0`, `b = c₄/(8a)`, `2k+3 = (b² − c₂/2)/a`.
    Matched { a: f64, b: f64, two_k_plus_3: f64 },
}

/// Inverts [`qesp_potential`] coefficient-wise, taking the normalizable
/// root `a > 0`.
pub fn match_sextic_coefficients(c2: f64, c4: f64, c6: f64) -> SexticMatch {
    let a_squared = c6 / 8.0;
    if !(a_squared > 0.0) {
        return SexticMatch::NegativeASquared { a_squared };
    }
    let a = sqrt(a_squared);
    let b = c4 / (8.0 * a);
    SexticMatch::Matched {
        a,
        b,
        two_k_plus_3: (b * b - 0.5 * c2) / a,
    }
}
