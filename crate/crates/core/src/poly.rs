//! Polynomial roots through the companion matrix.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{hessenberg_eigenvalues, DenseMatrix, Eigenvalue};

/// Evaluates `Σ c_i x^{n−i}` (coefficients highest power first).
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    coeffs[..n]
        .iter()
        .enumerate()
        .map(|(i, c)| c * (n - i) as f64)
        .collect()
}

/// All complex roots of a polynomial given highest power first.
pub fn roots(coeffs: &[f64]) -> Result<Vec<Eigenvalue>> {
    let lead = coeffs.first().copied().unwrap_or(0.0);
    if lead == 0.0 || !lead.is_finite() {
        return Err(Error::InvalidParameter {
            name: "leading coefficient",
            value: lead,
            reason: "must be finite and non-zero",
        });
    }
    let n = coeffs.len() - 1;
    let mut m = DenseMatrix::zeros(n);
    for j in 0..n {
        m.set(0, j, -coeffs[j + 1] / lead);
    }
    for i in 1..n {
        m.set(i, i - 1, 1.0);
    }
    hessenberg_eigenvalues(m)
}

/// Real roots in ascending order, each polished by Newton steps on the
/// original polynomial. Fails if any root has an imaginary part above
/// `imag_tol · max(1, |re|)`.
pub fn real_roots(coeffs: &[f64], imag_tol: f64) -> Result<Vec<f64>> {
    let all = roots(coeffs)?;
    if let Some(bad) = all
        .iter()
        .find(|e| e.im.abs() > imag_tol * e.re.abs().max(1.0))
    {
        return Err(Error::ComplexRoots { imag: bad.im });
    }
    let dp = derivative(coeffs);
    let mut out: Vec<f64> = all
        .iter()
        .map(|e| {
            let mut x = e.re;
            for _ in 0..3 {
                let d = horner(&dp, x);
                if d == 0.0 {
                    break;
                }
                let step = horner(coeffs, x) / d;
                if !step.is_finite() {
                    break;
                }
                x -= step;
            }
            x
        })
        .collect();
    out.sort_by(f64::total_cmp);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_and_cubic() {
        let r = real_roots(&[1.0, -3.0, 2.0], 1e-9).unwrap();
        assert!((r[0] - 1.0).abs() < 1e-14 && (r[1] - 2.0).abs() < 1e-14);
        let r = real_roots(&[2.0, 0.0, -2.0, 0.0], 1e-9).unwrap();
        assert!((r[0] + 1.0).abs() < 1e-14 && r[1].abs() < 1e-14 && (r[2] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn complex_pair_is_an_error() {
        assert!(matches!(
            real_roots(&[1.0, 0.0, 1.0], 1e-9),
            Err(Error::ComplexRoots { .. })
        ));
    }

    #[test]
    fn zero_leading_coefficient_rejected() {
        assert!(roots(&[0.0, 1.0, 2.0]).is_err());
    }
}
