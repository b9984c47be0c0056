//! Characteristic-polynomial coefficients via the Faddeev–LeVerrier
//! recurrence.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};

/// Largest matrix side accepted by [`char_poly_coefficients`].
pub const MAX_CHARPOLY_DIM: usize = 4096;

/// Monic polynomial coefficients in ascending powers: c_0 + c_1·λ + … + λ^D.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    coefficients: Vec<Complex64>,
}

impl CoefficientVector {
    pub fn new(coefficients: Vec<Complex64>) -> Self {
        debug_assert!(!coefficients.is_empty());
        CoefficientVector { coefficients }
    }

    /// Coefficients (c_0, …, c_D) ascending; c_D = 1.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Largest |a_k − b_k| over shared indices; infinity on length mismatch.
    pub fn max_abs_diff(&self, other: &CoefficientVector) -> f64 {
        if self.coefficients.len() != other.coefficients.len() {
            return f64::INFINITY;
        }
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Expands Π (λ − r_m) into ascending monic coefficients.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::ZERO; roots.len() + 1];
        coeffs[0] = Complex64::ONE;
        let mut degree = 0usize;
        for &r in roots {
            degree += 1;
            for k in (0..=degree).rev() {
                let lower = if k == 0 { Complex64::ZERO } else { coeffs[k - 1] };
                coeffs[k] = lower - r * coeffs[k];
            }
        }
        CoefficientVector { coefficients: coeffs }
    }
}

/// Coefficients of det(λI − M), ascending, via Faddeev–LeVerrier:
/// M_1 = M, c_{D−k} = −Tr(M_k)/k, M_{k+1} = M·(M_k + c_{D−k}·I).
pub fn char_poly_coefficients(m: &CMatrix) -> Result<CoefficientVector> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let d = m.rows();
    if d > MAX_CHARPOLY_DIM {
        return Err(Error::DimensionTooLarge { dim: d, max: MAX_CHARPOLY_DIM });
    }
    let mut coeffs = vec![Complex64::ZERO; d + 1];
    coeffs[d] = Complex64::ONE;
    if d == 0 {
        return Ok(CoefficientVector { coefficients: coeffs });
    }
    let mut mk = m.clone();
    for k in 1..=d {
        let c = -mk.trace() / (k as f64);
        coeffs[d - k] = c;
        if k < d {
            let mut shifted = mk;
            for i in 0..d {
                shifted[(i, i)] += c;
            }
            mk = m.mul(&shifted);
        }
    }
    Ok(CoefficientVector { coefficients: coeffs })
}
