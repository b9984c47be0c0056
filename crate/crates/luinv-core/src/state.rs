//! Pure states, density matrices and their validation.

use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::eig;
use crate::error::{Error, Result};
use crate::shape::{SubsystemSet, SystemShape};
use crate::tensor;

/// Norm deviation beyond which an amplitude vector is rejected instead of
/// renormalized.
pub const NORM_WINDOW: f64 = 1e-6;
/// Entrywise Hermiticity tolerance for density-matrix validation.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Trace tolerance for density-matrix validation.
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalue floor for the positivity check on validation.
pub const PSD_FLOOR: f64 = -1e-10;

/// A normalized state vector over a [`SystemShape`], stored row-major with the
/// last subsystem index fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    shape: SystemShape,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub(crate) fn from_parts_unchecked(shape: SystemShape, amplitudes: Vec<Complex64>) -> Self {
        PureState { shape, amplitudes }
    }
}

/// Validates an amplitude vector against a shape.
///
/// Renormalizes when the norm deviates from 1 by at most [`NORM_WINDOW`];
/// larger deviations (including the zero vector) are rejected.
pub fn validate_pure(amplitudes: Vec<Complex64>, shape: SystemShape) -> Result<PureState> {
    let expected = shape.total_dim();
    if amplitudes.len() != expected {
        return Err(Error::LengthMismatch { expected, got: amplitudes.len() });
    }
    let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 || (norm - 1.0).abs() > NORM_WINDOW {
        return Err(Error::NotNormalizable { norm });
    }
    let amplitudes = if norm == 1.0 {
        amplitudes
    } else {
        amplitudes.into_iter().map(|a| a / norm).collect()
    };
    Ok(PureState { shape, amplitudes })
}

/// A Hermitian, positive-semidefinite, unit-trace matrix over a
/// [`SystemShape`] (which may describe a reduced system).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    shape: SystemShape,
    entries: CMatrix,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(entries: CMatrix, shape: SystemShape) -> Result<Self> {
        let side = shape.total_dim();
        if !entries.is_square() || entries.rows() != side {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{}, shape requires {side}x{side}",
                entries.rows(),
                entries.cols()
            )));
        }
        let defect = entries.hermitian_defect();
        if defect > HERMITICITY_TOL {
            return Err(Error::NotHermitian { defect });
        }
        let trace = entries.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::NotDensity(format!(
                "trace invariant violated: trace = {}+{}i, expected 1 within {TRACE_TOL:e}",
                trace.re, trace.im
            )));
        }
        let eigenvalues = eig::hermitian_eigenvalues(&entries)?;
        let min = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        if min < PSD_FLOOR {
            return Err(Error::NotDensity(format!(
                "positivity invariant violated: minimum eigenvalue {min:e} below {PSD_FLOOR:e}"
            )));
        }
        Ok(DensityMatrix { shape, entries })
    }

    pub fn shape(&self) -> &SystemShape {
        &self.shape
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn side(&self) -> usize {
        self.entries.rows()
    }

    pub(crate) fn from_parts_unchecked(shape: SystemShape, entries: CMatrix) -> Self {
        DensityMatrix { shape, entries }
    }
}

/// Rank-1 projector |ψ⟩⟨ψ| of a validated pure state.
pub fn density_from_pure(psi: &PureState) -> DensityMatrix {
    let d = psi.amplitudes.len();
    let mut entries = CMatrix::zeros(d, d);
    for r in 0..d {
        let ar = psi.amplitudes[r];
        for c in 0..d {
            entries[(r, c)] = ar * psi.amplitudes[c].conj();
        }
    }
    DensityMatrix { shape: psi.shape.clone(), entries }
}

/// A quantum state in either representation; the invariant pipeline accepts
/// both.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl State {
    pub fn shape(&self) -> &SystemShape {
        match self {
            State::Pure(p) => p.shape(),
            State::Mixed(m) => m.shape(),
        }
    }

    pub fn to_density(&self) -> DensityMatrix {
        match self {
            State::Pure(p) => density_from_pure(p),
            State::Mixed(m) => m.clone(),
        }
    }

    /// Reduced density matrix over `keep`, in ascending index order.
    ///
    /// Pure states are reduced without forming the full projector.
    pub fn reduced(&self, keep: &SubsystemSet) -> Result<DensityMatrix> {
        match self {
            State::Pure(p) => tensor::partial_trace_pure(p, keep),
            State::Mixed(m) => tensor::partial_trace(m, keep),
        }
    }
}

impl From<PureState> for State {
    fn from(p: PureState) -> Self {
        State::Pure(p)
    }
}

impl From<DensityMatrix> for State {
    fn from(m: DensityMatrix) -> Self {
        State::Mixed(m)
    }
}
