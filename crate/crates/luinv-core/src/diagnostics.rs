//! Alternative Ω conventions kept for cross-checking third-party
//! computations. Neither belongs in the certification pipeline.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::eig::WeightedEigensystem;
use crate::error::Result;
use crate::invariants::{assemble_omega, Pairing};
use crate::shape::{SubsystemSet, SystemShape};

fn ascending_dims_and_position(
    shape: &SystemShape,
    subset: &SubsystemSet,
    x: usize,
) -> Result<(Vec<usize>, usize)> {
    for &i in subset.ascending() {
        shape.check_index(i)?;
    }
    if x == 0 || x > subset.len() {
        return Err(crate::error::Error::BadPosition { position: x, arity: subset.len() });
    }
    let row_subsystem = subset.order()[x - 1];
    let pos = subset.ascending_position(row_subsystem).expect("index present");
    Ok((shape.subshape(subset).dims().to_vec(), pos))
}

/// Plain-transpose pairing Ω_{lk} = Tr(A_l A_kᵀ).
///
/// Not invariant under complex local rotations of the source state: the
/// pairing picks up UᵀU factors, which only cancel for real orthogonal U.
/// See the tests for an explicit two-qubit demonstration.
pub fn bilinear_omega(
    sys: &WeightedEigensystem,
    shape: &SystemShape,
    subset: &SubsystemSet,
    x: usize,
) -> Result<CMatrix> {
    let (dims, pos) = ascending_dims_and_position(shape, subset, x)?;
    assemble_omega(&sys.weighted_vectors, &dims, pos, Pairing::Bilinear)
}

/// Transpose-pairing Ω built from eigenvectors rescaled so the last
/// significant component equals one, the form returned by symbolic
/// eigensolvers that skip normalization. Reproduces tables computed under
/// that convention; the rescaled vectors are no longer orthonormal, so the
/// result is not a substitute for the pipeline Ω.
pub fn unnormalized_omega(
    sys: &WeightedEigensystem,
    shape: &SystemShape,
    subset: &SubsystemSet,
    x: usize,
) -> Result<CMatrix> {
    let (dims, pos) = ascending_dims_and_position(shape, subset, x)?;
    let rescaled: Vec<Vec<Complex64>> = sys
        .weighted_vectors
        .iter()
        .map(|w| {
            let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm == 0.0 {
                return w.clone();
            }
            let pivot = w
                .iter()
                .rposition(|z| z.norm() > 1e-9 * norm)
                .expect("nonzero vector has a significant component");
            let scale = norm / w[pivot];
            w.iter().map(|z| z * scale).collect()
        })
        .collect();
    assemble_omega(&rescaled, &dims, pos, Pairing::Bilinear)
}
