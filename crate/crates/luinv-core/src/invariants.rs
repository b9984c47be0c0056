//! The invariant pipeline: Ω matrices from weighted eigenvectors, their
//! characteristic-polynomial coefficients, one-body spectra, and full
//! fingerprints.
//!
//! Ω is the Gram matrix of the unfolded weighted eigenvectors under the
//! Hilbert–Schmidt pairing, Ω_{lk} = Tr(A_l A_k†). This pairing is invariant
//! under local unitary rotations of the source state (A'_l = U A_l Wᵀ with
//! unitary U, W leaves it unchanged) and under any unitary change of basis
//! inside degenerate eigenspaces (the Gram transforms by similarity). The
//! plain-transpose pairing Tr(A_l A_kᵀ) has neither property for complex
//! sources; it is kept in [`crate::diagnostics`] for cross-checks only.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::charpoly::{char_poly_coefficients, CoefficientVector};
use crate::cmatrix::CMatrix;
use crate::eig::{
    canonical_phase_fix, hermitian_eigendecomposition, WeightedEigensystem, DEFAULT_RANK_CUTOFF,
    DEGENERACY_TOL, PHASE_TIE_TOL, REAL_PATH_TOL,
};
use crate::error::{Error, Result};
use crate::shape::{SubsystemSet, SystemShape};
use crate::state::State;
use crate::tensor::unfold;

/// Gram matrix of unfolded weighted eigenvectors for one subset and one
/// unfolding position.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaMatrix {
    /// Symmetric D×D matrix; rows of below-cutoff eigenvectors are zero.
    pub entries: CMatrix,
    /// Subset in ascending order (1-based indices).
    pub subset: Vec<usize>,
    /// Unfolding position, 1-based within the ascending subset.
    pub unfold_position: usize,
    /// Some degeneracy group holds two or more above-cutoff eigenvalues.
    pub degenerate: bool,
    /// The real-symmetric branch was unavailable.
    pub complex_source: bool,
}

pub(crate) enum Pairing {
    /// Tr(A_l A_k†), invariant under local unitaries.
    Hermitian,
    /// Tr(A_l A_kᵀ), diagnostic only.
    Bilinear,
}

pub(crate) fn assemble_omega(
    vectors: &[Vec<Complex64>],
    dims: &[usize],
    position: usize,
    pairing: Pairing,
) -> Result<CMatrix> {
    let d = vectors.len();
    let unfolded: Vec<CMatrix> =
        vectors.iter().map(|v| unfold(v, dims, position)).collect::<Result<_>>()?;
    let mut omega = CMatrix::zeros(d, d);
    for l in 0..d {
        for k in 0..=l {
            let mut sum = Complex64::ZERO;
            for (a, b) in unfolded[l].data().iter().zip(unfolded[k].data()) {
                sum += match pairing {
                    Pairing::Hermitian => a * b.conj(),
                    Pairing::Bilinear => a * b,
                };
            }
            omega[(l, k)] = sum;
            omega[(k, l)] = sum;
        }
    }
    Ok(omega)
}

/// Maps a position given against the subset's construction order onto the
/// ascending axes of the reduced matrix.
fn ascending_unfold_position(subset: &SubsystemSet, x: usize) -> Result<usize> {
    if x == 0 || x > subset.len() {
        return Err(Error::BadPosition { position: x, arity: subset.len() });
    }
    let row_subsystem = subset.order()[x - 1];
    Ok(subset
        .ascending_position(row_subsystem)
        .expect("subset order and ascending form hold the same indices"))
}

/// Builds Ω from an eigensystem of the reduced matrix over `subset`.
///
/// `x` is 1-based against the subset's construction order; the result records
/// the equivalent position along the ascending axes. Consistent reorderings
/// of rows or columns of the unfoldings cancel in the pairing, so the stored
/// coefficients do not depend on the construction order.
pub fn omega_matrix(
    sys: &WeightedEigensystem,
    shape: &SystemShape,
    subset: &SubsystemSet,
    x: usize,
) -> Result<OmegaMatrix> {
    for &i in subset.ascending() {
        shape.check_index(i)?;
    }
    let sub = shape.subshape(subset);
    if sys.dimension() != sub.total_dim() {
        return Err(Error::ShapeMismatch(format!(
            "eigensystem dimension {} does not match subset dimension {}",
            sys.dimension(),
            sub.total_dim()
        )));
    }
    let pos = ascending_unfold_position(subset, x)?;
    let entries = assemble_omega(&sys.weighted_vectors, sub.dims(), pos, Pairing::Hermitian)?;
    Ok(OmegaMatrix {
        entries,
        subset: subset.ascending().to_vec(),
        unfold_position: pos,
        degenerate: sys.has_nonzero_degeneracy(),
        complex_source: !sys.is_real_path,
    })
}

/// Characteristic polynomial of Ω·conj(Ω).
///
/// Unchanged under Ω → VΩVᵀ for any unitary V, because the product then
/// transforms by similarity; this covers eigenvector phase changes (diagonal
/// V) and degenerate-basis changes (block-unitary V).
pub fn robust_invariants(omega: &OmegaMatrix) -> Result<CoefficientVector> {
    let product = omega.entries.mul(&omega.entries.conj());
    char_poly_coefficients(&product)
}

/// Invariant coefficient vectors for one subset and unfolding position.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSet {
    pub subset: Vec<usize>,
    pub unfold_position: usize,
    /// Char poly of Ω; absent in robust-only fingerprints.
    pub literal: Option<CoefficientVector>,
    /// Char poly of Ω·conj(Ω).
    pub robust: CoefficientVector,
    pub degenerate: bool,
    pub complex_source: bool,
}

/// Full pipeline for one k-body subset: reduce, decompose, canonicalize,
/// unfold at `x`, extract both coefficient vectors.
pub fn kbody_invariants(state: &State, subset: &SubsystemSet, x: usize) -> Result<InvariantSet> {
    if subset.len() < 2 {
        return Err(Error::InvalidSubset(format!(
            "invariant subsets need at least 2 subsystems, got {}",
            subset.len()
        )));
    }
    if subset.len() > state.shape().subsystem_count() {
        return Err(Error::InvalidSubset(format!(
            "subset of {} subsystems exceeds the system's {}",
            subset.len(),
            state.shape().subsystem_count()
        )));
    }
    let reduced = state.reduced(subset)?;
    let sys = canonical_phase_fix(hermitian_eigendecomposition(&reduced, DEFAULT_RANK_CUTOFF)?);
    let omega = omega_matrix(&sys, state.shape(), subset, x)?;
    let literal = char_poly_coefficients(&omega.entries)?;
    let robust = robust_invariants(&omega)?;
    Ok(InvariantSet {
        subset: omega.subset,
        unfold_position: omega.unfold_position,
        literal: Some(literal),
        robust,
        degenerate: omega.degenerate,
        complex_source: omega.complex_source,
    })
}

/// Two-body pipeline for the pair (i, j): rows of the unfolding follow
/// subsystem i.
pub fn bipartite_invariants(state: &State, i: usize, j: usize) -> Result<InvariantSet> {
    let subset = SubsystemSet::pair(i, j, state.shape())?;
    kbody_invariants(state, &subset, 1)
}

/// Eigenvalues of every one-body reduced matrix, each sorted descending.
pub fn one_body_spectra(state: &State) -> Result<Vec<Vec<f64>>> {
    let shape = state.shape().clone();
    let mut spectra = Vec::with_capacity(shape.subsystem_count());
    for i in 1..=shape.subsystem_count() {
        let keep = SubsystemSet::new(&[i], &shape)?;
        let reduced = state.reduced(&keep)?;
        let mut vals = crate::eig::hermitian_eigenvalues(reduced.entries())?;
        vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        spectra.push(vals);
    }
    Ok(spectra)
}

/// Numerical conventions backing a fingerprint; comparison requires equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Conventions {
    pub rank_cutoff: f64,
    pub degeneracy_tol: f64,
    pub real_path_tol: f64,
    pub phase_tie_tol: f64,
    pub robust_only: bool,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            rank_cutoff: DEFAULT_RANK_CUTOFF,
            degeneracy_tol: DEGENERACY_TOL,
            real_path_tol: REAL_PATH_TOL,
            phase_tie_tol: PHASE_TIE_TOL,
            robust_only: false,
        }
    }
}

/// Fingerprint key: (ascending subset, unfolding position).
pub type FingerprintKey = (Vec<usize>, usize);

/// Every computed invariant of one state: one-body spectra plus the
/// coefficient vectors for each requested (subset, position) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Fingerprint {
    pub shape: Vec<usize>,
    pub one_body_spectra: Vec<Vec<f64>>,
    pub invariant_sets: BTreeMap<FingerprintKey, InvariantSet>,
    pub conventions: Conventions,
}

impl Fingerprint {
    /// Drops literal vectors, marking the fingerprint robust-only.
    pub fn strip_literals(&mut self) {
        self.conventions.robust_only = true;
        for set in self.invariant_sets.values_mut() {
            set.literal = None;
        }
    }

    pub fn keys(&self) -> Vec<FingerprintKey> {
        self.invariant_sets.keys().cloned().collect()
    }
}

fn ascending_subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn walk(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..=n {
            current.push(i);
            walk(i + 1, n, k, current, out);
            current.pop();
        }
    }
    walk(1, n, k, &mut current, &mut out);
    out
}

/// One-body spectra plus invariant sets for every subset of size
/// 2..=`max_subset_size` (every unfolding position when `all_positions`,
/// otherwise position 1 only).
pub fn full_fingerprint(
    state: &State,
    max_subset_size: usize,
    all_positions: bool,
) -> Result<Fingerprint> {
    let n = state.shape().subsystem_count();
    if max_subset_size == 0 || max_subset_size > n {
        return Err(Error::InvalidSubset(format!(
            "max subset size {max_subset_size} out of range 1..={n}"
        )));
    }
    let mut invariant_sets = BTreeMap::new();
    for k in 2..=max_subset_size {
        for indices in ascending_subsets_of_size(n, k) {
            let subset = SubsystemSet::new(&indices, state.shape())?;
            let positions: Vec<usize> = if all_positions { (1..=k).collect() } else { alloc::vec![1] };
            for x in positions {
                let set = kbody_invariants(state, &subset, x)?;
                invariant_sets.insert((set.subset.clone(), set.unfold_position), set);
            }
        }
    }
    Ok(Fingerprint {
        shape: state.shape().dims().to_vec(),
        one_body_spectra: one_body_spectra(state)?,
        invariant_sets,
        conventions: Conventions::default(),
    })
}

/// Fingerprint restricted to an explicit key collection, as used when
/// matching an existing fingerprint's conventions.
pub fn fingerprint_for_keys(state: &State, keys: &[FingerprintKey]) -> Result<Fingerprint> {
    let mut invariant_sets = BTreeMap::new();
    for (indices, x) in keys {
        let subset = SubsystemSet::new(indices, state.shape())?;
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset(format!(
                "fingerprint keys must be ascending, got {indices:?}"
            )));
        }
        let set = kbody_invariants(state, &subset, *x)?;
        invariant_sets.insert((set.subset.clone(), set.unfold_position), set);
    }
    Ok(Fingerprint {
        shape: state.shape().dims().to_vec(),
        one_body_spectra: one_body_spectra(state)?,
        invariant_sets,
        conventions: Conventions::default(),
    })
}
