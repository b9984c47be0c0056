//! Local-unitary invariants of multipartite quantum states.
//!
//! Builds reduced density matrices of a pure or mixed state, decomposes them
//! spectrally, forms the Gram matrix Ω of the √Λ-weighted eigenvectors under
//! the Hilbert–Schmidt pairing of their matrix unfoldings, and extracts the
//! characteristic-polynomial coefficients of Ω (and of Ω·conj Ω) as
//! invariants under local unitary transformations. Two states whose
//! invariants differ cannot be related by local unitaries; the comparison
//! machinery turns that into a certified NOT_EQUIVALENT verdict with a
//! witness, or an INCONCLUSIVE result otherwise.
//!
//! The crate is `no_std` (alloc required); IO, file formats and the command
//! line front end live in the companion `luinv` binary crate.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod charpoly;
pub mod cmatrix;
pub mod diagnostics;
pub mod eig;
pub mod equivalence;
pub mod error;
pub mod haar;
pub mod invariants;
pub mod shape;
pub mod state;
pub mod tensor;

pub use charpoly::{char_poly_coefficients, CoefficientVector};
pub use cmatrix::CMatrix;
pub use eig::{canonical_phase_fix, hermitian_eigendecomposition, WeightedEigensystem};
pub use equivalence::{compare, render_report, Outcome, Verdict, Witness, WitnessKind};
pub use error::{Error, Result};
pub use haar::haar_random_unitary;
pub use invariants::{
    bipartite_invariants, full_fingerprint, kbody_invariants, omega_matrix, one_body_spectra,
    robust_invariants, Conventions, Fingerprint, InvariantSet, OmegaMatrix,
};
pub use shape::{SubsystemSet, SystemShape};
pub use state::{density_from_pure, validate_pure, DensityMatrix, PureState, State};
pub use tensor::{apply_local_unitaries, partial_trace, unfold};
