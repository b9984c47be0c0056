//! Hermitian eigendecomposition with deterministic canonicalization.
//!
//! A cyclic Jacobi sweep with complex rotations; guaranteed convergence for
//! Hermitian input and near machine-precision accuracy at the small sizes
//! this crate targets. Real input stays real through every rotation, so the
//! real-symmetric branch needs no separate code path.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::state::DensityMatrix;

/// Hermiticity tolerance accepted by the eigendecomposition entry point.
pub const EIG_HERMITICITY_TOL: f64 = 1e-8;
/// Entrywise imaginary-part threshold below which the real branch is used.
pub const REAL_PATH_TOL: f64 = 1e-12;
/// Relative eigenvalue-equality tolerance for degeneracy grouping.
pub const DEGENERACY_TOL: f64 = 1e-8;
/// Default relative cutoff below which eigenvalues count as zero for rank.
pub const DEFAULT_RANK_CUTOFF: f64 = 1e-12;
/// Modulus tie window for the canonical phase choice.
pub const PHASE_TIE_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues Λ_m (descending) with weighted eigenvectors √Λ_m·|X_m⟩.
///
/// Vectors whose eigenvalue falls below the rank cutoff are stored as zero
/// vectors; `rank` counts the remaining ones. `degeneracy_groups` partitions
/// the (sorted) indices into runs of equal eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedEigensystem {
    pub eigenvalues: Vec<f64>,
    pub weighted_vectors: Vec<Vec<Complex64>>,
    pub degeneracy_groups: Vec<Vec<usize>>,
    pub is_real_path: bool,
    pub rank: usize,
}

impl WeightedEigensystem {
    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    /// True when some degeneracy group holds two or more above-cutoff
    /// eigenvalues.
    pub fn has_nonzero_degeneracy(&self) -> bool {
        self.degeneracy_groups
            .iter()
            .any(|g| g.iter().filter(|&&i| i < self.rank).count() >= 2)
    }
}

/// One cyclic Jacobi pass over the strict upper triangle.
///
/// Returns (diagonal eigenvalues, eigenvector columns), unsorted.
pub(crate) fn jacobi_hermitian(m: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    debug_assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut v = CMatrix::identity(n);
    if n <= 1 {
        let vals = (0..n).map(|i| a[(i, i)].re).collect();
        return Ok((vals, v));
    }
    let frob_sq: f64 = a.data().iter().map(|z| z.norm_sqr()).sum();
    let stop = (1e-28 * frob_sq).max(f64::MIN_POSITIVE);
    for _sweep in 0..MAX_SWEEPS {
        let off_sq: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].norm_sqr())
            .sum();
        if off_sq <= stop {
            let vals = (0..n).map(|i| a[(i, i)].re).collect();
            return Ok((vals, v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let h = a[(p, q)];
                let r = h.norm();
                let alpha = a[(p, p)].re;
                let beta = a[(q, q)].re;
                if r <= f64::EPSILON * 1e-3 * (alpha.abs() + beta.abs()) {
                    a[(p, q)] = Complex64::ZERO;
                    a[(q, p)] = Complex64::ZERO;
                    continue;
                }
                // phase factor taking the off-diagonal entry to |h|
                let u = h / r;
                let ub = u.conj();
                let tau = (beta - alpha) / (2.0 * r);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // column update: A <- A·G, G = [[c, s], [-s·ū, c·ū]] on (p,q)
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * ub * akq;
                    a[(k, q)] = s * akp + c * ub * akq;
                }
                // row update: A <- G†·A
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * u * aqk;
                    a[(q, k)] = s * apk + c * u * aqk;
                }
                a[(p, q)] = Complex64::ZERO;
                a[(q, p)] = Complex64::ZERO;
                a[(p, p)] = Complex64::new(alpha - t * r, 0.0);
                a[(q, q)] = Complex64::new(beta + t * r, 0.0);
                // accumulate eigenvectors: V <- V·G
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * ub * vkq;
                    v[(k, q)] = s * vkp + c * ub * vkq;
                }
            }
        }
    }
    Err(Error::EigensolverFailure { sweeps: MAX_SWEEPS })
}

/// Eigenvalues of a Hermitian matrix, unsorted.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Result<Vec<f64>> {
    jacobi_hermitian(m).map(|(vals, _)| vals)
}

/// Full spectral decomposition of a density matrix.
///
/// Eigenvalues are sorted descending (stable, so the solver order survives
/// inside degenerate runs). When every entry is real within
/// [`REAL_PATH_TOL`] the imaginary parts are dropped first, which keeps all
/// eigenvectors exactly real. Eigenvalues below `cutoff`·λ_max count as zero
/// for the rank and get zero weighted vectors.
pub fn hermitian_eigendecomposition(
    h: &DensityMatrix,
    cutoff: f64,
) -> Result<WeightedEigensystem> {
    let entries = h.entries();
    let defect = entries.hermitian_defect();
    if defect > EIG_HERMITICITY_TOL {
        return Err(Error::NotHermitian { defect });
    }
    let is_real_path = entries.max_abs_imag() <= REAL_PATH_TOL;
    let working = if is_real_path {
        let data = entries.data().iter().map(|z| Complex64::new(z.re, 0.0)).collect();
        CMatrix::from_rows(entries.rows(), entries.cols(), data)
    } else {
        entries.clone()
    };
    let n = working.rows();
    let (vals, vecs) = jacobi_hermitian(&working)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| vals[i]).collect();

    let lambda_max = eigenvalues.first().copied().unwrap_or(0.0).max(0.0);
    let cutoff_abs = cutoff * lambda_max;
    let mut weighted_vectors = Vec::with_capacity(n);
    let mut rank = 0;
    for (m, &col) in order.iter().enumerate() {
        let lam = eigenvalues[m];
        if lambda_max <= 0.0 || lam < cutoff_abs || lam <= 0.0 {
            weighted_vectors.push(vec![Complex64::ZERO; n]);
            continue;
        }
        rank += 1;
        let w = lam.sqrt();
        weighted_vectors.push((0..n).map(|k| vecs[(k, col)] * w).collect());
    }

    let tol = DEGENERACY_TOL * lambda_max;
    let mut degeneracy_groups: Vec<Vec<usize>> = Vec::new();
    for m in 0..n {
        match degeneracy_groups.last_mut() {
            Some(group) if eigenvalues[group[group.len() - 1]] - eigenvalues[m] <= tol => {
                group.push(m);
            }
            _ => degeneracy_groups.push(vec![m]),
        }
    }

    Ok(WeightedEigensystem { eigenvalues, weighted_vectors, degeneracy_groups, is_real_path, rank })
}

/// Fixes the phase of every nonzero weighted vector: the largest-modulus
/// entry is made real and positive, modulus ties (within [`PHASE_TIE_TOL`])
/// broken by lowest index. Real vectors only ever get a sign flip, so the
/// real path stays exactly real.
pub fn canonical_phase_fix(mut sys: WeightedEigensystem) -> WeightedEigensystem {
    for vec in sys.weighted_vectors.iter_mut() {
        let max_mod = vec.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if max_mod == 0.0 {
            continue;
        }
        let pivot = vec
            .iter()
            .position(|z| z.norm() >= max_mod - PHASE_TIE_TOL)
            .expect("pivot exists for nonzero vector");
        let z = vec[pivot];
        let phase = z / z.norm();
        let correction = phase.conj();
        for entry in vec.iter_mut() {
            *entry *= correction;
        }
        // the pivot is real by construction; drop its rounding residue so a
        // second application is an exact no-op
        vec[pivot] = Complex64::new(vec[pivot].re, 0.0);
    }
    sys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::SystemShape;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn density_from_diag(diag: &[f64], dims: &[usize]) -> DensityMatrix {
        let n = diag.len();
        let mut m = CMatrix::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = c(d, 0.0);
        }
        DensityMatrix::new(m, SystemShape::new(dims.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn ghz_reduction_spectrum() {
        let theta = core::f64::consts::PI / 6.0;
        let (cs, sn) = (theta.cos().powi(2), theta.sin().powi(2));
        let rho = density_from_diag(&[cs, 0.0, 0.0, sn], &[2, 2]);
        let sys = hermitian_eigendecomposition(&rho, DEFAULT_RANK_CUTOFF).unwrap();
        assert!((sys.eigenvalues[0] - 0.75).abs() < 1e-14);
        assert!((sys.eigenvalues[1] - 0.25).abs() < 1e-14);
        assert!(sys.eigenvalues[2].abs() < 1e-14);
        assert!(sys.eigenvalues[3].abs() < 1e-14);
        assert_eq!(sys.rank, 2);
        assert!(sys.is_real_path);
        assert!(!sys.has_nonzero_degeneracy());
    }

    #[test]
    fn scalar_matrix_is_one_degeneracy_group() {
        let third = 1.0 / 3.0;
        let rho = density_from_diag(&[third, third, third], &[3]);
        let sys = hermitian_eigendecomposition(&rho, DEFAULT_RANK_CUTOFF).unwrap();
        assert_eq!(sys.degeneracy_groups.len(), 1);
        assert_eq!(sys.degeneracy_groups[0], vec![0, 1, 2]);
        assert_eq!(sys.rank, 3);
        assert!(sys.has_nonzero_degeneracy());
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = CMatrix::zeros(2, 2);
        m[(0, 0)] = c(0.5, 0.0);
        m[(1, 1)] = c(0.5, 0.0);
        m[(0, 1)] = c(0.2, 0.0);
        m[(1, 0)] = c(0.1, 0.0);
        let rho = DensityMatrix::from_parts_unchecked(SystemShape::new(vec![2]).unwrap(), m);
        assert!(matches!(
            hermitian_eigendecomposition(&rho, DEFAULT_RANK_CUTOFF),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn jacobi_reconstructs_random_hermitian() {
        // H = U diag(p) U† for a Haar unitary and a probability vector
        let u = crate::haar::haar_random_unitary(6, 21);
        let p = [0.4, 0.25, 0.15, 0.1, 0.07, 0.03];
        let mut d = CMatrix::zeros(6, 6);
        for (i, &pi) in p.iter().enumerate() {
            d[(i, i)] = c(pi, 0.0);
        }
        let h = u.mul(&d).mul(&u.adjoint());
        let (vals, vecs) = jacobi_hermitian(&h).unwrap();
        // reconstruct
        let mut rec = CMatrix::zeros(6, 6);
        for m in 0..6 {
            for r in 0..6 {
                for cc in 0..6 {
                    rec[(r, cc)] += vals[m] * vecs[(r, m)] * vecs[(cc, m)].conj();
                }
            }
        }
        assert!(rec.max_abs_diff(&h) < 1e-12);
        // orthonormal columns
        let gram = vecs.adjoint().mul(&vecs);
        assert!(gram.max_abs_diff(&CMatrix::identity(6)) < 1e-12);
    }

    #[test]
    fn weighted_vectors_reconstruct_density_matrix() {
        let u = crate::haar::haar_random_unitary(5, 77);
        let p = [0.5, 0.3, 0.1, 0.07, 0.03];
        let mut d = CMatrix::zeros(5, 5);
        for (i, &pi) in p.iter().enumerate() {
            d[(i, i)] = c(pi, 0.0);
        }
        let h = u.mul(&d).mul(&u.adjoint());
        let rho = DensityMatrix::from_parts_unchecked(SystemShape::new(vec![5]).unwrap(), h.clone());
        let sys = hermitian_eigendecomposition(&rho, DEFAULT_RANK_CUTOFF).unwrap();
        let n = sys.dimension();
        let mut rec = CMatrix::zeros(n, n);
        for w in &sys.weighted_vectors {
            for r in 0..n {
                for cc in 0..n {
                    rec[(r, cc)] += w[r] * w[cc].conj();
                }
            }
        }
        assert!(rec.max_abs_diff(&h) < 1e-9);
        // squared norm of each weighted vector is its eigenvalue
        for (m, w) in sys.weighted_vectors.iter().enumerate() {
            let nsq: f64 = w.iter().map(|z| z.norm_sqr()).sum();
            assert!((nsq - sys.eigenvalues[m].max(0.0)).abs() < 1e-10);
        }
        assert!(!sys.is_real_path);
    }

    #[test]
    fn near_degenerate_spectra_still_reconstruct() {
        let u = crate::haar::haar_random_unitary(4, 13);
        let p = [0.5, 0.5 - 1e-13, 1e-13, 0.0];
        let mut d = CMatrix::zeros(4, 4);
        for (i, &pi) in p.iter().enumerate() {
            d[(i, i)] = c(pi, 0.0);
        }
        let h = u.mul(&d).mul(&u.adjoint());
        let rho = DensityMatrix::from_parts_unchecked(SystemShape::new(vec![4]).unwrap(), h.clone());
        let sys = hermitian_eigendecomposition(&rho, DEFAULT_RANK_CUTOFF).unwrap();
        let n = sys.dimension();
        let mut rec = CMatrix::zeros(n, n);
        for w in &sys.weighted_vectors {
            for r in 0..n {
                for cc in 0..n {
                    rec[(r, cc)] += w[r] * w[cc].conj();
                }
            }
        }
        assert!(rec.max_abs_diff(&h) < 1e-9);
        // the 1e-13 gap sits below the grouping tolerance: one group of two
        assert!(sys.degeneracy_groups.iter().any(|g| g.len() >= 2 && g[0] == 0));
        assert!(sys.has_nonzero_degeneracy());
    }

    #[test]
    fn real_input_keeps_vectors_exactly_real() {
        let rho = density_from_diag(&[0.7, 0.2, 0.1, 0.0], &[2, 2]);
        let sys = hermitian_eigendecomposition(&rho, DEFAULT_RANK_CUTOFF).unwrap();
        assert!(sys.is_real_path);
        for w in &sys.weighted_vectors {
            assert!(w.iter().all(|z| z.im == 0.0));
        }
        let fixed = canonical_phase_fix(sys);
        for w in &fixed.weighted_vectors {
            assert!(w.iter().all(|z| z.im == 0.0));
        }
    }

    #[test]
    fn phase_fix_tie_breaks_by_lowest_index() {
        let inv = 1.0 / 2.0f64.sqrt();
        let w = 0.6f64; // sqrt of eigenvalue scale, arbitrary
        let vecs = vec![vec![
            Complex64::ZERO,
            c(0.0, inv * w),
            c(inv * w, 0.0),
            Complex64::ZERO,
        ]];
        let sys = WeightedEigensystem {
            eigenvalues: vec![w * w],
            weighted_vectors: vecs,
            degeneracy_groups: vec![vec![0]],
            is_real_path: false,
            rank: 1,
        };
        let fixed = canonical_phase_fix(sys);
        let v = &fixed.weighted_vectors[0];
        // tie between indices 1 and 2; index 1 wins, its phase i is removed
        assert!((v[1] - c(inv * w, 0.0)).norm() < 1e-15);
        assert!((v[2] - c(0.0, -inv * w)).norm() < 1e-15);
    }

    #[test]
    fn phase_fix_is_idempotent_and_phase_covariant() {
        let u = crate::haar::haar_random_unitary(4, 9);
        let base: Vec<Complex64> = (0..4).map(|k| u[(k, 0)] * 0.8).collect();
        let make = |v: Vec<Complex64>| WeightedEigensystem {
            eigenvalues: vec![0.64],
            weighted_vectors: vec![v],
            degeneracy_groups: vec![vec![0]],
            is_real_path: false,
            rank: 1,
        };
        let fixed = canonical_phase_fix(make(base.clone()));
        let twice = canonical_phase_fix(fixed.clone());
        assert_eq!(fixed, twice);
        for k in 0..10 {
            let phi = 0.37 + 0.61 * k as f64;
            let phase = Complex64::new(phi.cos(), phi.sin());
            let rotated: Vec<Complex64> = base.iter().map(|z| z * phase).collect();
            let fixed_rot = canonical_phase_fix(make(rotated));
            for (a, b) in fixed.weighted_vectors[0].iter().zip(&fixed_rot.weighted_vectors[0]) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }
}
