//! Haar-distributed random unitaries.

use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cmatrix::CMatrix;

/// Standard normal via Box–Muller; uses the open-closed unit interval so the
/// logarithm never sees zero.
fn standard_normal_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random::<f64>();
    let radius = (-2.0 * u1.ln()).sqrt();
    let angle = 2.0 * PI * u2;
    (radius * angle.cos(), radius * angle.sin())
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let (re, im) = standard_normal_pair(rng);
    Complex64::new(re, im)
}

pub(crate) fn haar_unitary_with(rng: &mut ChaCha8Rng, d: usize) -> CMatrix {
    assert!(d >= 1, "unitary dimension must be at least 1");
    'resample: loop {
        let mut g = CMatrix::zeros(d, d);
        for r in 0..d {
            for c in 0..d {
                g[(r, c)] = complex_gaussian(rng);
            }
        }
        // Modified Gram-Schmidt on columns. The resulting R factor has a
        // positive real diagonal, which is exactly the normalization that
        // makes Q Haar-distributed; no further phase correction is needed.
        let mut q = CMatrix::zeros(d, d);
        for j in 0..d {
            let mut col: Vec<Complex64> = (0..d).map(|r| g[(r, j)]).collect();
            for i in 0..j {
                let mut proj = Complex64::ZERO;
                for r in 0..d {
                    proj += q[(r, i)].conj() * col[r];
                }
                for r in 0..d {
                    col[r] -= proj * q[(r, i)];
                }
            }
            let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-12 {
                continue 'resample;
            }
            for r in 0..d {
                q[(r, j)] = col[r] / norm;
            }
        }
        return q;
    }
}

/// Haar-random d×d unitary, deterministic per seed.
pub fn haar_random_unitary(d: usize, seed: u64) -> CMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_unitary_with(&mut rng, d)
}

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn complex_gaussian_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len).map(|_| complex_gaussian(rng)).collect()
}
