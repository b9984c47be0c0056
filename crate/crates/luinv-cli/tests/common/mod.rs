//! Helpers for driving the binary plus independent numerical oracles for the
//! acceptance suite.

#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

use luinv_core::{CMatrix, PureState, State, WeightedEigensystem};
use num_complex::Complex64;

pub fn luinv() -> Command {
    Command::new(env!("CARGO_BIN_EXE_luinv"))
}

pub fn run(args: &[&str], dir: &Path) -> Output {
    luinv().args(args).current_dir(dir).output().expect("binary runs")
}

pub fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

pub fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

/// Writes a pure state as a state file, mirroring the CLI's own format.
pub fn write_pure_state_file(psi: &PureState, path: &Path) {
    let data: Vec<[String; 2]> = psi
        .amplitudes()
        .iter()
        .map(|z| [format!("{:.16e}", z.re), format!("{:.16e}", z.im)])
        .collect();
    let file = serde_json::json!({
        "version": 1,
        "kind": "pure",
        "dims": psi.shape().dims(),
        "data": data,
    });
    std::fs::write(path, serde_json::to_string_pretty(&file).unwrap()).unwrap();
}

// ---- polynomial oracle (independent of the production code paths) ----

pub type Poly = Vec<Complex64>;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Complex64::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_scaled(a: &Poly, b: &Poly, s: Complex64) -> Poly {
    let len = a.len().max(b.len());
    let mut out = vec![Complex64::ZERO; len];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += s * y;
    }
    out
}

fn det_poly(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Poly = vec![Complex64::ZERO];
    for col in 0..n {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { Complex64::ONE } else { -Complex64::ONE };
        let term = poly_mul(&m[0][col], &det_poly(&minor));
        acc = poly_add_scaled(&acc, &term, sign);
    }
    acc
}

/// Ascending coefficients of det(λI − M) by symbolic cofactor expansion.
pub fn cofactor_char_poly(m: &CMatrix) -> Poly {
    let n = m.rows();
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        vec![-m[(r, c)], Complex64::ONE]
                    } else {
                        vec![-m[(r, c)]]
                    }
                })
                .collect()
        })
        .collect();
    let mut det = det_poly(&entries);
    det.resize(n + 1, Complex64::ZERO);
    det
}

/// Expands Π(λ − r) by repeated convolution.
pub fn poly_from_roots(roots: &[f64]) -> Poly {
    let mut acc: Poly = vec![Complex64::ONE];
    for &r in roots {
        acc = poly_mul(&acc, &vec![Complex64::new(-r, 0.0), Complex64::ONE]);
    }
    acc
}

pub fn max_coeff_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Replaces the weighted vectors inside every above-cutoff degeneracy group
/// by a Haar-rotated basis of the same eigenspace.
pub fn rotate_degenerate_groups(sys: &WeightedEigensystem, seed: u64) -> WeightedEigensystem {
    let mut out = sys.clone();
    let mut seed_offset = 0u64;
    for group in &sys.degeneracy_groups {
        let members: Vec<usize> = group.iter().copied().filter(|&m| m < sys.rank).collect();
        if members.len() < 2 {
            continue;
        }
        let g = members.len();
        let u = luinv_core::haar_random_unitary(g, seed + seed_offset);
        seed_offset += 1;
        let dim = sys.dimension();
        let mut rotated = vec![vec![Complex64::ZERO; dim]; g];
        for (new_col, rot) in rotated.iter_mut().enumerate() {
            for (old_col, &member) in members.iter().enumerate() {
                let coeff = u[(old_col, new_col)];
                for (r, value) in rot.iter_mut().enumerate() {
                    *value += coeff * sys.weighted_vectors[member][r];
                }
            }
        }
        for (slot, &member) in members.iter().enumerate() {
            out.weighted_vectors[member] = rotated[slot].clone();
        }
    }
    out
}

/// Largest |a−b| over a coefficient vector pair, scaled for the relative
/// comparison used by the invariance suite (the monic coefficient pins the
/// scale at ≥ 1).
pub fn relative_coeff_drift(a: &luinv_core::CoefficientVector, b: &luinv_core::CoefficientVector) -> f64 {
    let scale = a
        .coefficients()
        .iter()
        .chain(b.coefficients())
        .map(|z| z.norm())
        .fold(1.0f64, f64::max);
    a.max_abs_diff(b) / scale
}

pub fn one_body_spectra_of(state: &State) -> Vec<Vec<f64>> {
    luinv_core::one_body_spectra(state).unwrap()
}
