//! Independent oracles used to cross-check the production code paths.
//! Everything here recomputes results from first principles and must not
//! call into the implementation it checks.

#![allow(dead_code)]

use luinv_core::CMatrix;
use num_complex::Complex64;

/// Polynomial in ascending powers.
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

pub fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let len = a.len().max(b.len());
    let mut out = vec![Complex64::ZERO; len];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

fn poly_neg(a: &Poly) -> Poly {
    a.iter().map(|&x| -x).collect()
}

/// Determinant of a matrix of polynomials by Laplace expansion along the
/// first row. Exponential; intended for sides up to 6.
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
        let term = poly_mul(&m[0][col], &det_poly(&minor));
        acc = if col % 2 == 0 { poly_add(&acc, &term) } else { poly_add(&acc, &poly_neg(&term)) };
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

/// Row-major linear index of a multi-index (last axis fastest).
fn linear(idx: &[usize], dims: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// Decomposes a linear index into a multi-index (last axis fastest).
fn unlinear(mut p: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0usize; dims.len()];
    for ax in (0..dims.len()).rev() {
        idx[ax] = p % dims[ax];
        p /= dims[ax];
    }
    idx
}

/// Partial trace of a density matrix by direct elementwise summation,
/// decomposing every index from scratch.
pub fn partial_trace_oracle(
    rho: &CMatrix,
    dims: &[usize],
    keep_zero_based: &[usize],
) -> Vec<Vec<Complex64>> {
    let traced: Vec<usize> =
        (0..dims.len()).filter(|p| !keep_zero_based.contains(p)).collect();
    let kept_dims: Vec<usize> = keep_zero_based.iter().map(|&p| dims[p]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&p| dims[p]).collect();
    let dk: usize = kept_dims.iter().product();
    let dt: usize = traced_dims.iter().product::<usize>().max(1);
    let mut out = vec![vec![Complex64::ZERO; dk]; dk];
    for a in 0..dk {
        let ka = unlinear(a, &kept_dims);
        for b in 0..dk {
            let kb = unlinear(b, &kept_dims);
            for t in 0..dt {
                let tt = unlinear(t, &traced_dims);
                let mut row = vec![0usize; dims.len()];
                let mut col = vec![0usize; dims.len()];
                for (slot, &pos) in keep_zero_based.iter().enumerate() {
                    row[pos] = ka[slot];
                    col[pos] = kb[slot];
                }
                for (slot, &pos) in traced.iter().enumerate() {
                    row[pos] = tt[slot];
                    col[pos] = tt[slot];
                }
                out[a][b] += rho[(linear(&row, dims), linear(&col, dims))];
            }
        }
    }
    out
}

/// Inverse of the cyclic unfolding by independent index arithmetic.
pub fn refold_oracle(unfolded: &CMatrix, dims: &[usize], x: usize) -> Vec<Complex64> {
    let k = dims.len();
    let row_axis = x - 1;
    let col_axes: Vec<usize> = (1..k).map(|j| (row_axis + j) % k).collect();
    let total: usize = dims.iter().product();
    let mut v = vec![Complex64::ZERO; total];
    for r in 0..unfolded.rows() {
        for c in 0..unfolded.cols() {
            let mut idx = vec![0usize; k];
            idx[row_axis] = r;
            let mut rem = c;
            for &ax in col_axes.iter().rev() {
                idx[ax] = rem % dims[ax];
                rem /= dims[ax];
            }
            v[linear(&idx, dims)] = unfolded[(r, c)];
        }
    }
    v
}

pub fn max_coeff_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
