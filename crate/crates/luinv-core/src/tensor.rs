//! Partial trace and cyclic matrix unfolding.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::shape::{SubsystemSet, SystemShape};
use crate::state::{DensityMatrix, PureState};

/// Row-major strides (last index fastest).
fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Linear offsets contributed by all multi-indices over the given positions.
fn offsets(dims: &[usize], positions: &[usize], full_strides: &[usize]) -> Vec<usize> {
    let sub_dims: Vec<usize> = positions.iter().map(|&p| dims[p]).collect();
    let count: usize = sub_dims.iter().product();
    let mut out = Vec::with_capacity(count);
    let mut idx = vec![0usize; positions.len()];
    for _ in 0..count {
        let off = idx
            .iter()
            .zip(positions)
            .map(|(&c, &p)| c * full_strides[p])
            .sum();
        out.push(off);
        for j in (0..idx.len()).rev() {
            idx[j] += 1;
            if idx[j] < sub_dims[j] {
                break;
            }
            idx[j] = 0;
        }
    }
    out
}

fn split_positions(shape: &SystemShape, keep: &SubsystemSet) -> Result<(Vec<usize>, Vec<usize>)> {
    for &i in keep.ascending() {
        shape.check_index(i)?;
    }
    let kept: Vec<usize> = keep.ascending().iter().map(|&i| i - 1).collect();
    let traced: Vec<usize> =
        (0..shape.subsystem_count()).filter(|p| !kept.contains(p)).collect();
    Ok((kept, traced))
}

/// Traces out every subsystem not in `keep`; the result is ordered by
/// ascending kept index regardless of the subset's construction order.
pub fn partial_trace(rho: &DensityMatrix, keep: &SubsystemSet) -> Result<DensityMatrix> {
    let shape = rho.shape();
    let (kept, traced) = split_positions(shape, keep)?;
    let dims = shape.dims();
    let st = strides(dims);
    let kept_offsets = offsets(dims, &kept, &st);
    let traced_offsets = offsets(dims, &traced, &st);
    let dk = kept_offsets.len();
    let entries = rho.entries();
    let mut out = CMatrix::zeros(dk, dk);
    for (a, &ra) in kept_offsets.iter().enumerate() {
        for (b, &rb) in kept_offsets.iter().enumerate() {
            let mut sum = Complex64::ZERO;
            for &t in &traced_offsets {
                sum += entries[(ra + t, rb + t)];
            }
            out[(a, b)] = sum;
        }
    }
    Ok(DensityMatrix::from_parts_unchecked(shape.subshape(keep), out))
}

/// Partial trace of |ψ⟩⟨ψ| computed without forming the full projector.
pub fn partial_trace_pure(psi: &PureState, keep: &SubsystemSet) -> Result<DensityMatrix> {
    let shape = psi.shape();
    let (kept, traced) = split_positions(shape, keep)?;
    let dims = shape.dims();
    let st = strides(dims);
    let kept_offsets = offsets(dims, &kept, &st);
    let traced_offsets = offsets(dims, &traced, &st);
    let dk = kept_offsets.len();
    let amps = psi.amplitudes();
    let mut out = CMatrix::zeros(dk, dk);
    for (a, &ra) in kept_offsets.iter().enumerate() {
        for (b, &rb) in kept_offsets.iter().enumerate() {
            let mut sum = Complex64::ZERO;
            for &t in &traced_offsets {
                sum += amps[ra + t] * amps[rb + t].conj();
            }
            out[(a, b)] = sum;
        }
    }
    Ok(DensityMatrix::from_parts_unchecked(shape.subshape(keep), out))
}

/// Cyclic matrix unfolding of a k-index tensor `v` with axis dimensions
/// `dims`, at 1-based position `x`.
///
/// Rows follow the x-th index; columns run over the remaining indices in the
/// cyclic order x+1, ..., k, 1, ..., x-1, last index fastest.
pub fn unfold(v: &[Complex64], dims: &[usize], x: usize) -> Result<CMatrix> {
    let k = dims.len();
    if x == 0 || x > k {
        return Err(Error::BadPosition { position: x, arity: k });
    }
    let total: usize = dims.iter().product();
    if v.len() != total {
        return Err(Error::LengthMismatch { expected: total, got: v.len() });
    }
    let row_axis = x - 1;
    let col_axes: Vec<usize> = (1..k).map(|j| (row_axis + j) % k).collect();
    let rows = dims[row_axis];
    let cols = total / rows;
    let mut out = CMatrix::zeros(rows, cols);
    let mut idx = vec![0usize; k];
    for &value in v {
        let row = idx[row_axis];
        let mut col = 0usize;
        for &ax in &col_axes {
            col = col * dims[ax] + idx[ax];
        }
        out[(row, col)] = value;
        for j in (0..k).rev() {
            idx[j] += 1;
            if idx[j] < dims[j] {
                break;
            }
            idx[j] = 0;
        }
    }
    Ok(out)
}

/// Applies one operator per subsystem, `ops[i]` acting on subsystem i+1.
pub fn apply_local_unitaries(psi: &PureState, ops: &[CMatrix]) -> Result<PureState> {
    let shape = psi.shape();
    let dims = shape.dims();
    if ops.len() != dims.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} operators supplied for {} subsystems",
            ops.len(),
            dims.len()
        )));
    }
    for (i, (op, &d)) in ops.iter().zip(dims).enumerate() {
        if op.rows() != d || op.cols() != d {
            return Err(Error::ShapeMismatch(format!(
                "operator {} is {}x{}, subsystem dimension is {d}",
                i + 1,
                op.rows(),
                op.cols()
            )));
        }
    }
    let st = strides(dims);
    let mut amps = psi.amplitudes().to_vec();
    let mut gathered: Vec<Complex64> = Vec::new();
    for (axis, op) in ops.iter().enumerate() {
        let d = dims[axis];
        let stride = st[axis];
        let hi_count: usize = dims[..axis].iter().product();
        for hi in 0..hi_count {
            for lo in 0..stride {
                let base = hi * d * stride + lo;
                gathered.clear();
                gathered.extend((0..d).map(|j| amps[base + j * stride]));
                for i in 0..d {
                    let mut sum = Complex64::ZERO;
                    for (j, &g) in gathered.iter().enumerate() {
                        sum += op[(i, j)] * g;
                    }
                    amps[base + i * stride] = sum;
                }
            }
        }
    }
    Ok(PureState::from_parts_unchecked(shape.clone(), amps))
}
